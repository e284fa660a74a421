//! Successive-shortest-path min-cost flow with exact lexicographic costs.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::weight::Rational;

/// Cost compared first by `primary`, then by `tie`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct LexCost {
    pub primary: Rational,
    pub tie: BigInt,
}

impl LexCost {
    pub fn zero() -> Self {
        LexCost { primary: Rational::zero(), tie: BigInt::zero() }
    }

    pub fn new(primary: Rational, tie: BigInt) -> Self {
        LexCost { primary, tie }
    }
}

impl Add<&LexCost> for &LexCost {
    type Output = LexCost;
    fn add(self, rhs: &LexCost) -> LexCost {
        LexCost { primary: &self.primary + &rhs.primary, tie: &self.tie + &rhs.tie }
    }
}

impl Sub<&LexCost> for &LexCost {
    type Output = LexCost;
    fn sub(self, rhs: &LexCost) -> LexCost {
        LexCost { primary: &self.primary - &rhs.primary, tie: &self.tie - &rhs.tie }
    }
}

impl Neg for &LexCost {
    type Output = LexCost;
    fn neg(self) -> LexCost {
        LexCost { primary: -&self.primary, tie: -&self.tie }
    }
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    cost: LexCost,
    rev: usize,
}

/// A residual graph. Forward arcs added by the caller must form a DAG.
#[derive(Debug, Clone)]
pub(crate) struct FlowGraph {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    original_cap: Vec<i64>,
}

impl FlowGraph {
    pub fn new(nodes: usize) -> Self {
        FlowGraph { arcs: Vec::new(), adj: vec![Vec::new(); nodes], original_cap: Vec::new() }
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `u -> v` and returns a handle for [`FlowGraph::flow`].
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i64, cost: LexCost) -> usize {
        let fwd = self.arcs.len();
        let back_cost = -&cost;
        self.arcs.push(Arc { to: v, cap, cost, rev: fwd + 1 });
        self.arcs.push(Arc { to: u, cap: 0, cost: back_cost, rev: fwd });
        self.original_cap.push(cap);
        self.original_cap.push(0);
        self.adj[u].push(fwd);
        self.adj[v].push(fwd + 1);
        fwd
    }

    pub fn flow(&self, arc: usize) -> i64 {
        self.original_cap[arc] - self.arcs[arc].cap
    }

    /// Shortest distances from `s` over the initial DAG, used as potentials.
    fn dag_potentials(&self, s: usize) -> Vec<Option<LexCost>> {
        let n = self.adj.len();
        let mut indeg = vec![0usize; n];
        for a in self.arcs.iter().filter(|a| a.cap > 0) {
            indeg[a.to] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut dist: Vec<Option<LexCost>> = vec![None; n];
        dist[s] = Some(LexCost::zero());
        while let Some(u) = stack.pop() {
            for &ai in &self.adj[u] {
                let a = &self.arcs[ai];
                if a.cap <= 0 {
                    continue;
                }
                if let Some(du) = &dist[u] {
                    let cand = du + &a.cost;
                    if dist[a.to].as_ref().is_none_or(|d| cand < *d) {
                        dist[a.to] = Some(cand);
                    }
                }
                indeg[a.to] -= 1;
                if indeg[a.to] == 0 {
                    stack.push(a.to);
                }
            }
        }
        dist
    }

    /// Pushes up to `amount` units from `s` to `t` along successive cheapest
    /// paths. Returns the total cost when the full amount fits, else `None`.
    pub fn min_cost_flow(&mut self, s: usize, t: usize, amount: i64) -> Option<LexCost> {
        let n = self.adj.len();
        let mut potential: Vec<LexCost> =
            self.dag_potentials(s).into_iter().map(|d| d.unwrap_or_else(LexCost::zero)).collect();
        let mut total = LexCost::zero();
        let mut sent = 0;
        while sent < amount {
            let mut dist: Vec<Option<LexCost>> = vec![None; n];
            let mut via: Vec<usize> = vec![usize::MAX; n];
            let mut done = vec![false; n];
            let mut heap = BinaryHeap::new();
            dist[s] = Some(LexCost::zero());
            heap.push(Reverse(HeapItem(LexCost::zero(), s)));
            while let Some(Reverse(HeapItem(d, u))) = heap.pop() {
                if done[u] {
                    continue;
                }
                done[u] = true;
                for &ai in &self.adj[u] {
                    let a = &self.arcs[ai];
                    if a.cap <= 0 || done[a.to] {
                        continue;
                    }
                    let reduced = &(&a.cost + &potential[u]) - &potential[a.to];
                    debug_assert!(reduced >= LexCost::zero(), "negative reduced cost");
                    let cand = &d + &reduced;
                    if dist[a.to].as_ref().is_none_or(|old| cand < *old) {
                        dist[a.to] = Some(cand.clone());
                        via[a.to] = ai;
                        heap.push(Reverse(HeapItem(cand, a.to)));
                    }
                }
            }
            dist[t].as_ref()?;
            for v in 0..n {
                if let Some(d) = &dist[v] {
                    potential[v] = &potential[v] + d;
                }
            }
            let mut push = amount - sent;
            let mut v = t;
            while v != s {
                let a = &self.arcs[via[v]];
                push = push.min(a.cap);
                v = self.arcs[a.rev].to;
            }
            let mut v = t;
            while v != s {
                let ai = via[v];
                self.arcs[ai].cap -= push;
                let rev = self.arcs[ai].rev;
                self.arcs[rev].cap += push;
                total = &total + &LexCost { primary: &self.arcs[ai].cost.primary * Rational::from_integer(push.into()), tie: &self.arcs[ai].cost.tie * push };
                v = self.arcs[rev].to;
            }
            sent += push;
        }
        Some(total)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct HeapItem(LexCost, usize);

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0).then(self.1.cmp(&other.1))
    }
}
