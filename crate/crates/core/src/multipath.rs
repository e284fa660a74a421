//! Vertex-disjoint path systems and their maximal weights.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::flow::{FlowGraph, LexCost};
use crate::network::{concatenate, truncate, EdgeId, PlanarNetwork, Vertex, VertexId, VertexKind};
use crate::tableau::Tableau;
use crate::weight::{Rational, TropicalWeight};
use crate::weighting::Weighting;

/// Default bound on the number of objects an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A set of vertex-disjoint paths, each an edge sequence from a start
/// vertex to an end vertex, ordered by the height of their start.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipath {
    paths: Vec<Vec<EdgeId>>,
}

/// Where paths of a system may begin and end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Span {
    /// sources to sinks of the whole network
    Full,
    /// sources to the middle line
    Left,
    /// middle line to sinks
    Right,
}

impl Span {
    fn starts(self, net: &PlanarNetwork, v: &Vertex) -> bool {
        match self {
            Span::Full | Span::Left => net.kind_of(v) == VertexKind::Source,
            Span::Right => net.middle() == Some(v.x()),
        }
    }

    fn ends(self, net: &PlanarNetwork, v: &Vertex) -> bool {
        match self {
            Span::Full | Span::Right => net.kind_of(v) == VertexKind::Sink,
            Span::Left => net.middle() == Some(v.x()),
        }
    }
}

impl Multipath {
    pub fn empty() -> Self {
        Multipath { paths: Vec::new() }
    }

    /// Validates a k-path of `net` (sources to sinks, pairwise disjoint).
    pub fn new(net: &PlanarNetwork, paths: Vec<Vec<EdgeId>>) -> Result<Self> {
        Self::with_span(net, paths, Span::Full)
    }

    fn with_span(net: &PlanarNetwork, paths: Vec<Vec<EdgeId>>, span: Span) -> Result<Self> {
        let mut mp = Multipath { paths };
        mp.check(net, span)?;
        mp.sort(net);
        Ok(mp)
    }

    fn sort(&mut self, net: &PlanarNetwork) {
        self.paths.sort_by(|p, q| {
            let py = net.vertex(net.edge(p[0]).tail).y();
            let qy = net.vertex(net.edge(q[0]).tail).y();
            py.cmp(qy)
        });
    }

    fn check(&self, net: &PlanarNetwork, span: Span) -> Result<()> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        for path in &self.paths {
            let bad = |msg: &str| Error::InvalidMultipath(format!("{msg} in path {path:?}"));
            if path.is_empty() {
                return Err(bad("empty path"));
            }
            for id in path {
                if !net.has_edge(*id) {
                    return Err(Error::UnknownEdge(*id));
                }
            }
            let first = net.vertex(net.edge(path[0]).tail);
            if !span.starts(net, first) {
                return Err(bad("path does not start at an admissible source"));
            }
            let last = net.vertex(net.edge(*path.last().expect("nonempty")).head);
            if !span.ends(net, last) {
                return Err(bad("path does not end at an admissible sink"));
            }
            if !seen.insert(first.id) {
                return Err(bad("paths share a vertex"));
            }
            for pair in path.windows(2) {
                if net.edge(pair[0]).head != net.edge(pair[1]).tail {
                    return Err(bad("consecutive edges do not meet"));
                }
            }
            for id in path {
                if !seen.insert(net.edge(*id).head) {
                    return Err(bad("paths share a vertex"));
                }
            }
        }
        Ok(())
    }

    /// Checks membership in `P_k net` for the stored k.
    pub fn validate(&self, net: &PlanarNetwork) -> Result<()> {
        self.check(net, Span::Full)
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Vec<EdgeId>] {
        &self.paths
    }

    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn weight(&self, w: &Weighting) -> TropicalWeight {
        self.paths.iter().flatten().map(|id| w.get(*id)).sum()
    }

    /// Start vertices by decreasing height.
    pub fn sources(&self, net: &PlanarNetwork) -> Vec<VertexId> {
        self.paths.iter().rev().map(|p| net.edge(p[0]).tail).collect()
    }

    /// End vertices by increasing height.
    pub fn sinks(&self, net: &PlanarNetwork) -> Vec<VertexId> {
        let mut ends: Vec<VertexId> =
            self.paths.iter().map(|p| net.edge(*p.last().expect("nonempty")).head).collect();
        ends.sort_by(|a, b| net.vertex(*a).y().cmp(net.vertex(*b).y()));
        ends
    }

    /// Vertex sequence of each path.
    pub fn vertex_paths(&self, net: &PlanarNetwork) -> Vec<Vec<VertexId>> {
        self.paths
            .iter()
            .map(|p| {
                let mut vs = vec![net.edge(p[0]).tail];
                vs.extend(p.iter().map(|id| net.edge(*id).head));
                vs
            })
            .collect()
    }

    pub fn vertices(&self, net: &PlanarNetwork) -> BTreeSet<VertexId> {
        self.vertex_paths(net).into_iter().flatten().collect()
    }
}

/// A composable pair: a k-path of the left factor and an i-path of the
/// right factor starting at sinks of the first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaDeltaPath {
    gamma: Multipath,
    delta: Multipath,
}

impl GammaDeltaPath {
    /// Validates the pair on a concatenated network.
    pub fn new(gd: &PlanarNetwork, gamma: Vec<Vec<EdgeId>>, delta: Vec<Vec<EdgeId>>) -> Result<Self> {
        if gd.middle().is_none() {
            return Err(Error::NotConcatenated);
        }
        let gamma = Multipath::with_span(gd, gamma, Span::Left)?;
        let delta = Multipath::with_span(gd, delta, Span::Right)?;
        let out = GammaDeltaPath { gamma, delta };
        out.check_composable(gd)?;
        Ok(out)
    }

    fn check_composable(&self, gd: &PlanarNetwork) -> Result<()> {
        let ends: BTreeSet<VertexId> = self.gamma.sinks(gd).into_iter().collect();
        if self.delta.sources(gd).iter().all(|v| ends.contains(v)) && self.delta.k() <= self.gamma.k() {
            Ok(())
        } else {
            Err(Error::InvalidMultipath("right part does not continue the left part".into()))
        }
    }

    /// Re-checks every invariant against `gd`.
    pub fn validate(&self, gd: &PlanarNetwork) -> Result<()> {
        if gd.middle().is_none() {
            return Err(Error::NotConcatenated);
        }
        self.gamma.check(gd, Span::Left)?;
        self.delta.check(gd, Span::Right)?;
        self.check_composable(gd)
    }

    pub fn gamma(&self) -> &Multipath {
        &self.gamma
    }

    pub fn delta(&self) -> &Multipath {
        &self.delta
    }

    pub fn k(&self) -> usize {
        self.gamma.k()
    }

    pub fn i(&self) -> usize {
        self.delta.k()
    }

    pub fn edges(&self) -> BTreeSet<EdgeId> {
        let mut e = self.gamma.edges();
        e.extend(self.delta.edges());
        e
    }

    pub fn weight(&self, w: &Weighting) -> TropicalWeight {
        self.gamma.weight(w) + self.delta.weight(w)
    }

    /// Glues the parts into whole paths: each left path followed by its
    /// continuation, if any.
    pub fn joined_paths(&self, gd: &PlanarNetwork) -> Vec<Vec<EdgeId>> {
        self.gamma
            .paths()
            .iter()
            .map(|g| {
                let end = gd.edge(*g.last().expect("nonempty")).head;
                let mut p = g.clone();
                if let Some(d) = self.delta.paths().iter().find(|d| gd.edge(d[0]).tail == end) {
                    p.extend(d.iter().copied());
                }
                p
            })
            .collect()
    }
}

struct PathRecord {
    edges: Vec<EdgeId>,
    vertices: Vec<usize>,
}

fn guard(count: usize, cap: usize) -> Result<()> {
    if count > cap {
        Err(Error::ExplosionGuard(cap))
    } else {
        Ok(())
    }
}

/// Every path from an admissible start to an admissible end.
fn all_paths(net: &PlanarNetwork, span: Span, cap: usize) -> Result<Vec<PathRecord>> {
    fn dfs(
        net: &PlanarNetwork,
        span: Span,
        v: usize,
        edges: &mut Vec<EdgeId>,
        verts: &mut Vec<usize>,
        out: &mut Vec<PathRecord>,
        cap: usize,
    ) -> Result<()> {
        let vert = &net.vertices()[v];
        if !edges.is_empty() && span.ends(net, vert) {
            out.push(PathRecord { edges: edges.clone(), vertices: verts.clone() });
            return guard(out.len(), cap);
        }
        for &ei in net.out_indices(v) {
            let e = &net.edges()[ei];
            let h = net.vertex_index(e.head);
            edges.push(e.id);
            verts.push(h);
            dfs(net, span, h, edges, verts, out, cap)?;
            edges.pop();
            verts.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut starts: Vec<usize> =
        (0..net.vertices().len()).filter(|&v| span.starts(net, &net.vertices()[v])).collect();
    starts.sort_by(|&p, &q| net.vertices()[p].y().cmp(net.vertices()[q].y()));
    for s in starts {
        dfs(net, span, s, &mut Vec::new(), &mut vec![s], &mut out, cap)?;
    }
    Ok(out)
}

fn disjoint_subsets(net: &PlanarNetwork, span: Span, k: usize, cap: usize) -> Result<Vec<Multipath>> {
    let paths = all_paths(net, span, cap)?;
    let mut used = vec![false; net.vertices().len()];
    let mut chosen: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        paths: &[PathRecord],
        from: usize,
        k: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Multipath>,
        cap: usize,
    ) -> Result<()> {
        if chosen.len() == k {
            out.push(Multipath { paths: chosen.iter().map(|&p| paths[p].edges.clone()).collect() });
            return guard(out.len(), cap);
        }
        for p in from..paths.len() {
            if paths[p].vertices.iter().any(|&v| used[v]) {
                continue;
            }
            for &v in &paths[p].vertices {
                used[v] = true;
            }
            chosen.push(p);
            rec(paths, p + 1, k, used, chosen, out, cap)?;
            chosen.pop();
            for &v in &paths[p].vertices {
                used[v] = false;
            }
        }
        Ok(())
    }
    rec(&paths, 0, k, &mut used, &mut chosen, &mut out, cap)?;
    Ok(out)
}

/// The complete set `P_k net`. For `k = 0` this is the single empty
/// multipath.
pub fn enumerate_kpaths(net: &PlanarNetwork, k: usize, cap: usize) -> Result<Vec<Multipath>> {
    disjoint_subsets(net, Span::Full, k, cap)
}

/// All composable pairs of a k-path left of the middle line and an i-path
/// right of it.
pub fn enumerate_gd_paths(gd: &PlanarNetwork, k: usize, i: usize, cap: usize) -> Result<Vec<GammaDeltaPath>> {
    if gd.middle().is_none() {
        return Err(Error::NotConcatenated);
    }
    if i > k {
        return Err(Error::KOutOfRange { k: i, max: k });
    }
    let gammas = disjoint_subsets(gd, Span::Left, k, cap)?;
    let deltas = disjoint_subsets(gd, Span::Right, i, cap)?;
    let mut out = Vec::new();
    for g in &gammas {
        let ends: BTreeSet<VertexId> = g.sinks(gd).into_iter().collect();
        for d in &deltas {
            if d.sources(gd).iter().all(|v| ends.contains(v)) {
                out.push(GammaDeltaPath { gamma: g.clone(), delta: d.clone() });
                guard(out.len(), cap)?;
            }
        }
    }
    Ok(out)
}

/// The min-cost-flow model of vertex-disjoint paths: every vertex becomes
/// an in/out pair joined by a unit arc, every finite edge a unit arc
/// costing minus its weight.
struct SplitGraph {
    flow: FlowGraph,
    source: usize,
    target: usize,
    edge_arc: Vec<Option<usize>>,
}

impl SplitGraph {
    fn in_node(v: usize) -> usize {
        2 + 2 * v
    }

    fn out_node(v: usize) -> usize {
        3 + 2 * v
    }

    fn new(net: &PlanarNetwork, w: &Weighting) -> Self {
        let nv = net.vertices().len();
        let ne = net.edges().len();
        let mut flow = FlowGraph::new(2 + 2 * nv);
        for v in 0..nv {
            flow.add_arc(Self::in_node(v), Self::out_node(v), 1, LexCost::zero());
        }
        let mut edge_arc = vec![None; ne];
        for (pos, e) in net.edges().iter().enumerate() {
            if let TropicalWeight::Finite(x) = w.get(e.id) {
                // preference for small edge ids among equal weights
                let tie = -(BigInt::from(1) << (ne - 1 - pos));
                let cost = LexCost::new(-x, tie);
                let t = Self::out_node(net.vertex_index(e.tail));
                let h = Self::in_node(net.vertex_index(e.head));
                edge_arc[pos] = Some(flow.add_arc(t, h, 1, cost));
            }
        }
        SplitGraph { flow, source: 0, target: 1, edge_arc }
    }

    fn solve(&mut self, amount: usize) -> Option<Rational> {
        self.flow.min_cost_flow(self.source, self.target, amount as i64).map(|c| -c.primary)
    }

    /// Follows the unit flow out of each start vertex.
    fn paths(&self, net: &PlanarNetwork, starts: &[usize]) -> Vec<Vec<EdgeId>> {
        let mut out = Vec::new();
        for &s in starts {
            let mut path = Vec::new();
            let mut v = s;
            'walk: loop {
                for &ei in net.out_indices(v) {
                    if self.edge_arc[ei].is_some_and(|a| self.flow.flow(a) > 0) {
                        let e = &net.edges()[ei];
                        path.push(e.id);
                        v = net.vertex_index(e.head);
                        continue 'walk;
                    }
                }
                break;
            }
            if !path.is_empty() {
                out.push(path);
            }
        }
        out
    }
}

fn indices_of(net: &PlanarNetwork, pred: impl Fn(&Vertex) -> bool) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..net.vertices().len()).filter(|&v| pred(&net.vertices()[v])).collect();
    vs.sort_by(|&p, &q| net.vertices()[p].y().cmp(net.vertices()[q].y()));
    vs
}

/// `l_k`: the maximal weight of a k-path, with a maximizing witness.
///
/// Among maximizers the witness contains the smallest edge id at which
/// any two of them differ. Returns `-inf` without witness when no k-path
/// of finite weight exists.
pub fn max_kpath_weight(net: &PlanarNetwork, w: &Weighting, k: usize) -> (TropicalWeight, Option<Multipath>) {
    if k == 0 {
        return (TropicalWeight::zero(), Some(Multipath::empty()));
    }
    let mut g = SplitGraph::new(net, w);
    let sources = indices_of(net, |v| net.kind_of(v) == VertexKind::Source);
    for &s in &sources {
        g.flow.add_arc(g.source, SplitGraph::in_node(s), 1, LexCost::zero());
    }
    for v in indices_of(net, |v| net.kind_of(v) == VertexKind::Sink) {
        g.flow.add_arc(SplitGraph::out_node(v), g.target, 1, LexCost::zero());
    }
    match g.solve(k) {
        None => (TropicalWeight::NegInf, None),
        Some(value) => {
            let paths = g.paths(net, &sources);
            let mut mp = Multipath { paths };
            mp.sort(net);
            debug_assert!(mp.validate(net).is_ok());
            (TropicalWeight::Finite(value), Some(mp))
        }
    }
}

/// `m^k_i`: the maximal weight of a composable pair of a k-path left of the
/// middle line and an i-path right of it.
///
/// The k units of flow leave either at the middle line or at the far
/// sinks; capacities on the two exits force exactly `i` through.
pub fn max_gd_weight(
    gd: &PlanarNetwork,
    w: &Weighting,
    k: usize,
    i: usize,
) -> Result<(TropicalWeight, Option<GammaDeltaPath>)> {
    let middle = gd.middle().ok_or(Error::NotConcatenated)?.clone();
    if i > k {
        return Err(Error::KOutOfRange { k: i, max: k });
    }
    if k == 0 {
        return Ok((TropicalWeight::zero(), Some(GammaDeltaPath::default())));
    }
    let mut g = SplitGraph::new(gd, w);
    let sources = indices_of(gd, |v| gd.kind_of(v) == VertexKind::Source);
    for &s in &sources {
        g.flow.add_arc(g.source, SplitGraph::in_node(s), 1, LexCost::zero());
    }
    let stop = g.flow.add_node();
    let through = g.flow.add_node();
    for v in indices_of(gd, |v| *v.x() == middle) {
        g.flow.add_arc(SplitGraph::out_node(v), stop, 1, LexCost::zero());
    }
    for v in indices_of(gd, |v| gd.kind_of(v) == VertexKind::Sink) {
        g.flow.add_arc(SplitGraph::out_node(v), through, 1, LexCost::zero());
    }
    g.flow.add_arc(stop, g.target, (k - i) as i64, LexCost::zero());
    g.flow.add_arc(through, g.target, i as i64, LexCost::zero());
    let Some(value) = g.solve(k) else {
        return Ok((TropicalWeight::NegInf, None));
    };
    let mut gamma = Vec::new();
    let mut delta = Vec::new();
    for path in g.paths(gd, &sources) {
        let cut = path.iter().position(|id| *gd.vertex(gd.edge(*id).head).x() == middle).expect("path crosses the middle line");
        gamma.push(path[..=cut].to_vec());
        if cut + 1 < path.len() {
            delta.push(path[cut + 1..].to_vec());
        }
    }
    let mut gamma = Multipath { paths: gamma };
    let mut delta = Multipath { paths: delta };
    gamma.sort(gd);
    delta.sort(gd);
    let witness = GammaDeltaPath { gamma, delta };
    debug_assert!(witness.validate(gd).is_ok());
    Ok((TropicalWeight::Finite(value), Some(witness)))
}

/// The vector `(l_0, ..., l_n)` and the successive differences
/// `λ_i = l_i - l_{i-1}`, undefined where either value is `-inf`.
pub fn eigenvalue_vector(net: &PlanarNetwork, w: &Weighting) -> Result<(Vec<TropicalWeight>, Vec<Option<Rational>>)> {
    let n = net.rank().ok_or(Error::RankMissing)?;
    let l: Vec<TropicalWeight> = (0..=n).map(|k| max_kpath_weight(net, w, k).0).collect();
    let lambda = l.windows(2).map(|p| p[1].checked_sub(&p[0])).collect();
    Ok((l, lambda))
}

/// The tableau `t^k_i = l_i` of the truncation to the lowest `k` sources
/// and sinks.
pub fn l_map(net: &PlanarNetwork, w: &Weighting) -> Result<Tableau<TropicalWeight>> {
    let n = net.rank().ok_or(Error::RankMissing)?;
    let mut t = Tableau::filled(n, TropicalWeight::zero());
    for k in 1..=n {
        let sub = truncate(net, k)?;
        for i in 1..=k {
            t[(k, i)] = max_kpath_weight(&sub, w, i).0;
        }
    }
    Ok(t)
}

/// The tableau `t^k_i = m^k_i` of a concatenated network.
pub fn m_map(gd: &PlanarNetwork, w: &Weighting) -> Result<Tableau<TropicalWeight>> {
    let n = gd.rank().ok_or(Error::RankMissing)?;
    let mut t = Tableau::filled(n, TropicalWeight::zero());
    for k in 1..=n {
        for i in 0..=k {
            t[(k, i)] = max_gd_weight(gd, w, k, i)?.0;
        }
    }
    Ok(t)
}

/// [`m_map`] for a pair of networks; `w` weights their concatenation.
pub fn m_map_pair(g: &PlanarNetwork, d: &PlanarNetwork, w: &Weighting) -> Result<Tableau<TropicalWeight>> {
    if g.rank().is_none() || g.rank() != d.rank() {
        return Err(Error::NotComposable("factors must have the same rank"));
    }
    m_map(&concatenate(g, d)?, w)
}
