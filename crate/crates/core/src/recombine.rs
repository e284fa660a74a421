//! Weight-preserving recombination of path systems.
//!
//! Two families of exchange arguments are implemented here:
//!
//! * [`interleave_sort`] re-sorts a bundle of source-to-sink paths pointwise
//!   by height; [`recombine_shift`] and [`recombine_balance`] deal the sorted
//!   paths out alternately into two new multipaths.
//! * [`union`] forms the multiset sum of two ΓΔ-paths, which
//!   [`canonical_decomposition`] cuts into orientation-alternating chains;
//!   [`split`] colors those chains red and green to obtain two ΓΔ-paths of
//!   prescribed sizes.
//!
//! Every output uses the input edges with the same multiplicities, so the
//! total weight is preserved under any weighting.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::height_at;
use crate::multipath::{GammaDeltaPath, Multipath};
use crate::network::{truncate, EdgeId, PlanarNetwork, Point, VertexId};
use crate::weight::{Rational, TropicalWeight};
use crate::weighting::Weighting;

fn mismatch(msg: impl Into<String>) -> Error {
    Error::TypeMismatch(msg.into())
}

/// One straight piece of a path: `edge` runs from `p` to `q` on this piece.
struct Piece<'a> {
    edge: EdgeId,
    p: &'a Point,
    q: &'a Point,
}

fn pieces<'a>(net: &'a PlanarNetwork, path: &[EdgeId]) -> Vec<Piece<'a>> {
    let mut out = Vec::new();
    for id in path {
        let pts = net.edge_points(net.edge(*id));
        for w in pts.windows(2) {
            out.push(Piece { edge: *id, p: w[0], q: w[1] });
        }
    }
    out
}

fn check_full_path(net: &PlanarNetwork, path: &[EdgeId]) -> Result<()> {
    let Some(first) = path.first() else {
        return Err(mismatch("empty path"));
    };
    for id in path {
        if !net.has_edge(*id) {
            return Err(Error::UnknownEdge(*id));
        }
    }
    for pair in path.windows(2) {
        if net.edge(pair[0]).head != net.edge(pair[1]).tail {
            return Err(mismatch(format!("edges {} and {} do not meet", pair[0], pair[1])));
        }
    }
    let start = net.vertex(net.edge(*first).tail);
    let end = net.vertex(net.edge(*path.last().expect("nonempty")).head);
    if start.x() != net.a() || end.x() != net.b() {
        return Err(mismatch(format!("path {path:?} does not cross the strip")));
    }
    Ok(())
}

/// Sorts a bundle of strip-crossing paths pointwise by height.
///
/// Returns `dor_1, ..., dor_N` as edge sequences, `dor_1` on top. Between
/// consecutive breakpoints (the x-coordinates of all path vertices and
/// bends) every path is a single straight piece, so sorting the heights at
/// interval midpoints determines the output. Fails with `TripleContact` if
/// some point is visited by three or more of the inputs.
pub fn interleave_sort(net: &PlanarNetwork, paths: &[Vec<EdgeId>]) -> Result<Vec<Vec<EdgeId>>> {
    for p in paths {
        check_full_path(net, p)?;
    }
    let all: Vec<Vec<Piece<'_>>> = paths.iter().map(|p| pieces(net, p)).collect();
    let xs: Vec<&Rational> = {
        let set: BTreeSet<&Rational> =
            all.iter().flatten().flat_map(|pc| [&pc.p.x, &pc.q.x]).collect();
        set.into_iter().collect()
    };
    let mut cursor = vec![0usize; paths.len()];
    let mut dor: Vec<Vec<EdgeId>> = vec![Vec::new(); paths.len()];
    let two = Rational::from_integer(2.into());
    for m in 0..xs.len() {
        // contact check at the breakpoint itself
        let mut at_x: BTreeMap<Rational, usize> = BTreeMap::new();
        for (j, ps) in all.iter().enumerate() {
            let c = cursor[j].min(ps.len() - 1);
            let pc = &ps[c];
            let y = if *xs[m] == pc.q.x { pc.q.y.clone() } else { height_at(pc.p, pc.q, xs[m]) };
            let seen = at_x.entry(y).or_default();
            *seen += 1;
            if *seen > 2 {
                return Err(Error::TripleContact(format!("{}", xs[m])));
            }
        }
        if m + 1 == xs.len() {
            break;
        }
        let mid = (xs[m] + xs[m + 1]) / &two;
        let mut here: Vec<(Rational, EdgeId)> = Vec::with_capacity(paths.len());
        for (j, ps) in all.iter().enumerate() {
            while ps[cursor[j]].q.x <= mid {
                cursor[j] += 1;
            }
            let pc = &ps[cursor[j]];
            here.push((height_at(pc.p, pc.q, &mid), pc.edge));
        }
        here.sort_by(|s, t| t.cmp(s));
        for (slot, (_, e)) in dor.iter_mut().zip(here) {
            if slot.last() != Some(&e) {
                slot.push(e);
            }
        }
    }
    Ok(dor)
}

fn sorted_split(net: &PlanarNetwork, f: &Multipath, g: &Multipath) -> Result<(Vec<Vec<EdgeId>>, Vec<Vec<EdgeId>>)> {
    let mut bundle: Vec<Vec<EdgeId>> = f.paths().to_vec();
    bundle.extend(g.paths().iter().cloned());
    let dor = interleave_sort(net, &bundle)?;
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for (j, p) in dor.into_iter().enumerate() {
        if j % 2 == 0 {
            odd.push(p);
        } else {
            even.push(p);
        }
    }
    Ok((even, odd))
}

fn member(net: &PlanarNetwork, level: usize, mp: &Multipath, what: &str) -> Result<PlanarNetwork> {
    let sub = truncate(net, level)?;
    mp.validate(&sub).map_err(|e| mismatch(format!("{what} is not a multipath of the level-{level} subnetwork: {e}")))?;
    Ok(sub)
}

/// Recombines `f ∈ P_{i-1} Γ^(k)` and `g ∈ P_i Γ^(k-1)` into
/// `even ∈ P_{i-1} Γ^(k-1)` and `odd ∈ P_i Γ^(k)`.
///
/// `odd` collects the sorted paths `dor_1, dor_3, ...` and `even` the paths
/// `dor_2, dor_4, ...`; together they use exactly the edges of `f` and `g`.
pub fn recombine_shift(net: &PlanarNetwork, k: usize, f: &Multipath, g: &Multipath) -> Result<(Multipath, Multipath)> {
    if k == 0 || f.k() + 1 != g.k() {
        return Err(mismatch(format!("expected sizes (i-1, i) with k >= 1, got ({}, {}) at k = {k}", f.k(), g.k())));
    }
    let upper = member(net, k, f, "f")?;
    let lower = member(net, k - 1, g, "g")?;
    let (even, odd) = sorted_split(net, f, g)?;
    Ok((Multipath::new(&lower, even)?, Multipath::new(&upper, odd)?))
}

/// Recombines `f ∈ P_{i+1} Γ^(k)` and `g ∈ P_{i-1} Γ^(k-1)` into
/// `even ∈ P_i Γ^(k-1)` and `odd ∈ P_i Γ^(k)`.
pub fn recombine_balance(net: &PlanarNetwork, k: usize, f: &Multipath, g: &Multipath) -> Result<(Multipath, Multipath)> {
    if k == 0 || f.k() != g.k() + 2 {
        return Err(mismatch(format!("expected sizes (i+1, i-1) with k >= 1, got ({}, {}) at k = {k}", f.k(), g.k())));
    }
    let upper = member(net, k, f, "f")?;
    let lower = member(net, k - 1, g, "g")?;
    let (even, odd) = sorted_split(net, f, g)?;
    Ok((Multipath::new(&lower, even)?, Multipath::new(&upper, odd)?))
}

/// An edge of a union after contraction: a chain of original edges whose
/// inner vertices have degree (1,1) in the union. Edges used by both
/// summands appear twice, as copies 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionEdge {
    pub chain: Vec<EdgeId>,
    pub copy: u8,
    pub tail: VertexId,
    pub head: VertexId,
}

impl UnionEdge {
    /// `(first original edge, copy index)`, unique within a union.
    pub fn key(&self) -> (EdgeId, u8) {
        (self.chain[0], self.copy)
    }
}

/// The multiset sum of two ΓΔ-paths with degree-(1,1) vertices contracted.
#[derive(Debug, Clone)]
pub struct MultipathUnion {
    network: PlanarNetwork,
    edges: Vec<UnionEdge>,
    kind: [usize; 2],
}

impl MultipathUnion {
    pub fn network(&self) -> &PlanarNetwork {
        &self.network
    }

    pub fn edges(&self) -> &[UnionEdge] {
        &self.edges
    }

    /// `[k1, k2]`: total out-degree of the sources and in-degree of the sinks.
    pub fn kind(&self) -> [usize; 2] {
        self.kind
    }

    /// Multiplicity of an original edge in the union (0, 1 or 2).
    pub fn multiplicity(&self, id: EdgeId) -> usize {
        self.edges.iter().filter(|e| e.chain.contains(&id)).count()
    }

    /// Total weight counted with multiplicity.
    pub fn weight(&self, w: &Weighting) -> TropicalWeight {
        self.edges.iter().flat_map(|e| e.chain.iter()).map(|id| w.get(*id)).sum()
    }

    fn is_source(&self, v: VertexId) -> bool {
        self.network.vertex(v).x() == self.network.a()
    }

    fn is_sink(&self, v: VertexId) -> bool {
        self.network.vertex(v).x() == self.network.b()
    }

    /// Assembles the red or green part of a coloring into a ΓΔ-path.
    pub fn extract(&self, coloring: &Coloring, color: Color) -> Result<GammaDeltaPath> {
        let net = &self.network;
        let bad = |msg: &str| Error::InvalidMultipath(format!("{color:?} part: {msg}"));
        let mut by_tail: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
        let mut total = 0usize;
        for (ue, c) in self.edges.iter().zip(&coloring.colors) {
            if *c != color {
                continue;
            }
            for id in &ue.chain {
                total += 1;
                if by_tail.insert(net.edge(*id).tail, *id).is_some() {
                    return Err(bad("two edges leave the same vertex"));
                }
            }
        }
        let follow = |start: EdgeId, stop: &dyn Fn(VertexId) -> bool| {
            let mut path = vec![start];
            let mut v = net.edge(start).head;
            while !stop(v) {
                match by_tail.get(&v) {
                    Some(e) => {
                        path.push(*e);
                        v = net.edge(*e).head;
                    }
                    None => break,
                }
            }
            path
        };
        let mut gamma = Vec::new();
        let mut delta = Vec::new();
        for (v, e) in &by_tail {
            if self.is_source(*v) {
                gamma.push(follow(*e, &|u| net.is_on_middle(u)));
            } else if net.is_on_middle(*v) {
                delta.push(follow(*e, &|u| self.is_sink(u)));
            }
        }
        let used: usize = gamma.iter().chain(&delta).map(Vec::len).sum();
        if used != total {
            return Err(bad("edges not reachable from a source or the middle line"));
        }
        GammaDeltaPath::new(net, gamma, delta)
    }
}

/// Forms `Θ = alpha ∪ beta` on the concatenated network `gd`.
pub fn union(gd: &PlanarNetwork, alpha: &GammaDeltaPath, beta: &GammaDeltaPath) -> Result<MultipathUnion> {
    alpha.validate(gd)?;
    beta.validate(gd)?;
    let mut count: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for id in alpha.edges().into_iter().chain(beta.edges()) {
        *count.entry(id).or_default() += 1;
    }
    let mut indeg: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut outdeg: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut out_of: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    for (id, c) in &count {
        let e = gd.edge(*id);
        *outdeg.entry(e.tail).or_default() += c;
        *indeg.entry(e.head).or_default() += c;
        out_of.insert(e.tail, *id);
    }
    let degree = |v: VertexId| (indeg.get(&v).copied().unwrap_or(0), outdeg.get(&v).copied().unwrap_or(0));
    let passes = |v: VertexId| degree(v) == (1, 1);

    let mut edges = Vec::new();
    for (id, c) in &count {
        let e = gd.edge(*id);
        if passes(e.tail) {
            continue;
        }
        let mut chain = vec![*id];
        let mut head = e.head;
        while passes(head) {
            let next = out_of[&head];
            chain.push(next);
            head = gd.edge(next).head;
        }
        for copy in 0..*c as u8 {
            edges.push(UnionEdge { chain: chain.clone(), copy, tail: e.tail, head });
        }
    }
    let mut kind = [0, 0];
    for v in gd.vertices() {
        let (i, o) = degree(v.id);
        if v.x() == gd.a() {
            kind[0] += o;
        }
        if v.x() == gd.b() {
            kind[1] += i;
        }
    }
    Ok(MultipathUnion { network: gd.clone(), edges, kind })
}

/// Where an open chain of the decomposition ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    /// a source of the union
    L,
    /// an inner vertex (necessarily on the middle line)
    Zero,
    /// a sink of the union
    R,
}

/// The seven classes of decomposition chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QClass {
    Q00,
    QL0,
    Q0R,
    QLR,
    QLL,
    QRR,
    Closed,
}

impl QClass {
    pub const ALL: [QClass; 7] =
        [QClass::Q00, QClass::QL0, QClass::Q0R, QClass::QLR, QClass::QLL, QClass::QRR, QClass::Closed];

    fn of(ends: Option<(Endpoint, Endpoint)>) -> QClass {
        use Endpoint::*;
        match ends {
            None => QClass::Closed,
            Some((Zero, Zero)) => QClass::Q00,
            Some((L, Zero)) => QClass::QL0,
            Some((Zero, R)) => QClass::Q0R,
            Some((L, R)) => QClass::QLR,
            Some((L, L)) => QClass::QLL,
            Some((R, R)) => QClass::QRR,
            Some(_) => unreachable!("endpoints are normalized"),
        }
    }

    /// Whether every chain of this class has an even number of edges.
    pub fn has_even_length(self) -> bool {
        matches!(self, QClass::Q00 | QClass::QLL | QClass::QRR | QClass::Closed)
    }
}

/// One orientation-alternating chain: indices into
/// [`MultipathUnion::edges`] in traversal order. Open chains are oriented
/// so that `ends.0 <= ends.1` in the order `L < Zero < R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub edges: Vec<usize>,
    pub ends: Option<(Endpoint, Endpoint)>,
}

impl Chain {
    pub fn class(&self) -> QClass {
        QClass::of(self.ends)
    }

    pub fn is_closed(&self) -> bool {
        self.ends.is_none()
    }
}

/// The canonical path decomposition of a union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub chains: Vec<Chain>,
}

/// Number of chains in each class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassCounts {
    pub q00: usize,
    pub l0: usize,
    pub r0: usize,
    pub lr: usize,
    pub ll: usize,
    pub rr: usize,
    pub closed: usize,
}

impl PathDecomposition {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn class_members(&self, class: QClass) -> Vec<usize> {
        (0..self.chains.len()).filter(|c| self.chains[*c].class() == class).collect()
    }

    pub fn counts(&self) -> ClassCounts {
        let mut c = ClassCounts::default();
        for ch in &self.chains {
            let slot = match ch.class() {
                QClass::Q00 => &mut c.q00,
                QClass::QL0 => &mut c.l0,
                QClass::Q0R => &mut c.r0,
                QClass::QLR => &mut c.lr,
                QClass::QLL => &mut c.ll,
                QClass::QRR => &mut c.rr,
                QClass::Closed => &mut c.closed,
            };
            *slot += 1;
        }
        c
    }

    /// Checks the parity claims: closed chains and chains whose two ends
    /// have the same label are even, source-to-sink chains are odd.
    pub fn parity_holds(&self) -> bool {
        self.chains.iter().all(|ch| {
            let even = ch.edges.len() % 2 == 0;
            match ch.class() {
                QClass::QLR => !even,
                c if c.has_even_length() => even,
                _ => true,
            }
        })
    }

    /// The alternating coloring in which chain `c` starts red iff bit `c`
    /// of `mask` is set.
    pub fn coloring(&self, theta: &MultipathUnion, mask: u64) -> Coloring {
        let mut colors = vec![Color::Green; theta.edges.len()];
        for (c, ch) in self.chains.iter().enumerate() {
            let first = if mask >> c & 1 == 1 { Color::Red } else { Color::Green };
            for (pos, e) in ch.edges.iter().enumerate() {
                colors[*e] = if pos % 2 == 0 { first } else { first.other() };
            }
        }
        Coloring { colors }
    }

    /// All `2^|Q|` alternating colorings. Panics if there are 64 or more
    /// chains.
    pub fn alternating_colorings<'a>(&'a self, theta: &'a MultipathUnion) -> impl Iterator<Item = Coloring> + 'a {
        assert!(self.chains.len() < 64, "too many chains to enumerate");
        (0..1u64 << self.chains.len()).map(move |m| self.coloring(theta, m))
    }
}

/// The two halves of a vertex: where edges arrive and where they leave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    In(VertexId),
    Out(VertexId),
}

fn sides(e: &UnionEdge) -> [Side; 2] {
    [Side::Out(e.tail), Side::In(e.head)]
}

/// Cuts `theta` into chains of edges that pairwise share an arrival side
/// or a departure side of some vertex.
pub fn canonical_decomposition(theta: &MultipathUnion) -> PathDecomposition {
    let mut at: BTreeMap<Side, Vec<usize>> = BTreeMap::new();
    for (ix, e) in theta.edges.iter().enumerate() {
        for s in sides(e) {
            at.entry(s).or_default().push(ix);
        }
    }
    debug_assert!(at.values().all(|v| v.len() <= 2), "a vertex side has degree above two");
    let label = |s: Side| match s {
        Side::Out(v) if theta.is_source(v) => Endpoint::L,
        Side::In(v) if theta.is_sink(v) => Endpoint::R,
        _ => Endpoint::Zero,
    };
    // Walks from `start`, leaving it through the side opposite `entry`.
    let walk = |start: usize, entry: usize| -> (Vec<usize>, Option<Side>) {
        let mut chain = vec![start];
        let (mut cur, mut came) = (start, entry);
        loop {
            let exit = sides(&theta.edges[cur])[1 - came];
            let nbrs = &at[&exit];
            let Some(&next) = nbrs.iter().find(|&&o| o != cur) else {
                return (chain, Some(exit));
            };
            // a double edge shares both sides with its twin; enter by `exit`
            let side_ix = if sides(&theta.edges[next])[0] == exit { 0 } else { 1 };
            if next == start {
                return (chain, None);
            }
            chain.push(next);
            cur = next;
            came = side_ix;
        }
    };
    let mut seen = vec![false; theta.edges.len()];
    let mut chains = Vec::new();
    // open chains first, started from a free side
    for (ix, e) in theta.edges.iter().enumerate() {
        if seen[ix] {
            continue;
        }
        let free = sides(e).iter().position(|s| at[s].len() == 1);
        let Some(entry) = free else { continue };
        let (edges, last) = walk(ix, entry);
        let start_end = label(sides(e)[entry]);
        let end_end = label(last.expect("a chain with a free end is open"));
        for x in &edges {
            seen[*x] = true;
        }
        let mut edges = edges;
        let ends = if end_end < start_end {
            edges.reverse();
            (end_end, start_end)
        } else {
            (start_end, end_end)
        };
        chains.push(Chain { edges, ends: Some(ends) });
    }
    for ix in 0..theta.edges.len() {
        if seen[ix] {
            continue;
        }
        let (edges, last) = walk(ix, 0);
        debug_assert!(last.is_none());
        for x in &edges {
            seen[*x] = true;
        }
        chains.push(Chain { edges, ends: None });
    }
    PathDecomposition { chains }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Green,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Green,
            Color::Green => Color::Red,
        }
    }
}

/// A color for each edge of a union, indexed like [`MultipathUnion::edges`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub colors: Vec<Color>,
}

impl Coloring {
    /// Local validity: edges sharing an arrival or departure side differ.
    pub fn is_valid(&self, theta: &MultipathUnion) -> bool {
        let mut at: BTreeMap<Side, Vec<usize>> = BTreeMap::new();
        for (ix, e) in theta.edges.iter().enumerate() {
            for s in sides(e) {
                at.entry(s).or_default().push(ix);
            }
        }
        at.values().all(|v| v.len() < 2 || self.colors[v[0]] != self.colors[v[1]])
    }

    /// Number of `color` edges leaving sources and entering sinks.
    pub fn boundary_counts(&self, theta: &MultipathUnion, color: Color) -> (usize, usize) {
        let mut out = (0, 0);
        for (e, c) in theta.edges.iter().zip(&self.colors) {
            if *c == color {
                out.0 += usize::from(theta.is_source(e.tail));
                out.1 += usize::from(theta.is_sink(e.head));
            }
        }
        out
    }
}

/// Which cone inequality a split certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// type `[2k-1, 2i-1]`: red in `P̃^k_i`, green in `P̃^{k-1}_{i-1}`
    First,
    /// type `[2k-1, 2i]`: red in `P̃^k_i`, green in `P̃^{k-1}_i`
    Second,
    /// type `[2k, 2i-1]`: red in `P̃^k_i`, green in `P̃^k_{i-1}`
    Third,
}

impl Variant {
    /// The union type this variant splits, for target `(k, i)`.
    pub fn expected_kind(self, k: usize, i: usize) -> Option<[usize; 2]> {
        let (k2, i2) = (2 * k, 2 * i);
        match self {
            Variant::First => Some([k2.checked_sub(1)?, i2.checked_sub(1)?]),
            Variant::Second => Some([k2.checked_sub(1)?, i2]),
            Variant::Third => Some([k2, i2.checked_sub(1)?]),
        }
    }

    /// Sizes `(k, i)` of the green part.
    pub fn green_target(self, k: usize, i: usize) -> (usize, usize) {
        match self {
            Variant::First => (k - 1, i - 1),
            Variant::Second => (k - 1, i),
            Variant::Third => (k, i - 1),
        }
    }
}

/// How many chains of each source- or sink-touching class start red:
/// `lr` source-to-sink chains, `l0` chains at their source end, `r0`
/// chains at their sink end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RedCounts {
    pub lr: usize,
    pub l0: usize,
    pub r0: usize,
}

fn half_up(n: usize) -> usize {
    n.div_ceil(2)
}

/// Parity rule for [`Variant::First`].
pub fn first_variant_rule(c: &ClassCounts) -> Result<RedCounts> {
    if c.lr.is_multiple_of(2) {
        if c.l0.is_multiple_of(2) || c.r0.is_multiple_of(2) {
            return Err(Error::InfeasibleColoring);
        }
        Ok(RedCounts { lr: c.lr / 2, l0: half_up(c.l0), r0: half_up(c.r0) })
    } else {
        if c.l0 % 2 == 1 || c.r0 % 2 == 1 {
            return Err(Error::InfeasibleColoring);
        }
        Ok(RedCounts { lr: half_up(c.lr), l0: c.l0 / 2, r0: c.r0 / 2 })
    }
}

/// Parity rule for [`Variant::Second`].
pub fn second_variant_rule(c: &ClassCounts) -> Result<RedCounts> {
    if c.lr.is_multiple_of(2) {
        if c.l0.is_multiple_of(2) || c.r0 % 2 == 1 {
            return Err(Error::InfeasibleColoring);
        }
        Ok(RedCounts { lr: c.lr / 2, l0: half_up(c.l0), r0: c.r0 / 2 })
    } else {
        if c.l0 % 2 == 1 || c.r0.is_multiple_of(2) {
            return Err(Error::InfeasibleColoring);
        }
        Ok(RedCounts { lr: half_up(c.lr), l0: c.l0 / 2, r0: c.r0 / 2 })
    }
}

/// Parity rule for [`Variant::Third`]: one more red than green sink-edge,
/// equally many red and green source-edges.
pub fn third_variant_rule(c: &ClassCounts) -> Result<RedCounts> {
    if c.lr.is_multiple_of(2) {
        if c.l0 % 2 == 1 || c.r0.is_multiple_of(2) {
            return Err(Error::InfeasibleColoring);
        }
        Ok(RedCounts { lr: c.lr / 2, l0: c.l0 / 2, r0: half_up(c.r0) })
    } else {
        if c.l0.is_multiple_of(2) || c.r0 % 2 == 1 {
            return Err(Error::InfeasibleColoring);
        }
        Ok(RedCounts { lr: half_up(c.lr), l0: c.l0 / 2, r0: c.r0 / 2 })
    }
}

pub fn variant_rule(variant: Variant, c: &ClassCounts) -> Result<RedCounts> {
    match variant {
        Variant::First => first_variant_rule(c),
        Variant::Second => second_variant_rule(c),
        Variant::Third => third_variant_rule(c),
    }
}

/// Splits `theta` into a red ΓΔ-path of size `(k, i)` and a green one of
/// the size fixed by `variant`, using an alternating coloring of the
/// canonical decomposition.
pub fn split(theta: &MultipathUnion, k: usize, i: usize, variant: Variant) -> Result<(GammaDeltaPath, GammaDeltaPath)> {
    let want = variant.expected_kind(k, i);
    if want != Some(theta.kind) {
        return Err(mismatch(format!(
            "{variant:?} split to ({k}, {i}) needs type {want:?}, union has {:?}",
            theta.kind
        )));
    }
    let dec = canonical_decomposition(theta);
    let rule = variant_rule(variant, &dec.counts())?;
    let mut quota = BTreeMap::from([(QClass::QLR, rule.lr), (QClass::QL0, rule.l0), (QClass::Q0R, rule.r0)]);
    let mut colors = vec![Color::Green; theta.edges.len()];
    for ch in &dec.chains {
        let class = ch.class();
        // For 0R chains the quota counts red sink-edges, i.e. the last edge.
        let red_marked = match quota.get_mut(&class) {
            Some(q) if *q > 0 => {
                *q -= 1;
                true
            }
            Some(_) => false,
            None => true,
        };
        let first_red = if class == QClass::Q0R && ch.edges.len() % 2 == 0 { !red_marked } else { red_marked };
        let first = if first_red { Color::Red } else { Color::Green };
        for (pos, e) in ch.edges.iter().enumerate() {
            colors[*e] = if pos % 2 == 0 { first } else { first.other() };
        }
    }
    let coloring = Coloring { colors };
    if coloring.boundary_counts(theta, Color::Red) != (k, i) {
        return Err(Error::InfeasibleColoring);
    }
    let red = theta.extract(&coloring, Color::Red)?;
    let green = theta.extract(&coloring, Color::Green)?;
    let (gk, gi) = variant.green_target(k, i);
    if red.k() != k || red.i() != i || green.k() != gk || green.i() != gi {
        return Err(Error::InfeasibleColoring);
    }
    Ok((red, green))
}
