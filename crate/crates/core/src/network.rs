//! Planar networks: directed graphs embedded in a vertical strip.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::Segment;
use crate::weight::{int, Rational, TropicalWeight};
use crate::weighting::Weighting;

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub pos: Point,
}

impl Vertex {
    pub fn new(id: VertexId, x: Rational, y: Rational) -> Self {
        Vertex { id, pos: Point { x, y } }
    }

    pub fn x(&self) -> &Rational {
        &self.pos.x
    }

    pub fn y(&self) -> &Rational {
        &self.pos.y
    }
}

/// An oriented edge. `bends` lists interior corners of the embedded
/// polyline; it is empty for straight edges and only produced by
/// [`simplify`] when a degree-(1,1) vertex is contracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    pub multiplicity: u32,
    pub bends: Vec<Point>,
}

impl Edge {
    pub fn new(id: EdgeId, tail: VertexId, head: VertexId) -> Self {
        Edge { id, tail, head, multiplicity: 1, bends: Vec::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Source,
    Sink,
    Internal,
}

/// A validated planar network on the strip `a <= x <= b`.
#[derive(Debug, Clone)]
pub struct PlanarNetwork {
    a: Rational,
    b: Rational,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    rank: Option<usize>,
    middle: Option<Rational>,
    vindex: BTreeMap<VertexId, usize>,
    eindex: BTreeMap<EdgeId, usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl PartialEq for PlanarNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.middle == other.middle
    }
}

impl Eq for PlanarNetwork {}

/// Builds and validates a network: ids unique, vertices inside the strip,
/// edges pointing left to right, and an embedding without crossings.
pub fn build_network(a: Rational, b: Rational, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<PlanarNetwork> {
    PlanarNetwork::new(a, b, vertices, edges)
}

impl PlanarNetwork {
    pub fn new(a: Rational, b: Rational, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.multiplicity != 1 {
                return Err(Error::InvalidMultiplicity(e.id));
            }
        }
        let net = Self::assemble(a, b, vertices, edges, None)?;
        net.validate_embedding()?;
        Ok(net)
    }

    /// Like [`PlanarNetwork::new`] but records the middle line of a
    /// concatenation. The middle must lie strictly inside the strip.
    pub fn with_middle(
        a: Rational,
        b: Rational,
        middle: Rational,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
    ) -> Result<Self> {
        if middle <= a || middle >= b {
            return Err(Error::NotComposable("middle line outside the strip"));
        }
        let mut net = Self::new(a, b, vertices, edges)?;
        net.middle = Some(middle);
        Ok(net)
    }

    /// Index bookkeeping and the cheap checks. The embedding is not checked.
    pub(crate) fn assemble(
        a: Rational,
        b: Rational,
        mut vertices: Vec<Vertex>,
        mut edges: Vec<Edge>,
        middle: Option<Rational>,
    ) -> Result<Self> {
        if a >= b {
            return Err(Error::EmptyStrip);
        }
        vertices.sort_by_key(|v| v.id);
        edges.sort_by_key(|e| e.id);
        let mut vindex = BTreeMap::new();
        for (idx, v) in vertices.iter().enumerate() {
            if vindex.insert(v.id, idx).is_some() {
                return Err(Error::DuplicateId { kind: "vertex", id: v.id });
            }
            if v.pos.x < a || v.pos.x > b {
                return Err(Error::VertexOutsideStrip(v.id));
            }
        }
        let mut eindex = BTreeMap::new();
        let mut out_adj = vec![Vec::new(); vertices.len()];
        let mut in_adj = vec![Vec::new(); vertices.len()];
        for (idx, e) in edges.iter().enumerate() {
            if eindex.insert(e.id, idx).is_some() {
                return Err(Error::DuplicateId { kind: "edge", id: e.id });
            }
            let t = *vindex.get(&e.tail).ok_or(Error::UnknownVertex { edge: e.id, vertex: e.tail })?;
            let h = *vindex.get(&e.head).ok_or(Error::UnknownVertex { edge: e.id, vertex: e.head })?;
            let mut prev = &vertices[t].pos.x;
            for p in e.bends.iter().map(|p| &p.x).chain(core::iter::once(&vertices[h].pos.x)) {
                if p == prev {
                    return Err(Error::VerticalEdge(e.id));
                }
                if p < prev {
                    return Err(Error::ReversedEdge(e.id));
                }
                prev = p;
            }
            for bend in &e.bends {
                if bend.x <= a || bend.x >= b {
                    return Err(Error::VertexOutsideStrip(e.tail));
                }
            }
            out_adj[t].push(idx);
            in_adj[h].push(idx);
        }
        let mut net = PlanarNetwork {
            a,
            b,
            vertices,
            edges,
            rank: None,
            middle,
            vindex,
            eindex,
            out_adj,
            in_adj,
        };
        net.rank = net.detect_rank();
        Ok(net)
    }

    fn detect_rank(&self) -> Option<usize> {
        let heights = |kind| {
            let mut ys: Vec<&Rational> =
                self.vertices.iter().filter(|v| self.kind_of(v) == kind).map(|v| v.y()).collect();
            ys.sort();
            ys
        };
        let (src, snk) = (heights(VertexKind::Source), heights(VertexKind::Sink));
        let n = src.len();
        let is_range = |ys: &[&Rational]| ys.iter().enumerate().all(|(j, y)| **y == int(j as i64 + 1));
        (snk.len() == n && is_range(&src) && is_range(&snk)).then_some(n)
    }

    /// Checks that distinct embedded edges meet only at shared endpoints and
    /// that no vertex sits on top of another vertex or inside an edge.
    pub fn validate_embedding(&self) -> Result<()> {
        let mut by_pos: BTreeMap<&Point, VertexId> = BTreeMap::new();
        for v in &self.vertices {
            if let Some(other) = by_pos.insert(&v.pos, v.id) {
                return Err(Error::CoincidentVertices(other, v.id));
            }
        }
        let mut segments: Vec<(EdgeId, Segment<'_>)> = Vec::new();
        for e in &self.edges {
            let tail = &self.vertex(e.tail).pos;
            let head = &self.vertex(e.head).pos;
            let mut pts: Vec<(&Point, Option<VertexId>)> = vec![(tail, Some(e.tail))];
            pts.extend(e.bends.iter().map(|p| (p, None)));
            pts.push((head, Some(e.head)));
            for w in pts.windows(2) {
                segments.push((e.id, Segment { p: w[0].0, q: w[1].0, p_vertex: w[0].1, q_vertex: w[1].1 }));
            }
        }
        for (i, (ei, si)) in segments.iter().enumerate() {
            for (ej, sj) in &segments[i + 1..] {
                if ei != ej && si.conflicts_with(sj) {
                    return Err(Error::CrossingEdges(*ei, *ej));
                }
            }
        }
        for v in &self.vertices {
            for (eid, s) in &segments {
                if s.contains_interior(&v.pos) {
                    return Err(Error::VertexOnEdge { vertex: v.id, edge: *eid });
                }
            }
        }
        Ok(())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    /// The x-coordinate of the middle line when this network is a
    /// concatenation.
    pub fn middle(&self) -> Option<&Rational> {
        self.middle.as_ref()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: VertexId) -> &Vertex {
        &self.vertices[self.vindex[&id]]
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[self.eindex[&id]]
    }

    pub fn has_edge(&self, id: EdgeId) -> bool {
        self.eindex.contains_key(&id)
    }

    pub fn has_vertex(&self, id: VertexId) -> bool {
        self.vindex.contains_key(&id)
    }

    pub(crate) fn vertex_index(&self, id: VertexId) -> usize {
        self.vindex[&id]
    }

    pub fn kind_of(&self, v: &Vertex) -> VertexKind {
        if v.pos.x == self.a {
            VertexKind::Source
        } else if v.pos.x == self.b {
            VertexKind::Sink
        } else {
            VertexKind::Internal
        }
    }

    pub fn kind(&self, id: VertexId) -> VertexKind {
        self.kind_of(self.vertex(id))
    }

    pub fn is_on_middle(&self, id: VertexId) -> bool {
        self.middle.as_ref().is_some_and(|m| self.vertex(id).x() == m)
    }

    /// Sources ordered by increasing height.
    pub fn sources(&self) -> Vec<VertexId> {
        self.boundary(VertexKind::Source)
    }

    /// Sinks ordered by increasing height.
    pub fn sinks(&self) -> Vec<VertexId> {
        self.boundary(VertexKind::Sink)
    }

    /// Vertices on the middle line ordered by increasing height.
    pub fn middle_vertices(&self) -> Vec<VertexId> {
        let Some(m) = &self.middle else { return Vec::new() };
        let mut vs: Vec<&Vertex> = self.vertices.iter().filter(|v| v.x() == m).collect();
        vs.sort_by(|p, q| p.y().cmp(q.y()));
        vs.into_iter().map(|v| v.id).collect()
    }

    fn boundary(&self, kind: VertexKind) -> Vec<VertexId> {
        let mut vs: Vec<&Vertex> = self.vertices.iter().filter(|v| self.kind_of(v) == kind).collect();
        vs.sort_by(|p, q| p.y().cmp(q.y()));
        vs.into_iter().map(|v| v.id).collect()
    }

    pub fn out_edges(&self, id: VertexId) -> impl Iterator<Item = &Edge> {
        self.out_adj[self.vindex[&id]].iter().map(move |&e| &self.edges[e])
    }

    pub fn in_edges(&self, id: VertexId) -> impl Iterator<Item = &Edge> {
        self.in_adj[self.vindex[&id]].iter().map(move |&e| &self.edges[e])
    }

    pub(crate) fn out_indices(&self, vidx: usize) -> &[usize] {
        &self.out_adj[vidx]
    }

    /// Vertex indices sorted by x; every edge goes forward in this order.
    pub(crate) fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&p, &q| self.vertices[p].x().cmp(self.vertices[q].x()));
        order
    }

    /// The embedded polyline of an edge, tail first.
    pub fn edge_points<'a>(&'a self, e: &'a Edge) -> Vec<&'a Point> {
        let mut pts = vec![&self.vertex(e.tail).pos];
        pts.extend(e.bends.iter());
        pts.push(&self.vertex(e.head).pos);
        pts
    }

    /// One past the largest edge id.
    pub fn next_edge_id(&self) -> EdgeId {
        self.edges.last().map_or(0, |e| e.id + 1)
    }

    pub fn next_vertex_id(&self) -> VertexId {
        self.vertices.last().map_or(0, |v| v.id + 1)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    /// Splits a concatenation at its middle line. Both halves keep the
    /// original vertex and edge ids.
    pub fn split_at_middle(&self) -> Result<(PlanarNetwork, PlanarNetwork)> {
        let m = self.middle.clone().ok_or(Error::NotConcatenated)?;
        let part = |left: bool| {
            let vs: Vec<Vertex> = self
                .vertices
                .iter()
                .filter(|v| if left { *v.x() <= m } else { *v.x() >= m })
                .cloned()
                .collect();
            let es: Vec<Edge> = self
                .edges
                .iter()
                .filter(|e| {
                    if left {
                        *self.vertex(e.head).x() <= m
                    } else {
                        *self.vertex(e.tail).x() >= m
                    }
                })
                .cloned()
                .collect();
            if left {
                Self::assemble(self.a.clone(), m.clone(), vs, es, None)
            } else {
                Self::assemble(m.clone(), self.b.clone(), vs, es, None)
            }
        };
        Ok((part(true)?, part(false)?))
    }
}

/// The subnetwork `Γ^(k)`: drops the sources and sinks above height `k`
/// together with their edges. Everything else is kept.
pub fn truncate(net: &PlanarNetwork, k: usize) -> Result<PlanarNetwork> {
    let n = net.rank().ok_or(Error::RankMissing)?;
    if k > n {
        return Err(Error::KOutOfRange { k, max: n });
    }
    let cutoff = int(k as i64);
    let dropped: BTreeSet<VertexId> = net
        .vertices()
        .iter()
        .filter(|v| net.kind_of(v) != VertexKind::Internal && *v.y() > cutoff)
        .map(|v| v.id)
        .collect();
    let vs = net.vertices().iter().filter(|v| !dropped.contains(&v.id)).cloned().collect();
    let es = net
        .edges()
        .iter()
        .filter(|e| !dropped.contains(&e.tail) && !dropped.contains(&e.head))
        .cloned()
        .collect();
    let mut out = PlanarNetwork::assemble(net.a.clone(), net.b.clone(), vs, es, net.middle.clone())?;
    out.rank = Some(k);
    Ok(out)
}

/// Glues `d` to the right of `g` along the line `x = b(g)`.
///
/// Edges of `g` keep their ids; edges and non-shared vertices of `d` are
/// shifted past the ids used by `g`. Each source of `d` is merged with the
/// sink of `g` at the same height.
pub fn concatenate(g: &PlanarNetwork, d: &PlanarNetwork) -> Result<PlanarNetwork> {
    if g.b != d.a {
        return Err(Error::NotComposable("strip bounds do not meet"));
    }
    let sinks_by_y: BTreeMap<&Rational, VertexId> =
        g.sinks().into_iter().map(|id| (g.vertex(id).y(), id)).collect();
    let voff = g.next_vertex_id();
    let eoff = g.next_edge_id();
    let mut remap = BTreeMap::new();
    let mut vertices = g.vertices.clone();
    for v in &d.vertices {
        if d.kind_of(v) == VertexKind::Source {
            let shared = sinks_by_y.get(v.y()).ok_or(Error::NotComposable("a source of the right factor is not a sink of the left factor"))?;
            remap.insert(v.id, *shared);
        } else {
            remap.insert(v.id, v.id + voff);
            vertices.push(Vertex { id: v.id + voff, pos: v.pos.clone() });
        }
    }
    let mut edges = g.edges.clone();
    for e in &d.edges {
        edges.push(Edge {
            id: e.id + eoff,
            tail: remap[&e.tail],
            head: remap[&e.head],
            multiplicity: e.multiplicity,
            bends: e.bends.clone(),
        });
    }
    PlanarNetwork::assemble(g.a.clone(), d.b.clone(), vertices, edges, Some(g.b.clone()))
}

/// Output of [`simplify`].
#[derive(Debug, Clone)]
pub struct Simplified {
    pub network: PlanarNetwork,
    pub weighting: Option<Weighting>,
    /// For each surviving edge, the original edges it replaces, tail first.
    pub chains: BTreeMap<EdgeId, Vec<EdgeId>>,
}

/// Removes internal vertices that no source reaches, then contracts every
/// internal vertex of degree (1,1). A contracted pair of edges becomes one
/// bent edge whose weight is the sum of the two. Sources and sinks are kept
/// so the rank is preserved.
pub fn simplify(net: &PlanarNetwork, w: Option<&Weighting>) -> Simplified {
    let nv = net.vertices.len();
    let mut reached = vec![false; nv];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for (idx, v) in net.vertices.iter().enumerate() {
        if net.kind_of(v) == VertexKind::Source {
            reached[idx] = true;
            queue.push_back(idx);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &e in &net.out_adj[v] {
            let h = net.vindex[&net.edges[e].head];
            if !reached[h] {
                reached[h] = true;
                queue.push_back(h);
            }
        }
    }
    let keep_vertex = |idx: usize| reached[idx] || net.kind_of(&net.vertices[idx]) != VertexKind::Internal;

    // working copies keyed by edge id
    let mut edges: BTreeMap<EdgeId, Edge> = BTreeMap::new();
    let mut weights: BTreeMap<EdgeId, TropicalWeight> = BTreeMap::new();
    let mut chains: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
    for e in &net.edges {
        if reached[net.vindex[&e.tail]] {
            edges.insert(e.id, e.clone());
            chains.insert(e.id, vec![e.id]);
            if let Some(w) = w {
                weights.insert(e.id, w.get(e.id).clone());
            }
        }
    }
    let mut in_of: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    let mut out_of: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for e in edges.values() {
        out_of.entry(e.tail).or_default().push(e.id);
        in_of.entry(e.head).or_default().push(e.id);
    }
    let mut removed: BTreeSet<VertexId> = BTreeSet::new();
    for idx in net.topological_order() {
        let v = &net.vertices[idx];
        if !keep_vertex(idx) {
            removed.insert(v.id);
            continue;
        }
        if net.kind_of(v) != VertexKind::Internal {
            continue;
        }
        let ins = in_of.get(&v.id).cloned().unwrap_or_default();
        let outs = out_of.get(&v.id).cloned().unwrap_or_default();
        if ins.len() != 1 || outs.len() != 1 {
            continue;
        }
        let (e1, e2) = (ins[0], outs[0]);
        let second = edges.remove(&e2).expect("edge present");
        let first = edges.get_mut(&e1).expect("edge present");
        first.bends.push(v.pos.clone());
        first.bends.extend(second.bends.iter().cloned());
        first.head = second.head;
        let tail_chain = chains.remove(&e2).expect("chain present");
        chains.get_mut(&e1).expect("chain present").extend(tail_chain);
        if w.is_some() {
            let w2 = weights.remove(&e2).expect("weight present");
            let w1 = weights.get_mut(&e1).expect("weight present");
            *w1 += &w2;
        }
        let head_ins = in_of.get_mut(&second.head).expect("head has in-edges");
        for id in head_ins.iter_mut() {
            if *id == e2 {
                *id = e1;
            }
        }
        removed.insert(v.id);
    }
    let vertices: Vec<Vertex> = net.vertices.iter().filter(|v| !removed.contains(&v.id)).cloned().collect();
    let edges: Vec<Edge> = edges.into_values().collect();
    let mut network = PlanarNetwork::assemble(net.a.clone(), net.b.clone(), vertices, edges, net.middle.clone())
        .expect("simplification keeps the network well formed");
    network.rank = net.rank;
    let weighting = w.map(|_| Weighting::from_map_unchecked(weights));
    Simplified { network, weighting, chains }
}

/// Left end of the slant `a_{r,s}` of the staircase network `Γ₀[n]`; the
/// slant runs from `(u, r+1)` to `(u+1, r)`.
pub fn gamma0_slant_origin(n: usize, r: usize, s: usize) -> i64 {
    1 + 2 * (n as i64 - 1 - r as i64) + 3 * (s as i64 - 1)
}

/// Right end of the strip of `Γ₀[n]`; the strip is `[0, 3n-2]`.
pub fn gamma0_width(n: usize) -> i64 {
    3 * n as i64 - 2
}

/// The staircase network `Γ₀[n]`: horizontal lines `y = 1..n` and the
/// slants `a_{r,s}`, `1 <= s <= r <= n-1`, each dropping one line.
///
/// Edge ids run over the horizontal segments line by line from left to
/// right, then over the slants in `(r, s)` order.
pub fn gamma0(n: usize) -> Result<PlanarNetwork> {
    if n < 1 {
        return Err(Error::NOutOfRange(n));
    }
    let width = gamma0_width(n);
    let mut vertices = Vec::new();
    let mut at: BTreeMap<(i64, usize), VertexId> = BTreeMap::new();
    let mut edges = Vec::new();
    for line in 1..=n {
        let mut xs: BTreeSet<i64> = [0, width].into_iter().collect();
        if line >= 2 {
            xs.extend((1..line).map(|s| gamma0_slant_origin(n, line - 1, s)));
        }
        if line < n {
            xs.extend((1..=line).map(|s| gamma0_slant_origin(n, line, s) + 1));
        }
        let ids: Vec<VertexId> = xs
            .iter()
            .map(|&x| {
                let id = vertices.len() as VertexId;
                vertices.push(Vertex::new(id, int(x), int(line as i64)));
                at.insert((x, line), id);
                id
            })
            .collect();
        for pair in ids.windows(2) {
            edges.push(Edge::new(edges.len() as EdgeId, pair[0], pair[1]));
        }
    }
    for r in 1..n {
        for s in 1..=r {
            let u = gamma0_slant_origin(n, r, s);
            edges.push(Edge::new(edges.len() as EdgeId, at[&(u, r + 1)], at[&(u + 1, r)]));
        }
    }
    PlanarNetwork::assemble(int(0), int(width), vertices, edges, None)
}

/// The straight network `Δ₀[n]` on the strip `[0, 1]`.
pub fn delta0(n: usize) -> Result<PlanarNetwork> {
    delta0_on(n, int(0), int(1))
}

/// `Δ₀[n]` on an arbitrary strip `[a, b]`: line `j` is edge `j-1`, from
/// vertex `j-1` to vertex `n+j-1`.
pub fn delta0_on(n: usize, a: Rational, b: Rational) -> Result<PlanarNetwork> {
    if n < 1 {
        return Err(Error::NOutOfRange(n));
    }
    let mut vertices = Vec::with_capacity(2 * n);
    for j in 0..n {
        vertices.push(Vertex::new(j as VertexId, a.clone(), int(j as i64 + 1)));
    }
    for j in 0..n {
        vertices.push(Vertex::new((n + j) as VertexId, b.clone(), int(j as i64 + 1)));
    }
    let edges = (0..n).map(|j| Edge::new(j as EdgeId, j as VertexId, (n + j) as VertexId)).collect();
    PlanarNetwork::assemble(a, b, vertices, edges, None)
}

/// `Γ₀[n] ∘ Δ₀[n]`, the network whose hive map is onto the hive cone.
pub fn horn_network(n: usize) -> Result<PlanarNetwork> {
    let g = gamma0(n)?;
    let w = gamma0_width(n);
    let d = delta0_on(n, int(w), int(w + 1))?;
    concatenate(&g, &d)
}

/// All edges lying on the horizontal line `y = j`.
pub fn tau_line(net: &PlanarNetwork, j: usize) -> BTreeSet<EdgeId> {
    let y = int(j as i64);
    net.edges()
        .iter()
        .filter(|e| net.edge_points(e).iter().all(|p| p.y == y))
        .map(|e| e.id)
        .collect()
}
