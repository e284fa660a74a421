//! Brute-force maxima by explicit enumeration of vertex-disjoint path
//! families. Deliberately naive: depth-first search for single paths,
//! then every subset of the right size.

use std::collections::BTreeSet;

use hivenet::{EdgeId, PlanarNetwork, Rational, TropicalWeight, VertexId, Weighting};

#[derive(Clone)]
pub struct RawPath {
    pub edges: Vec<EdgeId>,
    pub vertices: BTreeSet<VertexId>,
    pub start: VertexId,
    pub end: VertexId,
}

/// Every directed path from a vertex satisfying `start` to one satisfying
/// `stop`; the walk does not continue past a `stop` vertex.
pub fn raw_paths(
    net: &PlanarNetwork,
    start: impl Fn(VertexId) -> bool,
    stop: impl Fn(VertexId) -> bool,
) -> Vec<RawPath> {
    fn dfs(
        net: &PlanarNetwork,
        v: VertexId,
        stop: &dyn Fn(VertexId) -> bool,
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if !stack.is_empty() && stop(v) {
            out.push(stack.clone());
            return;
        }
        let outs: Vec<EdgeId> = net.edges().iter().filter(|e| e.tail == v).map(|e| e.id).collect();
        for e in outs {
            stack.push(e);
            dfs(net, net.edge(e).head, stop, stack, out);
            stack.pop();
        }
    }
    let mut found = Vec::new();
    for v in net.vertices() {
        if start(v.id) {
            dfs(net, v.id, &stop, &mut Vec::new(), &mut found);
        }
    }
    found
        .into_iter()
        .map(|edges| {
            let s = net.edge(edges[0]).tail;
            let mut vertices = BTreeSet::from([s]);
            vertices.extend(edges.iter().map(|e| net.edge(*e).head));
            let end = net.edge(*edges.last().unwrap()).head;
            RawPath { edges, vertices, start: s, end }
        })
        .collect()
}

fn path_weight(p: &RawPath, w: &Weighting) -> TropicalWeight {
    p.edges.iter().map(|e| w.get(*e).clone()).sum()
}

/// All index sets of `size` pairwise vertex-disjoint paths.
pub fn disjoint_families(paths: &[RawPath], size: usize) -> Vec<Vec<usize>> {
    fn rec(paths: &[RawPath], from: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(chosen.clone());
            return;
        }
        for j in from..paths.len() {
            if chosen.iter().all(|&c| paths[c].vertices.is_disjoint(&paths[j].vertices)) {
                chosen.push(j);
                rec(paths, j + 1, left - 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(paths, 0, size, &mut Vec::new(), &mut out);
    out
}

fn best(values: impl Iterator<Item = TropicalWeight>) -> TropicalWeight {
    values.max().unwrap_or(TropicalWeight::NegInf)
}

fn is_x(net: &PlanarNetwork, v: VertexId, x: &Rational) -> bool {
    net.vertex(v).x() == x
}

/// `l_k` of the truncation to boundary heights at most `level`.
pub fn brute_l(net: &PlanarNetwork, w: &Weighting, level: usize, k: usize) -> TropicalWeight {
    if k == 0 {
        return TropicalWeight::zero();
    }
    let cut = Rational::from_integer((level as i64).into());
    let low = |v: VertexId| *net.vertex(v).y() <= cut;
    let paths = raw_paths(
        net,
        |v| is_x(net, v, net.a()) && low(v),
        |v| is_x(net, v, net.b()),
    );
    let paths: Vec<RawPath> = paths.into_iter().filter(|p| low(p.end)).collect();
    best(disjoint_families(&paths, k).iter().map(|f| f.iter().map(|&j| path_weight(&paths[j], w)).sum()))
}

/// `m^k_i` of a concatenated network.
pub fn brute_m(gd: &PlanarNetwork, w: &Weighting, k: usize, i: usize) -> TropicalWeight {
    let m = gd.middle().unwrap().clone();
    let left = raw_paths(gd, |v| is_x(gd, v, gd.a()), |v| is_x(gd, v, &m));
    let right = raw_paths(gd, |v| is_x(gd, v, &m), |v| is_x(gd, v, gd.b()));
    let right_families = disjoint_families(&right, i);
    let mut values = Vec::new();
    for lf in disjoint_families(&left, k) {
        let ends: BTreeSet<VertexId> = lf.iter().map(|&j| left[j].end).collect();
        let lw: TropicalWeight = lf.iter().map(|&j| path_weight(&left[j], w)).sum();
        for rf in &right_families {
            if rf.iter().all(|&j| ends.contains(&right[j].start)) {
                let rw: TropicalWeight = rf.iter().map(|&j| path_weight(&right[j], w)).sum();
                values.push(lw.clone() + rw);
            }
        }
    }
    best(values.into_iter())
}
