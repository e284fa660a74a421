//! Random planar networks for property tests and the CLI.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::network::{build_network, Edge, EdgeId, PlanarNetwork, Vertex, VertexId};
use crate::weight::{int, ratio, Rational, TropicalWeight};
use crate::weighting::Weighting;

/// Shape of a random layered network.
#[derive(Debug, Clone)]
pub struct NetworkShape {
    pub rank: usize,
    /// Number of internal columns.
    pub columns: usize,
    /// Fewest and most vertices in one internal column.
    pub min_per_column: usize,
    pub per_column: usize,
    /// Largest height of an internal vertex.
    pub max_height: usize,
    pub max_edges: usize,
    /// Chance of keeping each admissible edge.
    pub density: f64,
}

impl NetworkShape {
    pub fn small(rank: usize, max_edges: usize) -> Self {
        NetworkShape { rank, columns: 3, min_per_column: 1, per_column: 3, max_height: rank + 1, max_edges, density: 0.6 }
    }
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let da = a.0 as i64 - b.0 as i64;
    let db = a.1 as i64 - b.1 as i64;
    da * db < 0
}

/// Vertices sit in columns `x = 0, 1, …, columns + 1` with sources and
/// sinks at heights `1..=rank`; edges join neighbouring columns and never
/// cross. Internal columns get between `min_per_column` and `per_column`
/// vertices.
pub fn random_network<R: Rng + ?Sized>(rng: &mut R, shape: &NetworkShape) -> PlanarNetwork {
    let mut columns: Vec<Vec<usize>> = Vec::new();
    columns.push((1..=shape.rank).collect());
    for _ in 0..shape.columns {
        let mut hs: Vec<usize> = (1..=shape.max_height.max(1)).collect();
        hs.shuffle(rng);
        let hi = shape.per_column.min(hs.len()).max(1);
        let count = rng.gen_range(shape.min_per_column.clamp(1, hi)..=hi);
        let mut col: Vec<usize> = hs[..count].to_vec();
        col.sort();
        columns.push(col);
    }
    columns.push((1..=shape.rank).collect());

    let mut vertices = Vec::new();
    let mut ids: Vec<Vec<VertexId>> = Vec::new();
    for (x, col) in columns.iter().enumerate() {
        let mut row = Vec::new();
        for &y in col {
            let id = vertices.len() as VertexId;
            vertices.push(Vertex::new(id, int(x as i64), int(y as i64)));
            row.push(id);
        }
        ids.push(row);
    }

    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for c in 0..columns.len() - 1 {
        for a in 0..columns[c].len() {
            for b in 0..columns[c + 1].len() {
                candidates.push((c, a, b));
            }
        }
    }
    candidates.shuffle(rng);
    let mut chosen: Vec<(usize, usize, usize)> = Vec::new();
    for (c, a, b) in candidates {
        if chosen.len() >= shape.max_edges {
            break;
        }
        if !rng.gen_bool(shape.density) {
            continue;
        }
        if chosen.iter().any(|&(c2, a2, b2)| c2 == c && crosses((a, b), (a2, b2))) {
            continue;
        }
        chosen.push((c, a, b));
    }
    chosen.sort();
    let edges = chosen
        .iter()
        .enumerate()
        .map(|(id, &(c, a, b))| Edge::new(id as EdgeId, ids[c][a], ids[c + 1][b]))
        .collect();
    build_network(int(0), int(columns.len() as i64 - 1), vertices, edges).expect("layered networks are planar")
}

/// Splits `count` randomly chosen edges at an interior point. The first
/// half keeps the id and the second half gets a fresh one; the weight is
/// divided so that the two halves add up to the original.
pub fn subdivide<R: Rng + ?Sized>(
    rng: &mut R,
    net: &PlanarNetwork,
    w: &Weighting,
    count: usize,
) -> (PlanarNetwork, Weighting) {
    let mut vertices: Vec<Vertex> = net.vertices().to_vec();
    let mut edges: Vec<Edge> = net.edges().to_vec();
    let mut weights: Weighting = w.clone();
    let mut next_v = net.next_vertex_id();
    let mut next_e = net.next_edge_id();
    for _ in 0..count {
        if edges.is_empty() {
            break;
        }
        let pick = rng.gen_range(0..edges.len());
        let e = edges[pick].clone();
        let find = |id: VertexId| vertices.iter().find(|v| v.id == id).expect("vertex").pos.clone();
        let (p, q) = (find(e.tail), find(e.head));
        let t = ratio(rng.gen_range(1..=3), 4);
        let one = int(1);
        let x: Rational = &p.x * (&one - &t) + &q.x * &t;
        let y: Rational = &p.y * (&one - &t) + &q.y * &t;
        vertices.push(Vertex::new(next_v, x, y));
        edges[pick].head = next_v;
        edges.push(Edge::new(next_e, next_v, e.head));
        let part = match weights.get(e.id) {
            TropicalWeight::Finite(r) => {
                let a = TropicalWeight::Finite(int(rng.gen_range(-3..=3)));
                let b = TropicalWeight::Finite(r - a.finite().expect("finite"));
                (a, b)
            }
            TropicalWeight::NegInf => (TropicalWeight::NegInf, TropicalWeight::zero()),
        };
        weights.set(e.id, part.0);
        weights.set(next_e, part.1);
        next_v += 1;
        next_e += 1;
    }
    let out = build_network(net.a().clone(), net.b().clone(), vertices, edges).expect("subdivision keeps planarity");
    (out, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_networks_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for rank in 0..=3 {
            for _ in 0..50 {
                let net = random_network(&mut rng, &NetworkShape::small(rank, 14));
                assert_eq!(net.rank(), Some(rank));
                assert!(net.edges().len() <= 14);
                let w = Weighting::random_integer(&net, &mut rng, -3, 3);
                let (sub, _) = subdivide(&mut rng, &net, &w, 3);
                sub.validate_embedding().unwrap();
            }
        }
    }
}
