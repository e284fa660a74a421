#![allow(dead_code)]

use hivenet::network::{concatenate, delta0_on, PlanarNetwork};
use hivenet::sample::{random_network, NetworkShape};
use hivenet::weight::int;
use hivenet::{Rational, Vertex, Weighting};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational weights in [-5, 5] with denominators dividing 12.
pub fn weights<R: Rng>(rng: &mut R, net: &PlanarNetwork) -> Weighting {
    Weighting::random_rational(net, rng, -5, 5, 12)
}

/// A random layered network of the given rank with at most `max_edges`
/// edges.
pub fn network<R: Rng>(rng: &mut R, rank: usize, max_edges: usize) -> PlanarNetwork {
    random_network(rng, &NetworkShape::small(rank, max_edges))
}

/// A random network with at least `rank` vertices in every column, so
/// that `rank` disjoint paths are often possible.
pub fn rich_network<R: Rng>(rng: &mut R, rank: usize, max_edges: usize) -> PlanarNetwork {
    let shape = NetworkShape { min_per_column: rank, per_column: rank + 1, density: 0.7, ..NetworkShape::small(rank, max_edges) };
    random_network(rng, &shape)
}

/// Concatenation of two independent rich random networks.
pub fn rich_pair<R: Rng>(rng: &mut R, rank: usize, max_edges: usize) -> PlanarNetwork {
    let g = rich_network(rng, rank, max_edges);
    let d = rich_network(rng, rank, max_edges);
    let d = shifted(&d, g.b());
    concatenate(&g, &d).unwrap()
}

/// A random network followed by `rank` straight lines.
pub fn network_with_lines<R: Rng>(rng: &mut R, rank: usize, max_edges: usize) -> PlanarNetwork {
    let g = network(rng, rank, max_edges);
    let b = g.b().clone();
    let d = delta0_on(rank, b.clone(), b + int(2)).unwrap();
    concatenate(&g, &d).unwrap()
}

/// Translates a network horizontally.
pub fn shifted(net: &PlanarNetwork, dx: &Rational) -> PlanarNetwork {
    let vs = net.vertices().iter().map(|v| Vertex::new(v.id, v.x() + dx, v.y().clone())).collect();
    PlanarNetwork::new(net.a() + dx, net.b() + dx, vs, net.edges().to_vec()).unwrap()
}

/// Concatenation of two independent random networks.
pub fn random_pair<R: Rng>(rng: &mut R, rank: usize, max_edges: usize) -> PlanarNetwork {
    let g = network(rng, rank, max_edges);
    let d = network(rng, rank, max_edges);
    let d = shifted(&d, g.b());
    concatenate(&g, &d).unwrap()
}

pub mod oracle;
pub mod trials;

pub fn pick<'a, T, R: Rng>(rng: &mut R, xs: &'a [T]) -> Option<&'a T> {
    xs.choose(rng)
}

/// Like [`weights`], but roughly one edge in seven is `-inf`.
pub fn weights_with_holes<R: Rng>(rng: &mut R, net: &PlanarNetwork) -> Weighting {
    let mut w = weights(rng, net);
    for id in net.edge_ids().collect::<Vec<_>>() {
        if rng.gen_ratio(1, 7) {
            w.set(id, hivenet::TropicalWeight::NegInf);
        }
    }
    w
}
