//! Small networks used in examples and tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::network::{build_network, concatenate, delta0_on, Edge, EdgeId, PlanarNetwork, Vertex};
use crate::weight::{int, ratio};
use crate::weighting::Weighting;

/// A rank-3 network with ten vertices and nine edges whose heaviest path
/// weighs 4 under [`intro_weights`].
pub fn intro_net() -> PlanarNetwork {
    let pts = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 1), (3, 2), (5, 3), (6, 1), (6, 2), (6, 3)];
    let vertices = pts
        .iter()
        .enumerate()
        .map(|(id, &(x, y))| Vertex::new(id as u32, int(x), int(y)))
        .collect();
    let arcs = [(0, 4), (4, 7), (3, 4), (1, 3), (3, 5), (5, 8), (5, 6), (2, 6), (6, 9)];
    let edges = arcs.iter().enumerate().map(|(id, &(t, h))| Edge::new(id as EdgeId, t, h)).collect();
    build_network(int(0), int(6), vertices, edges).expect("fixture is valid")
}

pub fn intro_weights(net: &PlanarNetwork) -> Weighting {
    let w = [0i64, 1, 1, 1, 1, -1, 2, 1, 0];
    Weighting::from_pairs(net, w.iter().enumerate().map(|(id, &x)| (id as EdgeId, x))).expect("fixture weights")
}

/// The heaviest path of [`intro_net`], edge by edge.
pub fn intro_red_path() -> Vec<EdgeId> {
    vec![3, 4, 6, 8]
}

/// The left factor of the small concatenation example: three lines with
/// three descending slants, on the strip `[-1/5, 27/10]`.
pub fn intro_gamma() -> PlanarNetwork {
    let pts = [
        (ratio(-1, 5), 1),
        (ratio(-1, 5), 2),
        (ratio(-1, 5), 3),
        (ratio(27, 10), 1),
        (ratio(27, 10), 2),
        (ratio(27, 10), 3),
        (int(2), 1),
        (int(1), 2),
        (ratio(3, 2), 2),
        (int(2), 2),
        (ratio(1, 2), 3),
        (ratio(3, 2), 3),
    ];
    let vertices = pts
        .into_iter()
        .enumerate()
        .map(|(id, (x, y))| Vertex::new(id as u32, x, int(y)))
        .collect();
    let arcs = [(0, 6), (6, 3), (8, 6), (1, 7), (7, 8), (8, 9), (9, 4), (10, 7), (11, 9), (2, 10), (10, 11), (11, 5)];
    let edges = arcs.iter().enumerate().map(|(id, &(t, h))| Edge::new(id as EdgeId, t, h)).collect();
    build_network(ratio(-1, 5), ratio(27, 10), vertices, edges).expect("fixture is valid")
}

/// The concatenation of [`intro_gamma`] with three straight lines.
pub fn intro_concat() -> PlanarNetwork {
    let d = delta0_on(3, ratio(27, 10), ratio(28, 5)).expect("fixture is valid");
    concatenate(&intro_gamma(), &d).expect("fixture is composable")
}

/// The highlighted pair in [`intro_concat`]: two left paths (from sources
/// 2 and 3 to middle vertices 1 and 3) and the top line on the right.
pub fn intro_concat_pair() -> (Vec<Vec<EdgeId>>, Vec<Vec<EdgeId>>) {
    (vec![vec![3, 4, 2, 1], vec![9, 10, 11]], vec![vec![14]])
}
