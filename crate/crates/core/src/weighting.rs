//! Edge weightings with values in the max-plus semifield.

use alloc::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::network::{EdgeId, PlanarNetwork};
use crate::weight::{int, Rational, TropicalWeight};

/// A total map from the edges of a network to tropical weights.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weighting {
    weights: BTreeMap<EdgeId, TropicalWeight>,
}

impl Weighting {
    /// Checks that `weights` covers exactly the edges of `net`.
    pub fn new(net: &PlanarNetwork, weights: BTreeMap<EdgeId, TropicalWeight>) -> Result<Self> {
        for id in weights.keys() {
            if !net.has_edge(*id) {
                return Err(Error::UnknownEdge(*id));
            }
        }
        for e in net.edges() {
            if !weights.contains_key(&e.id) {
                return Err(Error::MissingWeight(e.id));
            }
        }
        Ok(Weighting { weights })
    }

    pub fn from_pairs<W: Into<TropicalWeight>>(
        net: &PlanarNetwork,
        pairs: impl IntoIterator<Item = (EdgeId, W)>,
    ) -> Result<Self> {
        Self::new(net, pairs.into_iter().map(|(id, w)| (id, w.into())).collect())
    }

    pub(crate) fn from_map_unchecked(weights: BTreeMap<EdgeId, TropicalWeight>) -> Self {
        Weighting { weights }
    }

    /// Every edge gets weight zero, the tropical unit.
    pub fn zero(net: &PlanarNetwork) -> Self {
        Self::constant(net, TropicalWeight::zero())
    }

    pub fn constant(net: &PlanarNetwork, w: TropicalWeight) -> Self {
        Weighting { weights: net.edge_ids().map(|id| (id, w.clone())).collect() }
    }

    /// Independent uniform integer weights in `lo..=hi`.
    pub fn random_integer<R: Rng + ?Sized>(net: &PlanarNetwork, rng: &mut R, lo: i64, hi: i64) -> Self {
        Weighting {
            weights: net.edge_ids().map(|id| (id, TropicalWeight::from_int(rng.gen_range(lo..=hi)))).collect(),
        }
    }

    /// Uniform rationals in `[lo, hi]` with denominator `den`.
    pub fn random_rational<R: Rng + ?Sized>(net: &PlanarNetwork, rng: &mut R, lo: i64, hi: i64, den: i64) -> Self {
        Weighting {
            weights: net
                .edge_ids()
                .map(|id| {
                    let num = rng.gen_range(lo * den..=hi * den);
                    (id, TropicalWeight::Finite(Rational::new(num.into(), den.into())))
                })
                .collect(),
        }
    }

    pub fn get(&self, id: EdgeId) -> &TropicalWeight {
        &self.weights[&id]
    }

    pub fn try_get(&self, id: EdgeId) -> Option<&TropicalWeight> {
        self.weights.get(&id)
    }

    pub fn set(&mut self, id: EdgeId, w: TropicalWeight) {
        self.weights.insert(id, w);
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &TropicalWeight)> {
        self.weights.iter().map(|(id, w)| (*id, w))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Tropical product (ordinary sum) over a collection of edges.
    pub fn total<'a>(&self, edges: impl IntoIterator<Item = &'a EdgeId>) -> TropicalWeight {
        edges.into_iter().map(|id| self.get(*id)).sum()
    }

    /// Restriction to the edges of `net`, e.g. after truncation.
    pub fn restrict(&self, net: &PlanarNetwork) -> Result<Self> {
        let weights = net
            .edge_ids()
            .map(|id| self.weights.get(&id).cloned().map(|w| (id, w)).ok_or(Error::MissingWeight(id)))
            .collect::<Result<_>>()?;
        Ok(Weighting { weights })
    }

    /// True when every weight is an integer.
    pub fn is_integral(&self) -> bool {
        self.weights.values().all(|w| w.finite().is_none_or(|r| r.is_integer()))
    }

    /// Weights for a concatenation: those of `g` as is, those of `d`
    /// shifted by the edge-id offset used in [`crate::network::concatenate`].
    pub fn concatenate(g_net: &PlanarNetwork, g: &Weighting, d: &Weighting) -> Self {
        let off = g_net.next_edge_id();
        let mut weights = g.weights.clone();
        weights.extend(d.weights.iter().map(|(id, w)| (id + off, w.clone())));
        Weighting { weights }
    }
}

/// Weight `1` on every edge; handy in tests.
pub fn unit(net: &PlanarNetwork) -> Weighting {
    Weighting::constant(net, TropicalWeight::Finite(int(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::delta0;

    #[test]
    fn coverage_is_checked() {
        let d = delta0(2).unwrap();
        assert_eq!(Weighting::from_pairs(&d, [(0, 1i64)]).unwrap_err(), Error::MissingWeight(1));
        assert_eq!(
            Weighting::from_pairs(&d, [(0, 1i64), (1, 2), (7, 0)]).unwrap_err(),
            Error::UnknownEdge(7)
        );
        let w = Weighting::from_pairs(&d, [(0, 1i64), (1, 2)]).unwrap();
        assert_eq!(w.total(&[0, 1]), TropicalWeight::from_int(3));
        assert!(w.is_integral());
    }
}
