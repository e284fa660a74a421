//! Randomized recombination trials shared by the module tests and the
//! acceptance run. Each trial returns `Ok(false)` when the random draw has
//! no instance of the requested shape.

use std::collections::BTreeMap;

use hivenet::multipath::{enumerate_gd_paths, enumerate_kpaths, DEFAULT_CAP};
use hivenet::network::{horn_network, truncate};
use std::collections::BTreeSet;

use hivenet::recombine::{
    recombine_balance, recombine_shift, split, union, Color, Coloring, MultipathUnion, Variant,
};
use hivenet::{EdgeId, GammaDeltaPath, Multipath, PlanarNetwork};
use rand::Rng;

use super::{pick, weights};

pub type Counts = BTreeMap<EdgeId, usize>;

pub fn edge_counts<'a>(paths: impl IntoIterator<Item = &'a Vec<EdgeId>>) -> Counts {
    let mut out = Counts::new();
    for p in paths {
        for e in p {
            *out.entry(*e).or_default() += 1;
        }
    }
    out
}

fn gd_counts(xs: &[&GammaDeltaPath]) -> Counts {
    edge_counts(xs.iter().flat_map(|x| x.gamma().paths().iter().chain(x.delta().paths())))
}

fn mp_counts(xs: &[&Multipath]) -> Counts {
    edge_counts(xs.iter().flat_map(|x| x.paths()))
}

fn draw<R: Rng>(rng: &mut R, net: &PlanarNetwork, level: usize, size: usize) -> Option<Multipath> {
    let sub = truncate(net, level).ok()?;
    let all = enumerate_kpaths(&sub, size, DEFAULT_CAP).ok()?;
    pick(rng, &all).cloned()
}

fn check_pair<R: Rng>(
    rng: &mut R,
    net: &PlanarNetwork,
    inputs: [&Multipath; 2],
    outputs: [&Multipath; 2],
    types: [(usize, usize); 2],
) -> Result<(), String> {
    for (mp, (level, size)) in outputs.iter().zip(types) {
        let sub = truncate(net, level).unwrap();
        mp.validate(&sub).map_err(|e| format!("output not in P_{size} at level {level}: {e}"))?;
        if mp.k() != size {
            return Err(format!("output has {} paths, expected {size}", mp.k()));
        }
    }
    if mp_counts(&inputs) != mp_counts(&outputs) {
        return Err("edge multiset changed".into());
    }
    for _ in 0..3 {
        let w = weights(rng, net);
        let before = inputs[0].weight(&w) + inputs[1].weight(&w);
        let after = outputs[0].weight(&w) + outputs[1].weight(&w);
        if before != after {
            return Err(format!("weight {before} became {after}"));
        }
    }
    Ok(())
}

/// `f ∈ P_{i-1} Γ^(k)`, `g ∈ P_i Γ^(k-1)` on `net`.
pub fn shift_trial<R: Rng>(rng: &mut R, net: &PlanarNetwork) -> Result<bool, String> {
    let n = net.rank().unwrap();
    if n < 2 {
        return Ok(false);
    }
    let k = rng.gen_range(2..=n);
    let i = rng.gen_range(1..k);
    let (Some(f), Some(g)) = (draw(rng, net, k, i - 1), draw(rng, net, k - 1, i)) else {
        return Ok(false);
    };
    let (even, odd) = recombine_shift(net, k, &f, &g).map_err(|e| e.to_string())?;
    check_pair(rng, net, [&f, &g], [&even, &odd], [(k - 1, i - 1), (k, i)])?;
    Ok(true)
}

/// `f ∈ P_{i+1} Γ^(k)`, `g ∈ P_{i-1} Γ^(k-1)` on `net`.
pub fn balance_trial<R: Rng>(rng: &mut R, net: &PlanarNetwork) -> Result<bool, String> {
    let n = net.rank().unwrap();
    if n < 2 {
        return Ok(false);
    }
    let k = rng.gen_range(2..=n);
    let i = rng.gen_range(1..k);
    let (Some(f), Some(g)) = (draw(rng, net, k, i + 1), draw(rng, net, k - 1, i - 1)) else {
        return Ok(false);
    };
    let (even, odd) = recombine_balance(net, k, &f, &g).map_err(|e| e.to_string())?;
    check_pair(rng, net, [&f, &g], [&even, &odd], [(k - 1, i), (k, i)])?;
    Ok(true)
}

/// Sizes of the two summands for a split to `(k, i)`.
pub fn summand_sizes(variant: Variant, k: usize, i: usize) -> [(usize, usize); 2] {
    match variant {
        Variant::First => [(k - 1, i), (k, i - 1)],
        Variant::Second => [(k - 1, i - 1), (k, i + 1)],
        Variant::Third => [(k + 1, i), (k - 1, i - 1)],
    }
}

/// Draws a variant and target `(k, i)` admissible for rank `n`.
pub fn draw_target<R: Rng>(rng: &mut R, n: usize) -> Option<(Variant, usize, usize)> {
    let variant = [Variant::First, Variant::Second, Variant::Third][rng.gen_range(0..3)];
    let mut options = Vec::new();
    for k in 1..=n {
        for i in 1..=k {
            let ok = summand_sizes(variant, k, i).iter().all(|&(a, b)| a <= n && b <= a);
            if ok {
                options.push((k, i));
            }
        }
    }
    let &(k, i) = pick(rng, &options)?;
    Some((variant, k, i))
}

/// A random union on `gd` split by a random variant.
pub fn split_trial<R: Rng>(rng: &mut R, gd: &PlanarNetwork) -> Result<bool, String> {
    let n = gd.rank().unwrap();
    let Some((variant, k, i)) = draw_target(rng, n) else {
        return Ok(false);
    };
    let [(ak, ai), (bk, bi)] = summand_sizes(variant, k, i);
    let all_a = enumerate_gd_paths(gd, ak, ai, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let all_b = enumerate_gd_paths(gd, bk, bi, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let (Some(alpha), Some(beta)) = (pick(rng, &all_a), pick(rng, &all_b)) else {
        return Ok(false);
    };
    let theta = union(gd, alpha, beta).map_err(|e| e.to_string())?;
    let (red, green) = split(&theta, k, i, variant).map_err(|e| format!("{variant:?} ({k},{i}): {e}"))?;
    red.validate(gd).map_err(|e| e.to_string())?;
    green.validate(gd).map_err(|e| e.to_string())?;
    let (gk, gi) = variant.green_target(k, i);
    if (red.k(), red.i(), green.k(), green.i()) != (k, i, gk, gi) {
        return Err(format!("{variant:?}: wrong sizes"));
    }
    if gd_counts(&[alpha, beta]) != gd_counts(&[&red, &green]) {
        return Err("edge multiset changed".into());
    }
    for _ in 0..3 {
        let w = weights(rng, gd);
        let before = alpha.weight(&w) + beta.weight(&w);
        if before != red.weight(&w) + green.weight(&w) || before != theta.weight(&w) {
            return Err("weight changed".into());
        }
    }
    Ok(true)
}

/// The staircase concatenation for rank `n`, built once per call site.
pub fn staircase(n: usize) -> PlanarNetwork {
    horn_network(n).unwrap()
}

/// All unions of summands sized for a split of `variant` to `(k, i)`.
pub fn unions(gd: &PlanarNetwork, variant: Variant, k: usize, i: usize) -> Vec<MultipathUnion> {
    let [(ak, ai), (bk, bi)] = summand_sizes(variant, k, i);
    let a = enumerate_gd_paths(gd, ak, ai, DEFAULT_CAP).unwrap();
    let b = enumerate_gd_paths(gd, bk, bi, DEFAULT_CAP).unwrap();
    let mut out = Vec::new();
    for x in &a {
        for y in &b {
            out.push(union(gd, x, y).unwrap());
        }
    }
    out
}

/// Every two-coloring of the union edges whose color classes both
/// assemble into ΓΔ-paths. Exhaustive over `2^|E|` colorings.
pub fn splitting_colorings(theta: &MultipathUnion) -> BTreeSet<Coloring> {
    let e = theta.edges().len();
    assert!(e <= 20, "too many edges for exhaustive search");
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << e {
        let colors = (0..e).map(|j| if mask >> j & 1 == 1 { Color::Red } else { Color::Green }).collect();
        let c = Coloring { colors };
        if theta.extract(&c, Color::Red).is_ok() && theta.extract(&c, Color::Green).is_ok() {
            out.insert(c);
        }
    }
    out
}
