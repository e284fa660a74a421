//! Acceptance run: one PASS/FAIL line per criterion, with the runtime
//! bound checked alongside the result. Exits non-zero if any line fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::oracle::{brute_l, brute_m};
use common::trials::{balance_trial, shift_trial, split_trial, splitting_colorings, staircase, unions};
use common::{network, pick, random_pair, rich_network, rich_pair, rng, weights};
use hivenet::collections::{
    collection_a, collection_b, invert_gz, invert_horn, region_identity, w_collection, CollectionKind,
};
use hivenet::fixtures::{intro_net, intro_red_path, intro_weights};
use hivenet::hive::{
    boundary_horizontal_finite, boundary_outer, horn_feasible, in_c2, in_c2_with_slack, in_c3, in_gz, rhombus,
    rhombus_indices, Family, HornOptions, HornTriple,
};
use hivenet::multipath::{l_map, m_map, max_kpath_weight};
use hivenet::network::{gamma0, horn_network};
use hivenet::recombine::{canonical_decomposition, Coloring, Variant};
use hivenet::spectra::{principal_tableau, sample_horn_instance, SymmetricMatrix};
use hivenet::weight::{int, ratio};
use hivenet::{Rational, Tableau, TropicalWeight};
use num_traits::Zero;
use rand::Rng;

type Outcome = Result<String, String>;

fn criterion(id: u32, name: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = run();
    let took = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; too slow ({took:.2?} > {limit:?})")),
        Err(e) => (false, e),
    };
    println!("{} {id}. {name}: {detail} [{took:.2?}]", if ok { "PASS" } else { "FAIL" });
    ok
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn figure() -> Outcome {
    let net = intro_net();
    let w = intro_weights(&net);
    let (value, witness) = max_kpath_weight(&net, &w, 1);
    ensure(value == TropicalWeight::from_int(4), || format!("l_1 = {value}"))?;
    let paths = witness.ok_or("no witness")?;
    ensure(paths.paths() == [intro_red_path()], || format!("witness {:?}", paths.paths()))?;
    Ok("l_1 = 4 with the highlighted path".into())
}

fn oracle_equivalence() -> Outcome {
    let mut r = rng(1001);
    for trial in 0..1000 {
        let rank = 1 + trial % 3;
        let net = network(&mut r, rank, 14);
        let w = weights(&mut r, &net);
        let t = l_map(&net, &w).map_err(|e| e.to_string())?;
        for k in 1..=rank {
            for i in 1..=k {
                ensure(t[(k, i)] == brute_l(&net, &w, k, i), || format!("l mismatch, trial {trial}"))?;
            }
        }
        let gd = random_pair(&mut r, rank, 7);
        let w = weights(&mut r, &gd);
        let t = m_map(&gd, &w).map_err(|e| e.to_string())?;
        for k in 1..=rank {
            for i in 0..=k {
                ensure(t[(k, i)] == brute_m(&gd, &w, k, i), || format!("m mismatch, trial {trial}"))?;
            }
        }
    }
    for n in 1..=3 {
        let gd = horn_network(n).unwrap();
        for _ in 0..20 {
            let w = weights(&mut r, &gd);
            let t = m_map(&gd, &w).unwrap();
            for k in 1..=n {
                for i in 0..=k {
                    ensure(t[(k, i)] == brute_m(&gd, &w, k, i), || format!("staircase mismatch at n = {n}"))?;
                }
            }
        }
    }
    Ok("1000 random networks and pairs, staircases n <= 3, all exact".into())
}

fn cone_membership() -> Outcome {
    let mut r = rng(1002);
    for trial in 0..500 {
        let net = network(&mut r, 1 + trial % 4, 24);
        let w = weights(&mut r, &net);
        let c = in_c2(&l_map(&net, &w).unwrap());
        ensure(c.member, || format!("C2 violation {:?}", c.violations))?;
    }
    for trial in 0..500 {
        let gd = horn_network(1 + trial % 4).unwrap();
        let w = weights(&mut r, &gd);
        let c = in_c3(&m_map(&gd, &w).unwrap());
        ensure(c.member, || format!("C3 violation {:?}", c.violations))?;
    }
    Ok("500 l-tableaux in C2, 500 m-tableaux in C3, zero violations".into())
}

fn round_trips() -> Outcome {
    let mut r = rng(1003);
    let gammas: Vec<_> = (1..=5).map(|n| gamma0(n).unwrap()).collect();
    let horns: Vec<_> = (1..=5).map(|n| horn_network(n).unwrap()).collect();
    for trial in 0..500 {
        let g = &gammas[trial % 5];
        let t = l_map(g, &weights(&mut r, g)).unwrap();
        let back = l_map(g, &invert_gz(&t).map_err(|e| e.to_string())?).unwrap();
        ensure(back == t, || format!("GZ round trip failed at n = {}", 1 + trial % 5))?;
        let gd = &horns[trial % 5];
        let t = m_map(gd, &weights(&mut r, gd)).unwrap();
        let back = m_map(gd, &invert_horn(&t).map_err(|e| e.to_string())?).unwrap();
        ensure(back == t, || format!("Horn round trip failed at n = {}", 1 + trial % 5))?;
    }
    Ok("500 + 500 exact round trips, n <= 5".into())
}

fn recombination() -> Outcome {
    let mut r = rng(1004);
    let (mut s, mut b) = (0, 0);
    while s < 1000 || b < 1000 {
        let net = rich_network(&mut r, 3 + (s + b) % 2, 28);
        for _ in 0..5 {
            if s < 1000 && shift_trial(&mut r, &net)? {
                s += 1;
            }
            if b < 1000 && balance_trial(&mut r, &net)? {
                b += 1;
            }
        }
    }
    let stair = staircase(3);
    let mut splits = 0;
    while splits < 1000 {
        if splits % 2 == 0 {
            let gd = rich_pair(&mut r, 3, 24);
            for _ in 0..5 {
                splits += usize::from(split_trial(&mut r, &gd)?);
            }
        } else {
            splits += usize::from(split_trial(&mut r, &stair)?);
        }
    }
    let mut fixtures = 0;
    let mut largest_q = 0;
    for variant in [Variant::First, Variant::Second, Variant::Third] {
        for (k, i) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
            let shapes = common::trials::summand_sizes(variant, k, i);
            if shapes.iter().any(|&(p, q)| p > 3 || q > p) {
                continue;
            }
            let all = unions(&stair, variant, k, i);
            for _ in 0..8 {
                let Some(theta) = pick(&mut r, &all) else { break };
                let dec = canonical_decomposition(theta);
                if dec.len() > 12 || theta.edges().len() > 16 {
                    continue;
                }
                let alt: BTreeSet<Coloring> = dec.alternating_colorings(theta).collect();
                let exhaustive = splitting_colorings(theta);
                ensure(alt.len() == 1 << dec.len() && alt == exhaustive, || {
                    format!("{variant:?} ({k},{i}): 2^|Q| = {}, exhaustive {}", 1u64 << dec.len(), exhaustive.len())
                })?;
                ensure(dec.parity_holds(), || "parity claim failed".into())?;
                largest_q = largest_q.max(dec.len());
                fixtures += 1;
            }
        }
    }
    Ok(format!(
        "{s} shift, {b} balance, {splits} split instances conserve weight; 2^|Q| matches on {fixtures} fixtures (|Q| <= {largest_q})"
    ))
}

fn combo(t: &Tableau<TropicalWeight>, family: Family, k: usize, i: usize) -> Rational {
    let [a, b, c, d] = rhombus(family, k, i);
    let f = |p: (usize, usize)| t[p].finite().unwrap().clone();
    f(a) + f(b) - f(c) - f(d)
}

fn region_identities() -> Outcome {
    let mut r = rng(1006);
    let mut checked = 0usize;
    for trial in 0..200 {
        let n = 2 + trial % 5;
        for (kind, c, families) in [
            (CollectionKind::Gz, collection_a(n).unwrap(), &[Family::First, Family::Second][..]),
            (CollectionKind::Horn, collection_b(n).unwrap(), &[Family::First, Family::Second, Family::Third][..]),
        ] {
            let w = weights(&mut r, c.network());
            let t = w_collection(&c, &w);
            for (k, i) in rhombus_indices(n) {
                for &family in families {
                    let id = region_identity(kind, n, family, k, i).unwrap();
                    let region = c.staircase().region_functional(id.region, id.k, id.i, &w).unwrap();
                    ensure(combo(&t, family, k, i) == int(id.sign.into()) * region, || {
                        format!("{kind:?} n = {n} {family:?} ({k},{i})")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} identities exact over 200 weightings, n <= 6"))
}

fn spectral() -> Outcome {
    let mut r = rng(1007);
    for trial in 0..500 {
        let m = SymmetricMatrix::random(&mut r, 1 + trial % 6, 10.0);
        let t = principal_tableau(&m).map_err(|e| e.to_string())?;
        ensure(in_c2_with_slack(&t, &1e-9).member, || format!("matrix {trial} not interlacing"))?;
    }
    let opts = HornOptions { cap: 5, slack: ratio(1, 10_000) };
    for seed in 0..200u64 {
        let n = 3 + (seed % 2) as usize;
        let triple = sample_horn_instance(n, seed, 5.0).map_err(|e| e.to_string())?.rationalized(1_000_000);
        let v = horn_feasible(&triple, &opts).map_err(|e| e.to_string())?;
        ensure(v.feasible, || format!("sample {seed} judged infeasible"))?;
    }
    let bad = HornTriple::new(vec![int(1), int(0)], vec![int(1), int(0)], vec![int(3), int(-1)]);
    ensure(!horn_feasible(&bad, &HornOptions::default()).unwrap().feasible, || "(1,0),(1,0),(3,-1) accepted".into())?;
    Ok("500 matrices interlace, 200 samples feasible, explicit triple rejected".into())
}

fn boundary_identities() -> Outcome {
    let mut r = rng(1008);
    for trial in 0..500 {
        let gd = horn_network(1 + trial % 4).unwrap();
        let t = m_map(&gd, &weights(&mut r, &gd)).unwrap();
        let triple = boundary_outer(&t).map_err(|e| e.to_string())?;
        ensure(triple.trace_defect().is_zero(), || format!("trace defect on trial {trial}"))?;
    }
    let (mut members, mut others) = (0, 0);
    for trial in 0..500 {
        let n = 1 + trial % 5;
        let t: Tableau<Rational> = if trial % 2 == 0 {
            let g = gamma0(n).unwrap();
            l_map(&g, &weights(&mut r, &g)).unwrap().to_finite().unwrap()
        } else {
            Tableau::from_fn(n, |_, i| if i == 0 { Rational::zero() } else { int(r.gen_range(-4..=4)) })
        };
        let lhs = in_gz(&boundary_horizontal_finite(&t));
        let rhs = in_c2(&t).member;
        ensure(lhs == rhs, || format!("GZ/C2 disagree on trial {trial}"))?;
        if rhs {
            members += 1;
        } else {
            others += 1;
        }
    }
    Ok(format!("500 traces vanish; GZ <=> C2 on 500 tableaux ({members} members, {others} non-members)"))
}

fn main() {
    let results = [
        criterion(1, "figure reproduction", Duration::from_secs(1), figure),
        criterion(2, "oracle equivalence", Duration::from_secs(120), oracle_equivalence),
        criterion(3, "cone membership of tableau maps", Duration::from_secs(300), cone_membership),
        criterion(4, "inversion round trips", Duration::from_secs(300), round_trips),
        criterion(5, "recombination conservation", Duration::from_secs(180), recombination),
        criterion(6, "region identities", Duration::from_secs(60), region_identities),
        criterion(7, "spectral cross-check", Duration::from_secs(120), spectral),
        criterion(8, "boundary identities", Duration::from_secs(60), boundary_identities),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
