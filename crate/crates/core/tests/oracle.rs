mod common;

use common::oracle::{brute_l, brute_m};
use common::{network, random_pair, rng, weights, weights_with_holes};
use hivenet::multipath::{l_map, m_map, max_gd_weight, max_kpath_weight};
use hivenet::network::{horn_network, simplify, truncate};
use hivenet::sample::subdivide;
use hivenet::{TropicalWeight, Weighting};

#[test]
fn l_values_match_enumeration_on_random_networks() {
    let mut r = rng(21);
    for trial in 0..300 {
        let rank = 1 + trial % 3;
        let net = network(&mut r, rank, 14);
        let w = if trial % 4 == 0 { weights_with_holes(&mut r, &net) } else { weights(&mut r, &net) };
        let t = l_map(&net, &w).unwrap();
        for k in 1..=rank {
            for i in 1..=k {
                assert_eq!(t[(k, i)], brute_l(&net, &w, k, i), "trial {trial}, t^{k}_{i}");
            }
        }
    }
}

#[test]
fn witnesses_realize_the_maximum() {
    let mut r = rng(22);
    for _ in 0..200 {
        let net = network(&mut r, 3, 16);
        let w = weights_with_holes(&mut r, &net);
        for k in 0..=3 {
            let (value, witness) = max_kpath_weight(&net, &w, k);
            match witness {
                Some(mp) => {
                    mp.validate(&net).unwrap();
                    assert_eq!(mp.k(), k);
                    assert_eq!(mp.weight(&w), value);
                }
                None => assert_eq!(value, TropicalWeight::NegInf),
            }
        }
    }
}

#[test]
fn m_values_match_enumeration_on_random_pairs() {
    let mut r = rng(23);
    for trial in 0..150 {
        let gd = random_pair(&mut r, 1 + trial % 3, 10);
        let w = if trial % 3 == 0 { weights_with_holes(&mut r, &gd) } else { weights(&mut r, &gd) };
        let t = m_map(&gd, &w).unwrap();
        let n = gd.rank().unwrap();
        for k in 1..=n {
            for i in 0..=k {
                assert_eq!(t[(k, i)], brute_m(&gd, &w, k, i), "trial {trial}, m^{k}_{i}");
                let (v, wit) = max_gd_weight(&gd, &w, k, i).unwrap();
                if let Some(p) = wit {
                    p.validate(&gd).unwrap();
                    assert_eq!((p.k(), p.i()), (k, i));
                    assert_eq!(p.weight(&w), v);
                }
            }
        }
    }
}

#[test]
fn m_values_match_enumeration_on_the_staircase() {
    let mut r = rng(24);
    for n in 1..=3 {
        let gd = horn_network(n).unwrap();
        for _ in 0..10 {
            let w = weights(&mut r, &gd);
            let t = m_map(&gd, &w).unwrap();
            for k in 1..=n {
                for i in 0..=k {
                    assert_eq!(t[(k, i)], brute_m(&gd, &w, k, i));
                }
            }
        }
    }
}

#[test]
fn simplification_preserves_l_values() {
    let mut r = rng(25);
    for _ in 0..150 {
        let net = network(&mut r, 3, 18);
        let w = weights(&mut r, &net);
        let (fine, fine_w) = subdivide(&mut r, &net, &w, 3);
        let s = simplify(&fine, Some(&fine_w));
        let sw: Weighting = s.weighting.clone().unwrap();
        let before = l_map(&net, &w).unwrap();
        assert_eq!(l_map(&fine, &fine_w).unwrap(), before);
        assert_eq!(l_map(&s.network, &sw).unwrap(), before);
        assert!(s.network.edges().len() <= fine.edges().len());
    }
}

#[test]
fn truncation_keeps_lower_boundary() {
    let mut r = rng(26);
    let net = network(&mut r, 3, 18);
    let sub = truncate(&net, 2).unwrap();
    assert_eq!(sub.rank(), Some(2));
    assert_eq!(sub.sources().len(), 2);
    assert_eq!(sub.sinks().len(), 2);
}
