//! Rhombus cones on tableaux, their boundary maps, and Horn feasibility.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::elimination::{feasible_point, Ineq};
use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::weight::{int, Rational, TropicalWeight};

/// Entry types on which rhombus inequalities `a + b >= c + d` make sense.
pub trait HiveEntry: Clone {
    type Slack;
    fn zero_slack() -> Self::Slack;
    /// `a + b + slack >= c + d`.
    fn rhombus_ok(a: &Self, b: &Self, c: &Self, d: &Self, slack: &Self::Slack) -> bool;
}

impl HiveEntry for TropicalWeight {
    type Slack = Rational;

    fn zero_slack() -> Rational {
        Rational::zero()
    }

    /// Sums with `-inf` are `-inf`, and `-inf >= -inf` holds.
    fn rhombus_ok(a: &Self, b: &Self, c: &Self, d: &Self, slack: &Rational) -> bool {
        match (a + b, c + d) {
            (_, TropicalWeight::NegInf) => true,
            (TropicalWeight::NegInf, _) => false,
            (TropicalWeight::Finite(l), TropicalWeight::Finite(r)) => l + slack >= r,
        }
    }
}

impl HiveEntry for Rational {
    type Slack = Rational;

    fn zero_slack() -> Rational {
        Rational::zero()
    }

    fn rhombus_ok(a: &Self, b: &Self, c: &Self, d: &Self, slack: &Rational) -> bool {
        a + b + slack >= c + d
    }
}

impl HiveEntry for f64 {
    type Slack = f64;

    fn zero_slack() -> f64 {
        0.0
    }

    fn rhombus_ok(a: &Self, b: &Self, c: &Self, d: &Self, slack: &f64) -> bool {
        a + b + slack >= c + d
    }
}

/// One of the three rhombus families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `t^{k+1}_i + t^k_{i-1} >= t^{k+1}_{i-1} + t^k_i`
    First,
    /// `t^{k+1}_i + t^k_i >= t^{k+1}_{i+1} + t^k_{i-1}`
    Second,
    /// `t^k_i + t^k_{i-1} >= t^{k+1}_i + t^{k-1}_{i-1}`
    Third,
}

/// A failing rhombus, indexed by `(k, i)` with `0 < i <= k < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub family: Family,
    pub k: usize,
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCheck {
    pub member: bool,
    pub violations: Vec<Violation>,
}

/// The four tableau positions of a rhombus: `lhs` pair and `rhs` pair.
pub fn rhombus(family: Family, k: usize, i: usize) -> [(usize, usize); 4] {
    match family {
        Family::First => [(k + 1, i), (k, i - 1), (k + 1, i - 1), (k, i)],
        Family::Second => [(k + 1, i), (k, i), (k + 1, i + 1), (k, i - 1)],
        Family::Third => [(k, i), (k, i - 1), (k + 1, i), (k - 1, i - 1)],
    }
}

/// Every `(k, i)` with `0 < i <= k < n`.
pub fn rhombus_indices(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|k| (1..=k).map(move |i| (k, i)))
}

fn check<T: HiveEntry>(t: &Tableau<T>, families: &[Family], slack: &T::Slack) -> ConeCheck {
    let mut violations = Vec::new();
    for &family in families {
        for (k, i) in rhombus_indices(t.n()) {
            let [a, b, c, d] = rhombus(family, k, i);
            if !T::rhombus_ok(&t[a], &t[b], &t[c], &t[d], slack) {
                violations.push(Violation { family, k, i });
            }
        }
    }
    ConeCheck { member: violations.is_empty(), violations }
}

/// Membership in the interlacing cone (first two families).
pub fn in_c2<T: HiveEntry>(t: &Tableau<T>) -> ConeCheck {
    in_c2_with_slack(t, &T::zero_slack())
}

pub fn in_c2_with_slack<T: HiveEntry>(t: &Tableau<T>, slack: &T::Slack) -> ConeCheck {
    check(t, &[Family::First, Family::Second], slack)
}

/// Membership in the hive cone (all three families).
pub fn in_c3<T: HiveEntry>(t: &Tableau<T>) -> ConeCheck {
    in_c3_with_slack(t, &T::zero_slack())
}

pub fn in_c3_with_slack<T: HiveEntry>(t: &Tableau<T>, slack: &T::Slack) -> ConeCheck {
    check(t, &[Family::First, Family::Second, Family::Third], slack)
}

/// Row differences `h^{(k)}_i = t^k_i - t^k_{i-1}` for `0 < i <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GzData {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl GzData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `h^{(k)}_i`, both indices starting at 1.
    pub fn get(&self, k: usize, i: usize) -> &Rational {
        &self.rows[k - 1][i - 1]
    }

    pub fn row(&self, k: usize) -> &[Rational] {
        &self.rows[k - 1]
    }

    /// Rebuilds the tableau with `t^k_0 = 0` by partial sums.
    pub fn to_tableau(&self) -> Tableau<Rational> {
        Tableau::from_fn(self.n, |k, i| (1..=i).map(|j| self.get(k, j).clone()).sum())
    }
}

pub fn boundary_horizontal(t: &Tableau<TropicalWeight>) -> Result<GzData> {
    let t = t.to_finite().map_err(|(k, i)| Error::NonFiniteEntry { k, i })?;
    Ok(boundary_horizontal_finite(&t))
}

pub fn boundary_horizontal_finite(t: &Tableau<Rational>) -> GzData {
    let rows = (1..=t.n()).map(|k| (1..=k).map(|i| &t[(k, i)] - &t[(k, i - 1)]).collect()).collect();
    GzData { n: t.n(), rows }
}

/// Interlacing `h^{(k+1)}_i >= h^{(k)}_i >= h^{(k+1)}_{i+1}`.
pub fn in_gz(h: &GzData) -> bool {
    (1..h.n).all(|k| (1..=k).all(|i| h.get(k + 1, i) >= h.get(k, i) && h.get(k, i) >= h.get(k + 1, i + 1)))
}

/// Three n-tuples, intended weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HornTriple {
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
    pub nu: Vec<Rational>,
}

fn decreasing(v: &[Rational]) -> bool {
    v.windows(2).all(|p| p[0] >= p[1])
}

impl HornTriple {
    pub fn new(lambda: Vec<Rational>, mu: Vec<Rational>, nu: Vec<Rational>) -> Self {
        HornTriple { lambda, mu, nu }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_sorted(&self) -> bool {
        decreasing(&self.lambda) && decreasing(&self.mu) && decreasing(&self.nu)
    }

    /// `Σλ + Σμ - Σν`.
    pub fn trace_defect(&self) -> Rational {
        let s = |v: &[Rational]| v.iter().sum::<Rational>();
        s(&self.lambda) + s(&self.mu) - s(&self.nu)
    }

    /// The tableau positions fixed by the triple, with `t^0_0 = 0`.
    fn boundary_value(&self, k: usize, i: usize) -> Option<Rational> {
        let n = self.n();
        let partial = |v: &[Rational], m: usize| v[..m].iter().sum::<Rational>();
        if i == 0 {
            Some(partial(&self.lambda, k))
        } else if i == k {
            Some(partial(&self.nu, k))
        } else if k == n {
            Some(partial(&self.lambda, n) + partial(&self.mu, i))
        } else {
            None
        }
    }
}

/// `λ_i = t^i_0 - t^{i-1}_0`, `μ_i = t^n_i - t^n_{i-1}`,
/// `ν_i = t^i_i - t^{i-1}_{i-1}`. Sortedness is not required; see
/// [`HornTriple::is_sorted`].
pub fn boundary_outer(t: &Tableau<TropicalWeight>) -> Result<HornTriple> {
    let t = t.to_finite().map_err(|(k, i)| Error::NonFiniteEntry { k, i })?;
    Ok(boundary_outer_finite(&t))
}

pub fn boundary_outer_finite(t: &Tableau<Rational>) -> HornTriple {
    let n = t.n();
    HornTriple {
        lambda: (1..=n).map(|i| &t[(i, 0)] - &t[(i - 1, 0)]).collect(),
        mu: (1..=n).map(|i| &t[(n, i)] - &t[(n, i - 1)]).collect(),
        nu: (1..=n).map(|i| &t[(i, i)] - &t[(i - 1, i - 1)]).collect(),
    }
}

/// Settings for [`horn_feasible`].
#[derive(Debug, Clone)]
pub struct HornOptions {
    /// Largest accepted `n`.
    pub cap: usize,
    /// Added to the constant of every rhombus inequality.
    pub slack: Rational,
}

impl Default for HornOptions {
    fn default() -> Self {
        HornOptions { cap: 5, slack: Rational::zero() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornVerdict {
    pub feasible: bool,
    pub witness: Option<Tableau<Rational>>,
}

/// Decides whether some hive tableau with `t^0_0 = 0` has outer boundary
/// equal to the triple, by fixing the boundary and eliminating the
/// interior entries.
pub fn horn_feasible(triple: &HornTriple, opts: &HornOptions) -> Result<HornVerdict> {
    let n = triple.n();
    if triple.mu.len() != n {
        return Err(Error::SizeMismatch { expected: n, got: triple.mu.len() });
    }
    if triple.nu.len() != n {
        return Err(Error::SizeMismatch { expected: n, got: triple.nu.len() });
    }
    if !triple.trace_defect().is_zero() {
        return Err(Error::TraceMismatch);
    }
    for (name, v) in [("lambda", &triple.lambda), ("mu", &triple.mu), ("nu", &triple.nu)] {
        if !decreasing(v) {
            return Err(Error::NotSorted(name));
        }
    }
    if n > opts.cap {
        return Err(Error::NTooLarge { n, cap: opts.cap });
    }

    // interior positions 0 < i < k < n, row by row from the bottom vertex
    let interior: Vec<(usize, usize)> = (2..n).flat_map(|k| (1..k).map(move |i| (k, i))).collect();
    let var_of = |k: usize, i: usize| interior.iter().position(|&p| p == (k, i));
    let nv = interior.len();
    let mut rows = Vec::new();
    for family in [Family::First, Family::Second, Family::Third] {
        for (k, i) in rhombus_indices(n) {
            let [a, b, c, d] = rhombus(family, k, i);
            let mut coeffs = vec![Rational::zero(); nv];
            let mut constant = opts.slack.clone();
            for (pos, sign) in [(a, 1), (b, 1), (c, -1), (d, -1)] {
                let s = int(sign);
                match var_of(pos.0, pos.1) {
                    Some(v) => coeffs[v] += s,
                    None => constant += s * triple.boundary_value(pos.0, pos.1).expect("boundary position"),
                }
            }
            rows.push(Ineq { coeffs, constant });
        }
    }
    let order: Vec<usize> = (0..nv).collect();
    let Some(x) = feasible_point(nv, rows, &order) else {
        return Ok(HornVerdict { feasible: false, witness: None });
    };
    let witness = Tableau::from_fn(n, |k, i| match var_of(k, i) {
        Some(v) => x[v].clone(),
        None => triple.boundary_value(k, i).expect("boundary position"),
    });
    Ok(HornVerdict { feasible: true, witness: Some(witness) })
}
