//! Fourier–Motzkin elimination over exact rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::weight::{int, Rational};

/// The constraint `coeffs · x + constant >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Ineq {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl Ineq {
    /// Scales so that the first nonzero coefficient is ±1.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c /= &lead;
            }
            self.constant /= &lead;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Drops exact duplicates of a coefficient vector, keeping the tightest.
fn prune(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut best: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
    for r in rows {
        let r = r.normalized();
        best.entry(r.coeffs)
            .and_modify(|c| {
                if r.constant < *c {
                    *c = r.constant.clone();
                }
            })
            .or_insert(r.constant);
    }
    best.into_iter().map(|(coeffs, constant)| Ineq { coeffs, constant }).collect()
}

fn eliminate(rows: &[Ineq], var: usize) -> Vec<Ineq> {
    let mut keep = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows {
        let a = &r.coeffs[var];
        if a.is_zero() {
            keep.push(r.clone());
        } else if a.is_positive() {
            pos.push(r);
        } else {
            neg.push(r);
        }
    }
    for p in &pos {
        for q in &neg {
            let (ap, aq) = (&p.coeffs[var], -&q.coeffs[var]);
            let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &aq + y * ap).collect();
            let constant = &p.constant * &aq + &q.constant * ap;
            let mut row = Ineq { coeffs, constant };
            row.coeffs[var] = Rational::zero();
            keep.push(row);
        }
    }
    prune(keep)
}

/// Finds a point satisfying every row, eliminating variables in `order`.
/// Each variable is then set to the midpoint of its feasible interval, to
/// the finite end of a half-line, or to zero when unconstrained.
pub(crate) fn feasible_point(nvars: usize, rows: Vec<Ineq>, order: &[usize]) -> Option<Vec<Rational>> {
    let mut stages: Vec<Vec<Ineq>> = Vec::with_capacity(order.len() + 1);
    stages.push(prune(rows));
    for &v in order {
        let next = eliminate(stages.last().expect("nonempty"), v);
        stages.push(next);
    }
    let last = stages.last().expect("nonempty");
    if last.iter().any(|r| r.is_trivial() && r.constant.is_negative()) {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); nvars];
    for (step, &v) in order.iter().enumerate().rev() {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for r in &stages[step] {
            let a = &r.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let rest: Rational = r
                .coeffs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != v)
                .map(|(j, c)| c * &x[j])
                .fold(r.constant.clone(), |s, t| s + t);
            let bound = -rest / a;
            if a.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        x[v] = match (lo, hi) {
            (Some(l), Some(h)) => {
                debug_assert!(l <= h, "elimination produced an empty interval");
                (l + h) / int(2)
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
    }
    Some(x)
}

/// Solves the square system `a x = b` exactly; `None` when singular.
pub(crate) fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for j in col..n {
            a[col][j] /= &p;
        }
        b[col] /= &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let delta = &f * &a[col][j];
                    a[r][j] -= delta;
                }
                let delta = &f * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn row(c: &[i64], k: i64) -> Ineq {
        Ineq { coeffs: c.iter().map(|&v| int(v)).collect(), constant: int(k) }
    }

    #[test]
    fn box_and_infeasible() {
        // 0 <= x <= 2, x <= y <= 3
        let rows = vec![row(&[1, 0], 0), row(&[-1, 0], 2), row(&[-1, 1], 0), row(&[0, -1], 3)];
        let x = feasible_point(2, rows.clone(), &[0, 1]).unwrap();
        for r in &rows {
            let s: Rational = r.coeffs.iter().zip(&x).map(|(a, b)| a * b).sum::<Rational>() + &r.constant;
            assert!(s >= Rational::zero());
        }
        let bad = vec![row(&[1], -3), row(&[-1], 2)];
        assert!(feasible_point(1, bad, &[0]).is_none());
    }

    #[test]
    fn square_solve() {
        let a = vec![vec![int(0), int(1)], vec![int(2), int(1)]];
        assert_eq!(solve_square(a, vec![int(3), int(5)]), Some(vec![int(1), int(3)]));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve_square(singular, vec![int(1), int(1)]), None);
    }
}
