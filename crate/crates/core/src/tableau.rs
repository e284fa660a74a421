//! Triangular arrays `t^k_i`, `0 <= i <= k <= n`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::weight::{Rational, TropicalWeight};

/// A triangular array indexed by `(k, i)` with `0 <= i <= k <= n`, stored
/// row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau<T> {
    n: usize,
    entries: Vec<T>,
}

fn offset(k: usize, i: usize) -> usize {
    k * (k + 1) / 2 + i
}

impl<T> Tableau<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(offset(n + 1, 0));
        for k in 0..=n {
            for i in 0..=k {
                entries.push(f(k, i));
            }
        }
        Tableau { n, entries }
    }

    /// Builds a tableau from rows; row `k` must have `k + 1` entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let n = rows.len().checked_sub(1)?;
        if rows.iter().enumerate().any(|(k, r)| r.len() != k + 1) {
            return None;
        }
        Some(Tableau { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, i: usize) -> &T {
        assert!(i <= k && k <= self.n, "tableau index ({k},{i}) out of range");
        &self.entries[offset(k, i)]
    }

    pub fn row(&self, k: usize) -> &[T] {
        &self.entries[offset(k, 0)..offset(k + 1, 0)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..=self.n).map(move |k| self.row(k))
    }

    /// All `(k, i, value)` triples in row order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        (0..=self.n).flat_map(move |k| (0..=k).map(move |i| (k, i, self.get(k, i))))
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Tableau<U> {
        Tableau { n: self.n, entries: self.entries.iter().map(&mut f).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<T: Clone> Tableau<T> {
    pub fn filled(n: usize, value: T) -> Self {
        Self::from_fn(n, |_, _| value.clone())
    }
}

impl<T> Index<(usize, usize)> for Tableau<T> {
    type Output = T;
    fn index(&self, (k, i): (usize, usize)) -> &T {
        self.get(k, i)
    }
}

impl<T> IndexMut<(usize, usize)> for Tableau<T> {
    fn index_mut(&mut self, (k, i): (usize, usize)) -> &mut T {
        assert!(i <= k && k <= self.n, "tableau index ({k},{i}) out of range");
        &mut self.entries[offset(k, i)]
    }
}

impl Tableau<TropicalWeight> {
    /// The finite entries as rationals, or the first infinite position.
    pub fn to_finite(&self) -> Result<Tableau<Rational>, (usize, usize)> {
        let mut out = Vec::with_capacity(self.entries.len());
        for (k, i, v) in self.iter() {
            out.push(v.finite().cloned().ok_or((k, i))?);
        }
        Ok(Tableau { n: self.n, entries: out })
    }

    /// Adds `c` to every finite entry.
    pub fn translate(&self, c: &Rational) -> Self {
        self.map(|v| match v {
            TropicalWeight::Finite(r) => TropicalWeight::Finite(r + c),
            TropicalWeight::NegInf => TropicalWeight::NegInf,
        })
    }
}

impl Tableau<Rational> {
    pub fn to_tropical(&self) -> Tableau<TropicalWeight> {
        self.map(|r| TropicalWeight::Finite(r.clone()))
    }
}

impl<T: fmt::Display> fmt::Display for Tableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
