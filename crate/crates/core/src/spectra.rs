//! Real symmetric eigenvalues, for cross-checking the cones against
//! matrix spectra.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hive::HornTriple;
use crate::tableau::Tableau;
use crate::weight::{rational_from_f64, Rational};

const SYMMETRY_TOL: f64 = 1e-12;
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// A dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::SizeMismatch { expected: n, got: r.len() });
            }
            entries.extend_from_slice(r);
        }
        let m = SymmetricMatrix { n, entries };
        let scale = m.max_abs().max(1.0);
        for i in 0..n {
            for j in 0..i {
                if libm::fabs(m.get(i, j) - m.get(j, i)) > SYMMETRY_TOL * scale {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let n = d.len();
        let mut entries = vec![0.0; n * n];
        for (i, x) in d.iter().enumerate() {
            entries[i * n + i] = *x;
        }
        SymmetricMatrix { n, entries }
    }

    /// Entries uniform in `[-scale, scale]`, mirrored across the diagonal.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x = rng.gen_range(-scale..=scale);
                entries[i * n + j] = x;
                entries[j * n + i] = x;
            }
        }
        SymmetricMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.n.max(1)).map(<[f64]>::to_vec).take(self.n).collect()
    }

    fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(libm::fabs(*x)))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// The upper-left `k × k` block.
    pub fn principal(&self, k: usize) -> Self {
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(self.get(i, j));
            }
        }
        SymmetricMatrix { n: k, entries }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, got: other.n });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(SymmetricMatrix { n: self.n, entries })
    }

    /// `Qᵀ A Q` for a square `q` given row-major.
    pub fn conjugate(&self, q: &[f64]) -> Self {
        let n = self.n;
        let mut aq = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                aq[i * n + j] = (0..n).map(|l| self.get(i, l) * q[l * n + j]).sum();
            }
        }
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (0..n).map(|l| q[l * n + i] * aq[l * n + j]).sum();
            }
        }
        for i in 0..n {
            for j in 0..i {
                let avg = 0.5 * (entries[i * n + j] + entries[j * n + i]);
                entries[i * n + j] = avg;
                entries[j * n + i] = avg;
            }
        }
        SymmetricMatrix { n, entries }
    }
}

/// Eigenvalues in decreasing order with the largest residual
/// `|A v - λ v|` over the computed eigenpairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
pub fn eigenvalues_symmetric(m: &SymmetricMatrix) -> Result<Spectrum> {
    let n = m.n;
    let mut a = m.entries.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = libm::sqrt(a.iter().map(|x| x * x).sum::<f64>());
    let off = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        libm::sqrt(s)
    };
    let mut converged = off(&a) <= OFF_DIAGONAL_TOL * norm;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = libm::copysign(1.0, theta) / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        converged = off(&a) <= OFF_DIAGONAL_TOL * norm;
    }
    if !converged {
        return Err(Error::NoConvergence);
    }
    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[i * n + i], i)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let mut residual: f64 = 0.0;
    for &(lambda, col) in &pairs {
        let mut r2 = 0.0;
        for i in 0..n {
            let av: f64 = (0..n).map(|j| m.get(i, j) * v[j * n + col]).sum();
            let d = av - lambda * v[i * n + col];
            r2 += d * d;
        }
        residual = residual.max(libm::sqrt(r2));
    }
    Ok(Spectrum { eigenvalues: pairs.into_iter().map(|p| p.0).collect(), residual })
}

/// `t^k_i = λ^{(k)}_1 + … + λ^{(k)}_i` for the spectra of the leading
/// principal blocks.
pub fn principal_tableau(m: &SymmetricMatrix) -> Result<Tableau<f64>> {
    let spectra: Vec<Vec<f64>> =
        (0..=m.n).map(|k| eigenvalues_symmetric(&m.principal(k)).map(|s| s.eigenvalues)).collect::<Result<_>>()?;
    Ok(Tableau::from_fn(m.n, |k, i| spectra[k][..i].iter().sum()))
}

/// `A`, `B`, `C = A + B` and their spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct HornSample {
    pub a: SymmetricMatrix,
    pub b: SymmetricMatrix,
    pub c: SymmetricMatrix,
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
    pub nu: Vec<f64>,
}

impl HornSample {
    pub fn from_pair(a: SymmetricMatrix, b: SymmetricMatrix) -> Result<Self> {
        let c = a.add(&b)?;
        let lambda = eigenvalues_symmetric(&a)?.eigenvalues;
        let mu = eigenvalues_symmetric(&b)?.eigenvalues;
        let nu = eigenvalues_symmetric(&c)?.eigenvalues;
        Ok(HornSample { a, b, c, lambda, mu, nu })
    }

    /// Rounds to denominator `den` and then moves `ν_n` so that the trace
    /// identity holds exactly.
    pub fn rationalized(&self, den: i64) -> HornTriple {
        let conv = |v: &[f64]| v.iter().map(|x| rational_from_f64(*x, den)).collect::<Vec<Rational>>();
        let mut t = HornTriple::new(conv(&self.lambda), conv(&self.mu), conv(&self.nu));
        let defect = t.trace_defect();
        if let Some(last) = t.nu.last_mut() {
            *last += defect;
        }
        t
    }
}

/// Draws `A` and `B` with entries in `[-scale, scale]` from a generator
/// seeded with `seed`.
pub fn sample_horn_instance(n: usize, seed: u64, scale: f64) -> Result<HornSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = SymmetricMatrix::random(&mut rng, n, scale);
    let b = SymmetricMatrix::random(&mut rng, n, scale);
    HornSample::from_pair(a, b)
}

/// A random orthogonal matrix (row-major) by Gram–Schmidt on Gaussian-ish
/// columns.
pub fn random_orthogonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    loop {
        let mut q: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut ok = true;
        for _ in 0..n {
            let mut col: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            for prev in &q {
                let dot: f64 = col.iter().zip(prev).map(|(a, b)| a * b).sum();
                for (c, p) in col.iter_mut().zip(prev) {
                    *c -= dot * p;
                }
            }
            let norm = libm::sqrt(col.iter().map(|x| x * x).sum::<f64>());
            if norm < 1e-6 {
                ok = false;
                break;
            }
            q.push(col.into_iter().map(|x| x / norm).collect());
        }
        if ok {
            let mut out = vec![0.0; n * n];
            for (j, col) in q.iter().enumerate() {
                for (i, x) in col.iter().enumerate() {
                    out[i * n + j] = *x;
                }
            }
            return out;
        }
    }
}
