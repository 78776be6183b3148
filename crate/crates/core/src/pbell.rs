//! p-Bell numbers `B_{n,p}`, the EGF coefficients of `1F1(1; p+1; e^z - 1)`,
//! and the p-Bell polynomials `B_{n,p}(x)`.
//!
//! Four independent backends compute the numbers:
//!
//! * [`PBellBackend::ExplicitStirling`]: `sum_k {n,k} / C(k+p,k)`.
//! * [`PBellBackend::Recurrence`]: the recurrence in `n` that reaches into
//!   column `p+1`, memoized over `(n, p)`.
//! * [`PBellBackend::ZTriangle`]: the three-term triangle
//!   `Z_{i+1,m} = (m+1)/(m+p+1) Z_{i,m+1} + m Z_{i,m}` from `Z_{0,m} = 1`.
//! * [`PBellBackend::GenBernoulli`]: Bell numbers convolved with generalized
//!   Bernoulli numbers.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{int, Polynomial, Rational};
use crate::special::{
    bell, bernoulli, binomial, gen_bernoulli, stirling2, weighted_stirling_poly, Family,
    TriangleCache,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PBellBackend {
    ExplicitStirling,
    Recurrence,
    ZTriangle,
    GenBernoulli,
}

impl PBellBackend {
    pub const ALL: [PBellBackend; 4] = [
        PBellBackend::ExplicitStirling,
        PBellBackend::Recurrence,
        PBellBackend::ZTriangle,
        PBellBackend::GenBernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PBellBackend::ExplicitStirling => "explicit",
            PBellBackend::Recurrence => "r3",
            PBellBackend::ZTriangle => "ztriangle",
            PBellBackend::GenBernoulli => "genbernoulli",
        }
    }
}

impl fmt::Display for PBellBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown p-Bell backend {0:?} (expected explicit, r3, ztriangle or genbernoulli)")]
pub struct UnknownBackend(pub String);

impl FromStr for PBellBackend {
    type Err = UnknownBackend;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PBellBackend::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| UnknownBackend(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PBellError {
    #[error("backends disagree on B({n},{p}): {first_backend} gives {first}, {second_backend} gives {second}")]
    BackendMismatch {
        n: usize,
        p: usize,
        first_backend: PBellBackend,
        first: Rational,
        second_backend: PBellBackend,
        second: Rational,
    },
}

/// `1 / C(k+p, k)`
fn inv_binomial(cache: &TriangleCache, top: usize, k: usize) -> Rational {
    Rational::one() / binomial(cache, top, k)
}

/// `sum_{k=0}^{n} {n,k} / C(k+p, k)`.
pub fn pbell_explicit(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    (0..=n)
        .map(|k| stirling2(cache, n, k) * inv_binomial(cache, k + p, k))
        .sum()
}

/// `B_{n+1,p} = (n+1) B_{n,p} - sum_{k=0}^{n-2} C(n,k) (-1)^{n-k} B_{k+1,p}
///  - p/(p+1) B_{n,p+1}`, starting from `B_{0,p} = 1`.
///
/// Row `m` is needed for columns `p ..= p + n - m`, so the table is filled
/// row by row over that trapezoid.
pub fn pbell_r3(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    if let Some(v) = cache.get(Family::PBellRecurrence, n, p) {
        return v;
    }
    for m in 1..=n {
        for q in p..=p + n - m {
            cache.get_or_compute(Family::PBellRecurrence, m, q, || r3_step(cache, m, q));
        }
    }
    r3_cell(cache, n, p)
}

fn r3_cell(cache: &TriangleCache, m: usize, q: usize) -> Rational {
    if m == 0 {
        return Rational::one();
    }
    cache
        .get(Family::PBellRecurrence, m, q)
        .unwrap_or_else(|| pbell_r3(cache, m, q))
}

// B_{m,q} from rows below m; here m = n + 1.
fn r3_step(cache: &TriangleCache, m: usize, q: usize) -> Rational {
    let n = m - 1;
    let mut acc = int(m as i64) * r3_cell(cache, n, q);
    for k in 0..n.saturating_sub(1) {
        let term = binomial(cache, n, k) * r3_cell(cache, k + 1, q);
        if (n - k).is_multiple_of(2) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    if q > 0 {
        acc -= Rational::new(q.into(), (q + 1).into()) * r3_cell(cache, n, q + 1);
    }
    acc
}

/// Anti-diagonal table `Z_{i,m}(p)` for `i + m <= n_max`.
#[derive(Debug, Clone)]
pub struct ZTable {
    p: usize,
    rows: Vec<Vec<Rational>>,
}

impl ZTable {
    pub fn build(n_max: usize, p: usize) -> Self {
        let mut rows = Vec::with_capacity(n_max + 1);
        rows.push(vec![Rational::one(); n_max + 1]);
        for i in 0..n_max {
            let next = z_step(&rows[i], p, &Rational::zero());
            rows.push(next);
        }
        ZTable { p, rows }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `Z_{n,m}(p)`, defined for `n + m <= n_max`.
    pub fn get(&self, n: usize, m: usize) -> Option<&Rational> {
        self.rows.get(n).and_then(|r| r.get(m))
    }

    /// Column `Z_{n,0}(p) = B_{n,p}` for `n = 0..=n_max`.
    pub fn pbell_column(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }
}

// One step of Z_{i+1,m} = (m+1)/(m+p+1) Z_{i,m+1} + (m + x) Z_{i,m}.
fn z_step(row: &[Rational], p: usize, x: &Rational) -> Vec<Rational> {
    (0..row.len() - 1)
        .map(|m| {
            Rational::new((m + 1).into(), (m + p + 1).into()) * &row[m + 1]
                + (int(m as i64) + x) * &row[m]
        })
        .collect()
}

/// `B_{n,p}` from the Z triangle with two rows of working storage.
pub fn pbell_z_triangle(n: usize, p: usize) -> Rational {
    zpoly_triangle(n, p, &Rational::zero())
}

/// `B_{0,p}, ..., B_{n_max,p}` from a single Z-triangle sweep.
pub fn pbell_z_column(n_max: usize, p: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one(); n_max + 1];
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Rational::one());
    for _ in 0..n_max {
        row = z_step(&row, p, &Rational::zero());
        out.push(row[0].clone());
    }
    out
}

/// `B_{n,p} = sum_k C(n+p,k)/C(n+p,p) phi_{n+p-k} B_k^{(p)}
///  - sum_{k=1}^{p} C(p,k)/C(n+k,k) B_{n+k}^{(k)}`.
pub fn pbell_gen_bernoulli(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    let top = n + p;
    let norm = inv_binomial(cache, top, p);
    let mut acc: Rational = (0..=top)
        .map(|k| binomial(cache, top, k) * bell(cache, top - k) * gen_bernoulli(cache, k, p))
        .sum::<Rational>()
        * norm;
    for k in 1..=p {
        acc -=
            binomial(cache, p, k) * inv_binomial(cache, n + k, k) * gen_bernoulli(cache, n + k, k);
    }
    acc
}

pub fn pbell_number(cache: &TriangleCache, n: usize, p: usize, backend: PBellBackend) -> Rational {
    match backend {
        PBellBackend::ExplicitStirling => pbell_explicit(cache, n, p),
        PBellBackend::Recurrence => pbell_r3(cache, n, p),
        PBellBackend::ZTriangle => pbell_z_triangle(n, p),
        PBellBackend::GenBernoulli => pbell_gen_bernoulli(cache, n, p),
    }
}

/// Runs every backend sequentially and fails on the first disagreement with
/// the explicit formula.
#[allow(clippy::result_large_err)]
pub fn pbell_cross_check(
    cache: &TriangleCache,
    n: usize,
    p: usize,
) -> Result<Rational, PBellError> {
    let reference = pbell_explicit(cache, n, p);
    for backend in PBellBackend::ALL.into_iter().skip(1) {
        let v = pbell_number(cache, n, p, backend);
        if v != reference {
            return Err(PBellError::BackendMismatch {
                n,
                p,
                first_backend: PBellBackend::ExplicitStirling,
                first: reference,
                second_backend: backend,
                second: v,
            });
        }
    }
    Ok(reference)
}

/// `B_{0,p}, ..., B_{n_max,p}` with the given backend. The Z triangle
/// produces the whole column in one sweep.
pub fn pbell_column(
    cache: &TriangleCache,
    n_max: usize,
    p: usize,
    backend: PBellBackend,
) -> Vec<Rational> {
    match backend {
        PBellBackend::ZTriangle => pbell_z_column(n_max, p),
        _ => (0..=n_max)
            .map(|n| pbell_number(cache, n, p, backend))
            .collect(),
    }
}

/// `B_{n,1} = sum_k C(n,k) phi_{k+1} B_{n-k} / (k+1)`.
pub fn pbell_ramanujan_p1(cache: &TriangleCache, n: usize) -> Rational {
    (0..=n)
        .map(|k| {
            binomial(cache, n, k) * bell(cache, k + 1) * bernoulli(cache, n - k) / int(k as i64 + 1)
        })
        .sum()
}

/// `B_{n,p}(x) = sum_k C(n,k) B_{k,p} x^{n-k}`, monic of degree `n`.
pub fn pbell_poly(cache: &TriangleCache, n: usize, p: usize) -> Polynomial {
    let column = pbell_z_column(n, p);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, b) in column.iter().enumerate() {
        coeffs[n - k] = binomial(cache, n, k) * b;
    }
    Polynomial::new(coeffs)
}

/// `sum_k S_n^k(x) / C(k+p,k)` with weighted Stirling polynomials.
pub fn pbell_poly_weighted(cache: &TriangleCache, n: usize, p: usize, x: &Rational) -> Rational {
    (0..=n)
        .map(|k| weighted_stirling_poly(cache, n, k).eval(x) * inv_binomial(cache, k + p, k))
        .sum()
}

/// `Z_{n,0}(x;p) = B_{n,p}(x)` from the polynomial triangle evaluated at `x`.
pub fn zpoly_triangle(n: usize, p: usize, x: &Rational) -> Rational {
    let mut row = vec![Rational::one(); n + 1];
    for _ in 0..n {
        row = z_step(&row, p, x);
    }
    row.swap_remove(0)
}

/// The polynomial triangle run on polynomials in `x`, returning `B_{n,p}(x)`.
pub fn zpoly_triangle_poly(n: usize, p: usize) -> Polynomial {
    let mut row = vec![Polynomial::one(); n + 1];
    for _ in 0..n {
        row = (0..row.len() - 1)
            .map(|m| {
                let lin = Polynomial::new(vec![int(m as i64), Rational::one()]);
                let c = Rational::new((m + 1).into(), (m + p + 1).into());
                &row[m + 1].scale(&c) + &(&lin * &row[m])
            })
            .collect();
    }
    row.swap_remove(0)
}
