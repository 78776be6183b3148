//! Classical number families: Stirling numbers of both kinds, r-Stirling,
//! weighted Stirling polynomials, Whitney numbers, Bernoulli and generalized
//! Bernoulli numbers, Bell numbers and Bell polynomials.
//!
//! Every function takes a [`TriangleCache`] handle and memoizes its cells
//! there. Cells are write-once, so concurrent callers racing on one cell
//! observe the same value.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{big, int, EgfSeries, Polynomial, Rational};

/// Tag separating the number families sharing one cache.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Binomial,
    Stirling1,
    Stirling2,
    /// `{n, k}_r` keyed by the unshifted `(n, k)`.
    RStirling2 {
        r: usize,
    },
    /// `B_n^{(alpha)}` keyed by `(n, alpha)`.
    GenBernoulli,
    /// p-Bell numbers from the (R3) recurrence, keyed by `(n, p)`.
    PBellRecurrence,
}

type CellKey = (Family, usize, usize);

/// Memo table of exact values keyed by `(family, row, col)`.
#[derive(Debug, Default)]
pub struct TriangleCache {
    cells: RwLock<HashMap<CellKey, Rational>>,
}

impl TriangleCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the CLI.
    pub fn global() -> &'static TriangleCache {
        static GLOBAL: OnceLock<TriangleCache> = OnceLock::new();
        GLOBAL.get_or_init(TriangleCache::new)
    }

    pub fn get(&self, family: Family, row: usize, col: usize) -> Option<Rational> {
        self.cells
            .read()
            .expect("triangle cache lock poisoned")
            .get(&(family, row, col))
            .cloned()
    }

    /// Write-once insert. Returns the value now stored, which is the earlier
    /// one if the cell was already filled.
    pub fn insert(&self, family: Family, row: usize, col: usize, value: Rational) -> Rational {
        self.cells
            .write()
            .expect("triangle cache lock poisoned")
            .entry((family, row, col))
            .or_insert(value)
            .clone()
    }

    /// Pre-fills a cell before anything computes it. Used to preload known
    /// values and, in tests, to inject faults. Returns `false` if the cell
    /// was already set.
    pub fn seed(&self, family: Family, row: usize, col: usize, value: Rational) -> bool {
        let mut cells = self.cells.write().expect("triangle cache lock poisoned");
        if cells.contains_key(&(family, row, col)) {
            return false;
        }
        cells.insert((family, row, col), value);
        true
    }

    /// Looks the cell up; on a miss runs `compute` without holding the lock
    /// (so it may recurse into the cache) and stores the result.
    pub fn get_or_compute(
        &self,
        family: Family,
        row: usize,
        col: usize,
        compute: impl FnOnce() -> Rational,
    ) -> Rational {
        if let Some(v) = self.get(family, row, col) {
            return v;
        }
        let v = compute();
        self.insert(family, row, col, v)
    }

    pub fn len(&self) -> usize {
        self.cells
            .read()
            .expect("triangle cache lock poisoned")
            .len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `C(n, k)` from Pascal's triangle.
pub fn binomial(cache: &TriangleCache, n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    if k == 0 || k == n {
        return Rational::one();
    }
    let k = k.min(n - k);
    cache.get_or_compute(Family::Binomial, n, k, || {
        binomial(cache, n - 1, k - 1) + binomial(cache, n - 1, k)
    })
}

/// Signed Stirling number of the first kind, via
/// `s(n+1,k) = s(n,k-1) - n s(n,k)`.
pub fn stirling1(cache: &TriangleCache, n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    if k == n {
        return Rational::one();
    }
    if k == 0 {
        return Rational::zero();
    }
    cache.get_or_compute(Family::Stirling1, n, k, || {
        stirling1(cache, n - 1, k - 1) - int(n as i64 - 1) * stirling1(cache, n - 1, k)
    })
}

/// Stirling number of the second kind, via `{n+1,k} = k{n,k} + {n,k-1}`.
pub fn stirling2(cache: &TriangleCache, n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    if k == n {
        return Rational::one();
    }
    if k == 0 {
        return Rational::zero();
    }
    cache.get_or_compute(Family::Stirling2, n, k, || {
        int(k as i64) * stirling2(cache, n - 1, k) + stirling2(cache, n - 1, k - 1)
    })
}

/// `{n+r, k+r}_r`: partitions of an `(n+r)`-set into `k+r` blocks with the
/// first `r` elements in distinct blocks. EGF in `n`: `e^{rz}(e^z-1)^k/k!`.
pub fn r_stirling2(cache: &TriangleCache, n: usize, k: usize, r: usize) -> Rational {
    r_stirling2_raw(cache, n + r, k + r, r)
}

// {N,K}_r = K {N-1,K}_r + {N-1,K-1}_r for N > r; {r,K}_r = [K = r].
fn r_stirling2_raw(cache: &TriangleCache, big_n: usize, big_k: usize, r: usize) -> Rational {
    if big_k > big_n || big_k < r {
        return Rational::zero();
    }
    if big_n == r {
        return if big_k == r {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if big_k == 0 {
        return Rational::zero();
    }
    cache.get_or_compute(Family::RStirling2 { r }, big_n, big_k, || {
        int(big_k as i64) * r_stirling2_raw(cache, big_n - 1, big_k, r)
            + r_stirling2_raw(cache, big_n - 1, big_k - 1, r)
    })
}

/// Weighted Stirling polynomial `S_n^k(x) = sum_i C(n,i) {i,k} x^{n-i}`.
pub fn weighted_stirling_poly(cache: &TriangleCache, n: usize, k: usize) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for i in k..=n {
        coeffs[n - i] = binomial(cache, n, i) * stirling2(cache, i, k);
    }
    Polynomial::new(coeffs)
}

/// Whitney number of the second kind `W_{m,r}(n,k) = m^{n-k} S_n^k(r/m)`.
///
/// Panics if `m == 0`.
pub fn whitney2(cache: &TriangleCache, n: usize, k: usize, m: usize, r: usize) -> Rational {
    assert!(m > 0, "Whitney numbers need m >= 1");
    if k > n {
        return Rational::zero();
    }
    let x = Rational::new(BigInt::from(r), BigInt::from(m));
    let scale = big(BigInt::from(m).pow((n - k) as u32));
    weighted_stirling_poly(cache, n, k).eval(&x) * scale
}

/// Bernoulli number with `B_1 = -1/2`: coefficients of `z/(e^z-1)`.
pub fn bernoulli(cache: &TriangleCache, n: usize) -> Rational {
    gen_bernoulli(cache, n, 1)
}

/// Generalized Bernoulli number `B_n^{(alpha)}`, the EGF coefficients of
/// `(z/(e^z-1))^alpha`, for integer `alpha >= 0`.
pub fn gen_bernoulli(cache: &TriangleCache, n: usize, alpha: usize) -> Rational {
    if alpha == 0 {
        return if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if let Some(v) = cache.get(Family::GenBernoulli, n, alpha) {
        return v;
    }
    // Fill the whole row up to n in one pass.
    let base = EgfSeries::variable(n + 1)
        .divide(&EgfSeries::exp_minus_one(n + 1))
        .expect("z/(e^z-1) is a power series");
    let row = base.pow(alpha);
    for (i, c) in row.coeffs().iter().enumerate() {
        cache.insert(Family::GenBernoulli, i, alpha, c.clone());
    }
    cache
        .get(Family::GenBernoulli, n, alpha)
        .expect("row was just filled")
}

/// Bell polynomial `phi_n(x) = sum_k {n,k} x^k`.
pub fn bell_poly(cache: &TriangleCache, n: usize) -> Polynomial {
    Polynomial::new((0..=n).map(|k| stirling2(cache, n, k)).collect())
}

/// Bell number `phi_n = phi_n(1)`.
pub fn bell(cache: &TriangleCache, n: usize) -> Rational {
    (0..=n).map(|k| stirling2(cache, n, k)).sum()
}
