//! Poly-Bell numbers `B_n^{(p)} = B_{n,p} / p!` and their extension to a
//! negative upper index, `B_n^{(-p)} = sum_{k>=p} k!/(k-p)! {n,k}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{big, factorial, falling_factorial, rational_string, Polynomial, Rational};
use crate::pbell::{pbell_number, pbell_poly, PBellBackend};
use crate::special::{bell, bell_poly, binomial, stirling2, TriangleCache};

/// A poly-Bell number together with its indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyBellValue {
    pub n: usize,
    pub upper_index: i64,
    #[serde(with = "rational_string")]
    pub value: Rational,
}

/// `B_n^{(k)}` for any signed upper index `k`.
pub fn polybell(cache: &TriangleCache, n: usize, upper_index: i64) -> PolyBellValue {
    let p = upper_index.unsigned_abs() as usize;
    let value = if upper_index >= 0 {
        polybell_pos(cache, n, p, PBellBackend::ZTriangle)
    } else {
        polybell_neg(cache, n, p)
    };
    PolyBellValue {
        n,
        upper_index,
        value,
    }
}

/// `B_n^{(p)} = B_{n,p} / p!` for `p >= 0`.
pub fn polybell_pos(cache: &TriangleCache, n: usize, p: usize, backend: PBellBackend) -> Rational {
    pbell_number(cache, n, p, backend) / big(factorial(p as u64))
}

/// `B_n^{(-p)} = sum_{k=p}^{n} k!/(k-p)! {n,k}`; zero when `p > n`.
pub fn polybell_neg(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    (p..=n)
        .map(|k| big(falling_factorial(k as u64, p as u64)) * stirling2(cache, n, k))
        .sum()
}

/// Integer accessor for `B_n^{(-p)}`. Panics if the value is not an integer,
/// which would mean a corrupted cache.
pub fn polybell_neg_int(cache: &TriangleCache, n: usize, p: usize) -> BigInt {
    let v = polybell_neg(cache, n, p);
    assert!(v.is_integer(), "B_{n}^(-{p}) = {v} is not an integer");
    v.to_integer()
}

/// `d^p/dx^p phi_n(x)` at `x = 1`, in the convolution form
/// `p! sum_j C(n,j) {j,p} phi_{n-j}`.
pub fn polybell_neg_derivative(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    let s: Rational = (p..=n)
        .map(|j| binomial(cache, n, j) * stirling2(cache, j, p) * bell(cache, n - j))
        .sum();
    s * big(factorial(p as u64))
}

/// `sum_p B_n^{(-p)} y^p / p!`, a polynomial of degree `n` in `y` equal to
/// `phi_n(1 + y)`.
pub fn polybell_neg_row_poly(cache: &TriangleCache, n: usize) -> Polynomial {
    Polynomial::new(
        (0..=n)
            .map(|p| polybell_neg(cache, n, p) / big(factorial(p as u64)))
            .collect(),
    )
}

/// Poly-Bell polynomial `B_n^{(p)}(x) = B_{n,p}(x) / p!`.
pub fn polybell_poly(cache: &TriangleCache, n: usize, p: usize) -> Polynomial {
    pbell_poly(cache, n, p).scale(&(Rational::one() / big(factorial(p as u64))))
}

/// `p! * D^{-p} phi_n` at 1, with `D^{-1}` the antiderivative vanishing at 0.
pub fn pbell_iterated_integral(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    let integrated = (0..p).fold(bell_poly(cache, n), |acc, _| acc.antiderivative());
    integrated.eval(&Rational::one()) * big(factorial(p as u64))
}

/// A pair of indices where `B_n^{(-p)} != B_p^{(-n)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityWitness {
    pub n: usize,
    pub p: usize,
    #[serde(with = "rational_string")]
    pub lhs: Rational,
    #[serde(with = "rational_string")]
    pub rhs: Rational,
}

/// Smallest `(n, p)` with `n > p >= 1` (ordered by `n`, then `p`) breaking
/// the symmetry `B_n^{(-p)} = B_p^{(-n)}`. Diagonal cells agree trivially
/// and are skipped.
pub fn duality_counterexample(cache: &TriangleCache) -> DualityWitness {
    (2usize..)
        .flat_map(|n| (1..n).map(move |p| (n, p)))
        .find_map(|(n, p)| {
            let lhs = polybell_neg(cache, n, p);
            let rhs = polybell_neg(cache, p, n);
            (lhs != rhs).then_some(DualityWitness { n, p, lhs, rhs })
        })
        .expect("B_n^(-p) is positive while B_p^(-n) vanishes for n > p")
}

/// Checks `B_n^{(-p)} = 0` exactly when `p > n`, with `B_0^{(0)} = 1`.
pub fn polybell_neg_support(cache: &TriangleCache, n: usize, p: usize) -> bool {
    polybell_neg(cache, n, p).is_zero() == (p > n)
}
