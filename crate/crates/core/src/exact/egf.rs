use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{big, factorial, int, ExactError, Rational};

/// Truncated exponential generating function `sum_{k<=N} a_k z^k / k!`.
///
/// Coefficients are stored in EGF convention: `coeffs[k]` is `a_k`, not the
/// ordinary coefficient `a_k / k!`. Binary operations truncate to the
/// smaller of the two orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EgfSeries {
    coeffs: Vec<Rational>,
}

/// Row `n` of Pascal's triangle.
fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

impl EgfSeries {
    /// Panics on an empty coefficient vector: a series has order >= 0.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "an EGF series needs at least one coefficient"
        );
        EgfSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `e^{cz}`: `a_n = c^n`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut pow = Rational::one();
        for _ in 0..=order {
            coeffs.push(pow.clone());
            pow *= c;
        }
        Self::new(coeffs)
    }

    /// `e^z - 1`.
    pub fn exp_minus_one(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` if the series vanishes
    /// to its order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Binomial convolution `c_n = sum_k C(n,k) a_k b_{n-k}`.
    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let row = pascal_row(n);
            let mut acc = Rational::zero();
            for (k, c) in row.iter().enumerate() {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc += a * b * big(c.clone());
            }
            out.push(acc);
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul_series(self))
    }

    /// `exp(a)` via `(exp a)' = a' exp a`, i.e.
    /// `b_{n+1} = sum_k C(n,k) a_{k+1} b_{n-k}`.
    pub fn exp(&self) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_zero() {
            return Err(ExactError::NonZeroConstantTerm(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut b = Vec::with_capacity(order + 1);
        b.push(Rational::one());
        for n in 0..order {
            let row = pascal_row(n);
            let mut acc = Rational::zero();
            for k in 0..=n {
                let a = &self.coeffs[k + 1];
                if a.is_zero() {
                    continue;
                }
                acc += a * &b[n - k] * big(row[k].clone());
            }
            b.push(acc);
        }
        Ok(Self::new(b))
    }

    /// Exact quotient. Both operands are first shifted left by the
    /// denominator's valuation `v`, so the result has order `N - v` with
    /// `N` the common order.
    pub fn divide(&self, den: &Self) -> Result<Self, ExactError> {
        let order = self.order().min(den.order());
        let num = self.truncate(order).to_ordinary();
        let den = den.truncate(order).to_ordinary();
        let v = den
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(ExactError::ZeroDivisor)?;
        if let Some(vn) = num.iter().position(|c| !c.is_zero()) {
            if vn < v {
                return Err(ExactError::NegativeValuation { num: vn, den: v });
            }
        }
        let num = &num[v..];
        let den = &den[v..];
        let lead = &den[0];
        let mut q: Vec<Rational> = Vec::with_capacity(num.len());
        for n in 0..num.len() {
            let mut acc = num[n].clone();
            for j in 1..=n {
                if !den[j].is_zero() {
                    acc -= &den[j] * &q[n - j];
                }
            }
            q.push(acc / lead);
        }
        Ok(Self::from_ordinary(q))
    }

    /// `d/dz`: `a'_n = a_{n+1}`, order drops by one.
    pub fn derivative(&self) -> Result<Self, ExactError> {
        if self.order() == 0 {
            return Err(ExactError::OrderExhausted);
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// `sum_k outer[k] (e^z - 1)^k`, truncated at `order`. Powers are built as
    /// `(e^z-1)^k / k!`, whose coefficients are the Stirling numbers `{n,k}`.
    pub fn compose_exp_minus_one(outer: &[Rational], order: usize) -> Self {
        let w = Self::exp_minus_one(order);
        let mut acc = Self::zero(order);
        // (e^z - 1)^k / k!
        let mut column = Self::one(order);
        for (k, c) in outer.iter().enumerate().take(order + 1) {
            if k > 0 {
                column = column
                    .mul_series(&w)
                    .scale(&Rational::new(BigInt::one(), BigInt::from(k)));
            }
            if !c.is_zero() {
                acc = &acc + &column.scale(&(c * big(factorial(k as u64))));
            }
        }
        acc
    }

    /// Smallest index below the common order where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    fn to_ordinary(&self) -> Vec<Rational> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if k > 0 {
                    fact *= k;
                }
                a / big(fact.clone())
            })
            .collect()
    }

    fn from_ordinary(c: Vec<Rational>) -> Self {
        let mut fact = BigInt::one();
        Self::new(
            c.into_iter()
                .enumerate()
                .map(|(k, a)| {
                    if k > 0 {
                        fact *= k;
                    }
                    a * big(fact.clone())
                })
                .collect(),
        )
    }
}

impl Add for &EgfSeries {
    type Output = EgfSeries;

    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        EgfSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;

    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        EgfSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &EgfSeries {
    type Output = EgfSeries;

    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &EgfSeries {
    type Output = EgfSeries;

    fn neg(self) -> EgfSeries {
        EgfSeries::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

/// Convenience for tests and callers holding small integer data.
impl From<&[i64]> for EgfSeries {
    fn from(v: &[i64]) -> Self {
        EgfSeries::new(v.iter().map(|&x| int(x)).collect())
    }
}
