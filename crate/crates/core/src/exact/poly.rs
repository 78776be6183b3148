use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{int, Rational};

/// Dense polynomial with rational coefficients, lowest degree first.
///
/// Stored canonically: trailing zero coefficients are trimmed and the zero
/// polynomial is the single coefficient `[0]`, so `coeffs()` is never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<RationalStr>", into = "Vec<RationalStr>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading_coeff(&self) -> &Rational {
        &self.coeffs[self.coeffs.len() - 1]
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0: `x^k -> x^(k+1)/(k+1)`.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(k as i64 + 1));
        }
        Self::new(coeffs)
    }

    /// `p(x + shift)`, by Horner on polynomials.
    pub fn taylor_shift(&self, shift: &Rational) -> Self {
        let linear = Self::new(vec![shift.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &linear) + &Self::constant(c.clone())
        })
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Descending-degree rendering, e.g. `x^2 + 2/3*x + 1/2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (deg, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{deg}")?,
                (_, false) => write!(f, "{mag}*x^{deg}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RationalStr(#[serde(with = "super::rational_string")] Rational);

impl From<Vec<RationalStr>> for Polynomial {
    fn from(v: Vec<RationalStr>) -> Self {
        Polynomial::new(v.into_iter().map(|r| r.0).collect())
    }
}

impl From<Polynomial> for Vec<RationalStr> {
    fn from(p: Polynomial) -> Self {
        p.coeffs.into_iter().map(RationalStr).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn canonical_zero() {
        assert_eq!(Polynomial::new(vec![]), Polynomial::zero());
        assert_eq!(poly(&[0, 0, 0]), Polynomial::zero());
        assert!(Polynomial::zero().is_zero());
        assert_eq!(Polynomial::zero().degree(), 0);
        assert_eq!(Polynomial::zero().eval(&ratio(7, 3)), int(0));
    }

    #[test]
    fn horner() {
        // x + x^2 is phi_2
        let phi2 = poly(&[0, 1, 1]);
        assert_eq!(phi2.eval(&int(1)), int(2));
        // x + 3x^2 + x^3 is phi_3
        let phi3 = poly(&[0, 1, 3, 1]);
        assert_eq!(phi3.eval(&int(1)), int(5));
        assert_eq!(phi3.eval(&ratio(1, 2)), ratio(11, 8));
    }

    #[test]
    fn calculus() {
        let p = poly(&[3, 0, 6]);
        assert_eq!(p.derivative(), poly(&[0, 12]));
        assert_eq!(p.antiderivative(), poly(&[0, 3, 0, 2]));
        assert_eq!(p.antiderivative().derivative(), p);
        assert_eq!(Polynomial::one().derivative(), Polynomial::zero());
    }

    #[test]
    fn shift() {
        // (1+y) + (1+y)^2 = 2 + 3y + y^2
        assert_eq!(poly(&[0, 1, 1]).taylor_shift(&int(1)), poly(&[2, 3, 1]));
    }

    #[test]
    fn display() {
        let p = Polynomial::new(vec![ratio(1, 2), ratio(2, 3), int(1)]);
        assert_eq!(p.to_string(), "x^2 + 2/3*x + 1/2");
        assert_eq!(poly(&[-1, 0, -2]).to_string(), "-2*x^2 - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn json() {
        let p = Polynomial::new(vec![ratio(1, 2), int(-3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2","-3"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&s).unwrap(), p);
    }
}
