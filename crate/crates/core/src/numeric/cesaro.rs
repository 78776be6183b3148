use std::f64::consts::{E, PI};

use num_complex::Complex64;

use super::{gauss_legendre, NumericCheck, NumericError};
use crate::exact::{big, factorial, to_f64};
use crate::pbell::{pbell_number, PBellBackend};
use crate::special::TriangleCache;

const START_PANELS: usize = 4;
const MAX_PANELS: usize = 1 << 14;

/// Integrand of the Cesàro-type representation, including the prefactor
/// `2 n! p! / (pi e)`.
pub fn cesaro_integrand(n: usize, p: usize, theta: f64) -> f64 {
    let u = Complex64::from_polar(1.0, theta).exp();
    let w = u - 1.0;
    let mut polar_part = Complex64::new(0.0, 0.0);
    let mut inv_fact = 1.0;
    for l in 0..p {
        if l > 0 {
            inv_fact /= l as f64;
        }
        polar_part += w.powi(l as i32 - p as i32) * inv_fact;
    }
    let inner = u.exp() / w.powi(p as i32) - polar_part * E;
    let prefactor =
        2.0 * to_f64(&big(factorial(n as u64))) * to_f64(&big(factorial(p as u64))) / (PI * E);
    prefactor * inner.im * (n as f64 * theta).sin()
}

/// Composite Gauss–Legendre quadrature of [`cesaro_integrand`] over
/// `[0, pi]`, doubling the panel count until successive estimates differ by
/// less than `tol / 4`.
pub fn cesaro_pbell(
    cache: &TriangleCache,
    n: usize,
    p: usize,
    quad_points: usize,
    tol: f64,
) -> Result<NumericCheck, NumericError> {
    if n == 0 || p == 0 || quad_points == 0 {
        return Err(NumericError::InvalidArgument(format!(
            "cesaro needs n, p, quad_points >= 1 (got {n}, {p}, {quad_points})"
        )));
    }
    let rule = gauss_legendre(quad_points);
    let f = |t: f64| cesaro_integrand(n, p, t);
    let mut panels = START_PANELS;
    let mut previous = rule.integrate(f, 0.0, PI, panels);
    loop {
        panels *= 2;
        let current = rule.integrate(f, 0.0, PI, panels);
        if (current - previous).abs() < tol / 4.0 {
            let target = pbell_number(cache, n, p, PBellBackend::ExplicitStirling);
            return Ok(NumericCheck::new(
                "cesaro",
                &[
                    ("n", n as f64),
                    ("p", p as f64),
                    ("quad_points", quad_points as f64),
                ],
                target,
                current,
                tol,
                (panels * quad_points) as u64,
            ));
        }
        if panels >= MAX_PANELS {
            return Err(NumericError::QuadratureNoConvergence {
                previous,
                last: current,
                panels,
            });
        }
        previous = current;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::numeric::QUADRATURE_TOL;

    #[test]
    fn examples() {
        let c = TriangleCache::new();
        for (n, p, target, tol) in [
            (1, 1, ratio(1, 2), 1e-6),
            (2, 1, ratio(5, 6), 1e-6),
            (3, 2, ratio(14, 15), 1e-5),
        ] {
            let r = cesaro_pbell(&c, n, p, 16, QUADRATURE_TOL).unwrap();
            assert_eq!(r.target, target);
            assert!(r.abs_error <= tol, "n={n} p={p} err={}", r.abs_error);
        }
    }

    #[test]
    fn wider_grid() {
        let c = TriangleCache::new();
        for n in 1..=6 {
            for p in 1..=4 {
                let r = cesaro_pbell(&c, n, p, 12, 1e-8).unwrap();
                assert!(r.abs_error < 1e-7, "n={n} p={p} err={}", r.abs_error);
            }
        }
    }

    #[test]
    fn few_points_still_converge() {
        let c = TriangleCache::new();
        let r = cesaro_pbell(&c, 2, 1, 3, 1e-6).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn rejects_zero_arguments() {
        let c = TriangleCache::new();
        assert!(cesaro_pbell(&c, 0, 1, 8, 1e-6).is_err());
        assert!(cesaro_pbell(&c, 1, 0, 8, 1e-6).is_err());
    }

    #[test]
    fn refinement_cap() {
        let c = TriangleCache::new();
        assert!(matches!(
            cesaro_pbell(&c, 3, 2, 1, 0.0),
            Err(NumericError::QuadratureNoConvergence { .. })
        ));
    }
}
