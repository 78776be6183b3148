use super::{hyp1f1, NumericCheck, HYP1F1_TERM_CAP};
use crate::exact::{big, binomial, from_f64, to_f64};
use crate::pbell::{pbell_number, pbell_poly, PBellBackend};
use crate::special::TriangleCache;

const TERM_CAP: usize = 2_000;

/// Sums `sum_k w_k (x+k)^n / k!` where `0 < w_k <= 1`, stopping once the
/// geometric tail bound from the term ratio of `(x+k)^n / k!` is below `tol`.
fn weighted_series<W: Fn(usize) -> f64>(n: usize, x: f64, tol: f64, weight: W) -> (f64, u64) {
    let nf = n as f64;
    let mut sum = 0.0;
    let mut log_fact = 0.0;
    for k in 0..TERM_CAP {
        if k > 0 {
            log_fact += (k as f64).ln();
        }
        let base = x + k as f64;
        let magnitude = if n == 0 {
            (-log_fact).exp()
        } else if base == 0.0 {
            0.0
        } else {
            (nf * base.abs().ln() - log_fact).exp()
        };
        let sign = if base < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        sum += weight(k) * sign * magnitude;
        if base > 0.0 {
            let rho = ((base + 1.0) / base).powf(nf) / (k as f64 + 1.0);
            if rho < 0.5 && 2.0 * magnitude * rho < tol {
                return (sum, k as u64 + 1);
            }
        }
    }
    (sum, TERM_CAP as u64)
}

fn weight_1f1(k: usize, p: usize) -> f64 {
    hyp1f1(k as f64 + 1.0, (p + k) as f64 + 1.0, -1.0, 1e-17).unwrap_or_else(|e| {
        panic!("1F1 weight at k={k} failed within {HYP1F1_TERM_CAP} terms: {e}")
    })
}

/// `B_{n,p} = sum_k C(p+k,k)^{-1} 1F1(k+1; p+k+1; -1) k^n / k!`.
pub fn dobinski_pbell(cache: &TriangleCache, n: usize, p: usize, tol: f64) -> NumericCheck {
    let (estimate, terms) = weighted_series(n, 0.0, tol / 10.0, |k| {
        weight_1f1(k, p) / to_f64(&big(binomial((p + k) as u64, k as u64)))
    });
    let target = pbell_number(cache, n, p, PBellBackend::ExplicitStirling);
    NumericCheck::new(
        "dobinski",
        &[("n", n as f64), ("p", p as f64)],
        target,
        estimate,
        tol,
        terms,
    )
}

fn poly_target(cache: &TriangleCache, n: usize, p: usize, x: f64) -> crate::exact::Rational {
    let xr = from_f64(x).expect("finite x");
    pbell_poly(cache, n, p).eval(&xr)
}

/// `B_{n,p}(x) = sum_k C(p+k,k)^{-1} 1F1(k+1; p+k+1; -1) (x+k)^n / k!`.
pub fn dobinski_pbell_poly(
    cache: &TriangleCache,
    n: usize,
    p: usize,
    x: f64,
    tol: f64,
) -> NumericCheck {
    let (estimate, terms) = weighted_series(n, x, tol / 10.0, |k| {
        weight_1f1(k, p) / to_f64(&big(binomial((p + k) as u64, k as u64)))
    });
    NumericCheck::new(
        "dobinski-poly",
        &[("n", n as f64), ("p", p as f64), ("x", x)],
        poly_target(cache, n, p, x),
        estimate,
        tol,
        terms,
    )
}

/// The variant `p sum_k (x+k)^n / k! 1F1(k+1; p+k+1; -1)`, kept to show that
/// it does not reproduce the polynomials.
pub fn dobinski_pbell_poly_as_printed(
    cache: &TriangleCache,
    n: usize,
    p: usize,
    x: f64,
    tol: f64,
) -> NumericCheck {
    let (sum, terms) = weighted_series(n, x, tol / 10.0 / p.max(1) as f64, |k| weight_1f1(k, p));
    NumericCheck::new(
        "dobinski-poly-as-printed",
        &[("n", n as f64), ("p", p as f64), ("x", x)],
        poly_target(cache, n, p, x),
        p as f64 * sum,
        tol,
        terms,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn examples() {
        let c = TriangleCache::new();
        let r = dobinski_pbell(&c, 2, 1, 1e-9);
        assert_eq!(r.target, ratio(5, 6));
        assert!(r.abs_error <= 1e-9 && r.pass);
        let r = dobinski_pbell(&c, 0, 3, 1e-9);
        assert_eq!(r.target, int(1));
        assert!(r.pass);
        let r = dobinski_pbell(&c, 6, 3, 1e-8);
        assert_eq!(r.target, ratio(8389, 840));
        assert!(r.abs_error <= 1e-8);
    }

    #[test]
    fn grid_within_1e8() {
        let c = TriangleCache::new();
        for n in 0..=8 {
            for p in 1..=4 {
                let r = dobinski_pbell(&c, n, p, 1e-9);
                assert!(r.abs_error <= 1e-8, "n={n} p={p} err={}", r.abs_error);
            }
        }
    }

    #[test]
    fn polynomial_form() {
        let c = TriangleCache::new();
        let r = dobinski_pbell_poly(&c, 1, 1, 0.0, 1e-9);
        assert_eq!(r.target, ratio(1, 2));
        assert!(r.pass);
        let r = dobinski_pbell_poly(&c, 2, 1, 1.0, 1e-9);
        assert_eq!(r.target, ratio(17, 6));
        assert!(r.pass);
        for x in [-0.5, 0.0, 2.5] {
            let r = dobinski_pbell_poly(&c, 0, 2, x, 1e-9);
            assert_eq!(r.target, int(1));
            assert!(r.pass);
        }
        for n in 0..=6 {
            for p in 1..=3 {
                assert!(
                    dobinski_pbell_poly(&c, n, p, 0.75, 1e-9).pass,
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn extra_factor_p_breaks_polynomial_form() {
        let c = TriangleCache::new();
        let r = dobinski_pbell_poly_as_printed(&c, 0, 2, 0.0, 1e-9);
        assert!((r.estimate - 3.5).abs() < 1e-8);
        assert!(!r.pass);
        // coincides with the true value nowhere on a small grid
        for n in 0..=3 {
            for p in 1..=3 {
                assert!(
                    !dobinski_pbell_poly_as_printed(&c, n, p, 1.0, 1e-6).pass,
                    "n={n} p={p}"
                );
            }
        }
    }
}
