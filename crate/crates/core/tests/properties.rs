//! Randomized structural properties.

use num_traits::Zero;
use polybell_core::exact::{int, ratio, EgfSeries, Polynomial, Rational};
use polybell_core::pbell::{pbell_cross_check, pbell_number, pbell_poly, PBellBackend};
use polybell_core::polybell::{polybell_neg, polybell_neg_derivative};
use polybell_core::special::{binomial, stirling2, TriangleCache};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn backends_agree(n in 0usize..=25, p in 0usize..=8) {
        let c = TriangleCache::global();
        prop_assert!(pbell_cross_check(c, n, p).is_ok());
    }

    #[test]
    fn strictly_decreasing_in_p(n in 1usize..=20, p in 0usize..=8) {
        let c = TriangleCache::global();
        let a = pbell_number(c, n, p, PBellBackend::ZTriangle);
        let b = pbell_number(c, n, p + 1, PBellBackend::ZTriangle);
        prop_assert!(a > b && b > Rational::zero());
    }

    #[test]
    fn polynomial_is_monic_with_pbell_constant(n in 0usize..=12, p in 0usize..=6) {
        let c = TriangleCache::global();
        let poly = pbell_poly(c, n, p);
        prop_assert_eq!(poly.degree(), n);
        prop_assert_eq!(poly.leading_coeff(), &int(1));
        prop_assert_eq!(poly.coeff(0), pbell_number(c, n, p, PBellBackend::ExplicitStirling));
    }

    #[test]
    fn appell_shift(n in 0usize..=9, p in 0usize..=4, x in small_rational(), y in small_rational()) {
        // B_{n,p}(x + y) = sum_k C(n,k) B_{k,p}(x) y^{n-k}
        let c = TriangleCache::global();
        let lhs = pbell_poly(c, n, p).eval(&(&x + &y));
        let mut rhs = Rational::zero();
        let mut ypow = Rational::from_integer(1.into());
        for k in (0..=n).rev() {
            rhs += binomial(c, n, k) * pbell_poly(c, k, p).eval(&x) * &ypow;
            ypow *= &y;
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn negative_index_is_integer_and_matches_derivative(n in 0usize..=14, p in 0usize..=14) {
        let c = TriangleCache::global();
        let v = polybell_neg(c, n, p);
        prop_assert!(v.is_integer());
        prop_assert!(v >= Rational::zero());
        if p <= n {
            prop_assert_eq!(v, polybell_neg_derivative(c, n, p));
        }
    }

    #[test]
    fn egf_column_matches_stirling(k in 0usize..=8, order in 0usize..=14) {
        // (e^z - 1)^k / k! has EGF coefficients {n,k}
        let c = TriangleCache::global();
        let w = EgfSeries::exp_minus_one(order);
        let col = w.pow(k).scale(&Rational::new(1.into(), polybell_core::exact::factorial(k as u64)));
        for n in 0..=order {
            prop_assert_eq!(col.coeff(n), &stirling2(c, n, k));
        }
    }

    #[test]
    fn polynomial_ring_laws(a in prop::collection::vec(small_rational(), 1..6),
                            b in prop::collection::vec(small_rational(), 1..6),
                            x in small_rational()) {
        let (pa, pb) = (Polynomial::new(a), Polynomial::new(b));
        prop_assert_eq!((&pa * &pb).eval(&x), pa.eval(&x) * pb.eval(&x));
        prop_assert_eq!((&pa + &pb).eval(&x), pa.eval(&x) + pb.eval(&x));
        prop_assert_eq!(pa.antiderivative().derivative(), pa.clone());
        prop_assert_eq!(pa.taylor_shift(&x).eval(&Rational::zero()), pa.eval(&x));
    }
}
