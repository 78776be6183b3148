//! Mechanical verification of generating-function and pointwise identities.
//!
//! Series identities are checked coefficient by coefficient on truncated
//! EGFs, with denominators cleared so every quantity stays a power series.
//! Bivariate series are vectors of [`EgfSeries`] indexed by the power of `y`,
//! both variables in exponential normalization. Pointwise identities are
//! checked exactly on an `(n, p)` grid scanned row by row, so the first
//! reported failure is the smallest `n`, then the smallest `p`.

mod report;

pub use report::{CheckReport, Detail, Status};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

use crate::exact::{
    big, factorial, falling_factorial, int, to_f64, EgfSeries, Polynomial, Rational,
};
use crate::numeric::lower_inc_gamma;
use crate::pbell::{pbell_number, pbell_poly, pbell_ramanujan_p1, PBellBackend};
use crate::polybell::{pbell_iterated_integral, polybell_neg};
use crate::special::{bell, bell_poly, binomial, r_stirling2, stirling1, TriangleCache};

/// Tolerance of the floating point spot check in the incomplete gamma form.
pub const SPOT_TOL: f64 = 1e-10;

/// Every identity id accepted by [`run_selected`], in execution order.
pub const IDENTITY_IDS: &[&str] = &[
    "egf-definition",
    "closed-forms",
    "recurrence-re",
    "double-egf-pbell",
    "double-egf-pbell-full",
    "double-egf-polybell",
    "kummer-aa2",
    "contiguous-c1",
    "incomplete-gamma",
    "aaa",
    "aaa-from-c1",
    "da2",
    "cor2",
    "ramanujan",
    "bell-recurrence",
    "iterated-integral",
    "row-identity",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("order {order} too small: {needed} more coefficients are consumed before comparing")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("unknown identity id '{0}'")]
    UnknownIdentity(String),
}

/// Grid and truncation order shared by a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub nmax: usize,
    pub pmax: usize,
    pub order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            nmax: 12,
            pmax: 5,
            order: 12,
        }
    }
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Value::from(*v)))
        .collect()
}

/// `sum_n B_{n,p} z^n/n!` from the explicit backend.
fn pbell_egf(cache: &TriangleCache, p: usize, order: usize) -> EgfSeries {
    EgfSeries::from_fn(order, |n| {
        pbell_number(cache, n, p, PBellBackend::ExplicitStirling)
    })
}

fn compare_series(
    id: &str,
    params: BTreeMap<String, Value>,
    lhs: &EgfSeries,
    rhs: &EgfSeries,
) -> CheckReport {
    match lhs.first_difference(rhs) {
        None => CheckReport::pass(id, params),
        Some(n) => CheckReport::mismatch(id, params, &[("n", n)], lhs.coeff(n), rhs.coeff(n)),
    }
}

/// Compares bivariate series `[p][n]`, scanning `n` first, then `p`.
fn compare_bivariate(
    id: &str,
    params: BTreeMap<String, Value>,
    lhs: &[EgfSeries],
    rhs: &[EgfSeries],
    nz: usize,
) -> CheckReport {
    for n in 0..=nz {
        for (p, (l, r)) in lhs.iter().zip(rhs).enumerate() {
            if l.coeff(n) != r.coeff(n) {
                return CheckReport::mismatch(
                    id,
                    params,
                    &[("n", n), ("p", p)],
                    l.coeff(n),
                    r.coeff(n),
                );
            }
        }
    }
    CheckReport::pass(id, params)
}

/// `y * F` with `y`-exponential normalization: `[p+1] = (p+1) [p]`.
fn times_y(f: &[EgfSeries], order: usize) -> Vec<EgfSeries> {
    (0..f.len())
        .map(|p| {
            if p == 0 {
                EgfSeries::zero(order)
            } else {
                f[p - 1].scale(&int(p as i64))
            }
        })
        .collect()
}

/// The EGF of `B_{n,p}` built directly as `sum_k C(k+p,p)^{-1} (e^z-1)^k / k!`
/// against the sequence from the backend.
pub fn verify_egf_definition(cache: &TriangleCache, p: usize, order: usize) -> CheckReport {
    let outer: Vec<Rational> = (0..=order)
        .map(|k| {
            Rational::new(
                1.into(),
                binomial(cache, k + p, p).to_integer() * factorial(k as u64),
            )
        })
        .collect();
    let built = EgfSeries::compose_exp_minus_one(&outer, order);
    compare_series(
        "egf-definition",
        params(&[("p", p), ("order", order)]),
        &built,
        &pbell_egf(cache, p, order),
    )
}

/// `(e^z-1)^p f_p = p! exp(e^z-1) - sum_{k=1}^p p^(k) (e^z-1)^{p-k}`, plus the
/// three small-`p` displays in their cleared forms.
pub fn verify_closed_forms(cache: &TriangleCache, p: usize, order: usize) -> CheckReport {
    let id = "closed-forms";
    let pr = params(&[("p", p), ("order", order)]);
    let w = EgfSeries::exp_minus_one(order);
    let exp_w = w.exp().expect("e^z-1 has zero constant term");
    let lhs = w.pow(p).mul_series(&pbell_egf(cache, p, order));
    let mut rhs = exp_w.scale(&big(factorial(p as u64)));
    for k in 1..=p {
        rhs = &rhs
            - &w.pow(p - k)
                .scale(&big(falling_factorial(p as u64, k as u64)));
    }
    let report = compare_series(id, pr.clone(), &lhs, &rhs);
    if !report.passed() {
        return report;
    }
    let e_z = EgfSeries::exp_linear(&int(1), order);
    let one = EgfSeries::one(order);
    let display = match p {
        1 => &exp_w - &one,
        2 => (&exp_w - &e_z).scale(&int(2)),
        3 => {
            let e_2z = EgfSeries::exp_linear(&int(2), order);
            (&(&exp_w.scale(&int(2)) - &e_2z) - &one).scale(&int(3))
        }
        _ => return report,
    };
    compare_series(id, pr, &lhs, &display)
}

/// `(e^z-1) f_p = p f_{p-1} - p`.
pub fn verify_recurrence_re(cache: &TriangleCache, p: usize, order: usize) -> CheckReport {
    let w = EgfSeries::exp_minus_one(order);
    let lhs = w.mul_series(&pbell_egf(cache, p, order));
    let pp = int(p as i64);
    let rhs = &pbell_egf(cache, p - 1, order).scale(&pp) - &EgfSeries::constant(pp, order);
    compare_series(
        "recurrence-re",
        params(&[("p", p), ("order", order)]),
        &lhs,
        &rhs,
    )
}

fn pbell_bivariate(cache: &TriangleCache, nz: usize, ny: usize) -> Vec<EgfSeries> {
    (0..=ny).map(|p| pbell_egf(cache, p, nz)).collect()
}

/// `(e^z-1-y) sum B_{n,p} z^n/n! y^p/p! = (e^z-1) exp(e^z-1)`.
pub fn verify_double_egf_pbell(cache: &TriangleCache, nz: usize, ny: usize) -> CheckReport {
    let (lhs, w_exp_w) = double_egf_lhs(cache, nz, ny);
    let rhs: Vec<EgfSeries> = (0..=ny)
        .map(|p| {
            if p == 0 {
                w_exp_w.clone()
            } else {
                EgfSeries::zero(nz)
            }
        })
        .collect();
    compare_bivariate(
        "double-egf-pbell",
        params(&[("nz", nz), ("ny", ny)]),
        &lhs,
        &rhs,
        nz,
    )
}

/// `(e^z-1-y) sum B_{n,p} z^n/n! y^p/p! = (e^z-1) exp(e^z-1) - y e^y`.
pub fn verify_double_egf_pbell_full(cache: &TriangleCache, nz: usize, ny: usize) -> CheckReport {
    let (lhs, w_exp_w) = double_egf_lhs(cache, nz, ny);
    let rhs: Vec<EgfSeries> = (0..=ny)
        .map(|p| {
            if p == 0 {
                w_exp_w.clone()
            } else {
                EgfSeries::constant(int(-(p as i64)), nz)
            }
        })
        .collect();
    compare_bivariate(
        "double-egf-pbell-full",
        params(&[("nz", nz), ("ny", ny)]),
        &lhs,
        &rhs,
        nz,
    )
}

fn double_egf_lhs(cache: &TriangleCache, nz: usize, ny: usize) -> (Vec<EgfSeries>, EgfSeries) {
    let w = EgfSeries::exp_minus_one(nz);
    let f = pbell_bivariate(cache, nz, ny);
    let yf = times_y(&f, nz);
    let lhs = f
        .iter()
        .zip(&yf)
        .map(|(fp, yfp)| &w.mul_series(fp) - yfp)
        .collect();
    let w_exp_w = w.mul_series(&w.exp().expect("zero constant term"));
    (lhs, w_exp_w)
}

/// `sum B_n^{(-p)} z^n/n! y^p/p! = exp((y+1)(e^z-1))`, whose `y^p/p!` slice is
/// `(e^z-1)^p exp(e^z-1)`.
pub fn verify_double_egf_polybell(cache: &TriangleCache, nz: usize, ny: usize) -> CheckReport {
    let w = EgfSeries::exp_minus_one(nz);
    let exp_w = w.exp().expect("zero constant term");
    let lhs: Vec<EgfSeries> = (0..=ny)
        .map(|p| EgfSeries::from_fn(nz, |n| polybell_neg(cache, n, p)))
        .collect();
    let rhs: Vec<EgfSeries> = (0..=ny).map(|p| w.pow(p).mul_series(&exp_w)).collect();
    compare_bivariate(
        "double-egf-polybell",
        params(&[("nz", nz), ("ny", ny)]),
        &lhs,
        &rhs,
        nz,
    )
}

/// `f_p = (-1)^{p-1} p exp(e^z-1) (e^{-z} d/dz)^{p-1} [(1 - exp(1-e^z))/(e^z-1)]`.
/// The division and each derivative consume one coefficient, so the
/// comparison runs to order `order - (p-1)`.
pub fn verify_kummer_aa2(
    cache: &TriangleCache,
    p: usize,
    order: usize,
) -> Result<CheckReport, VerifyError> {
    assert!(p >= 1, "kummer-aa2 needs p >= 1");
    if order < p {
        return Err(VerifyError::InsufficientOrder {
            order,
            needed: p - 1,
        });
    }
    let surviving = order - (p - 1);
    let w = EgfSeries::exp_minus_one(order + 1);
    let exp_neg_w = (-&w).exp().expect("zero constant term");
    let mut g = (&EgfSeries::one(order + 1) - &exp_neg_w)
        .divide(&w)
        .expect("valuation of the numerator is at least one");
    let exp_neg_z = EgfSeries::exp_linear(&int(-1), order);
    for _ in 1..p {
        g = exp_neg_z.mul_series(&g.derivative().expect("order checked above"));
    }
    let sign = if p % 2 == 1 {
        int(p as i64)
    } else {
        int(-(p as i64))
    };
    let exp_w = EgfSeries::exp_minus_one(surviving)
        .exp()
        .expect("zero constant term");
    let lhs = exp_w.mul_series(&g).scale(&sign);
    Ok(compare_series(
        "kummer-aa2",
        params(&[("p", p), ("order", surviving)]),
        &lhs,
        &pbell_egf(cache, p, surviving),
    ))
}

/// `f_p = (1 + (e^z-1)/(p+1)) f_{p+1} - ((e^z-1)/(p+2)) f_{p+2}`.
pub fn verify_contiguous_c1(cache: &TriangleCache, p: usize, order: usize) -> CheckReport {
    let w = EgfSeries::exp_minus_one(order);
    let f1 = pbell_egf(cache, p + 1, order);
    let f2 = pbell_egf(cache, p + 2, order);
    let a = &EgfSeries::one(order) + &w.scale(&Rational::new(1.into(), (p as i64 + 1).into()));
    let b = w.scale(&Rational::new(1.into(), (p as i64 + 2).into()));
    let rhs = &a.mul_series(&f1) - &b.mul_series(&f2);
    compare_series(
        "contiguous-c1",
        params(&[("p", p), ("order", order)]),
        &pbell_egf(cache, p, order),
        &rhs,
    )
}

/// `(e^z-1)^p f_p = p exp(e^z-1) gamma(p, e^z-1)` with the finite closed form
/// of `gamma(p, .)`, followed by a floating point comparison at `z0` of the
/// summed series against the series form of `gamma`.
pub fn verify_incomplete_gamma_form(
    cache: &TriangleCache,
    p: usize,
    z0: &Rational,
    order: usize,
) -> CheckReport {
    assert!(p >= 1, "incomplete-gamma needs p >= 1");
    let mut pr = params(&[("p", p), ("order", order)]);
    pr.insert("z0".into(), Value::from(z0.to_string()));
    let w = EgfSeries::exp_minus_one(order);
    let exp_w = w.exp().expect("zero constant term");
    let exp_neg_w = (-&w).exp().expect("zero constant term");
    let mut partial = EgfSeries::zero(order);
    for j in 0..p {
        partial = &partial
            + &w.pow(j)
                .scale(&Rational::new(1.into(), factorial(j as u64)));
    }
    let gamma = (&EgfSeries::one(order) - &exp_neg_w.mul_series(&partial))
        .scale(&big(factorial(p as u64 - 1)));
    let rhs = exp_w.mul_series(&gamma).scale(&int(p as i64));
    let lhs = w.pow(p).mul_series(&pbell_egf(cache, p, order));
    let report = compare_series("incomplete-gamma", pr.clone(), &lhs, &rhs);
    if !report.passed() {
        return report;
    }

    let z = to_f64(z0);
    let w0 = z.exp() - 1.0;
    let closed = p as f64 * w0.exp() / w0.powi(p as i32) * lower_inc_gamma(p as f64, w0);
    let mut summed = 0.0;
    let mut zpow = 1.0;
    for n in 0..=40 {
        if n > 0 {
            zpow *= z / n as f64;
        }
        summed += to_f64(&pbell_number(cache, n, p, PBellBackend::ZTriangle)) * zpow;
    }
    let err = (summed - closed).abs();
    if err <= SPOT_TOL {
        CheckReport::pass("incomplete-gamma", pr)
    } else {
        CheckReport::numeric_fail("incomplete-gamma", pr, summed, closed, err, SPOT_TOL)
    }
}

/// Checks `lhs(n, p) == rhs(n, p)` on the grid, `n` outer.
fn pointwise<F>(
    id: &str,
    cfg_params: BTreeMap<String, Value>,
    ns: impl Iterator<Item = usize>,
    ps: &[usize],
    f: F,
) -> CheckReport
where
    F: Fn(usize, usize) -> (Rational, Rational),
{
    for n in ns {
        for &p in ps {
            let (l, r) = f(n, p);
            if l != r {
                return CheckReport::mismatch(id, cfg_params, &[("n", n), ("p", p)], &l, &r);
            }
        }
    }
    CheckReport::pass(id, cfg_params)
}

fn grid_params(cfg: &SuiteConfig) -> BTreeMap<String, Value> {
    params(&[("nmax", cfg.nmax), ("pmax", cfg.pmax)])
}

fn b(cache: &TriangleCache, n: usize, p: usize) -> Rational {
    pbell_number(cache, n, p, PBellBackend::ExplicitStirling)
}

fn frac(n: usize, d: usize) -> Rational {
    Rational::new((n as i64).into(), (d as i64).into())
}

/// `B_{n+1,p+1} = B_{n+1,p} - (n+1)/(p+1) B_{n,p+1} + (n+1)/(p+2) B_{n,p+2}`.
pub fn verify_aaa(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    let ps: Vec<usize> = (0..=cfg.pmax).collect();
    pointwise("aaa", grid_params(cfg), 0..cfg.nmax, &ps, |n, p| {
        let rhs = b(cache, n + 1, p) - frac(n + 1, p + 1) * b(cache, n, p + 1)
            + frac(n + 1, p + 2) * b(cache, n, p + 2);
        (b(cache, n + 1, p + 1), rhs)
    })
}

/// Coefficient form of the contiguous relation:
/// `B_{n,p} = B_{n,p+1} + sum_{k<n} C(n,k) (B_{k,p+1}/(p+1) - B_{k,p+2}/(p+2))`.
pub fn verify_aaa_from_c1(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    let ps: Vec<usize> = (0..=cfg.pmax).collect();
    pointwise(
        "aaa-from-c1",
        grid_params(cfg),
        0..=cfg.nmax,
        &ps,
        |n, p| {
            let mut rhs = b(cache, n, p + 1);
            for k in 0..n {
                rhs += binomial(cache, n, k)
                    * (b(cache, k, p + 1) * frac(1, p + 1) - b(cache, k, p + 2) * frac(1, p + 2));
            }
            (b(cache, n, p), rhs)
        },
    )
}

/// `sum_k s(m,k) B_{n+k,p} = sum_k {n+m,k+m}_m C(m+k+p,p)^{-1}` for every
/// `m <= nmax`; the failure location reports `n`, `p` and `m`.
pub fn verify_da2(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    let id = "da2";
    for n in 0..=cfg.nmax {
        for p in 0..=cfg.pmax {
            for m in 0..=cfg.nmax {
                let lhs: Rational = (0..=m)
                    .map(|k| stirling1(cache, m, k) * b(cache, n + k, p))
                    .sum();
                let rhs: Rational = (0..=n)
                    .map(|k| r_stirling2(cache, n, k, m) / binomial(cache, m + k + p, p))
                    .sum();
                if lhs != rhs {
                    return CheckReport::mismatch(
                        id,
                        grid_params(cfg),
                        &[("n", n), ("p", p), ("m", m)],
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    CheckReport::pass(id, grid_params(cfg))
}

/// `B_{n+1,p}(x) = x B_{n,p}(x) - sum_k C(n,k) (p/(p+1) B_{k,p+1}(x) - B_{k,p}(x))`
/// as a polynomial identity; a failure reports the lowest differing power.
pub fn verify_cor2(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    let id = "cor2";
    for n in 0..cfg.nmax {
        for p in 0..=cfg.pmax {
            let mut rhs = &Polynomial::x() * &pbell_poly(cache, n, p);
            for k in 0..=n {
                let inner =
                    &pbell_poly(cache, k, p + 1).scale(&frac(p, p + 1)) - &pbell_poly(cache, k, p);
                rhs = &rhs - &inner.scale(&binomial(cache, n, k));
            }
            let lhs = pbell_poly(cache, n + 1, p);
            if lhs != rhs {
                let deg = (0..=lhs.degree().max(rhs.degree()))
                    .find(|&i| lhs.coeff(i) != rhs.coeff(i))
                    .expect("polynomials differ");
                return CheckReport::mismatch(
                    id,
                    grid_params(cfg),
                    &[("n", n), ("p", p), ("x_power", deg)],
                    &lhs.coeff(deg),
                    &rhs.coeff(deg),
                );
            }
        }
    }
    CheckReport::pass(id, grid_params(cfg))
}

/// `B_{n,1} = sum_k C(n,k) phi_{k+1} B_{n-k} / (k+1)`.
pub fn verify_ramanujan(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    pointwise(
        "ramanujan",
        params(&[("nmax", cfg.nmax)]),
        0..=cfg.nmax,
        &[1],
        |n, _| (pbell_ramanujan_p1(cache, n), b(cache, n, 1)),
    )
}

/// `phi_{n+1} = (n+1) phi_n + sum_{k=1}^{n-1} (-1)^{n-k} C(n,k-1) phi_k`.
pub fn verify_bell_recurrence(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    pointwise(
        "bell-recurrence",
        params(&[("nmax", cfg.nmax)]),
        0..=cfg.nmax,
        &[0],
        |n, _| {
            let mut rhs = int(n as i64 + 1) * bell(cache, n);
            for k in 1..n {
                let term = binomial(cache, n, k - 1) * bell(cache, k);
                if (n - k) % 2 == 0 {
                    rhs += term;
                } else {
                    rhs -= term;
                }
            }
            (bell(cache, n + 1), rhs)
        },
    )
}

/// `B_{n,p} = p! (D^{-p} phi_n)(1)`.
pub fn verify_iterated_integral(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    let ps: Vec<usize> = (0..=cfg.pmax).collect();
    pointwise(
        "iterated-integral",
        grid_params(cfg),
        0..=cfg.nmax,
        &ps,
        |n, p| (pbell_iterated_integral(cache, n, p), b(cache, n, p)),
    )
}

/// `sum_p B_n^{(-p)} / p! = phi_n(2)`.
pub fn verify_row_identity(cache: &TriangleCache, cfg: &SuiteConfig) -> CheckReport {
    pointwise(
        "row-identity",
        params(&[("nmax", cfg.nmax)]),
        0..=cfg.nmax,
        &[0],
        |n, _| {
            let lhs: Rational = (0..=n)
                .map(|p| polybell_neg(cache, n, p) / big(factorial(p as u64)))
                .sum();
            (lhs, bell_poly(cache, n).eval(&int(2)))
        },
    )
}

fn run_one(cache: &TriangleCache, id: &str, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let order = cfg.order;
    let pmax = cfg.pmax;
    match id {
        "egf-definition" => (0..=pmax)
            .map(|p| verify_egf_definition(cache, p, order))
            .collect(),
        "closed-forms" => (1..=pmax)
            .map(|p| verify_closed_forms(cache, p, order))
            .collect(),
        "recurrence-re" => (1..=pmax)
            .map(|p| verify_recurrence_re(cache, p, order))
            .collect(),
        "double-egf-pbell" => vec![verify_double_egf_pbell(cache, order, pmax)],
        "double-egf-pbell-full" => vec![verify_double_egf_pbell_full(cache, order, pmax)],
        "double-egf-polybell" => vec![verify_double_egf_polybell(cache, order, pmax)],
        "kummer-aa2" => (1..=pmax)
            .filter_map(|p| verify_kummer_aa2(cache, p, order).ok())
            .collect(),
        "contiguous-c1" => (0..=pmax)
            .map(|p| verify_contiguous_c1(cache, p, order))
            .collect(),
        "incomplete-gamma" => (1..=pmax)
            .map(|p| verify_incomplete_gamma_form(cache, p, &frac(1, 2), order))
            .collect(),
        "aaa" => vec![verify_aaa(cache, cfg)],
        "aaa-from-c1" => vec![verify_aaa_from_c1(cache, cfg)],
        "da2" => vec![verify_da2(cache, cfg)],
        "cor2" => vec![verify_cor2(cache, cfg)],
        "ramanujan" => vec![verify_ramanujan(cache, cfg)],
        "bell-recurrence" => vec![verify_bell_recurrence(cache, cfg)],
        "iterated-integral" => vec![verify_iterated_integral(cache, cfg)],
        "row-identity" => vec![verify_row_identity(cache, cfg)],
        other => unreachable!("id '{other}' was validated"),
    }
}

/// Runs the listed identities (all of them when `only` is empty) in
/// parallel, returning reports in [`IDENTITY_IDS`] order.
pub fn run_selected(
    cache: &TriangleCache,
    cfg: &SuiteConfig,
    only: &[String],
) -> Result<Vec<CheckReport>, VerifyError> {
    if let Some(bad) = only.iter().find(|id| !IDENTITY_IDS.contains(&id.as_str())) {
        return Err(VerifyError::UnknownIdentity(bad.clone()));
    }
    let ids: Vec<&str> = IDENTITY_IDS
        .iter()
        .copied()
        .filter(|id| only.is_empty() || only.iter().any(|o| o == id))
        .collect();
    let reports: Vec<Vec<CheckReport>> = ids.par_iter().map(|id| run_one(cache, id, cfg)).collect();
    Ok(reports.into_iter().flatten().collect())
}

/// The full suite on the shared cache.
pub fn run_all(nmax: usize, pmax: usize, order: usize) -> Vec<CheckReport> {
    run_all_with(TriangleCache::global(), &SuiteConfig { nmax, pmax, order })
}

pub fn run_all_with(cache: &TriangleCache, cfg: &SuiteConfig) -> Vec<CheckReport> {
    run_selected(cache, cfg, &[]).expect("no filter")
}
