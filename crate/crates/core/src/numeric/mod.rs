//! Floating point and Monte Carlo checks of the analytic representations:
//! the confluent hypergeometric series, the lower incomplete gamma function,
//! Dobinski sums, the Cesàro contour integral and the beta-Poisson law.

mod cesaro;
mod dobinski;
mod gamma;
mod hyp1f1;
mod montecarlo;
mod quadrature;

pub use cesaro::{cesaro_integrand, cesaro_pbell};
pub use dobinski::{dobinski_pbell, dobinski_pbell_poly, dobinski_pbell_poly_as_printed};
pub use gamma::lower_inc_gamma;
pub use hyp1f1::{hyp1f1, HYP1F1_TERM_CAP};
pub use montecarlo::{
    beta_poisson_sample, mc_moment_check, mgf_check, pmf_check, BetaPoisson, MgfReport, PmfReport,
    PmfRow, RngStream,
};
pub use quadrature::{gauss_legendre, GaussLegendre};

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{rational_string, to_f64, Rational};

/// Default tolerance for series-based checks.
pub const SERIES_TOL: f64 = 1e-9;
/// Default tolerance for quadrature checks.
pub const QUADRATURE_TOL: f64 = 1e-6;
/// Width of Monte Carlo acceptance bands, in standard errors.
pub const MC_SIGMAS: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("series did not converge within {terms} terms (partial sum {partial})")]
    NoConvergence { partial: f64, terms: usize },
    #[error("quadrature did not settle after {panels} panels (last two estimates {previous} and {last})")]
    QuadratureNoConvergence {
        previous: f64,
        last: f64,
        panels: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Outcome of comparing a floating point estimate with an exact value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericCheck {
    pub check: String,
    pub params: BTreeMap<String, f64>,
    #[serde(with = "rational_string")]
    pub target: Rational,
    pub estimate: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub samples_or_terms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci_half_width: Option<f64>,
    pub pass: bool,
}

impl NumericCheck {
    pub fn new(
        check: &str,
        params: &[(&str, f64)],
        target: Rational,
        estimate: f64,
        tolerance: f64,
        samples_or_terms: u64,
    ) -> Self {
        let abs_error = (estimate - to_f64(&target)).abs();
        NumericCheck {
            check: check.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            target,
            estimate,
            abs_error,
            tolerance,
            samples_or_terms,
            ci_half_width: None,
            pass: abs_error <= tolerance,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("numeric check serializes")
    }
}
