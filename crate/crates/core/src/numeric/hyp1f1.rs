use super::NumericError;

/// Maximum number of series terms before [`hyp1f1`] gives up.
pub const HYP1F1_TERM_CAP: usize = 10_000;

/// Kummer's confluent hypergeometric function
/// `1F1(a; b; z) = sum_n a^(n) / b^(n) z^n / n!` (rising factorials), summed
/// until a term drops below `tol` times the partial sum.
pub fn hyp1f1(a: f64, b: f64, z: f64, tol: f64) -> Result<f64, NumericError> {
    if b <= 0.0 && b.fract() == 0.0 {
        return Err(NumericError::InvalidArgument(format!(
            "1F1 lower parameter b = {b} is a nonpositive integer"
        )));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..HYP1F1_TERM_CAP {
        let nf = n as f64;
        term *= (a + nf) / (b + nf) * z / (nf + 1.0);
        sum += term;
        if term == 0.0 || term.abs() <= tol * sum.abs() {
            return Ok(sum);
        }
    }
    Err(NumericError::NoConvergence {
        partial: sum,
        terms: HYP1F1_TERM_CAP,
    })
}
