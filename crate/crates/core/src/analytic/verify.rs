use alloc::format;

use super::elementary::{cos_approx, exp_approx};
use super::logseries::neg_log_s_series;
use super::product::{partial_product, PartialProductResult};
use crate::arith::{check_precision, pi_constant};
use crate::{BoundedReal, Error, ExactRational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Three independent estimates of `S = Π(1 − 1/((2k−1)²n²))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: ExactRational,
    pub num_factors: u64,
    pub order: usize,
    pub precision: u32,
    /// `x = π/(2n)`.
    pub x: BoundedReal,
    pub product: PartialProductResult,
    /// `−ln S` from the coefficient series.
    pub neg_log: BoundedReal,
    /// `exp(−(−ln S))`.
    pub via_log_series: BoundedReal,
    /// `cos x`.
    pub via_cosine: BoundedReal,
}

impl IdentityReport {
    pub fn via_product(&self) -> BoundedReal {
        self.product.enclosure()
    }

    /// Pairwise overlaps: product/log series, product/cosine, log series/cosine.
    pub fn overlaps(&self) -> [(&'static str, &'static str, bool); 3] {
        let product = self.via_product();
        [
            (
                "product",
                "log_series",
                product.overlaps(&self.via_log_series),
            ),
            ("product", "cosine", product.overlaps(&self.via_cosine)),
            (
                "log_series",
                "cosine",
                self.via_log_series.overlaps(&self.via_cosine),
            ),
        ]
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.overlaps().iter().all(|&(_, _, ok)| ok))
    }
}

/// Evaluates `S` as a partial product, as `exp` of minus the coefficient
/// series, and as `cos(π/2n)`, and checks that all three intervals meet.
pub fn verify_identity(
    n: &ExactRational,
    num_factors: u64,
    order: usize,
    precision: u32,
) -> Result<IdentityReport> {
    check_precision(precision)?;
    if *n <= 1 {
        return Err(Error::Domain(format!(
            "the logarithmic route needs n > 1, got n = {n}"
        )));
    }
    let wp = precision + 16;
    let x = pi_constant(wp).mul_rational(&n.scale(2).recip()?);
    let product = partial_product(n, num_factors, precision)?;
    let neg_log = neg_log_s_series(&x, order, wp)?;
    let via_log_series = exp_approx(&-&neg_log, precision);
    let via_cosine = cos_approx(&x, precision);
    Ok(IdentityReport {
        n: n.clone(),
        num_factors,
        order,
        precision,
        x: x.with_precision(precision),
        product,
        neg_log: neg_log.with_precision(precision),
        via_log_series,
        via_cosine,
    })
}
