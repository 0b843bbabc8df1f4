//! One function per subcommand. Each returns a [`Report`]: the record to print
//! and how the run ended.

use std::fmt;

use cosprod_core::analytic::{
    cos_approx, lambda_direct, partial_product, rearrangement_check, verify_identity, Verdict,
};
use cosprod_core::arith::pi_constant;
use cosprod_core::recurrence::{euler_coefficients, lambda_closed_form};
use cosprod_core::{BoundedReal, Dyadic, Error, ExactRational};

use crate::number::{bound, decimal};
use crate::record::{OutputRecord, Row};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "domain error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(m) => CliError::Domain(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Fail,
    /// Part of the report could not be computed; the record says which part.
    Domain(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub record: OutputRecord,
    pub outcome: Outcome,
}

impl Report {
    fn judged(mut record: OutputRecord, verdict: Verdict) -> Self {
        record.verdict = Some(verdict.as_str().into());
        let outcome = if verdict.is_pass() {
            Outcome::Success
        } else {
            Outcome::Fail
        };
        Self { record, outcome }
    }

    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Success => crate::exit::SUCCESS,
            Outcome::Fail => crate::exit::FAIL,
            Outcome::Domain(_) => crate::exit::DOMAIN,
        }
    }
}

fn row<const N: usize>(cells: [(&str, String); N]) -> Row {
    cells.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn pi_over(divisor: &ExactRational, precision: u32) -> Result<BoundedReal, CliError> {
    let inv = divisor
        .recip()
        .map_err(|_| CliError::Domain("n must be nonzero".into()))?;
    Ok(pi_constant(precision + 16).mul_rational(&inv))
}

fn require(cond: bool, msg: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Usage(msg.into()))
    }
}

/// Rows `m, c_m, 2c_m, c_m·(π/2)^(2m)`.
pub fn coeffs(m_max: usize, precision: u32) -> Result<Report, CliError> {
    require(m_max >= 1, "--m-max must be at least 1")?;
    let table = euler_coefficients(m_max)?;
    let half_pi = pi_over(&ExactRational::from_integer(2), precision)?;
    let rho2 = half_pi.square();
    let mut power = BoundedReal::one(precision + 16);
    let mut record = OutputRecord::new("coeffs");
    record.param("m_max", m_max).param("precision", precision);
    for (m, c) in table.iter() {
        power = &power * &rho2;
        let lambda = power.mul_rational(c).with_precision(precision);
        record.rows.push(row([
            ("m", m.to_string()),
            ("c_m", c.to_string()),
            ("tangent_coeff", c.scale(2).to_string()),
            ("lambda", decimal(&lambda)),
            ("lambda_bound", bound(lambda.abs_error())),
        ]));
    }
    Ok(Report {
        record,
        outcome: Outcome::Success,
    })
}

/// Truncated odd power sums against `q_m·π^(2m)`.
pub fn lambda(m_max: usize, num_terms: u64, precision: u32) -> Result<Report, CliError> {
    require(m_max >= 1, "--m-max must be at least 1")?;
    require(num_terms >= 1, "--num-terms must be at least 1")?;
    let pi2 = pi_constant(precision + 16).square();
    let mut pi_power = BoundedReal::one(precision + 16);
    let mut record = OutputRecord::new("lambda");
    record
        .param("m_max", m_max)
        .param("num_terms", num_terms)
        .param("precision", precision);
    let mut all = true;
    for m in 1..=m_max {
        pi_power = &pi_power * &pi2;
        let q = lambda_closed_form(m)?;
        let closed = pi_power.mul_rational(&q).with_precision(precision);
        let direct = lambda_direct(m, num_terms, precision)?.bracket();
        let ok = direct.overlaps(&closed);
        all &= ok;
        record.rows.push(row([
            ("m", m.to_string()),
            ("direct", decimal(&direct)),
            ("direct_bound", bound(direct.abs_error())),
            ("q_m", q.to_string()),
            ("closed_form", decimal(&closed)),
            ("closed_form_bound", bound(closed.abs_error())),
            ("overlap", Verdict::from_bool(ok).to_string()),
        ]));
    }
    Ok(Report::judged(record, Verdict::from_bool(all)))
}

/// `N = 1, 10, 100, …` up to `num_factors`, always ending at `num_factors`.
pub fn checkpoints(num_factors: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(1u64), |&n| n.checked_mul(10))
        .take_while(|&n| n < num_factors)
        .collect();
    out.push(num_factors);
    out
}

/// Upper bound on `|a − b|` for any points of the two intervals.
fn gap_upper(a: &BoundedReal, b: &BoundedReal) -> Dyadic {
    let hi = std::cmp::max(&a.upper() - &b.lower(), &b.upper() - &a.lower());
    std::cmp::max(hi, Dyadic::zero())
}

/// Convergence trace of the partial products towards `cos(π/2n)`.
pub fn product(n: &ExactRational, num_factors: u64, precision: u32) -> Result<Report, CliError> {
    require(num_factors >= 1, "--num-factors must be at least 1")?;
    let cosine = cos_approx(&pi_over(&n.scale(2), precision)?, precision);
    let mut record = OutputRecord::new("product");
    record
        .param("n", n)
        .param("num_factors", num_factors)
        .param("precision", precision)
        .param("cosine", decimal(&cosine))
        .param("cosine_bound", bound(cosine.abs_error()));
    let mut all = true;
    for count in checkpoints(num_factors) {
        let p = partial_product(n, count, precision)?;
        let enc = p.enclosure();
        let ok = enc.overlaps(&cosine);
        all &= ok;
        record.rows.push(row([
            ("N", count.to_string()),
            ("product", decimal(&p.value)),
            ("product_bound", bound(p.value.abs_error())),
            (
                "log_tail_bound",
                p.log_tail_bound.as_ref().map_or("0".into(), bound),
            ),
            ("gap_to_cosine_bound", bound(&gap_upper(&enc, &cosine))),
            ("overlap", Verdict::from_bool(ok).to_string()),
        ]));
    }
    Ok(Report::judged(record, Verdict::from_bool(all)))
}

fn method_row(method: &str, est: &BoundedReal, status: &str) -> Row {
    row([
        ("method", method.to_string()),
        ("value", decimal(est)),
        ("bound", bound(est.abs_error())),
        ("status", status.to_string()),
    ])
}

fn failed_row(method: &str, msg: &str) -> Row {
    row([
        ("method", method.to_string()),
        ("value", String::new()),
        ("bound", String::new()),
        ("status", format!("domain error: {msg}")),
    ])
}

/// The product, the exponentiated coefficient series and the cosine side by
/// side.
pub fn verify(
    n: &ExactRational,
    num_factors: u64,
    order: usize,
    precision: u32,
) -> Result<Report, CliError> {
    require(num_factors >= 1, "--num-factors must be at least 1")?;
    require(order >= 1, "--order must be at least 1")?;
    let mut record = OutputRecord::new("verify");
    record
        .param("n", n)
        .param("num_factors", num_factors)
        .param("order", order)
        .param("precision", precision);

    let report = match verify_identity(n, num_factors, order, precision) {
        Ok(r) => r,
        Err(Error::Domain(msg)) => {
            // Report whatever can still be computed.
            let product = partial_product(n, num_factors, precision);
            record.rows.push(match &product {
                Ok(p) => method_row("product", &p.enclosure(), "ok"),
                Err(e) => failed_row("product", &e.to_string()),
            });
            record.rows.push(failed_row("log_series", &msg));
            let cosine = cos_approx(&pi_over(&n.scale(2), precision)?, precision);
            record.rows.push(method_row("cosine", &cosine, "ok"));
            return Ok(Report {
                record,
                outcome: Outcome::Domain(msg),
            });
        }
        Err(e) => return Err(e.into()),
    };

    let pairs = report.overlaps();
    let status_of = |name: &str| {
        let ok = pairs
            .iter()
            .filter(|(a, b, _)| *a == name || *b == name)
            .all(|&(_, _, ok)| ok);
        Verdict::from_bool(ok).as_str()
    };
    record.rows.push(method_row(
        "product",
        &report.via_product(),
        status_of("product"),
    ));
    record.rows.push(method_row(
        "log_series",
        &report.via_log_series,
        status_of("log_series"),
    ));
    record.rows.push(method_row(
        "cosine",
        &report.via_cosine,
        status_of("cosine"),
    ));
    Ok(Report::judged(record, report.verdict()))
}

/// Row-order and column-order sums of the double series for `−ln S`.
pub fn rearrange(
    n: &ExactRational,
    num_rows: u64,
    order: usize,
    precision: u32,
) -> Result<Report, CliError> {
    let r = rearrangement_check(n, num_rows, order, precision)?;
    let mut record = OutputRecord::new("rearrange");
    record
        .param("n", n)
        .param("num_rows", num_rows)
        .param("order", order)
        .param("precision", precision);
    let rows = r.row_order();
    let columns = r.column_order();
    record.rows.push(row([
        ("method", "rows".to_string()),
        ("value", decimal(&rows)),
        ("bound", bound(rows.abs_error())),
        ("tail_bound", bound(&r.row_tail)),
    ]));
    record.rows.push(row([
        ("method", "columns".to_string()),
        ("value", decimal(&columns)),
        ("bound", bound(columns.abs_error())),
        ("tail_bound", bound(&r.column_tail)),
    ]));
    if let Some(reference) = &r.reference {
        record.rows.push(row([
            ("method", "neg_log_cosine".to_string()),
            ("value", decimal(reference)),
            ("bound", bound(reference.abs_error())),
            ("tail_bound", "0".to_string()),
        ]));
    }
    let ok = r.overlap() && r.reference_consistent().unwrap_or(true);
    Ok(Report::judged(record, Verdict::from_bool(ok)))
}
