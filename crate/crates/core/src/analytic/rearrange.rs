use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::elementary::{cos_approx, ln_approx};
use super::lambda::lambda_direct;
use super::logseries::{log_tail, odd_power_sum_cap};
use super::product::{factor_log_tail, split_positive};
use crate::arith::{check_precision, pi_constant, ERR_BITS};
use crate::{BoundedReal, Dyadic, Error, ExactRational, Result};

/// `−ln S` summed in two orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RearrangementReport {
    pub n: ExactRational,
    pub num_rows: u64,
    pub series_order: usize,
    /// Rows `k ≤ num_rows`, each `−ln(1 − a_k) = Σ_j a_k^j/j` summed to
    /// working precision.
    pub row_partial: BoundedReal,
    /// Bound on the rows `k > num_rows`.
    pub row_tail: Dyadic,
    /// Columns `m ≤ series_order`, each `λ̂(2m)/(m·n^(2m))` with the
    /// odd power sum cut after `num_rows` terms and its own tail included.
    pub column_partial: BoundedReal,
    /// Bound on the columns `m > series_order`.
    pub column_tail: Dyadic,
    /// `−ln cos(π/2n)` computed directly.
    pub reference: Option<BoundedReal>,
}

/// Turns a partial sum of positive terms and a bound on the rest into an
/// interval.
fn one_sided(partial: &BoundedReal, tail: &Dyadic) -> BoundedReal {
    BoundedReal::from_endpoints(
        &partial.lower(),
        &(&partial.upper() + tail),
        partial.precision(),
    )
}

impl RearrangementReport {
    pub fn row_order(&self) -> BoundedReal {
        one_sided(&self.row_partial, &self.row_tail)
    }

    pub fn column_order(&self) -> BoundedReal {
        one_sided(&self.column_partial, &self.column_tail)
    }

    /// Whether the row-order and column-order intervals intersect.
    pub fn overlap(&self) -> bool {
        self.row_order().overlaps(&self.column_order())
    }

    /// Whether both intervals also meet the direct `−ln cos(π/2n)`.
    pub fn reference_consistent(&self) -> Option<bool> {
        self.reference
            .as_ref()
            .map(|r| r.overlaps(&self.row_order()) && r.overlaps(&self.column_order()))
    }
}

/// `Σ_{j≥1} a^j / j` for `a = num/den < 1` in fixed point with `frac_bits`
/// fractional bits. Returns the sum and a bound on its error in units.
///
/// `pow_j` is low by less than `j` units, so each `floor(pow_j / j)` is low by
/// less than 2. The loop stops when `pow_{J+1} = 0`, i.e. `2^P·a^(J+1) < J+1`,
/// leaving a remainder below `1/(1−a)` units.
fn neg_log_one_minus(num: &BigUint, den: &BigUint, frac_bits: u64) -> (BigUint, BigUint) {
    let mut pow = (BigUint::one() << frac_bits) * num / den;
    let mut sum = BigUint::zero();
    let mut j: u64 = 1;
    while !pow.is_zero() {
        sum += &pow / j;
        pow = pow * num / den;
        j += 1;
    }
    let terms = j - 1;
    let remainder_units = den.div_ceil(&(den - num));
    (sum, remainder_units + BigUint::from(2 * terms))
}

/// Sums the double series for `−ln S` by rows and by columns.
pub fn rearrangement_check(
    n: &ExactRational,
    num_rows: u64,
    series_order: usize,
    precision: u32,
) -> Result<RearrangementReport> {
    check_precision(precision)?;
    if *n <= 1 {
        return Err(Error::Domain(format!(
            "the logarithmic series needs n > 1, got n = {n}"
        )));
    }
    if num_rows == 0 || series_order == 0 {
        return Err(Error::InvalidArgument(
            "num_rows and series_order must be at least 1".into(),
        ));
    }
    let wp = precision + 16;
    let (p, q) = split_positive(n);
    let p2 = &p * &p;
    let q2 = &q * &q;

    // Row order.
    let frac_bits = u64::from(wp) + 2 * (64 - u64::from(num_rows.leading_zeros())) + 8;
    let mut row_sum = BigUint::zero();
    let mut row_units = BigUint::zero();
    for k in 1..=num_rows {
        let odd = 2 * k - 1;
        let den = &p2 * (odd * odd);
        let (s, u) = neg_log_one_minus(&q2, &den, frac_bits);
        row_sum += s;
        row_units += u;
    }
    let scale = -(frac_bits as i64);
    let row_partial = BoundedReal::new(
        Dyadic::new(BigInt::from(row_sum), scale),
        Dyadic::new(BigInt::from(row_units), scale),
        wp,
    );
    let row_tail = factor_log_tail(n, num_rows);

    // Column order.
    let inv_n2 = n.recip()?.pow(2);
    let mut weight = ExactRational::one();
    let mut column_partial = BoundedReal::zero(wp);
    for m in 1..=series_order {
        weight = &weight * &inv_n2;
        let lambda = lambda_direct(m, num_rows, wp)?.bracket();
        let w = weight.checked_div(&ExactRational::from(m as i64))?;
        column_partial = &column_partial + &lambda.mul_rational(&w);
    }
    let r = Dyadic::from_rational_ceil(&inv_n2, ERR_BITS);
    let column_tail = log_tail(&r, series_order, &odd_power_sum_cap());

    let x = pi_constant(wp + 8).mul_rational(&n.scale(2).recip()?);
    let reference = ln_approx(&cos_approx(&x, wp), wp).ok().map(|l| -l);

    Ok(RearrangementReport {
        n: n.clone(),
        num_rows,
        series_order,
        row_partial: row_partial.with_precision(precision),
        row_tail,
        column_partial: column_partial.with_precision(precision),
        column_tail,
        reference: reference.map(|r| r.with_precision(precision)),
    })
}
