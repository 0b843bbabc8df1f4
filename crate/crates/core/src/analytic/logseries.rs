use alloc::format;

use crate::arith::{check_precision, pi_constant, ERR_BITS};
use crate::recurrence::euler_coefficients;
use crate::{BoundedReal, Dyadic, Error, ExactRational, Result};

/// Upper bound for every `c_m·(π/2)^(2m)`: these are the odd power sums, all
/// at most the first one, π²/8 ≈ 1.2337.
pub(crate) fn odd_power_sum_cap() -> ExactRational {
    ExactRational::ratio(5, 4)
}

/// Bound on `Σ_{m>M} cap·r^m / m` for `0 ≤ r < 1`: `cap·r^(M+1) / ((M+1)(1−r))`.
pub(crate) fn log_tail(ratio_upper: &Dyadic, order: usize, cap: &ExactRational) -> Dyadic {
    let mut power = Dyadic::one();
    for _ in 0..=order {
        power = (&power * ratio_upper).ceil_to_bits(ERR_BITS);
    }
    let one_minus = &Dyadic::one() - ratio_upper;
    let numer = (&power * &Dyadic::from_rational_ceil(cap, ERR_BITS)).ceil_to_bits(ERR_BITS);
    let denom = &one_minus * &Dyadic::from_int(order as u64 + 1);
    numer.div_ceil(&denom, ERR_BITS)
}

/// `−ln S = Σ_{m≥1} c_m·x^(2m)/m`, summed through `m = order`, with
/// `x = π/(2n)`.
///
/// The omitted terms are bounded using `c_m·x^(2m) ≤ (5/4)·r^m` with
/// `r = (2x/π)²`, which needs `|x| < π/2`.
pub fn neg_log_s_series(x: &BoundedReal, order: usize, precision: u32) -> Result<BoundedReal> {
    check_precision(precision)?;
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let wp = precision + 16 + (usize::BITS - order.leading_zeros());
    let half_pi = pi_constant(wp).mul_pow2(-1);
    let x_upper = x.mag_upper();
    if x_upper >= half_pi.lower() {
        return Err(Error::Domain(format!(
            "series needs |x| < π/2, got |x| up to {}",
            x_upper.to_decimal(12)
        )));
    }
    if x.value().is_zero() && x.is_exact() {
        return Ok(BoundedReal::zero(precision));
    }

    let coeffs = euler_coefficients(order)?;
    let x2 = x.square();
    let mut power = BoundedReal::one(wp);
    let mut sum = BoundedReal::zero(wp);
    for (m, c) in coeffs.iter() {
        power = &power * &x2;
        let weight = c.checked_div(&ExactRational::from(m as i64))?;
        sum = &sum + &power.mul_rational(&weight);
    }

    let ratio = x_upper.div_ceil(&half_pi.lower(), ERR_BITS);
    let r = (&ratio * &ratio).ceil_to_bits(ERR_BITS);
    if r >= Dyadic::one() {
        return Err(Error::Domain(
            "|x| too close to π/2 to bound the series tail".into(),
        ));
    }
    let tail = log_tail(&r, order, &odd_power_sum_cap());
    Ok(sum.widen(&tail).with_precision(precision))
}
