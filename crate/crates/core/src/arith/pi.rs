//! π by Machin's formula, π = 16·atan(1/5) − 4·atan(1/239), in fixed point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoundedReal, Dyadic};

/// Fixed-point `atan(1/k)·2^frac_bits`, truncated, with the number of
/// last-place units the result may be off by.
///
/// Each term is `floor(2^frac_bits / (k^(2j+1)·(2j+1)))`; nested floor
/// divisions are exact, so every term is off by less than one unit and the
/// series stops once `2^frac_bits / k^(2j+1) < 1`, which also bounds the
/// alternating remainder by one unit.
fn atan_inv(k: u32, frac_bits: u64) -> (BigInt, u64) {
    let k2 = BigInt::from(k) * k;
    let mut power = (BigInt::one() << frac_bits) / k;
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    (sum, j + 1)
}

/// π with `|value − π| ≤ abs_error ≤ 2^(4−precision)`.
pub fn pi_constant(precision: u32) -> BoundedReal {
    let precision = precision.max(super::MIN_PRECISION);
    // The unit counts grow like precision/2; these guard bits absorb them.
    let guard = 24 + u64::from(32 - precision.leading_zeros());
    let frac_bits = u64::from(precision) + guard;
    let (a5, u5) = atan_inv(5, frac_bits);
    let (a239, u239) = atan_inv(239, frac_bits);
    let fixed = a5 * 16u32 - a239 * 4u32;
    let units = 16 * u5 + 4 * u239;
    let scale = -(frac_bits as i64);
    BoundedReal::new(
        Dyadic::new(fixed, scale),
        Dyadic::new(BigInt::from(units), scale),
        precision,
    )
}
