//! Decimal strings whose length follows the error bound.

use cosprod_core::{BoundedReal, Dyadic};

const GUARD_DIGITS: u32 = 2;

// log10(2) as a fraction
const LOG10_2_NUM: i64 = 30_103;
const LOG10_2_DEN: i64 = 100_000;

fn digits_for_bits(bits: i64) -> u32 {
    (bits * LOG10_2_NUM).div_euclid(LOG10_2_DEN).max(0) as u32
}

/// Number of fractional decimal digits known to be correct when the error is
/// below `err`.
pub fn certain_digits(err: &Dyadic) -> u32 {
    match err.magnitude_exp() {
        // err < 2^(e+1) ≤ 10^(−d) for d = floor(−(e+1)·log10 2)
        Some(e) => digits_for_bits(-(e + 1)),
        None => u32::MAX,
    }
}

/// Fractional digits for an exact dyadic: all of them, unless there are more
/// than the working precision carries.
fn exact_digits(value: &Dyadic, precision: u32) -> u32 {
    let needed = (-value.exponent()).max(0) as u32;
    needed.min(digits_for_bits(i64::from(precision)) + GUARD_DIGITS)
}

/// Centre of `x` with the certain digits plus two guard digits.
pub fn decimal(x: &BoundedReal) -> String {
    if x.value().is_zero() && x.is_exact() {
        return "0".into();
    }
    let digits = if x.is_exact() {
        exact_digits(x.value(), x.precision())
    } else {
        certain_digits(x.abs_error()) + GUARD_DIGITS
    };
    x.value().to_decimal(digits)
}

/// An upper bound, two significant digits, rounded up.
pub fn bound(b: &Dyadic) -> String {
    b.to_sci_upper(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cosprod_core::ExactRational;

    #[test]
    fn digits_follow_the_bound() {
        assert_eq!(certain_digits(&Dyadic::pow2(-20)), 5);
        assert_eq!(certain_digits(&Dyadic::pow2(-21)), 6);
        assert_eq!(certain_digits(&Dyadic::one()), 0);
        assert_eq!(certain_digits(&Dyadic::from_int(1000)), 0);
        let x = BoundedReal::new(
            Dyadic::from_f64(0.866_025_403_784_438_6).unwrap(),
            Dyadic::pow2(-30),
            64,
        );
        assert_eq!(decimal(&x), "0.8660254038");
    }

    #[test]
    fn exact_values() {
        assert_eq!(decimal(&BoundedReal::zero(64)), "0");
        assert_eq!(
            decimal(&BoundedReal::from_rational(&ExactRational::ratio(3, 8), 64)),
            "0.375"
        );
        assert_eq!(decimal(&BoundedReal::from_int(-12, 64)), "-12");
        let tiny = BoundedReal::exact(Dyadic::pow2(-200), 32);
        assert_eq!(decimal(&tiny).len(), "0.".len() + 11);
    }

    #[test]
    fn bounds() {
        assert_eq!(bound(&Dyadic::zero()), "0");
        assert_eq!(bound(&Dyadic::pow2(-10)), "9.8e-4");
    }
}
