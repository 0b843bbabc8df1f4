//! cos, exp and ln of a [`BoundedReal`] by Maclaurin/atanh series with
//! explicit remainder bounds.
//!
//! Each function first evaluates at the (exact) centre of the input interval
//! and then accounts for the input radius: through the Lipschitz constant for
//! `cos`, through monotonicity for `exp` and `ln`.

use alloc::format;

use num_bigint::BigInt;

use crate::arith::{pi_constant, MIN_PRECISION};
use crate::{BoundedReal, Dyadic, Error, Result};

const GUARD_BITS: u32 = 24;

fn exact(d: &Dyadic, precision: u32) -> BoundedReal {
    BoundedReal::exact(d.clone(), precision)
}

fn small_int(k: u64, precision: u32) -> BoundedReal {
    BoundedReal::exact(Dyadic::from_int(k), precision)
}

/// cos at an exact point with `|c| ≤ 4`, to `wp` working bits.
fn cos_reduced(c: &Dyadic, wp: u32) -> BoundedReal {
    let x2 = BoundedReal::new(c * c, Dyadic::zero(), wp);
    let x2_upper = x2.upper();
    let mut term = BoundedReal::one(wp);
    let mut sum = BoundedReal::one(wp);
    let target = Dyadic::pow2(-(wp as i64));
    let mut k: u64 = 1;
    loop {
        let denom = small_int((2 * k - 1) * (2 * k), wp);
        term = (&term * &x2)
            .checked_div(&denom)
            .expect("nonzero integer divisor");
        sum = if k % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
        // Once (2k+1)(2k+2) > x², the remaining terms shrink monotonically and
        // alternate, so the remainder is below the next term, itself below this one.
        let next_ratio_small = Dyadic::from_int((2 * k + 1) * (2 * k + 2)) > x2_upper;
        if next_ratio_small && term.mag_upper() < target {
            return sum.widen(&term.mag_upper());
        }
        k += 1;
    }
}

/// `cos x`, with the alternating-series remainder and the input radius folded
/// into the error bound. Arguments beyond `|x| > 4` are first shifted by a
/// multiple of `2π`.
pub fn cos_approx(x: &BoundedReal, precision: u32) -> BoundedReal {
    let precision = precision.max(MIN_PRECISION);
    let wp = precision + GUARD_BITS;
    let centre = x.value();
    if centre.is_zero() && x.is_exact() {
        return BoundedReal::one(precision);
    }
    let reduced = if centre.abs() > Dyadic::from_int(4) {
        // Any integer works; the nearest one keeps the reduced argument small.
        let t = centre.to_f64() / core::f64::consts::TAU;
        let turns = BigInt::from(if t >= 0.0 { t + 0.5 } else { t - 0.5 } as i128);
        let extra = turns.bits() as u32 + 4;
        let two_pi = pi_constant(wp + extra).mul_pow2(1);
        let shift = &two_pi * &BoundedReal::exact(Dyadic::new(turns, 0), wp + extra);
        &exact(centre, wp + extra) - &shift
    } else {
        exact(centre, wp)
    };
    let at_centre = cos_reduced(reduced.value(), wp);
    // |cos′| ≤ 1
    at_centre
        .widen(reduced.abs_error())
        .widen(x.abs_error())
        .with_precision(precision)
}

/// `exp(c)` for exact `c`.
fn exp_at(c: &Dyadic, precision: u32) -> BoundedReal {
    if c.is_zero() {
        return BoundedReal::one(precision);
    }
    let a = c.abs();
    // Halve until a/2^r < 1/2, then square r times.
    let halvings = (a.magnitude_exp().expect("nonzero") + 2).max(0);
    let wp = precision + GUARD_BITS + halvings as u32;
    let s = exact(&a.mul_pow2(-halvings), wp);
    let target = Dyadic::pow2(-(wp as i64));
    let mut term = BoundedReal::one(wp);
    let mut sum = BoundedReal::one(wp);
    let mut k: u64 = 1;
    loop {
        term = (&term * &s)
            .checked_div(&small_int(k, wp))
            .expect("nonzero integer divisor");
        sum = &sum + &term;
        if term.mag_upper() < target {
            // Remaining terms shrink by s/(k+1) < 1/2 each, so they sum to at
            // most this term.
            sum = sum.widen(&term.mag_upper());
            break;
        }
        k += 1;
    }
    for _ in 0..halvings {
        sum = sum.square();
    }
    let result = if c.is_negative() {
        BoundedReal::one(wp)
            .checked_div(&sum)
            .expect("exp is positive")
    } else {
        sum
    };
    result.with_precision(precision)
}

/// `exp x`. For an inexact input the result encloses `[exp(lo), exp(hi)]`.
pub fn exp_approx(x: &BoundedReal, precision: u32) -> BoundedReal {
    let precision = precision.max(MIN_PRECISION);
    if x.is_exact() {
        return exp_at(x.value(), precision);
    }
    let lo = exp_at(&x.lower(), precision + 8).lower();
    let hi = exp_at(&x.upper(), precision + 8).upper();
    BoundedReal::from_endpoints(&lo, &hi, precision)
}

/// `atanh z = z + z³/3 + z⁵/5 + ⋯` for `|z| ≤ 1/3`.
fn atanh_small(z: &BoundedReal, wp: u32) -> BoundedReal {
    let z2 = z.square();
    let mut power = z.clone();
    let mut sum = z.clone();
    let target = Dyadic::pow2(-(wp as i64));
    let mut j: u64 = 1;
    loop {
        power = &power * &z2;
        let term = power
            .checked_div(&small_int(2 * j + 1, wp))
            .expect("odd divisor");
        sum = &sum + &term;
        if power.mag_upper() < target {
            // The omitted tail is below power·z²/(1 − z²) ≤ power/8.
            return sum.widen(&power.mag_upper());
        }
        j += 1;
    }
}

/// `ln c` for exact `c > 0`.
fn ln_at(c: &Dyadic, precision: u32) -> BoundedReal {
    let wp = precision + GUARD_BITS;
    let e = c.magnitude_exp().expect("positive argument");
    let mant = exact(&c.mul_pow2(-e), wp); // in [1, 2)
    let one = BoundedReal::one(wp);
    let z = (&mant - &one)
        .checked_div(&(&mant + &one))
        .expect("positive denominator");
    let mut result = atanh_small(&z, wp).mul_pow2(1);
    if e != 0 {
        let third = BoundedReal::one(wp)
            .checked_div(&small_int(3, wp))
            .expect("three");
        let ln2 = atanh_small(&third, wp).mul_pow2(1);
        result = &result + &(&ln2 * &BoundedReal::from_int(e, wp));
    }
    result.with_precision(precision)
}

/// `ln x` for an interval lying strictly right of zero.
pub fn ln_approx(x: &BoundedReal, precision: u32) -> Result<BoundedReal> {
    let precision = precision.max(MIN_PRECISION);
    let lo = x.lower();
    if !lo.is_positive() {
        return Err(Error::Domain(format!(
            "logarithm needs a positive argument, interval reaches down to {}",
            lo.to_sci_upper(3)
        )));
    }
    if x.is_exact() {
        return Ok(ln_at(x.value(), precision));
    }
    let lo = ln_at(&lo, precision + 8).lower();
    let hi = ln_at(&x.upper(), precision + 8).upper();
    Ok(BoundedReal::from_endpoints(&lo, &hi, precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactRational;

    fn q(p: i64, d: i64) -> ExactRational {
        ExactRational::ratio(p, d)
    }

    fn real(p: i64, d: i64, bits: u32) -> BoundedReal {
        BoundedReal::from_rational(&q(p, d), bits)
    }

    /// Exact enclosure check for `y² ∈ target` style oracles.
    fn square_contains(y: &BoundedReal, r: &ExactRational) -> bool {
        let sq = y.square();
        sq.contains(r)
    }

    #[test]
    fn cos_examples() {
        assert_eq!(cos_approx(&BoundedReal::zero(64), 64), BoundedReal::one(64));

        let half_pi = pi_constant(128).mul_pow2(-1);
        let c = cos_approx(&half_pi, 128);
        assert!(c.contains(&ExactRational::zero()));
        assert!(*c.abs_error() < Dyadic::pow2(-120));

        let sixth = pi_constant(128)
            .checked_div(&BoundedReal::from_int(6, 128))
            .unwrap();
        let c = cos_approx(&sixth, 128);
        assert!(square_contains(&c, &q(3, 4)));
        assert_eq!(c.value().to_decimal(30), "0.866025403784438646763723170753");
    }

    #[test]
    fn cos_against_f64_on_a_grid() {
        for i in -40..=40 {
            let x = real(i, 4, 96);
            let c = cos_approx(&x, 96);
            let reference = (i as f64 / 4.0).cos();
            assert!((c.to_f64() - reference).abs() < 1e-15, "x = {i}/4");
        }
    }

    #[test]
    fn cos_large_argument_reduction() {
        // cos(2π·1000 + 1/2) = cos(1/2)
        let x = &pi_constant(200).mul_pow2(1) * &BoundedReal::from_int(1000, 200);
        let x = &x + &real(1, 2, 200);
        let c = cos_approx(&x, 100);
        let direct = cos_approx(&real(1, 2, 100), 100);
        assert!(c.overlaps(&direct));
        assert!(*c.abs_error() < Dyadic::pow2(-80));
    }

    #[test]
    fn exp_and_ln_are_inverse() {
        for (p, d) in [(1, 1), (-1, 3), (5, 2), (-7, 1), (1, 1024), (40, 1)] {
            let x = real(p, d, 128);
            let y = exp_approx(&x, 128);
            let back = ln_approx(&y, 128).unwrap();
            assert!(back.contains(&q(p, d)), "{p}/{d}: {back:?}");
            assert!(*back.abs_error() < Dyadic::pow2(-100));
        }
    }

    #[test]
    fn exp_against_f64() {
        for i in -20..=20 {
            let y = exp_approx(&real(i, 3, 80), 80);
            let reference = (i as f64 / 3.0).exp();
            assert!((y.to_f64() / reference - 1.0).abs() < 1e-14, "i = {i}");
        }
        assert_eq!(exp_approx(&BoundedReal::zero(64), 64), BoundedReal::one(64));
    }

    #[test]
    fn ln_domain() {
        assert!(ln_approx(&BoundedReal::zero(64), 64).is_err());
        assert!(ln_approx(&real(-1, 2, 64), 64).is_err());
        let straddling = BoundedReal::new(Dyadic::pow2(-4), Dyadic::pow2(-3), 64);
        assert!(ln_approx(&straddling, 64).is_err());
        assert_eq!(
            ln_approx(&BoundedReal::one(64), 64).unwrap().value(),
            &Dyadic::zero()
        );
    }

    #[test]
    fn ln_of_four_thirds() {
        // ln(4/3) = 2·atanh(1/7), summed exactly with a geometric tail bound.
        let mut sum = ExactRational::zero();
        let mut power = q(1, 7);
        for j in 0..60 {
            sum = sum + &power * &q(1, 2 * j + 1);
            power = &power * &q(1, 49);
        }
        let truth_lo = sum.scale(2);
        let tail = (&power * &q(49, 48)).scale(2);
        let l = ln_approx(&real(4, 3, 160), 160).unwrap();
        assert!(l.lower().to_rational() <= &truth_lo + &tail);
        assert!(truth_lo <= l.upper().to_rational());
    }

    #[test]
    fn inexact_inputs_are_enclosed() {
        let x = BoundedReal::new(Dyadic::from_int(1), Dyadic::pow2(-20), 96);
        let lo = exp_approx(&BoundedReal::exact(x.lower(), 96), 96);
        let hi = exp_approx(&BoundedReal::exact(x.upper(), 96), 96);
        let e = exp_approx(&x, 96);
        assert!(e.encloses(&lo) && e.encloses(&hi));
        let c = cos_approx(&x, 96);
        let c_lo = cos_approx(&BoundedReal::exact(x.lower(), 96), 96);
        assert!(c.encloses(&c_lo));
    }
}
