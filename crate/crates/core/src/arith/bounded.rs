use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Dyadic, ExactRational};
use crate::{Error, Result};

/// Significant bits kept in an error bound; bounds are always rounded up.
pub(crate) const ERR_BITS: u32 = 32;

pub const MIN_PRECISION: u32 = 8;

/// A dyadic value together with a rigorous bound on its absolute error.
///
/// The represented real `x` satisfies `|x − value| ≤ abs_error`. Every
/// operation rounds its result to `precision` significant bits and folds both
/// the rounding error and the propagated input errors into the new bound.
#[derive(Clone, PartialEq, Eq)]
pub struct BoundedReal {
    value: Dyadic,
    abs_error: Dyadic,
    precision: u32,
}

fn up(d: &Dyadic) -> Dyadic {
    d.ceil_to_bits(ERR_BITS)
}

impl BoundedReal {
    /// `value ± abs_error`, with `value` rounded to `precision` bits. Panics if
    /// the bound is negative.
    pub fn new(value: Dyadic, abs_error: Dyadic, precision: u32) -> Self {
        assert!(!abs_error.is_negative(), "negative error bound");
        let (value, lost) = value.floor_to_bits(precision);
        Self {
            value,
            abs_error: up(&(abs_error + lost)),
            precision,
        }
    }

    /// An exactly known dyadic. The value is kept as is even if it is wider
    /// than `precision`.
    pub fn exact(value: Dyadic, precision: u32) -> Self {
        Self {
            value,
            abs_error: Dyadic::zero(),
            precision,
        }
    }

    pub fn zero(precision: u32) -> Self {
        Self::exact(Dyadic::zero(), precision)
    }

    pub fn one(precision: u32) -> Self {
        Self::exact(Dyadic::one(), precision)
    }

    pub fn from_int(n: i64, precision: u32) -> Self {
        Self::exact(Dyadic::from_int(n), precision)
    }

    /// Nearest-below dyadic with `precision` bits. Exact when the denominator
    /// is a power of two; otherwise `abs_error ≤ 2^(1−precision)·|r|`.
    pub fn from_rational(r: &ExactRational, precision: u32) -> Self {
        let (value, exact) = Dyadic::from_rational_floor(r, precision);
        let abs_error = if exact {
            Dyadic::zero()
        } else {
            Dyadic::pow2(value.exponent())
        };
        // The floor quotient carries `precision` or `precision + 1` bits.
        Self::new(value, abs_error, precision)
    }

    pub fn value(&self) -> &Dyadic {
        &self.value
    }

    pub fn abs_error(&self) -> &Dyadic {
        &self.abs_error
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.abs_error.is_zero()
    }

    pub fn lower(&self) -> Dyadic {
        &self.value - &self.abs_error
    }

    pub fn upper(&self) -> Dyadic {
        &self.value + &self.abs_error
    }

    /// Upper bound of `|x|`.
    pub fn mag_upper(&self) -> Dyadic {
        &self.value.abs() + &self.abs_error
    }

    /// Lower bound of `|x|`, zero when the interval straddles zero.
    pub fn mag_lower(&self) -> Dyadic {
        let m = &self.value.abs() - &self.abs_error;
        if m.is_negative() {
            Dyadic::zero()
        } else {
            m
        }
    }

    /// Adds `extra` to the error bound.
    pub fn widen(&self, extra: &Dyadic) -> Self {
        assert!(!extra.is_negative(), "negative widening");
        Self {
            value: self.value.clone(),
            abs_error: up(&(&self.abs_error + extra)),
            precision: self.precision,
        }
    }

    /// Re-rounds to a new precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::new(self.value.clone(), self.abs_error.clone(), precision)
    }

    /// Whether the interval contains the rational `r`.
    pub fn contains(&self, r: &ExactRational) -> bool {
        let gap = (&self.value.to_rational() - r).abs();
        gap <= self.abs_error.to_rational()
    }

    pub fn contains_dyadic(&self, d: &Dyadic) -> bool {
        (&self.value - d).abs() <= self.abs_error
    }

    /// Whether the two intervals intersect.
    pub fn overlaps(&self, other: &Self) -> bool {
        (&self.value - &other.value).abs() <= &self.abs_error + &other.abs_error
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &Self) -> bool {
        self.lower() <= other.lower() && other.upper() <= self.upper()
    }

    /// Interval `[lo, hi]` as a midpoint and radius.
    pub fn from_endpoints(lo: &Dyadic, hi: &Dyadic, precision: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        let mid = (lo + hi).mul_pow2(-1);
        let rad = (hi - lo).mul_pow2(-1);
        Self::new(mid, rad, precision)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        Self {
            value: self.value.mul_pow2(k),
            abs_error: self.abs_error.mul_pow2(k),
            precision: self.precision,
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn mul_rational(&self, r: &ExactRational) -> Self {
        self * &Self::from_rational(r, self.precision)
    }

    /// Division; fails when the divisor interval contains zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let den_lower = rhs.mag_lower();
        if den_lower.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let precision = self.precision.max(rhs.precision);
        let (q, ulp) = self.value.div_floor(&rhs.value, precision);
        // |x/y − v1/v2| ≤ (e1 + |v1/v2|·e2) / (|v2| − e2)
        let q_mag = &q.abs() + &ulp;
        let num = up(&(&self.abs_error + &up(&(&q_mag * &rhs.abs_error))));
        let propagated = num.div_ceil(&den_lower, ERR_BITS);
        Ok(Self::new(q, &propagated + &ulp, precision))
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.precision);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

impl Add<&BoundedReal> for &BoundedReal {
    type Output = BoundedReal;
    fn add(self, rhs: &BoundedReal) -> BoundedReal {
        BoundedReal::new(
            &self.value + &rhs.value,
            &self.abs_error + &rhs.abs_error,
            self.precision.max(rhs.precision),
        )
    }
}

impl Sub<&BoundedReal> for &BoundedReal {
    type Output = BoundedReal;
    fn sub(self, rhs: &BoundedReal) -> BoundedReal {
        BoundedReal::new(
            &self.value - &rhs.value,
            &self.abs_error + &rhs.abs_error,
            self.precision.max(rhs.precision),
        )
    }
}

impl Mul<&BoundedReal> for &BoundedReal {
    type Output = BoundedReal;
    fn mul(self, rhs: &BoundedReal) -> BoundedReal {
        // |xy − v1v2| ≤ |v1|e2 + |v2|e1 + e1e2
        let propagated = &(&(&self.value.abs() * &rhs.abs_error)
            + &(&rhs.value.abs() * &self.abs_error))
            + &(&self.abs_error * &rhs.abs_error);
        BoundedReal::new(
            &self.value * &rhs.value,
            propagated,
            self.precision.max(rhs.precision),
        )
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for BoundedReal {
            type Output = BoundedReal;
            fn $method(self, rhs: BoundedReal) -> BoundedReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BoundedReal> for BoundedReal {
            type Output = BoundedReal;
            fn $method(self, rhs: &BoundedReal) -> BoundedReal {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &BoundedReal {
    type Output = BoundedReal;
    fn neg(self) -> BoundedReal {
        BoundedReal {
            value: -&self.value,
            abs_error: self.abs_error.clone(),
            precision: self.precision,
        }
    }
}

impl Neg for BoundedReal {
    type Output = BoundedReal;
    fn neg(self) -> BoundedReal {
        -&self
    }
}

impl fmt::Debug for BoundedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ± {} [{} bits]",
            self.value.to_decimal(24),
            self.abs_error.to_sci_upper(3),
            self.precision
        )
    }
}

impl fmt::Display for BoundedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        write!(
            f,
            "{} ± {}",
            self.value.to_decimal(digits),
            self.abs_error.to_sci_upper(2)
        )
    }
}
