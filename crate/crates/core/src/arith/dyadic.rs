use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactRational;

/// `mant · 2^exp`, stored with an odd mantissa (or `0 · 2^0`), so structural
/// equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

/// `floor(a · 2^shift / b)` together with whether the division was exact.
fn quot_floor(a: &BigInt, b: &BigInt, shift: i64) -> (BigInt, bool) {
    let (q, r) = if shift >= 0 {
        (a << shift as u64).div_mod_floor(b)
    } else {
        a.div_mod_floor(&(b << shift.unsigned_abs()))
    };
    let exact = r.is_zero();
    (q, exact)
}

fn pow10(k: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        match mant.trailing_zeros() {
            None => Self::zero(),
            Some(0) => Self { mant, exp },
            Some(tz) => Self {
                mant: mant >> tz,
                exp: exp + tz as i64,
            },
        }
    }

    pub fn zero() -> Self {
        Self {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n.into(), 0)
    }

    /// `2^k`
    pub fn pow2(k: i64) -> Self {
        Self {
            mant: BigInt::one(),
            exp: k,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    /// Number of significant bits in the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// `e` with `2^e ≤ |self| < 2^(e+1)`; `None` for zero.
    pub fn magnitude_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.bits() as i64 - 1)
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    pub fn to_rational(&self) -> ExactRational {
        if self.exp >= 0 {
            ExactRational::from_integer(&self.mant << self.exp as u64)
        } else {
            ExactRational::new(self.mant.clone(), BigInt::one() << self.exp.unsigned_abs())
                .expect("power of two is nonzero")
        }
    }

    /// Rounds toward −∞ keeping at most `bits` significant bits. Returns the
    /// rounded value and the non-negative amount that was dropped.
    pub fn floor_to_bits(&self, bits: u32) -> (Self, Self) {
        let len = self.bits();
        if len <= bits as u64 {
            return (self.clone(), Self::zero());
        }
        let shift = len - bits as u64;
        // BigInt >> rounds toward −∞.
        let kept = &self.mant >> shift;
        let rounded = Self::new(kept, self.exp + shift as i64);
        let lost = self - &rounded;
        (rounded, lost)
    }

    /// Rounds toward +∞ keeping at most `bits` significant bits.
    pub fn ceil_to_bits(&self, bits: u32) -> Self {
        -(-self).floor_to_bits(bits).0
    }

    /// Largest dyadic with `bits` significant bits that is `≤ r`, plus a flag
    /// telling whether it equals `r`. Powers-of-two denominators convert
    /// exactly regardless of `bits`.
    pub fn from_rational_floor(r: &ExactRational, bits: u32) -> (Self, bool) {
        let (n, d) = (r.numer(), r.denom());
        if n.is_zero() {
            return (Self::zero(), true);
        }
        if d.magnitude().count_ones() == 1 {
            let tz = d.trailing_zeros().unwrap_or(0) as i64;
            return (Self::new(n.clone(), -tz), true);
        }
        let shift = bits as i64 + d.bits() as i64 - n.bits() as i64;
        let (q, exact) = quot_floor(n, d, shift);
        (Self::new(q, -shift), exact)
    }

    /// Smallest dyadic with about `bits` significant bits that is `≥ r`.
    pub fn from_rational_ceil(r: &ExactRational, bits: u32) -> Self {
        -Self::from_rational_floor(&-r, bits).0
    }

    /// `floor(self / rhs)` to `bits` significant bits, and the unit in the last
    /// place when the quotient is inexact (zero otherwise).
    pub fn div_floor(&self, rhs: &Self, bits: u32) -> (Self, Self) {
        assert!(!rhs.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let shift = bits as i64 + rhs.bits() as i64 - self.bits() as i64;
        let (q, exact) = quot_floor(&self.mant, &rhs.mant, shift);
        let exp = self.exp - rhs.exp - shift;
        let ulp = if exact { Self::zero() } else { Self::pow2(exp) };
        (Self::new(q, exp), ulp)
    }

    /// An upper bound for `self / rhs` with about `bits` significant bits.
    pub fn div_ceil(&self, rhs: &Self, bits: u32) -> Self {
        let (q, ulp) = self.div_floor(rhs, bits);
        q + ulp
    }

    /// Nearest value with `frac_digits` decimal places (ties toward +∞).
    pub fn to_decimal(&self, frac_digits: u32) -> String {
        let scaled = &self.mant * pow10(frac_digits as u64);
        let n = if self.exp >= 0 {
            scaled << self.exp as u64
        } else {
            let s = self.exp.unsigned_abs();
            (scaled + (BigInt::one() << (s - 1))) >> s
        };
        let negative = n.is_negative();
        let mut digits = n.abs().to_str_radix(10);
        let fd = frac_digits as usize;
        if digits.len() <= fd {
            let pad = fd + 1 - digits.len();
            let mut padded = String::with_capacity(fd + 1);
            padded.extend(core::iter::repeat_n('0', pad));
            padded.push_str(&digits);
            digits = padded;
        }
        let mut out = String::with_capacity(digits.len() + 2);
        if negative {
            out.push('-');
        }
        let split = digits.len() - fd;
        out.push_str(&digits[..split]);
        if fd > 0 {
            out.push('.');
            out.push_str(&digits[split..]);
        }
        out
    }

    /// Scientific notation rounded *up* in magnitude to `sig` significant
    /// digits, e.g. `2.6e-7`. Meant for error bounds.
    pub fn to_sci_upper(&self, sig: u32) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return String::from("0");
        }
        let negative = self.is_negative();
        let a = self.abs();
        let lo = pow10(sig as u64 - 1);
        let hi = pow10(sig as u64);
        // log10(2) ≈ 0.30103
        let mut k = (a.magnitude_exp().unwrap() * 30_103).div_euclid(100_000);
        let digits = loop {
            let t = sig as i64 - 1 - k;
            let mut num = a.mant.clone();
            let mut den = BigInt::one();
            if a.exp >= 0 {
                num <<= a.exp as u64;
            } else {
                den <<= a.exp.unsigned_abs();
            }
            if t >= 0 {
                num *= pow10(t as u64);
            } else {
                den *= pow10(t.unsigned_abs());
            }
            let d = num.div_ceil(&den);
            if d >= hi {
                k += 1;
            } else if d < lo {
                k -= 1;
            } else {
                break d.to_str_radix(10);
            }
        };
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&alloc::format!("{k}"));
        out
    }

    /// Nearest-ish `f64`; saturates to ±∞ or 0 outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = self.bits();
        let (m, e) = if len > 64 {
            let s = len - 64;
            (&self.mant >> s, self.exp + s as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        scale_pow2(m.to_f64().unwrap_or(f64::NAN), e)
    }

    /// Exact dyadic value of a finite `f64`.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Self::new(BigInt::from(m) * sign, e))
    }
}

fn scale_pow2(mut x: f64, mut e: i64) -> f64 {
    let step = |k: i64| f64::from_bits(((k + 1023) as u64) << 52);
    while e > 1000 {
        x *= step(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= step(-1000);
        e += 1000;
    }
    x * step(e)
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.mant.sign(), other.mant.sign()) {
            (a, b) if a != b => {
                let rank = |s: Sign| match s {
                    Sign::Minus => 0,
                    Sign::NoSign => 1,
                    Sign::Plus => 2,
                };
                rank(a).cmp(&rank(b))
            }
            _ => match (self - other).mant.sign() {
                Sign::Minus => Ordering::Less,
                Sign::NoSign => Ordering::Equal,
                Sign::Plus => Ordering::Greater,
            },
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let exp = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - exp) as u64;
        let b = &rhs.mant << (rhs.exp - exp) as u64;
        Dyadic::new(a + b, exp)
    }
}

impl Sub<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &rhs.mant, self.exp + rhs.exp)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: &Dyadic) -> Dyadic {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2^{} (≈{:e})", self.mant, self.exp, self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}
