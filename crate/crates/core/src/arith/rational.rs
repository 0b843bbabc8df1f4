use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision signed rational, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactRational(BigRational);

/// The four field operations accepted by [`rational_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`. Division by zero is reported, never panics.
pub fn rational_arith(a: &ExactRational, b: &ExactRational, op: ArithOp) -> Result<ExactRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // BigRational::new reduces and normalises the sign of the denominator.
        Ok(Self(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// `numer/denom` for small literals; panics when `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator in literal ratio")
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Multiplies by the small integer `k`.
    pub fn scale(&self, k: i64) -> Self {
        Self(&self.0 * BigInt::from(k))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big_rational(self) -> BigRational {
        self.0
    }

    /// Largest integer `≤ self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

/// Always `p/q`, including integers (`5/1`) and zero (`0/1`).
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p/q` or a bare integer. Decimal notation is rejected.
impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!(
                    "expected an integer or p/q, got {s:?}"
                )));
            }
            BigInt::from_str(t).map_err(|e| Error::Parse(e.to_string()))
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse_int(p.trim())?, parse_int(q.trim())?),
            None => Ok(Self::from_integer(parse_int(s)?)),
        }
    }
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for ExactRational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl core::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl From<ExactRational> for String {
    fn from(r: ExactRational) -> String {
        r.to_string()
    }
}
