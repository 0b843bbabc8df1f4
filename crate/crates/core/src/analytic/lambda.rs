use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{check_precision, ERR_BITS};
use crate::{BoundedReal, Dyadic, Error, ExactRational, Result};

/// Truncated sum `Σ_{k=1}^{N} (2k−1)^(−2m)` of the odd reciprocal powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaEstimate {
    pub m: usize,
    pub num_terms: u64,
    /// The partial sum, with its rounding error.
    pub value: BoundedReal,
    /// Upper bound on the omitted terms `Σ_{k>N} (2k−1)^(−2m)`.
    pub tail_bound: Dyadic,
}

impl LambdaEstimate {
    /// `value ± (abs_error + tail_bound)`.
    pub fn enclosure(&self) -> BoundedReal {
        self.value.widen(&self.tail_bound)
    }

    /// The one-sided interval `[value − abs_error, value + abs_error + tail]`
    /// as a midpoint/radius pair; the omitted terms are all positive.
    pub fn bracket(&self) -> BoundedReal {
        BoundedReal::from_endpoints(
            &self.value.lower(),
            &(&self.value.upper() + &self.tail_bound),
            self.value.precision(),
        )
    }
}

/// Tail of the odd reciprocal powers after `N` terms.
///
/// The first omitted term is `(2N+1)^(−2m)`; each later term `k ≥ N+2` is
/// below `∫_{k−1}^{k} (2u−1)^(−2m) du`, and those integrals add up to
/// `(2N+1)^(1−2m) / (2(2m−1))`.
pub fn lambda_tail_bound(m: usize, num_terms: u64) -> Dyadic {
    let base = BigInt::from(2 * num_terms + 1);
    let first = num_traits::pow(base.clone(), 2 * m);
    let exponent = 2 * (2 * m as i64 - 1);
    // (2N+1)^(−2m) · (1 + (2N+1)/(2(2m−1)))
    let factor = ExactRational::new(BigInt::from(exponent) + &base, exponent)
        .expect("m ≥ 1 makes the denominator positive");
    let tail = &factor * &ExactRational::new(1, first).expect("positive power");
    Dyadic::from_rational_ceil(&tail, ERR_BITS)
}

/// `Σ_{k=1}^{N} (2k−1)^(−2m)` in fixed point.
///
/// Each term is `floor(2^P / (2k−1)^(2m))`, obtained by `2m` successive floor
/// divisions by `2k−1` (which compose to a single exact floor), so the partial
/// sum is low by less than `N − 1` units of `2^(−P)`.
pub fn lambda_direct(m: usize, num_terms: u64, precision: u32) -> Result<LambdaEstimate> {
    check_precision(precision)?;
    if m == 0 {
        return Err(Error::InvalidArgument(format!(
            "m must be at least 1, got {m}"
        )));
    }
    if num_terms == 0 {
        return Err(Error::InvalidArgument(
            "num_terms must be at least 1".into(),
        ));
    }
    let frac_bits = u64::from(precision) + 64 - u64::from(num_terms.leading_zeros()) + 2;
    let unit = BigUint::one() << frac_bits;
    let mut sum = BigUint::zero();
    for k in 1..=num_terms {
        let odd = 2 * k - 1;
        let mut term = unit.clone();
        for _ in 0..2 * m {
            term /= odd;
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            // Later terms are smaller still.
            break;
        }
        sum += term;
    }
    let scale = -(frac_bits as i64);
    // The k = 1 term is exactly 2^P.
    let value = BoundedReal::new(
        Dyadic::new(BigInt::from(sum), scale),
        Dyadic::new(BigInt::from(num_terms - 1), scale),
        precision,
    );
    Ok(LambdaEstimate {
        m,
        num_terms,
        value,
        tail_bound: lambda_tail_bound(m, num_terms),
    })
}
