use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::{check_precision, ERR_BITS};
use crate::{BoundedReal, Dyadic, Error, ExactRational, Result};

/// `Π_{k=1}^{N} (1 − 1/((2k−1)²n²))` with its rounding error and a bound on
/// what the omitted factors can do to the logarithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProductResult {
    pub n: ExactRational,
    pub num_factors: u64,
    pub value: BoundedReal,
    /// Bound on `|ln S − ln(partial product)|`; `None` when `n = 1`, where the
    /// first factor already vanishes.
    pub log_tail_bound: Option<Dyadic>,
}

impl PartialProductResult {
    /// An interval for the infinite product `S`.
    ///
    /// The omitted factors lie in `(0, 1]` and multiply to `e^(−τ)` with
    /// `0 ≤ τ ≤ log_tail_bound`, so `S` is below the partial product by at
    /// most `value·(1 − e^(−τ)) ≤ value·τ`.
    pub fn enclosure(&self) -> BoundedReal {
        match &self.log_tail_bound {
            None => self.value.clone(),
            Some(tau) => {
                let shrink = (&self.value.upper() * tau).ceil_to_bits(ERR_BITS);
                self.value.widen(&shrink)
            }
        }
    }
}

/// `Σ_{k>N} −ln(1 − a_k)` with `a_k = 1/((2k−1)²n²)`.
///
/// `−ln(1−a) ≤ a/(1−a) ≤ a/(1−a_{N+1})` for `k > N`, and
/// `Σ_{k>N} (2k−1)^(−2) ≤ ∫_N^∞ (2u−1)^(−2) du = 1/(2(2N−1))`.
pub(crate) fn factor_log_tail(n: &ExactRational, num_factors: u64) -> Dyadic {
    let n2 = n * n;
    let next_odd = ExactRational::from(2 * num_factors as i64 + 1);
    let a_next = (&(&next_odd * &next_odd) * &n2).recip().expect("n ≥ 1");
    let sum_a = (&n2 * &ExactRational::from(2 * (2 * num_factors as i64 - 1)))
        .recip()
        .expect("N ≥ 1");
    let bound = sum_a
        .checked_div(&(ExactRational::one() - a_next))
        .expect("a_{N+1} < 1");
    Dyadic::from_rational_ceil(&bound, ERR_BITS)
}

pub(crate) fn split_positive(n: &ExactRational) -> (BigUint, BigUint) {
    let p = n.numer().abs().to_biguint().expect("non-negative");
    let q = n.denom().to_biguint().expect("positive denominator");
    (p, q)
}

/// The first `N` factors of the cosine product, multiplied in fixed point.
///
/// With `n = p/q`, factor `k` is `((2k−1)²p² − q²) / ((2k−1)²p²)`. The running
/// product is floored after every factor; since factors are at most 1, the
/// accumulated error stays below one unit of `2^(−P)` per factor.
pub fn partial_product(
    n: &ExactRational,
    num_factors: u64,
    precision: u32,
) -> Result<PartialProductResult> {
    check_precision(precision)?;
    if num_factors == 0 {
        return Err(Error::InvalidArgument(
            "num_factors must be at least 1".into(),
        ));
    }
    if *n < 1 {
        return Err(Error::Domain(format!(
            "the product needs n ≥ 1, got n = {n}"
        )));
    }
    if *n == 1 {
        return Ok(PartialProductResult {
            n: n.clone(),
            num_factors,
            value: BoundedReal::zero(precision),
            log_tail_bound: None,
        });
    }

    let (p, q) = split_positive(n);
    let p2 = &p * &p;
    let q2 = &q * &q;
    let frac_bits = u64::from(precision) + 64 - u64::from(num_factors.leading_zeros()) + 2;
    let mut acc = BigUint::one() << frac_bits;
    for k in 1..=num_factors {
        let odd = 2 * k - 1;
        let den = &p2 * (odd * odd);
        let num = &den - &q2;
        acc = acc * num / den;
        if acc.is_zero() {
            break;
        }
    }
    let scale = -(frac_bits as i64);
    let value = BoundedReal::new(
        Dyadic::new(BigInt::from(acc), scale),
        Dyadic::new(BigInt::from(num_factors), scale),
        precision,
    );
    Ok(PartialProductResult {
        n: n.clone(),
        num_factors,
        value,
        log_tail_bound: Some(factor_log_tail(n, num_factors)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::cos_approx;
    use crate::arith::pi_constant;

    fn q(p: i64, d: i64) -> ExactRational {
        ExactRational::ratio(p, d)
    }

    fn exact_product(n: &ExactRational, count: u64) -> ExactRational {
        let n2 = n * n;
        (1..=count).fold(ExactRational::one(), |acc, k| {
            let odd = ExactRational::from(2 * k as i64 - 1);
            let a = (&(&odd * &odd) * &n2).recip().unwrap();
            &acc * &(ExactRational::one() - a)
        })
    }

    fn cos_pi_over_2n(n: &ExactRational, bits: u32) -> BoundedReal {
        let x = pi_constant(bits + 16).mul_rational(&n.scale(2).recip().unwrap());
        cos_approx(&x, bits)
    }

    #[test]
    fn n_equal_one_is_exactly_zero() {
        for count in [1, 2, 17, 1000] {
            let r = partial_product(&q(1, 1), count, 64).unwrap();
            assert!(r.value.value().is_zero());
            assert!(r.value.is_exact());
            assert_eq!(r.log_tail_bound, None);
            assert!(r.enclosure().contains(&ExactRational::zero()));
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(
            partial_product(&q(1, 2), 10, 64),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            partial_product(&q(0, 1), 10, 64),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            partial_product(&q(-3, 1), 10, 64),
            Err(Error::Domain(_))
        ));
        assert!(partial_product(&q(2, 1), 0, 64).is_err());
    }

    #[test]
    fn matches_exact_partial_products() {
        for (n, count) in [(q(2, 1), 1), (q(3, 2), 7), (q(7, 3), 40), (q(10, 1), 25)] {
            let r = partial_product(&n, count, 96).unwrap();
            assert!(
                r.value.contains(&exact_product(&n, count)),
                "n={n} N={count}"
            );
        }
    }

    #[test]
    fn converges_to_cosines() {
        for (n, sq) in [(q(2, 1), q(1, 2)), (q(3, 1), q(3, 4))] {
            let r = partial_product(&n, 100_000, 128).unwrap();
            let enc = r.enclosure();
            assert!(enc.square().contains(&sq), "n = {n}");
            assert!(enc.overlaps(&cos_pi_over_2n(&n, 128)), "n = {n}");
        }
        let r = partial_product(&q(3, 2), 100_000, 128).unwrap();
        assert!(r.enclosure().contains(&q(1, 2)));
    }

    #[test]
    fn decreasing_in_n_and_above_the_limit() {
        let n = q(5, 2);
        let limit = cos_pi_over_2n(&n, 128);
        let mut prev: Option<PartialProductResult> = None;
        for count in [1, 2, 5, 10, 100, 1000, 5000] {
            let r = partial_product(&n, count, 128).unwrap();
            assert!(r.value.upper() >= limit.lower());
            if let Some(p) = &prev {
                assert!(r.value.value() < p.value.value());
                assert!(r.log_tail_bound < p.log_tail_bound);
            }
            prev = Some(r);
        }
    }

    #[test]
    fn log_tail_dominates_exact_continuation() {
        let n = q(3, 2);
        for count in [1, 3, 20] {
            let tau = factor_log_tail(&n, count).to_f64();
            let ratio = exact_product(&n, 300)
                .checked_div(&exact_product(&n, count))
                .unwrap();
            let omitted = -Dyadic::from_rational_floor(&ratio, 60).0.to_f64().ln();
            assert!(omitted <= tau, "N = {count}");
        }
    }
}
