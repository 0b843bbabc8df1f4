//! Truncated power series with only odd or only even powers of `x`.
//!
//! `t = c₁x + c₂x³ + c₃x⁵ + ⋯` is an [`OddSeries`]; its square and the
//! logarithmic series `c₁x² + ½c₂x⁴ + ⋯` are [`EvenSeries`]. Every series
//! carries its truncation order explicitly and binary operations truncate to
//! the smaller of the two orders.

use alloc::vec;
use alloc::vec::Vec;

use crate::recurrence::{pair_convolution, CoefficientTable};
use crate::{Error, ExactRational, Result};

/// `Σ_{m=1}^{M} coeffs[m−1]·x^(2m−1)`, exact through `x^(2M−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSeries {
    coeffs: Vec<ExactRational>,
}

/// `Σ_{m=1}^{M} coeffs[m−1]·x^(2m)`, exact through `x^(2M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSeries {
    coeffs: Vec<ExactRational>,
}

macro_rules! series_common {
    ($ty:ident) => {
        impl $ty {
            pub fn new(coeffs: Vec<ExactRational>) -> Result<Self> {
                if coeffs.is_empty() {
                    return Err(Error::InvalidArgument(
                        "series order must be at least 1".into(),
                    ));
                }
                Ok(Self { coeffs })
            }

            pub fn zero(order: usize) -> Result<Self> {
                Self::new(vec![ExactRational::zero(); order])
            }

            /// Number of retained terms `M`.
            pub fn order(&self) -> usize {
                self.coeffs.len()
            }

            pub fn coeffs(&self) -> &[ExactRational] {
                &self.coeffs
            }

            /// Coefficient of the `m`-th retained power, `1 ≤ m ≤ order`.
            pub fn coeff(&self, m: usize) -> Option<&ExactRational> {
                m.checked_sub(1).and_then(|i| self.coeffs.get(i))
            }

            pub fn set_coeff(&mut self, m: usize, value: ExactRational) {
                self.coeffs[m - 1] = value;
            }

            /// Drops terms beyond `order`; a larger `order` is an error.
            pub fn truncate(&self, order: usize) -> Result<Self> {
                if order == 0 || order > self.order() {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "cannot truncate order {} series to order {order}",
                        self.order()
                    )));
                }
                Ok(Self {
                    coeffs: self.coeffs[..order].to_vec(),
                })
            }

            pub fn add(&self, rhs: &Self) -> Self {
                let coeffs = self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a + b)
                    .collect();
                Self { coeffs }
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(ExactRational::is_zero)
            }
        }
    };
}

series_common!(OddSeries);
series_common!(EvenSeries);

impl OddSeries {
    pub fn from_table(table: &CoefficientTable) -> Self {
        Self {
            coeffs: table.as_slice().to_vec(),
        }
    }

    /// `c·x` truncated at `order`.
    pub fn linear(c: ExactRational, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        s.coeffs[0] = c;
        Ok(s)
    }

    /// Exponent of the `m`-th retained power.
    pub fn degree(m: usize) -> usize {
        2 * m - 1
    }
}

impl EvenSeries {
    pub fn degree(m: usize) -> usize {
        2 * m
    }
}

/// `t²`, keeping `x², x⁴, …, x^(2M)`. The coefficient of `x^(2m)` is the sum of
/// `c_i·c_j` over ordered pairs with `(2i−1) + (2j−1) = 2m`.
pub fn square_odd(t: &OddSeries) -> EvenSeries {
    let coeffs = (1..=t.order())
        .map(|m| pair_convolution(&t.coeffs, m + 1))
        .collect();
    EvenSeries { coeffs }
}

/// `2∫ sq dx` with no constant: `e_m·x^(2m)` becomes `2e_m/(2m+1)·x^(2m+1)`.
/// The `x¹` slot of the result is zero and `e_M` falls beyond the order.
pub fn integrate_twice_scaled(sq: &EvenSeries) -> OddSeries {
    let order = sq.order();
    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(ExactRational::zero());
    for (i, e) in sq.coeffs.iter().take(order - 1).enumerate() {
        let m = i as i64 + 1;
        let scale = ExactRational::new(2, 2 * m + 1).expect("odd denominator");
        coeffs.push(&scale * e);
    }
    OddSeries { coeffs }
}

/// One substitution `t ↦ x/2 + 2∫t² dx`.
pub fn picard_step(t: &OddSeries) -> OddSeries {
    let mut next = integrate_twice_scaled(&square_odd(t));
    next.coeffs[0] = &next.coeffs[0] + &ExactRational::ratio(1, 2);
    next
}

/// The iterates `t⁽¹⁾, t⁽²⁾, …` starting from `t⁽⁰⁾ = x/2`.
#[derive(Debug, Clone)]
pub struct PicardIterates {
    current: OddSeries,
}

impl PicardIterates {
    pub fn new(order: usize) -> Result<Self> {
        Ok(Self {
            current: OddSeries::linear(ExactRational::ratio(1, 2), order)?,
        })
    }

    pub fn current(&self) -> &OddSeries {
        &self.current
    }
}

impl Iterator for PicardIterates {
    type Item = OddSeries;

    fn next(&mut self) -> Option<OddSeries> {
        self.current = picard_step(&self.current);
        Some(self.current.clone())
    }
}

/// Iterates `t = x/2 + 2∫t² dx` from `x/2` until two successive truncated
/// iterates agree. Coefficient `m` is final after `m − 1` steps, so this takes
/// at most `order` steps.
pub fn picard_fixed_point(order: usize) -> Result<OddSeries> {
    let mut iterates = PicardIterates::new(order)?;
    let mut prev = iterates.current().clone();
    for next in iterates.by_ref().take(order + 1) {
        if next == prev {
            return Ok(next);
        }
        prev = next;
    }
    unreachable!("Picard iteration did not settle within order + 1 steps")
}

/// Coefficients of `r(x) = 2t′(x) − 1 − 4t(x)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdeResidual {
    /// Coefficients of `x⁰, x², …, x^(2(M−1))`; every one of them depends
    /// only on retained terms of `t`.
    pub coeffs: Vec<ExactRational>,
    /// Coefficient of `x^(2M)`, where the truncated `c_{M+1}` first matters.
    /// Reported for completeness; it is not expected to vanish.
    pub boundary: ExactRational,
}

impl OdeResidual {
    /// Whether every coefficient through `x^(2(M−1))` is exactly zero.
    pub fn vanishes(&self) -> bool {
        self.coeffs.iter().all(ExactRational::is_zero)
    }

    /// Highest degree `d` such that all coefficients up to `x^d` vanish.
    pub fn zero_through_degree(&self) -> Option<usize> {
        let n = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        n.checked_sub(1).map(|k| 2 * k)
    }
}

/// Residual of `2t′ = 1 + 4t²` for a truncated odd series.
pub fn ode_residual(t: &OddSeries) -> OdeResidual {
    let order = t.order();
    let square_coeff = |j: usize| {
        if j == 0 {
            ExactRational::zero()
        } else {
            pair_convolution(&t.coeffs, j + 1)
        }
    };
    let coeffs = (0..order)
        .map(|j| {
            // 2t′ contributes 2(2j+1)·c_{j+1} at x^(2j).
            let mut r = t.coeffs[j].scale(2 * (2 * j as i64 + 1)) - square_coeff(j).scale(4);
            if j == 0 {
                r = r - ExactRational::one();
            }
            r
        })
        .collect();
    let boundary = -square_coeff(order).scale(4);
    OdeResidual { coeffs, boundary }
}
