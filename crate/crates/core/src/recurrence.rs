//! The coefficient recurrence and its two oracles.
//!
//! With `c₁ = 1/2` and, for `m ≥ 2`,
//!
//! ```text
//! c_m = 2/(2m−1) · Σ_{i+j=m, i,j≥1} c_i·c_j      (ordered pairs)
//! ```
//!
//! the odd reciprocal power sums are `1 + 3^(−2m) + 5^(−2m) + ⋯ = c_m·(π/2)^(2m)`
//! and `2·c_m` is the coefficient of `x^(2m−1)` in `tan x`. The second fact is
//! checked here against Bernoulli numbers computed from their own defining
//! recurrence.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, ExactRational, Result};

/// `c₁, c₂, …, c_{m_max}` as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    coeffs: Vec<ExactRational>,
}

impl CoefficientTable {
    /// `c_m` for `1 ≤ m ≤ len()`.
    pub fn get(&self, m: usize) -> Option<&ExactRational> {
        m.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in order, `c₁` first.
    pub fn as_slice(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_vec(self) -> Vec<ExactRational> {
        self.coeffs
    }

    /// Iterator over `(m, c_m)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.coeffs.iter().enumerate().map(|(i, c)| (i + 1, c))
    }
}

/// Σ over ordered pairs `i + j = m` of `c_i·c_j`, with `coeffs[k] = c_{k+1}`.
///
/// Symmetric pairs are summed once and doubled, the middle square once.
pub(crate) fn pair_convolution(coeffs: &[ExactRational], m: usize) -> ExactRational {
    let mut cross = ExactRational::zero();
    for i in 1..=(m - 1) / 2 {
        cross = cross + &coeffs[i - 1] * &coeffs[m - i - 1];
    }
    let mut total = cross.scale(2);
    if m.is_multiple_of(2) {
        let h = &coeffs[m / 2 - 1];
        total = total + h * h;
    }
    total
}

/// Builds the table `c₁ … c_{m_max}`.
///
/// The recurrence is run on `t_m = 2·(2m−1)!·c_m`, which turns it into
///
/// ```text
/// t_m = Σ_{i+j=m} C(2m−2, 2i−1)·t_i·t_j,   t₁ = 1
/// ```
///
/// over the integers. The rational form needs a gcd per addition and is
/// several hundred times slower by `m = 300`.
pub fn euler_coefficients(m_max: usize) -> Result<CoefficientTable> {
    if m_max == 0 {
        return Err(Error::InvalidArgument("m_max must be at least 1".into()));
    }
    let mut t: Vec<BigInt> = Vec::with_capacity(m_max);
    t.push(BigInt::one());
    for m in 2..=m_max {
        let binom = binomial_row(2 * m - 2);
        let mut cross = BigInt::zero();
        for i in 1..=(m - 1) / 2 {
            cross += &binom[2 * i - 1] * &t[i - 1] * &t[m - i - 1];
        }
        let mut next = cross << 1;
        if m % 2 == 0 {
            let h = &t[m / 2 - 1];
            next += &binom[m - 1] * h * h;
        }
        t.push(next);
    }
    let mut factorial = BigInt::one();
    let mut coeffs = Vec::with_capacity(m_max);
    for (k, tm) in t.into_iter().enumerate() {
        let m = k + 1;
        if m > 1 {
            factorial *= (2 * m - 2) * (2 * m - 1);
        }
        coeffs.push(ExactRational::new(tm, &factorial << 1)?);
    }
    Ok(CoefficientTable { coeffs })
}

/// `B₀, B₁, …` with the convention `B₁ = −1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    pub fn get(&self, k: usize) -> Option<&ExactRational> {
        self.values.get(k)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[ExactRational] {
        &self.values
    }
}

/// Row `n` of Pascal's triangle as big integers.
fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for j in 0..n {
        let next = &row[j] * (n - j) / (j + 1);
        row.push(next);
    }
    row
}

/// `B₀ … B_{k_max}` from `Σ_{j=0}^{k} C(k+1, j)·B_j = 0`, `B₀ = 1`.
pub fn bernoulli_numbers(k_max: usize) -> BernoulliTable {
    let mut values = Vec::with_capacity(k_max + 1);
    values.push(ExactRational::one());
    for k in 1..=k_max {
        let row = binomial_row(k + 1);
        let partial: ExactRational = values
            .iter()
            .zip(&row)
            .map(|(b, c)| b * &ExactRational::from_integer(c.clone()))
            .sum();
        let bk = -(&partial * &ExactRational::new(1, k as i64 + 1).expect("k + 1 > 0"));
        values.push(bk);
    }
    BernoulliTable { values }
}

/// Maclaurin coefficients of `tan x` at `x¹, x³, …, x^(2·m_max−1)`, from
/// `(−1)^(m−1)·2^(2m)·(2^(2m)−1)·B_{2m} / (2m)!`.
pub fn tangent_coefficients(m_max: usize) -> Result<Vec<ExactRational>> {
    if m_max == 0 {
        return Err(Error::InvalidArgument("m_max must be at least 1".into()));
    }
    let bernoulli = bernoulli_numbers(2 * m_max);
    let mut factorial = BigInt::one();
    let mut out = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        factorial *= (2 * m - 1) * (2 * m);
        let four_m = BigInt::one() << (2 * m);
        let numer = &four_m * (&four_m - 1u32);
        let b = &bernoulli.values[2 * m];
        let mut coeff = b * &ExactRational::new(numer, factorial.clone())?;
        if m % 2 == 0 {
            coeff = -coeff;
        }
        out.push(coeff);
    }
    Ok(out)
}

/// `q_m = c_m / 4^m`, so that `1 + 3^(−2m) + 5^(−2m) + ⋯ = q_m·π^(2m)`.
pub fn lambda_closed_form(m: usize) -> Result<ExactRational> {
    if m == 0 {
        return Err(Error::InvalidArgument(format!(
            "m must be at least 1, got {m}"
        )));
    }
    let table = euler_coefficients(m)?;
    let four_m = ExactRational::from_integer(BigInt::one() << (2 * m));
    table.coeffs[m - 1].checked_div(&four_m)
}
