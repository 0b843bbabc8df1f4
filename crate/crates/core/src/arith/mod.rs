//! Exact rationals, dyadic numbers and error-bounded reals.

mod bounded;
mod dyadic;
mod pi;
mod rational;

pub use bounded::{BoundedReal, MIN_PRECISION};
pub use dyadic::Dyadic;
pub use pi::pi_constant;
pub use rational::{rational_arith, ArithOp, ExactRational};

pub(crate) use bounded::ERR_BITS;

/// Rejects precisions below [`MIN_PRECISION`].
pub(crate) fn check_precision(bits: u32) -> crate::Result<()> {
    if bits < MIN_PRECISION {
        return Err(crate::Error::InvalidArgument(alloc::format!(
            "precision must be at least {MIN_PRECISION} bits, got {bits}"
        )));
    }
    Ok(())
}
