//! Error-bounded numerics for the cosine product and its logarithm.
//!
//! Every function here returns intervals (as [`BoundedReal`](crate::BoundedReal))
//! whose radii include rounding, truncation and tail contributions. The tail
//! bounds are integral comparisons for the omitted terms or factors and
//! geometric bounds for the omitted series orders.

mod elementary;
mod lambda;
mod logseries;
mod product;
mod rearrange;
mod verify;

pub use elementary::{cos_approx, exp_approx, ln_approx};
pub use lambda::{lambda_direct, lambda_tail_bound, LambdaEstimate};
pub use logseries::neg_log_s_series;
pub use product::{partial_product, PartialProductResult};
pub use rearrange::{rearrangement_check, RearrangementReport};
pub use verify::{verify_identity, IdentityReport, Verdict};
