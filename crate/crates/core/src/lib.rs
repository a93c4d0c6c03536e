// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod eta;
pub mod funceq;
pub mod specialfn;
pub mod sum;
pub mod verify;
pub mod zeros;
