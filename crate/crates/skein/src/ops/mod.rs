//! Symbolic curve operators on the handlebody skein module: the α/β/path
//! operator families as finite shift tables of `ExpCoeff`, applied to the
//! φ basis with exact boundary behavior.

pub mod build;
pub mod curveop;

pub use build::{alpha_op, beta_arc_op, beta_loop_op, path_op};
pub use curveop::{apply, CurveOp, OpPolynomial, PrimOp, SkeinVector};
