//! Brute-force Temperley–Lieb planar-diagram evaluator over ℚ(A): the
//! independent oracle against which every closed-form fusion coefficient is
//! verified.

pub mod diagram;
pub mod entry;
pub mod mor;
pub mod net;
pub mod rules;

pub use diagram::{tl_compose, TLDiagram, TLElement};
pub use mor::{jw, markov_close, quantum_dim, TLMor};
