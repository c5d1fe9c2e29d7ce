//! Exact symbolic computation for Kauffman bracket skein modules.
//!
//! The toolkit computes curve-operator actions on handlebody skein bases via
//! fusion calculus, finds linear-dependence relations through compression-body
//! quotients, reduces the resulting recurrences over the admissibility
//! polytope, and outputs explicit finite generating sets with replayable
//! certificates.

pub mod dt;
pub mod error;
pub mod graph;
pub mod ops;
pub mod ring;
pub mod tl;

pub use error::*;
