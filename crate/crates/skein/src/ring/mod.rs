//! Exact coefficient arithmetic: Laurent polynomials over ℤ, the field ℚ(A),
//! its extension by boundary-curve symbols, and operator coefficients in
//! formal edge exponentials.

pub mod frac;
pub mod parse;
pub mod poly;

pub use frac::{loop_value, quantum_poly, ExpCoeff, Frac, MultiRat, RatFunc};
pub use parse::{parse_frac, parse_poly};
pub use poly::{Mono, Var, XPoly};

/// The quantum integer `{n} = A^{2n} − A^{−2n}` in ℚ(A).
pub fn quantum_integer(n: i64) -> RatFunc {
    RatFunc::quantum(n)
}
