//! Exact polynomial and rational-function arithmetic.

pub mod gcd;
pub mod multipoly;
pub mod ratfun;
pub mod resultant;
pub mod trace;
pub mod var;

pub use gcd::gcd;
pub use multipoly::{poly, MultiPoly};
pub use ratfun::{ratfun, RatFun};
pub use resultant::resultant;
pub use trace::{pn_sequence, trace_power_poly, Laurent, LaurentSeq};
pub use var::{Monomial, Var};
