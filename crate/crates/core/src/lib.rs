//! Boundary slopes of the Montesinos knots `K(1/3, 1/5, 1/(2n+1), 1/2)` and
//! their mutants, with exact certificates for the accompanying
//! character-variety computations.

pub mod cert;
pub mod character;
pub mod curve;
pub mod edgepath;
pub mod error;
pub mod incompress;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sl2;

pub use error::{Error, Result};
pub use rational::Rational;
