//! Exact real arithmetic on Dedekind reals.
//!
//! A real is represented by a procedure that, given a positive rational `eps`,
//! returns a rational interval of width at most `eps` containing it. On top of
//! that sit rational, real and one-sided powers, logarithms, and a small
//! expression language.

pub mod cli;
pub mod exponentiation;
pub mod expr;
pub mod laws;
pub mod logarithm;
pub mod oracle;
pub mod rational;
pub mod real;
