//! Exact computation and verification of the bar-tracking polynomials
//! `Q_n^B(t)` of signed relative derangements.
//!
//! The crate has two independent routes to every quantity:
//!
//! * [`recur`], [`stats`] and [`series`] evaluate the polynomial and
//!   coefficient recursions with big-integer arithmetic;
//! * [`enumerate`] walks all signed arrangements of small size and counts
//!   them directly.
//!
//! [`verify`] runs the two against each other and reports every identity as
//! data. Structural maps on sequences (lifting, removal of the maximum,
//! conjugate-reverse) live in [`lift`]; unimodality checks and the two
//! coefficient injections live in [`unimodal`].

pub mod enumerate;
mod error;
pub mod lift;
pub mod poly;
pub mod recur;
pub mod seq;
pub mod series;
pub mod stats;
pub mod unimodal;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use poly::IntPoly;
pub use seq::{Element, Mode, SignedSeq};
