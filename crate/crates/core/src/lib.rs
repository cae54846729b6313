//! Exact arithmetic in real quadratic fields and a verification harness for
//! Scholz's reciprocity law and its relatives: the supplementary law for the
//! prime above 2, and the composite law for `Q(sqrt(pq))` and `Q(sqrt(r))`.
//!
//! Layers, bottom up:
//!
//! - [`arith`]: rational primes, Jacobi and quartic symbols, square roots mod p.
//! - [`quadring`]: elements `(x + y sqrt m)/2`, fundamental units, primary and
//!   hyper-primary tests.
//! - [`ideals`]: prime splitting, ideal products and principal generators.
//! - [`forms`]: indefinite forms, class groups and fourth-power tests.
//! - [`symbols`]: residue symbols in quadratic fields.
//! - [`laws`]: per-instance verifiers and sweeps.
//! - [`cli`]: the `recip` command-line frontend.

pub mod arith;
pub mod cli;
pub mod error;
pub mod forms;
pub mod ideals;
pub mod laws;
pub mod quadring;
pub mod symbols;

pub use arith::Sign;
pub use error::{Error, Result};
pub use quadring::{QuadElem, QuadField, UnitInfo};
