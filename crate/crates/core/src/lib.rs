//! Exact colored Jones polynomials of knots presented as braid closures.
//!
//! The braid group acts on tensor powers of the integral Verma module of
//! `U_q sl(2)` through a normalized R-matrix. Each weight space `V_{n,r}` is a
//! finite block over `Z[q^±1, s^±1]`; the quantum trace of a braid is assembled
//! from the traces of those blocks, which are also the (graded, abelianized)
//! Lefschetz numbers of the braid acting on configuration spaces of `r` points
//! in the punctured disk.
//!
//! Modules:
//! - [`ring`]: Laurent polynomials, quantum integers, specializations.
//! - [`braid`]: braid words, parsing, writhe, closure data, Markov moves.
//! - [`verma`]: weight bases, R-matrix blocks, word evaluation, the truncated
//!   simple-module trace.
//! - [`invariants`]: colored Jones reports, Lefschetz and Nielsen data.
//! - [`homology`]: code sequences, barcodes and the pairing formula.
//! - [`skein`]: a brute-force Kauffman bracket oracle.
//! - [`cli`]: the command-line front end.

pub mod braid;
pub mod cli;
pub mod exec;
pub mod homology;
pub mod invariants;
pub mod ring;
pub mod skein;
pub mod verma;

pub use braid::{BraidError, BraidWord, ClosureClass, Letter};
pub use exec::Execution;
pub use invariants::{colored_jones, InvariantError, InvariantReport};
pub use ring::{LaurentPoly, Specialization};
