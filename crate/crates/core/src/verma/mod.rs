//! The braid group action on weight spaces `V_{n,r}` of `(V^s)^{⊗n}`.
//!
//! `V^s` has basis `v_0, v_1, ...` with `K v_j = s q^{-2j} v_j`, `E v_j = v_{j-1}`
//! and divided powers `F^{(k)}` acting by [`f_divided_action`]. The generator
//! `σ_i` acts on factors `i, i+1` through the normalized braiding
//! `R̂ = q^{-αα'/2} T ∘ R`, with `s = q^α`. Everything here lives over
//! `Z[q^±1, s^±1]`; no half-integer exponent is ever formed.

pub mod action;
mod basis;
mod block;
pub(crate) use block::axpy;
mod local;
mod rep;
mod simple;

pub use basis::{weight_space_dim, WeightBasis};
pub use block::{BlockMatrix, SparseVec};
pub use local::{f_divided_action, local_r_matrix, LocalRMatrix};
pub use rep::{evaluate_word, generator_block, word_trace, BraidRepresentation};
pub use simple::{simple_module_trace, truncated_word_trace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    /// A block that must be invertible over the Laurent ring is not; this
    /// means an exponent convention is wrong, not that the input is bad.
    #[error("convention error: {0}")]
    Convention(String),
    #[error("the closure is not a knot; permutation cycles {cycles:?}")]
    NotAKnot { cycles: Vec<Vec<usize>> },
}
