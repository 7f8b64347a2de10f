use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::braid::{BraidWord, Letter};
use crate::exec::Execution;
use crate::ring::LaurentPoly;

use super::block::{BlockMatrix, SparseVec};
use super::{local_r_matrix, VermaError, WeightBasis};

type GeneratorKey = (usize, u32, usize, bool);

/// Caches weight bases and generator blocks. Lookups take a read lock;
/// misses are built outside the lock and inserted under the write lock, so
/// concurrent workers on different weights share one cache.
#[derive(Default)]
pub struct BraidRepresentation {
    bases: RwLock<HashMap<(usize, u32), Arc<WeightBasis>>>,
    generators: RwLock<HashMap<GeneratorKey, Arc<BlockMatrix>>>,
}

impl BraidRepresentation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance used by the free functions of this module.
    pub fn global() -> &'static BraidRepresentation {
        static GLOBAL: OnceLock<BraidRepresentation> = OnceLock::new();
        GLOBAL.get_or_init(BraidRepresentation::new)
    }

    pub fn basis(&self, n: usize, r: u32) -> Arc<WeightBasis> {
        if let Some(b) = self.bases.read().expect("basis cache poisoned").get(&(n, r)) {
            return b.clone();
        }
        let b = Arc::new(WeightBasis::new(n, r));
        self.bases
            .write()
            .expect("basis cache poisoned")
            .entry((n, r))
            .or_insert(b)
            .clone()
    }

    /// The matrix of `σ_i^{±1}` on `V_{n,r}`: `R̂^{±1}` on factors `i, i+1`
    /// (1-based), identity elsewhere.
    pub fn generator_block(
        &self,
        n: usize,
        r: u32,
        i: usize,
        inverse: bool,
    ) -> Result<Arc<BlockMatrix>, VermaError> {
        assert!(1 <= i && i < n, "generator σ_{i} does not exist on {n} strands");
        let key = (n, r, i, inverse);
        if let Some(g) = self.generators.read().expect("generator cache poisoned").get(&key) {
            return Ok(g.clone());
        }
        let basis = self.basis(n, r);
        let mut cols = Vec::with_capacity(basis.dim());
        let mut scratch = vec![0u32; n];
        for comp in basis.iter() {
            let (a, b) = (comp[i - 1], comp[i]);
            let local = local_r_matrix(a + b, inverse)?;
            let mut col = SparseVec::new();
            scratch.copy_from_slice(comp);
            for (a_out, c) in local.column(a) {
                scratch[i - 1] = *a_out;
                scratch[i] = a + b - a_out;
                let row = basis
                    .position(&scratch)
                    .expect("local braiding preserves the total weight");
                col.insert(row, c.clone());
            }
            cols.push(col);
        }
        let g = Arc::new(BlockMatrix::from_columns(n, r, cols));
        Ok(self
            .generators
            .write()
            .expect("generator cache poisoned")
            .entry(key)
            .or_insert(g)
            .clone())
    }

    fn generators_for(&self, w: &BraidWord, r: u32) -> Result<Vec<Arc<BlockMatrix>>, VermaError> {
        w.letters()
            .iter()
            .map(|l: &Letter| self.generator_block(w.strands(), r, l.index, l.inverse))
            .collect()
    }

    /// `Q(β)` on `V_{n,r}` as the ordered product of generator blocks.
    /// Columns are computed independently.
    pub fn evaluate_word(&self, w: &BraidWord, r: u32, exec: Execution) -> Result<BlockMatrix, VermaError> {
        let gens = self.generators_for(w, r)?;
        let dim = self.basis(w.strands(), r).dim();
        let cols = exec.map_indices(dim, |j| image_of_basis_vector(&gens, j));
        Ok(BlockMatrix::from_columns(w.strands(), r, cols))
    }

    /// `Tr(Q(β), V_{n,r})`, without materializing the full matrix.
    pub fn word_trace(&self, w: &BraidWord, r: u32, exec: Execution) -> Result<LaurentPoly, VermaError> {
        let gens = self.generators_for(w, r)?;
        let dim = self.basis(w.strands(), r).dim();
        let diag = exec.map_indices(dim, |j| {
            image_of_basis_vector(&gens, j).remove(&j).unwrap_or_default()
        });
        Ok(diag.into_iter().sum())
    }
}

/// `G_1 G_2 ... G_k e_j`, applying the last letter first.
fn image_of_basis_vector(gens: &[Arc<BlockMatrix>], j: usize) -> SparseVec {
    let mut v = SparseVec::from([(j, LaurentPoly::one())]);
    for g in gens.iter().rev() {
        v = g.apply(&v);
    }
    v
}

pub fn generator_block(n: usize, r: u32, i: usize, inverse: bool) -> Result<Arc<BlockMatrix>, VermaError> {
    BraidRepresentation::global().generator_block(n, r, i, inverse)
}

pub fn evaluate_word(w: &BraidWord, r: u32, exec: Execution) -> Result<BlockMatrix, VermaError> {
    BraidRepresentation::global().evaluate_word(w, r, exec)
}

pub fn word_trace(w: &BraidWord, r: u32, exec: Execution) -> Result<LaurentPoly, VermaError> {
    BraidRepresentation::global().word_trace(w, r, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    fn w(n: usize, word: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, word).unwrap()
    }

    fn block(n: usize, r: u32, word: &[i64]) -> BlockMatrix {
        evaluate_word(&w(n, word), r, Execution::default()).unwrap()
    }

    #[test]
    fn trivial_weight_is_one_by_one_identity() {
        for n in 2..=4 {
            for i in 1..n {
                for inv in [false, true] {
                    let g = generator_block(n, 0, i, inv).unwrap();
                    assert_eq!(g.dim(), 1);
                    assert!(g.is_identity());
                }
            }
        }
    }

    #[test]
    fn generators_are_inverse_pairs() {
        for n in 2..=4 {
            for r in 0..=5 {
                for i in 1..n {
                    let f = generator_block(n, r, i, false).unwrap();
                    let b = generator_block(n, r, i, true).unwrap();
                    assert!(f.mul(&b).is_identity(), "n={n} r={r} i={i}");
                    assert!(b.mul(&f).is_identity(), "n={n} r={r} i={i}");
                }
            }
        }
    }

    #[test]
    fn yang_baxter_on_three_strands() {
        for r in 0..=4 {
            assert_eq!(block(3, r, &[1, 2, 1]), block(3, r, &[2, 1, 2]), "r={r}");
        }
    }

    #[test]
    fn entries_live_over_q_and_s() {
        let m = block(3, 3, &[1, -2, 1, -2]);
        assert!(!m.contains_var(Var::T));
    }

    #[test]
    fn empty_word_and_word_times_inverse() {
        assert!(block(3, 3, &[]).is_identity());
        let x = w(3, &[1, -2, 2, 2, -1]);
        let xx = x.compose(&x.inverse());
        for r in 0..=3 {
            assert!(evaluate_word(&xx, r, Execution::Sequential).unwrap().is_identity());
        }
    }

    #[test]
    fn trace_path_matches_full_matrix() {
        let x = w(3, &[1, -2, 1, -2]);
        for r in 0..=3 {
            let full = evaluate_word(&x, r, Execution::Parallel).unwrap().trace();
            assert_eq!(word_trace(&x, r, Execution::Sequential).unwrap(), full);
        }
    }

    #[test]
    fn trefoil_weight_one_trace() {
        // two eigenvalues 1 and -s^-2, cubed
        let t = block(2, 1, &[1, 1, 1]);
        assert_eq!(t.trace(), "1 - s^-6".parse().unwrap());
    }
}
