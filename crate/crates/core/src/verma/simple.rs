//! The quantum trace on the simple modules `(S^l)^{⊗n}`.
//!
//! This path never looks at weight blocks: it specializes the local
//! braiding by `s ↦ q^l` first and then acts on the truncated basis
//! `{v_{i_1} ⊗ ... ⊗ v_{i_n} : every i_k ≤ l}`.

use std::collections::{BTreeMap, HashMap};

use crate::braid::BraidWord;
use crate::exec::Execution;
use crate::ring::{Exponent, LaurentPoly, Specialization};

use super::{local_r_matrix, VermaError};

type Local = Vec<Vec<(u32, LaurentPoly)>>;

struct Truncated {
    n: usize,
    l: u32,
    // (local weight, inverse) → columns specialized at s = q^l
    locals: HashMap<(u32, bool), Local>,
}

impl Truncated {
    fn new(n: usize, l: u32) -> Result<Self, VermaError> {
        let mut locals = HashMap::new();
        for r in 0..=2 * l {
            for inverse in [false, true] {
                let m = local_r_matrix(r, inverse)?;
                let cols = (0..=r)
                    .map(|a| {
                        m.column(a)
                            .iter()
                            .map(|(x, c)| (*x, c.specialize(&Specialization::Augment(l))))
                            .filter(|(_, c)| !c.is_zero())
                            .collect()
                    })
                    .collect();
                locals.insert((r, inverse), cols);
            }
        }
        Ok(Truncated { n, l, locals })
    }

    fn dim(&self) -> usize {
        (self.l as usize + 1).pow(self.n as u32)
    }

    fn decode(&self, mut idx: usize) -> Vec<u32> {
        let base = self.l as usize + 1;
        let mut t = vec![0u32; self.n];
        for slot in t.iter_mut().rev() {
            *slot = (idx % base) as u32;
            idx /= base;
        }
        t
    }

    fn encode(&self, t: &[u32]) -> usize {
        let base = self.l as usize + 1;
        t.iter().fold(0, |acc, &x| acc * base + x as usize)
    }

    fn apply(&self, index: usize, inverse: bool, v: &BTreeMap<usize, LaurentPoly>) -> Result<BTreeMap<usize, LaurentPoly>, VermaError> {
        let mut out: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (pos, coeff) in v {
            let mut t = self.decode(*pos);
            let (a, b) = (t[index - 1], t[index]);
            for (a_out, c) in &self.locals[&(a + b, inverse)][a as usize] {
                let b_out = a + b - a_out;
                if *a_out > self.l || b_out > self.l {
                    return Err(VermaError::Convention(format!(
                        "braiding maps v_{a}⊗v_{b} outside S^{l}⊗S^{l} (to v_{a_out}⊗v_{b_out})",
                        l = self.l
                    )));
                }
                t[index - 1] = *a_out;
                t[index] = b_out;
                let term = coeff * c;
                let slot = out.entry(self.encode(&t)).or_default();
                *slot += &term;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

/// `Tr(Q(β) K^{-1}, (S^l)^{⊗n})` for any braid; `K^{-1}` acts on a vector of
/// total weight `r` by `q^{-(nl - 2r)}`.
pub fn truncated_word_trace(w: &BraidWord, l: u32, exec: Execution) -> Result<LaurentPoly, VermaError> {
    let tr = Truncated::new(w.strands(), l)?;
    let nl = (w.strands() as i64) * l as i64;
    let diag = exec.try_map_indices(tr.dim(), |j| {
        let mut v = BTreeMap::from([(j, LaurentPoly::one())]);
        for letter in w.letters().iter().rev() {
            v = tr.apply(letter.index, letter.inverse, &v)?;
        }
        let weight: i64 = tr.decode(j).iter().map(|&x| x as i64).sum();
        let k_inv = Exponent::new(crate::ring::narrow(2 * weight - nl), 0, 0);
        Ok(v.remove(&j).unwrap_or_default().mul_monomial(&1.into(), k_inv))
    })?;
    Ok(diag.into_iter().sum())
}

/// The simple-module trace of a braid whose closure is a knot.
pub fn simple_module_trace(w: &BraidWord, l: u32, exec: Execution) -> Result<LaurentPoly, VermaError> {
    if !w.is_knot() {
        return Err(VermaError::NotAKnot { cycles: w.permutation_cycles() });
    }
    truncated_word_trace(w, l, exec)
}
