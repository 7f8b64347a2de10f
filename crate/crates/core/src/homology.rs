//! Code sequences, barcodes and the intersection-pairing form of the colored
//! Jones polynomial.
//!
//! Code sequences `U(k_0,…,k_{n-1})` index a basis of the configuration-space
//! homology in weight `r = Σ k_i`; barcodes `B(k_0,…,k_{n-1})` form the dual
//! basis, so `⟨U(k), B(k')⟩ = δ_{k,k'}`. The pairing `⟨β·U(k), B(k)⟩` is
//! therefore the diagonal entry of the braid action in the code basis, and
//!
//! ```text
//! J(N) = q^{-l·w(β) - nl} Σ_r Σ_{|k| = r} ⟨β·U(k), B(k)⟩_{aug^l} q^{2r}.
//! ```
//!
//! On two strands the code basis is realized inside `V⊗V` as
//! `U(k_0, k_1) = F^{(k_0)} h_{k_1}`, where `h_k` spans the highest-weight
//! vectors of weight `s^2 q^{-2k}`. Braids act on it diagonally. On three or
//! more strands the pairings are read from the tensor basis with
//! `k_j ↔ i_{j+1}`; the weighted sums, being traces, agree with any basis.
//!
//! Reference identity (fork classes, not computed): `⟨F(r), B(r)⟩ = (r)_{-t}!`.

use std::fmt;

use crate::braid::BraidWord;
use crate::exec::Execution;
use crate::invariants::{framing_exponent, InvariantError};
use crate::ring::{narrow, Exponent, LaurentPoly, Specialization};
use crate::verma::action::{apply_e, apply_f, TensorVec};
use crate::verma::{evaluate_word, BlockMatrix, SparseVec, VermaError, WeightBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("cannot pair U{code} with B{bar}: they lie in different blocks")]
    BlockMismatch { code: CodeSequence, bar: Barcode },
}

macro_rules! index_tuple {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Vec<u32>);

        impl $name {
            pub fn new(k: Vec<u32>) -> Self {
                $name(k)
            }

            /// Number of strands (one slot per gap).
            pub fn n(&self) -> usize {
                self.0.len()
            }

            pub fn r(&self) -> u32 {
                self.0.iter().sum()
            }

            pub fn as_slice(&self) -> &[u32] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    };
}

index_tuple!(CodeSequence);
index_tuple!(Barcode);

impl CodeSequence {
    /// All code sequences of weight `r` on `n` strands, in block basis order.
    pub fn all(n: usize, r: u32) -> Vec<CodeSequence> {
        WeightBasis::new(n, r).iter().map(|c| CodeSequence(c.to_vec())).collect()
    }

    pub fn dual(&self) -> Barcode {
        Barcode(self.0.clone())
    }
}

/// Kronecker pairing between the code basis and its dual barcode basis.
pub fn dual_pairing(u: &CodeSequence, b: &Barcode) -> Result<LaurentPoly, HomologyError> {
    if u.n() != b.n() || u.r() != b.r() {
        return Err(HomologyError::BlockMismatch { code: u.clone(), bar: b.clone() });
    }
    Ok(if u.0 == b.0 { LaurentPoly::one() } else { LaurentPoly::zero() })
}

/// The matrix `⟨U(k), B(k')⟩` over the block `(n, r)`, rows by `k`.
pub fn dual_pairing_matrix(n: usize, r: u32) -> Vec<Vec<LaurentPoly>> {
    let codes = CodeSequence::all(n, r);
    codes
        .iter()
        .map(|u| {
            codes
                .iter()
                .map(|k| dual_pairing(u, &k.dual()).expect("same block"))
                .collect()
        })
        .collect()
}

/// `⟨σ1³ U(k_0, k_1), B(k_0, k_1)⟩` as the closed form
/// `(-1)^{k_1} (q^{2l})^{-3k_1} (-1)^{-3k_1(k_1-1)/2} t^{-3k_1(k_1-1)/2}`,
/// evaluated at `t = -q^{-2}` and `s = q^l`. It does not depend on `k_0`.
pub fn trefoil_pairing_closed_form(_k0: u32, k1: u32, l: u32) -> LaurentPoly {
    let k1 = k1 as i64;
    let half = 3 * k1 * (k1 - 1) / 2;
    let sign: i64 = if (k1 + half) % 2 == 0 { 1 } else { -1 };
    // q^{2l} enters as s^2 before augmentation
    let raw = LaurentPoly::monomial(sign, Exponent::new(0, narrow(-6 * k1), narrow(-half)));
    raw.specialize(&Specialization::SetT.then(Specialization::Augment(l)))
}

/// Highest-weight vector of weight `s^2 q^{-2k}` in `V⊗V`, normalized so
/// that the coefficient of `v_0 ⊗ v_k` is 1.
pub fn highest_weight_vector(k: u32) -> TensorVec {
    let mut out = TensorVec::new();
    let mut c = LaurentPoly::one();
    for a in 0..=k {
        if a > 0 {
            let b = (k - a) as i64;
            // c_a = -c_{a-1} s^{-1} q^{2b}
            c = c.mul_monomial(&(-1).into(), Exponent::new(narrow(2 * b), -1, 0));
        }
        out.insert(vec![a, k - a], c.clone());
    }
    debug_assert!(apply_e(&out).is_empty());
    out
}

/// `U(k_0, k_1) = F^{(k_0)} h_{k_1}` in the tensor basis of `V⊗V`.
pub fn code_vector(code: &CodeSequence) -> TensorVec {
    assert_eq!(code.n(), 2, "code vectors are realized on two strands");
    apply_f(code.0[0], &highest_weight_vector(code.0[1]))
}

fn to_sparse(basis: &WeightBasis, v: &TensorVec) -> SparseVec {
    v.iter()
        .map(|(k, c)| (basis.position(k).expect("vector lies in the block"), c.clone()))
        .collect()
}

fn eigenvalue(m: &BlockMatrix, v: &SparseVec, code: &CodeSequence) -> Result<LaurentPoly, VermaError> {
    let image = m.apply(v);
    let (&pivot, c) = v.iter().next().expect("code vectors are nonzero");
    let lambda = image
        .get(&pivot)
        .map(|x| x.exact_div(c))
        .unwrap_or_else(|| Some(LaurentPoly::zero()));
    let lambda = lambda.ok_or_else(|| VermaError::Convention(format!("U{code} is not an eigenvector")))?;
    let mut residual = image;
    crate::verma::axpy(&mut residual, &-lambda.clone(), v);
    if !residual.is_empty() {
        return Err(VermaError::Convention(format!("U{code} is not an eigenvector")));
    }
    Ok(lambda)
}

/// Unspecialized pairings `⟨β·U(k), B(k)⟩` for every code sequence of weight `r`.
pub fn code_pairings(w: &BraidWord, r: u32, exec: Execution) -> Result<Vec<(CodeSequence, LaurentPoly)>, VermaError> {
    let m = evaluate_word(w, r, exec)?;
    let codes = CodeSequence::all(w.strands(), r);
    if w.strands() != 2 {
        return Ok(codes.into_iter().zip(m.diagonal()).collect());
    }
    let basis = WeightBasis::new(2, r);
    let values = exec.try_map_indices(codes.len(), |i| {
        let v = to_sparse(&basis, &code_vector(&codes[i]));
        eigenvalue(&m, &v, &codes[i])
    })?;
    Ok(codes.into_iter().zip(values).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingRow {
    pub code: CodeSequence,
    /// `⟨β·U(k), B(k)⟩_{aug^l}`.
    pub pairing: LaurentPoly,
}

/// Specialized pairings for every weight `r = 0..=nl`.
pub fn pairing_table(w: &BraidWord, l: u32, exec: Execution) -> Result<Vec<PairingRow>, InvariantError> {
    let r_top = w.strands() as u32 * l;
    let per_r = exec.try_map_indices(r_top as usize + 1, |r| code_pairings(w, r as u32, exec))?;
    let aug = Specialization::Augment(l);
    Ok(per_r
        .into_iter()
        .flatten()
        .map(|(code, p)| PairingRow { code, pairing: p.specialize(&aug) })
        .collect())
}

/// The colored Jones polynomial assembled from pairings.
pub fn pairing_jones(w: &BraidWord, color: u32, exec: Execution) -> Result<LaurentPoly, InvariantError> {
    if color < 2 {
        return Err(InvariantError::InvalidColor(color));
    }
    if !w.is_knot() {
        return Err(InvariantError::NotAKnot { cycles: w.permutation_cycles() });
    }
    let l = color - 1;
    let shift = framing_exponent(w, l) - (w.strands() as i64) * (l as i64);
    Ok(pairing_table(w, l, exec)?
        .iter()
        .map(|row| {
            let e = Exponent::new(narrow(shift + 2 * row.code.r() as i64), 0, 0);
            row.pairing.mul_monomial(&1.into(), e)
        })
        .sum())
}

/// CSV with header `k_0,…,k_{n-1},pairing`, one row per code sequence.
pub fn render_pairing_csv(n: usize, rows: &[PairingRow]) -> String {
    let mut out: Vec<String> = (0..n).map(|i| format!("k_{i}")).collect();
    out.push("pairing".into());
    let mut s = out.join(",");
    s.push('\n');
    for row in rows {
        for k in row.code.as_slice() {
            s.push_str(&k.to_string());
            s.push(',');
        }
        s.push_str(&row.pairing.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_values() {
        for k0 in 0..4 {
            for l in 1..4 {
                assert!(trefoil_pairing_closed_form(k0, 0, l).is_one());
            }
        }
        assert_eq!(trefoil_pairing_closed_form(0, 1, 1), p("-q^-6"));
        assert_eq!(trefoil_pairing_closed_form(0, 2, 1), p("q^-6"));
        assert_eq!(trefoil_pairing_closed_form(1, 1, 2), p("-q^-12"));
    }

    #[test]
    fn closed_form_sum_reproduces_trefoil() {
        let mut sum = LaurentPoly::zero();
        for r in 0..=2u32 {
            for k1 in 0..=r {
                let e = Exponent::new(narrow(-5 + 2 * r as i64), 0, 0);
                sum += trefoil_pairing_closed_form(r - k1, k1, 1).mul_monomial(&1.into(), e);
            }
        }
        assert_eq!(sum, p("q^-1 + q^-3 + q^-5 - q^-9"));
    }

    #[test]
    fn kronecker_pairing() {
        let u = CodeSequence::new(vec![2, 1]);
        assert!(dual_pairing(&u, &Barcode::new(vec![2, 1])).unwrap().is_one());
        assert!(dual_pairing(&u, &Barcode::new(vec![1, 2])).unwrap().is_zero());
        assert!(dual_pairing(&u, &Barcode::new(vec![1, 1])).is_err());
        assert!(dual_pairing(&u, &Barcode::new(vec![1, 1, 1])).is_err());
        for r in 0..5 {
            assert!(dual_pairing(&CodeSequence::new(vec![r]), &Barcode::new(vec![r])).unwrap().is_one());
        }
    }

    #[test]
    fn highest_weight_vectors_are_killed_by_e() {
        for k in 0..6 {
            assert!(apply_e(&highest_weight_vector(k)).is_empty());
        }
    }

    #[test]
    fn trefoil_code_pairings_match_closed_form() {
        let w = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        for r in 0..=4 {
            for (code, value) in code_pairings(&w, r, Execution::default()).unwrap() {
                let (k0, k1) = (code.as_slice()[0], code.as_slice()[1]);
                for l in 1..=2 {
                    assert_eq!(
                        value.specialize(&Specialization::Augment(l)),
                        trefoil_pairing_closed_form(k0, k1, l),
                        "k = {code}, l = {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_pairings_are_one() {
        for n in 1..=3 {
            let w = BraidWord::identity(n).unwrap();
            for row in pairing_table(&w, 2, Execution::default()).unwrap() {
                assert!(row.pairing.is_one());
            }
        }
    }

    #[test]
    fn pairing_jones_trefoil_and_figure_eight() {
        let t = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        assert_eq!(pairing_jones(&t, 2, Execution::default()).unwrap(), p("q^-1 + q^-3 + q^-5 - q^-9"));
        let f8 = BraidWord::from_signed(3, &[1, -2, 1, -2]).unwrap();
        for n in 2..=3 {
            assert_eq!(
                pairing_jones(&f8, n, Execution::default()).unwrap(),
                crate::invariants::colored_jones(&f8, n, Execution::default()).unwrap().jones
            );
        }
    }

    #[test]
    fn csv_layout() {
        let t = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        let rows = pairing_table(&t, 1, Execution::default()).unwrap();
        assert_eq!(
            render_pairing_csv(2, &rows),
            "k_0,k_1,pairing\n0,0,1\n0,1,-q^-6\n1,0,1\n0,2,q^-6\n1,1,-q^-6\n2,0,1\n"
        );
    }
}
