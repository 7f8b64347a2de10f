use std::collections::BTreeMap;
use std::fmt::Write;

use crate::ring::{LaurentPoly, Specialization, Var};

/// Sparse column vector: basis position → nonzero coefficient.
pub type SparseVec = BTreeMap<usize, LaurentPoly>;

pub(crate) fn axpy(acc: &mut SparseVec, coeff: &LaurentPoly, x: &SparseVec) {
    for (row, v) in x {
        let term = coeff * v;
        match acc.get_mut(row) {
            Some(slot) => {
                *slot += &term;
                if slot.is_zero() {
                    acc.remove(row);
                }
            }
            None => {
                if !term.is_zero() {
                    acc.insert(*row, term);
                }
            }
        }
    }
}

/// A square sparse matrix over the Laurent ring acting on one weight block
/// `V_{n,r}`, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix {
    n: usize,
    r: u32,
    cols: Vec<SparseVec>,
}

impl BlockMatrix {
    pub fn from_columns(n: usize, r: u32, cols: Vec<SparseVec>) -> Self {
        let dim = cols.len();
        debug_assert!(cols.iter().all(|c| c.keys().all(|&k| k < dim)));
        debug_assert!(cols.iter().all(|c| c.values().all(|v| !v.is_zero())));
        BlockMatrix { n, r, cols }
    }

    pub fn identity(n: usize, r: u32, dim: usize) -> Self {
        let cols = (0..dim).map(|j| SparseVec::from([(j, LaurentPoly::one())])).collect();
        BlockMatrix { n, r, cols }
    }

    pub fn block(&self) -> (usize, u32) {
        (self.n, self.r)
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn get(&self, row: usize, col: usize) -> LaurentPoly {
        self.cols[col].get(&row).cloned().unwrap_or_default()
    }

    pub fn diagonal(&self) -> Vec<LaurentPoly> {
        (0..self.dim()).map(|j| self.get(j, j)).collect()
    }

    pub fn trace(&self) -> LaurentPoly {
        self.diagonal().into_iter().sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// `self · x`
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, coeff) in x {
            axpy(&mut out, coeff, &self.cols[*k]);
        }
        out
    }

    /// `self · other`
    pub fn mul(&self, other: &BlockMatrix) -> BlockMatrix {
        assert_eq!(self.dim(), other.dim(), "block dimension mismatch");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        BlockMatrix { n: self.n, r: self.r, cols }
    }

    pub fn is_identity(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| c.len() == 1 && c.get(&j).is_some_and(LaurentPoly::is_one))
    }

    /// Does any entry mention `var`?
    pub fn contains_var(&self, var: Var) -> bool {
        self.cols.iter().flat_map(|c| c.values()).any(|p| p.contains_var(var))
    }

    pub fn specialize(&self, phi: &Specialization) -> BlockMatrix {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(k, v)| (*k, v.specialize(phi)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        BlockMatrix { n: self.n, r: self.r, cols }
    }

    /// Nonzero entries in `(row, col)` order.
    pub fn entries(&self) -> Vec<(usize, usize, &LaurentPoly)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
            .collect();
        out.sort_by_key(|(i, j, _)| (*i, *j));
        out
    }

    /// Sparse triplet dump, one `(row, col) poly` line per nonzero entry.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, j, v) in self.entries() {
            writeln!(s, "({i}, {j}) {v}").expect("write to string");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn product_and_trace() {
        // [[0, x], [x, 1 - x^2]] with x = s^-1
        let m = BlockMatrix::from_columns(
            2,
            1,
            vec![
                SparseVec::from([(1, p("s^-1"))]),
                SparseVec::from([(0, p("s^-1")), (1, p("1 - s^-2"))]),
            ],
        );
        let cube = m.mul(&m).mul(&m);
        // characteristic roots are 1 and -s^-2
        assert_eq!(cube.trace(), p("1 - s^-6"));
        assert_eq!(m.mul(&BlockMatrix::identity(2, 1, 2)), m);
        assert!(BlockMatrix::identity(2, 1, 2).is_identity());
        assert!(!m.is_identity());
        assert_eq!(m.dump(), "(0, 1) s^-1\n(1, 0) s^-1\n(1, 1) 1 - s^-2\n");
    }
}
