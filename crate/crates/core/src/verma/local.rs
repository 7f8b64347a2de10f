use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::ring::{quantum_binomial, Exponent, LaurentPoly};

use super::VermaError;

/// Coefficient of `v_{j+k}` in `F^{(k)} v_j`:
/// `[k+j choose j]_q · ∏_{m<k} (s q^{-m-j} - s^{-1} q^{j+m})`.
pub fn f_divided_action(k: u32, j: u32) -> LaurentPoly {
    let mut out = quantum_binomial(k + j, j).expect("j <= k + j");
    for m in 0..k as i32 {
        let j = j as i32;
        let factor = LaurentPoly::from_terms([
            (1, Exponent::new(-m - j, 1, 0)),
            (-1, Exponent::new(j + m, -1, 0)),
        ]);
        out *= &factor;
    }
    out
}

/// `R̂^{±1}` on the two-factor weight block `span{v_a ⊗ v_{r-a}}`.
///
/// Column `a` lists `(a', c)` with `R̂^{±1}(v_a ⊗ v_{r-a}) = Σ c · v_{a'} ⊗ v_{r-a'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRMatrix {
    r: u32,
    inverse: bool,
    columns: Vec<Vec<(u32, LaurentPoly)>>,
}

impl LocalRMatrix {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    /// Nonzero outputs for input `v_a ⊗ v_{r-a}`.
    pub fn column(&self, a: u32) -> &[(u32, LaurentPoly)] {
        &self.columns[a as usize]
    }

    pub fn get(&self, a_out: u32, a_in: u32) -> LaurentPoly {
        self.columns[a_in as usize]
            .iter()
            .find(|(x, _)| *x == a_out)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    fn dense(&self) -> Vec<Vec<LaurentPoly>> {
        let d = self.columns.len();
        let mut m = vec![vec![LaurentPoly::zero(); d]; d];
        for (a_in, col) in self.columns.iter().enumerate() {
            for (a_out, c) in col {
                m[*a_out as usize][a_in] = c.clone();
            }
        }
        m
    }

    fn from_dense(r: u32, inverse: bool, m: Vec<Vec<LaurentPoly>>) -> Self {
        let d = m.len();
        let columns = (0..d)
            .map(|j| {
                (0..d)
                    .filter(|&i| !m[i][j].is_zero())
                    .map(|i| (i as u32, m[i][j].clone()))
                    .collect()
            })
            .collect();
        LocalRMatrix { r, inverse, columns }
    }
}

/// `R̂(v_a ⊗ v_b) = Σ_{m=0}^{a} s^{-(a+b)} q^{2(a-m)(b+m)} q^{m(m-1)/2} f(m, b) · v_{b+m} ⊗ v_{a-m}`.
///
/// The Cartan part `q^{H⊗H/2}` evaluated on `v_{a-m} ⊗ v_{b+m}` together with the
/// normalization `q^{-α²/2}` is the monomial `s^{-(a+b)} q^{2(a-m)(b+m)}`.
fn forward(r: u32) -> LocalRMatrix {
    let columns = (0..=r)
        .map(|a| {
            let b = r - a;
            (0..=a)
                .filter_map(|m| {
                    let cartan = 2 * (a - m) as i64 * (b + m) as i64 + (m as i64 * (m as i64 - 1)) / 2;
                    let mono = Exponent::new(crate::ring::narrow(cartan), -(r as i32), 0);
                    let c = f_divided_action(m, b).mul_monomial(&1.into(), mono);
                    (!c.is_zero()).then_some((b + m, c))
                })
                .collect()
        })
        .collect();
    LocalRMatrix { r, inverse: false, columns }
}

/// Gauss–Jordan elimination over the Laurent ring. Every pivot must be a
/// unit so that the inverse has Laurent entries.
fn invert(m: &LocalRMatrix) -> Result<LocalRMatrix, VermaError> {
    let d = m.columns.len();
    let mut a = m.dense();
    let mut inv: Vec<Vec<LaurentPoly>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect();
    for col in 0..d {
        let pivot_row = (col..d).find(|&i| a[i][col].is_unit()).ok_or_else(|| {
            VermaError::Convention(format!(
                "local R-matrix block r={} has no unit pivot in column {col}; its inverse would leave the Laurent ring",
                m.r
            ))
        })?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let p_inv = a[col][col].unit_inverse().expect("unit pivot");
        for j in 0..d {
            a[col][j] = &a[col][j] * &p_inv;
            inv[col][j] = &inv[col][j] * &p_inv;
        }
        for i in 0..d {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for j in 0..d {
                let da = &factor * &a[col][j];
                a[i][j] -= &da;
                let di = &factor * &inv[col][j];
                inv[i][j] -= &di;
            }
        }
    }
    Ok(LocalRMatrix::from_dense(m.r, true, inv))
}

type Memo = Mutex<HashMap<(u32, bool), Arc<LocalRMatrix>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The normalized braiding (`inverse = false`) or its inverse on the local
/// weight-`r` block, shared across all generator positions.
pub fn local_r_matrix(r: u32, inverse: bool) -> Result<Arc<LocalRMatrix>, VermaError> {
    if let Some(hit) = memo().lock().expect("R-matrix memo poisoned").get(&(r, inverse)) {
        return Ok(hit.clone());
    }
    let built = if inverse { invert(&forward(r))? } else { forward(r) };
    let built = Arc::new(built);
    memo()
        .lock()
        .expect("R-matrix memo poisoned")
        .insert((r, inverse), built.clone());
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Specialization;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn f_action_examples() {
        for j in 0..5 {
            assert!(f_divided_action(0, j).is_one());
        }
        assert_eq!(f_divided_action(1, 0), p("s - s^-1"));
        // F^(k) v_j vanishes on S^l once k + j > l
        for l in 0..5 {
            assert!(f_divided_action(1, l).specialize(&Specialization::Augment(l)).is_zero());
            for j in 0..=l {
                for k in (l - j + 1)..(l - j + 3) {
                    assert!(f_divided_action(k, j).specialize(&Specialization::Augment(l)).is_zero());
                }
            }
        }
    }

    #[test]
    fn trivial_weight_block_is_one() {
        let r0 = local_r_matrix(0, false).unwrap();
        assert_eq!(r0.column(0), &[(0, LaurentPoly::one())]);
        let r0i = local_r_matrix(0, true).unwrap();
        assert_eq!(r0i.column(0), &[(0, LaurentPoly::one())]);
    }

    #[test]
    fn weight_one_block() {
        let r1 = local_r_matrix(1, false).unwrap();
        // R̂(v0⊗v1) = s^-1 v1⊗v0 ; R̂(v1⊗v0) = s^-1 v0⊗v1 + (1 - s^-2) v1⊗v0
        assert_eq!(r1.get(1, 0), p("s^-1"));
        assert_eq!(r1.get(0, 0), LaurentPoly::zero());
        assert_eq!(r1.get(0, 1), p("s^-1"));
        assert_eq!(r1.get(1, 1), p("1 - s^-2"));
    }

    #[test]
    fn inverse_composes_to_identity() {
        for r in 0..=6 {
            let f = local_r_matrix(r, false).unwrap();
            let b = local_r_matrix(r, true).unwrap();
            for a_in in 0..=r {
                for a_out in 0..=r {
                    let entry: LaurentPoly =
                        (0..=r).map(|k| &f.get(a_out, k) * &b.get(k, a_in)).sum();
                    let expect = if a_in == a_out { LaurentPoly::one() } else { LaurentPoly::zero() };
                    assert_eq!(entry, expect, "r={r} ({a_out},{a_in})");
                }
            }
        }
    }

    #[test]
    fn non_unit_pivot_is_a_convention_error() {
        let bad = LocalRMatrix::from_dense(1, false, vec![vec![p("2"), p("0")], vec![p("0"), p("1")]]);
        assert!(matches!(invert(&bad), Err(VermaError::Convention(_))));
    }
}
