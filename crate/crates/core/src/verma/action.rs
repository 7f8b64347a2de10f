//! `E`, `K` and divided powers `F^{(k)}` acting on `(V^s)^{⊗n}` through the
//! coproduct
//! `Δ(K) = K⊗K`, `Δ(E) = E⊗K + 1⊗E`,
//! `Δ(F^{(k)}) = Σ_j q^{-j(k-j)} K^{j-k} F^{(j)} ⊗ F^{(k-j)}`.

use std::collections::BTreeMap;

use crate::ring::{narrow, Exponent, LaurentPoly};

use super::f_divided_action;

/// A vector of `(V^s)^{⊗n}` in the tensor basis, keyed by composition.
pub type TensorVec = BTreeMap<Vec<u32>, LaurentPoly>;

fn add_into(out: &mut TensorVec, key: Vec<u32>, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match out.get_mut(&key) {
        Some(slot) => {
            *slot += &c;
            if slot.is_zero() {
                out.remove(&key);
            }
        }
        None => {
            out.insert(key, c);
        }
    }
}

/// Exponent of the `K` eigenvalue `s^n q^{-2 Σ i}` on `v_{i_1} ⊗ ... ⊗ v_{i_n}`.
pub fn k_weight(comp: &[u32]) -> Exponent {
    let total: i64 = comp.iter().map(|&x| x as i64).sum();
    Exponent::new(narrow(-2 * total), narrow(comp.len() as i64), 0)
}

pub fn apply_e(v: &TensorVec) -> TensorVec {
    let mut out = TensorVec::new();
    for (comp, c) in v {
        for p in 0..comp.len() {
            if comp[p] == 0 {
                continue;
            }
            // 1^{⊗p} ⊗ E ⊗ K^{⊗(n-p-1)}
            let k = k_weight(&comp[p + 1..]);
            let mut key = comp.clone();
            key[p] -= 1;
            add_into(&mut out, key, c.mul_monomial(&1.into(), k));
        }
    }
    out
}

/// `Δ^{(n)}(F^{(k)})` on a single basis vector.
fn f_on_basis(k: u32, comp: &[u32]) -> TensorVec {
    let mut out = TensorVec::new();
    if comp.len() == 1 {
        add_into(&mut out, vec![comp[0] + k], f_divided_action(k, comp[0]));
        return out;
    }
    let i = comp[0] as i64;
    for j in 0..=k {
        let (j64, k64) = (j as i64, k as i64);
        // q^{-j(k-j)} (s q^{-2(i+j)})^{j-k}
        let mono = Exponent::new(
            narrow(-j64 * (k64 - j64) - 2 * (i + j64) * (j64 - k64)),
            narrow(j64 - k64),
            0,
        );
        let head = f_divided_action(j, comp[0]).mul_monomial(&1.into(), mono);
        if head.is_zero() {
            continue;
        }
        for (tail, c) in f_on_basis(k - j, &comp[1..]) {
            let mut key = Vec::with_capacity(comp.len());
            key.push(comp[0] + j);
            key.extend_from_slice(&tail);
            add_into(&mut out, key, &head * &c);
        }
    }
    out
}

pub fn apply_f(k: u32, v: &TensorVec) -> TensorVec {
    let mut out = TensorVec::new();
    for (comp, c) in v {
        for (key, d) in f_on_basis(k, comp) {
            add_into(&mut out, key, c * &d);
        }
    }
    out
}
