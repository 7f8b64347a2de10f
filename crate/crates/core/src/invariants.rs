//! Colored Jones polynomials assembled from weight-block traces, and the
//! graded Lefschetz data they decompose into.
//!
//! For a knot closure `β̂` with `n` strands and color `N = l + 1`,
//!
//! ```text
//! J(N) = q^{-l·w(β) - nl} Σ_{r=0}^{nl} aug^l(Tr(Q(β), V_{n,r})) q^{2r}
//! ```
//!
//! The braiding is normalized by `q^{-αα'/2}`, which removes `q^{l²/2}` from
//! the ribbon twist `q^{l(l+2)/2}` of the color-`N` module. A kink therefore
//! contributes `q^l`, and the writhe correction is `q^{-l·w}`; at `N = 2` this
//! is the familiar `q^{-w}`.
//!
//! and `L_r = (-1)^r aug^l(Tr(Q(β), V_{n,r}))` is the abelianized Lefschetz
//! number of the induced map on configurations of `r` points, specialized
//! at `s = q^l`. The weighting `q^{-nl} q^{2r}` (the action of `K^{-1}`) is
//! applied here and never inside the representation blocks.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::exec::Execution;
use crate::ring::{narrow, Exponent, LaurentPoly, Specialization};
use crate::verma::{word_trace, VermaError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("color N = {0} is not allowed; N must be at least 2")]
    InvalidColor(u32),
    #[error("the closure is not a knot; permutation cycles {cycles:?}")]
    NotAKnot { cycles: Vec<Vec<usize>> },
    #[error(transparent)]
    Verma(VermaError),
}

impl From<VermaError> for InvariantError {
    fn from(e: VermaError) -> Self {
        match e {
            VermaError::NotAKnot { cycles } => InvariantError::NotAKnot { cycles },
            other => InvariantError::Verma(other),
        }
    }
}

/// Data attached to one weight `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    pub r: u32,
    /// `Tr(Q(β), V_{n,r})` over `Z[q^±1, s^±1]`.
    pub graded_trace: LaurentPoly,
    /// `(-1)^r aug^l(graded_trace)`.
    pub lefschetz_abelianized: LaurentPoly,
    /// `lefschetz_abelianized` at `q = 1`.
    pub lefschetz_classical: BigInt,
    /// Number of monomials of `lefschetz_abelianized`.
    pub nonzero_monomials: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub braid: BraidWord,
    pub color: u32,
    pub writhe: i64,
    pub jones: LaurentPoly,
    pub per_r: Vec<WeightData>,
}

/// One row of [`nielsen_data`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NielsenRow {
    pub r: u32,
    pub nonzero_monomials: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub classical_lefschetz: BigInt,
}

/// Exponent of the writhe correction `q^{-l·w(β)}` for color `l + 1`.
pub fn framing_exponent(w: &BraidWord, l: u32) -> i64 {
    -(l as i64) * w.writhe()
}

fn check_knot(w: &BraidWord) -> Result<(), InvariantError> {
    if w.is_knot() {
        Ok(())
    } else {
        Err(InvariantError::NotAKnot { cycles: w.permutation_cycles() })
    }
}

fn weight_data(r: u32, graded_trace: LaurentPoly, l: u32) -> WeightData {
    let mut lefschetz = graded_trace.specialize(&Specialization::Augment(l));
    if r % 2 == 1 {
        lefschetz = -lefschetz;
    }
    let lefschetz_classical = lefschetz
        .specialize(&Specialization::Classical)
        .as_constant()
        .expect("a Laurent polynomial in q alone is an integer at q = 1");
    WeightData {
        r,
        nonzero_monomials: lefschetz.num_terms(),
        graded_trace,
        lefschetz_abelianized: lefschetz,
        lefschetz_classical,
    }
}

/// The `N`-colored Jones polynomial of the closure of `w`, with its per-weight
/// decomposition. Weights are traced concurrently; assembly is serial.
pub fn colored_jones(w: &BraidWord, color: u32, exec: Execution) -> Result<InvariantReport, InvariantError> {
    if color < 2 {
        return Err(InvariantError::InvalidColor(color));
    }
    check_knot(w)?;
    let l = color - 1;
    let n = w.strands() as u32;
    let r_top = n * l;
    let traces = exec.try_map_indices(r_top as usize + 1, |r| word_trace(w, r as u32, exec))?;
    if !traces[0].is_one() {
        return Err(InvariantError::Verma(VermaError::Convention(format!(
            "the weight-0 block must act by 1, found {}",
            traces[0]
        ))));
    }
    let per_r: Vec<WeightData> = traces
        .into_iter()
        .enumerate()
        .map(|(r, t)| weight_data(r as u32, t, l))
        .collect();
    let writhe = w.writhe();
    let shift = framing_exponent(w, l) - (n as i64) * (l as i64);
    let jones = per_r
        .iter()
        .map(|d| {
            let sign: BigInt = if d.r % 2 == 1 { (-1).into() } else { 1.into() };
            let e = Exponent::new(narrow(shift + 2 * d.r as i64), 0, 0);
            d.lefschetz_abelianized.mul_monomial(&sign, e)
        })
        .sum();
    Ok(InvariantReport { braid: w.clone(), color, writhe, jones, per_r })
}

/// `[L_H(β̂^r)]_{α=l} = (-1)^r aug^l(Tr(Q(β), V_{n,r}))` for `r = 1..=r_max`.
/// `r_max` may exceed `nl`.
pub fn lefschetz_numbers(w: &BraidWord, l: u32, r_max: u32, exec: Execution) -> Result<Vec<LaurentPoly>, InvariantError> {
    let data = lefschetz_table(w, l, r_max, exec)?;
    Ok(data.into_iter().map(|d| d.lefschetz_abelianized).collect())
}

/// Full per-weight rows for `r = 1..=r_max`.
pub fn lefschetz_table(w: &BraidWord, l: u32, r_max: u32, exec: Execution) -> Result<Vec<WeightData>, InvariantError> {
    let traces = exec.try_map_indices(r_max as usize, |k| word_trace(w, k as u32 + 1, exec))?;
    Ok(traces
        .into_iter()
        .enumerate()
        .map(|(k, t)| weight_data(k as u32 + 1, t, l))
        .collect())
}

/// Per weight: the monomial count of the specialized Lefschetz number (a
/// lower bound for the corresponding Nielsen number) and its value at `q = 1`.
pub fn nielsen_data(report: &InvariantReport) -> Vec<NielsenRow> {
    report
        .per_r
        .iter()
        .map(|d| NielsenRow {
            r: d.r,
            nonzero_monomials: d.nonzero_monomials,
            classical_lefschetz: d.lefschetz_classical.clone(),
        })
        .collect()
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    bigint_to_json(v).serialize(s)
}

fn bigint_to_json(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(x) => serde_json::Value::from(x),
        Err(_) => serde_json::Value::String(v.to_string()),
    }
}

fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    r: u32,
    trace: String,
    lefschetz: String,
    classical: serde_json::Value,
    nonzero: usize,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    braid: BraidWord,
    #[serde(rename = "N")]
    n: u32,
    writhe: i64,
    jones: String,
    per_r: Vec<WeightJson>,
}

impl Serialize for InvariantReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportJson {
            braid: self.braid.clone(),
            n: self.color,
            writhe: self.writhe,
            jones: self.jones.to_string(),
            per_r: self
                .per_r
                .iter()
                .map(|d| WeightJson {
                    r: d.r,
                    trace: d.graded_trace.to_string(),
                    lefschetz: d.lefschetz_abelianized.to_string(),
                    classical: bigint_to_json(&d.lefschetz_classical),
                    nonzero: d.nonzero_monomials,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InvariantReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = ReportJson::deserialize(d)?;
        let poly = |s: &str| s.parse::<LaurentPoly>().map_err(D::Error::custom);
        let per_r = j
            .per_r
            .iter()
            .map(|x| {
                Ok(WeightData {
                    r: x.r,
                    graded_trace: poly(&x.trace)?,
                    lefschetz_abelianized: poly(&x.lefschetz)?,
                    lefschetz_classical: bigint_from_json(&x.classical)
                        .ok_or_else(|| D::Error::custom("classical must be an integer"))?,
                    nonzero_monomials: x.nonzero,
                })
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        Ok(InvariantReport { braid: j.braid, color: j.n, writhe: j.writhe, jones: poly(&j.jones)?, per_r })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quantum_int;

    fn w(n: usize, word: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, word).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_two_colored() {
        let rep = colored_jones(&w(2, &[1, 1, 1]), 2, Execution::default()).unwrap();
        assert_eq!(rep.jones, p("q^-1 + q^-3 + q^-5 - q^-9"));
        assert_eq!(rep.writhe, 3);
        assert_eq!(rep.per_r.len(), 3);
        // r = 1: trace 1 - s^-6, L = -(1 - q^-6)
        assert_eq!(rep.per_r[1].graded_trace, p("1 - s^-6"));
        assert_eq!(rep.per_r[1].lefschetz_abelianized, p("q^-6 - 1"));
        assert_eq!(rep.per_r[1].lefschetz_classical, BigInt::from(0));
    }

    #[test]
    fn unknot_on_one_strand() {
        for n in 2..=6 {
            let rep = colored_jones(&w(1, &[]), n, Execution::default()).unwrap();
            assert_eq!(rep.jones, quantum_int(n as i64).unwrap());
            assert!(rep.per_r.iter().all(|d| d.graded_trace.is_one()));
        }
    }

    #[test]
    fn identity_braid_lefschetz_is_signed_dimension() {
        for n in 1..=3usize {
            let id = w(n, &[]);
            let ls = lefschetz_numbers(&id, 1, 5, Execution::default()).unwrap();
            for (k, l) in ls.iter().enumerate() {
                let r = k as u32 + 1;
                let dim = crate::verma::weight_space_dim(n, r) as i64;
                let sign = if r % 2 == 1 { -1 } else { 1 };
                assert_eq!(*l, LaurentPoly::constant(sign * dim), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn rejects_bad_color_and_links() {
        assert_eq!(colored_jones(&w(2, &[1, 1, 1]), 1, Execution::default()), Err(InvariantError::InvalidColor(1)));
        assert_eq!(
            colored_jones(&w(2, &[1, 1]), 2, Execution::default()),
            Err(InvariantError::NotAKnot { cycles: vec![vec![0], vec![1]] })
        );
    }

    #[test]
    fn nielsen_rows() {
        let rep = colored_jones(&w(1, &[]), 3, Execution::default()).unwrap();
        for row in nielsen_data(&rep) {
            assert_eq!(row.nonzero_monomials, 1);
            assert_eq!(row.classical_lefschetz, BigInt::from(if row.r % 2 == 1 { -1 } else { 1 }));
        }
        let zero = weight_data(1, LaurentPoly::zero(), 1);
        assert_eq!(zero.nonzero_monomials, 0);
    }

    #[test]
    fn trefoil_r2_nielsen_counts() {
        // closed form at l = 1: pairings 1, -q^-6, q^-6 on (2,0), (1,1), (0,2)
        // sum to 1, so L_2 = 1 with a single monomial
        let rep = colored_jones(&w(2, &[1, 1, 1]), 2, Execution::default()).unwrap();
        let rows = nielsen_data(&rep);
        assert_eq!(rows[2].nonzero_monomials, 1);
        assert_eq!(rows[2].classical_lefschetz, BigInt::from(1));
        assert_eq!(rows[1].nonzero_monomials, 2);
    }

    #[test]
    fn json_round_trip() {
        let rep = colored_jones(&w(3, &[1, -2, 1, -2]), 2, Execution::default()).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert!(s.starts_with(r#"{"braid":{"strands":3,"word":[1,-2,1,-2]},"N":2,"writhe":0,"jones":"#));
        let back: InvariantReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rep);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
