//! Verification suites run by `coloredjones verify`.

use std::io::{self, Write};

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::braid::BraidWord;
use crate::exec::Execution;
use crate::invariants::colored_jones;
use crate::ring::LaurentPoly;
use crate::skein::jones_from_bracket;
use crate::verma::{generator_block, BlockMatrix, VermaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Shipped table of known colored Jones polynomials.
    Golden,
    /// `N = 2` against the Kauffman bracket state sum.
    Oracle,
    /// Conjugation and both stabilizations on random knot words.
    Markov,
    /// Braid and inverse relations as exact block identities.
    BraidRelations,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenCase {
    pub name: String,
    pub strands: usize,
    pub word: Vec<i64>,
    #[serde(rename = "N")]
    pub color: u32,
    pub jones: String,
}

impl GoldenCase {
    pub fn braid(&self) -> BraidWord {
        BraidWord::from_signed(self.strands, &self.word).expect("golden words are valid")
    }

    pub fn expected(&self) -> LaurentPoly {
        self.jones.parse().expect("golden polynomials parse")
    }
}

pub fn golden_corpus() -> Vec<GoldenCase> {
    serde_json::from_str(include_str!("../../data/golden.json")).expect("golden corpus is valid JSON")
}

/// Named knot-closure words: unknot presentations, trefoil, figure-eight, 5_1.
pub fn knot_corpus() -> Vec<(&'static str, BraidWord)> {
    let w = |n, word: &[i64]| BraidWord::from_signed(n, word).expect("corpus words are valid");
    vec![
        ("unknot", w(1, &[])),
        ("unknot σ1", w(2, &[1])),
        ("unknot σ1^-1", w(2, &[-1])),
        ("unknot σ1σ2", w(3, &[1, 2])),
        ("unknot σ1σ2^-1", w(3, &[1, -2])),
        ("unknot σ1^-1σ2σ3^-1", w(4, &[-1, 2, -3])),
        ("trefoil", w(2, &[1, 1, 1])),
        ("trefoil mirror", w(2, &[-1, -1, -1])),
        ("trefoil σ1σ2σ1σ2", w(3, &[1, 2, 1, 2])),
        ("figure-eight", w(3, &[1, -2, 1, -2])),
        ("5_1", w(2, &[1, 1, 1, 1, 1])),
        ("5_2", w(3, &[1, 1, 1, 2, -1, 2])),
    ]
}

fn report(out: &mut dyn Write, ok: bool, what: &str, detail: impl FnOnce() -> String) -> io::Result<bool> {
    if ok {
        writeln!(out, "PASS {what}")?;
    } else {
        writeln!(out, "FAIL {what}: {}", detail())?;
    }
    Ok(ok)
}

fn show<E: std::fmt::Display>(r: &Result<LaurentPoly, E>) -> String {
    match r {
        Ok(p) => p.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Runs `suite`, printing one line per check and a summary. Returns whether
/// every check passed.
pub fn run_suite(suite: Suite, seed: u64, exec: Execution, out: &mut dyn Write) -> io::Result<bool> {
    let results = match suite {
        Suite::Golden => golden(exec, out)?,
        Suite::Oracle => oracle(seed, exec, out)?,
        Suite::Markov => markov(seed, exec, out)?,
        Suite::BraidRelations => braid_relations(exec, out)?,
    };
    let passed = results.iter().filter(|&&b| b).count();
    writeln!(out, "{passed}/{} passed", results.len())?;
    Ok(passed == results.len())
}

fn golden(exec: Execution, out: &mut dyn Write) -> io::Result<Vec<bool>> {
    golden_corpus()
        .iter()
        .map(|case| {
            let w = case.braid();
            let got = colored_jones(&w, case.color, exec).map(|r| r.jones);
            let expected = case.expected();
            report(out, got.as_ref() == Ok(&expected), &format!("golden {} N={}", case.name, case.color), || {
                format!("word {w} expected {expected} got {}", show(&got))
            })
        })
        .collect()
}

fn oracle(seed: u64, exec: Execution, out: &mut dyn Write) -> io::Result<Vec<bool>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases: Vec<(String, BraidWord)> =
        knot_corpus().into_iter().map(|(name, w)| (name.to_string(), w)).collect();
    for i in 0..10 {
        let n = 2 + i % 2;
        let w = BraidWord::random_knot(n, 10, &mut rng).expect("valid strands");
        cases.push((format!("random #{i}"), w));
    }
    cases
        .iter()
        .map(|(name, w)| {
            let a = colored_jones(w, 2, exec).map(|r| r.jones);
            let b = jones_from_bracket(w, exec);
            let ok = matches!((&a, &b), (Ok(x), Ok(y)) if x == y);
            report(out, ok, &format!("oracle {name}"), || {
                format!("word {w} weight-space {} bracket {}", show(&a), show(&b))
            })
        })
        .collect()
}

fn markov(seed: u64, exec: Execution, out: &mut dyn Write) -> io::Result<Vec<bool>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::new();
    for i in 0..20u64 {
        let n = 1 + (i % 3) as usize;
        let color = 2 + (i / 3 % 2) as u32;
        let w = BraidWord::random_knot(n, 6, &mut rng).expect("valid strands");
        let move_seed = seed.wrapping_add(i);
        let moved = [
            ("conjugate", w.conjugate(&w.random_conjugator(move_seed))),
            ("stabilize+", w.stabilize(true)),
            ("stabilize-", w.stabilize(false)),
        ];
        let base = colored_jones(&w, color, exec).map(|r| r.jones);
        for (kind, v) in moved {
            let got = colored_jones(&v, color, exec).map(|r| r.jones);
            let ok = base.is_ok() && got == base;
            results.push(report(out, ok, &format!("markov #{i} {kind} N={color}"), || {
                format!("word {w} gives {} but {v} gives {}", show(&base), show(&got))
            })?);
        }
    }
    Ok(results)
}

fn block(n: usize, r: u32, i: usize, inverse: bool) -> Result<BlockMatrix, VermaError> {
    generator_block(n, r, i, inverse).map(|b| (*b).clone())
}

/// Checks the braid relations, far commutation and `σ_i σ_i^{-1} = 1` on
/// every block `V_{n,r}` with `n ≤ n_max`, `r ≤ r_max`. Returns one
/// `(description, holds)` per identity.
pub fn relation_checks(n_max: usize, r_max: u32, exec: Execution) -> Vec<(String, Result<bool, VermaError>)> {
    let mut jobs = Vec::new();
    for n in 2..=n_max {
        for r in 0..=r_max {
            for i in 1..n {
                jobs.push((n, r, i, 0usize));
                for j in i + 1..n {
                    jobs.push((n, r, i, j));
                }
            }
        }
    }
    exec.map_indices(jobs.len(), |k| {
        let (n, r, i, j) = jobs[k];
        let check = || -> Result<bool, VermaError> {
            let s = block(n, r, i, false)?;
            if j == 0 {
                let si = block(n, r, i, true)?;
                return Ok(s.mul(&si).is_identity() && si.mul(&s).is_identity());
            }
            let t = block(n, r, j, false)?;
            if j == i + 1 {
                Ok(s.mul(&t).mul(&s) == t.mul(&s).mul(&t))
            } else {
                Ok(s.mul(&t) == t.mul(&s))
            }
        };
        let what = match j {
            0 => format!("n={n} r={r} s{i} s{i}^-1 = 1"),
            j if j == i + 1 => format!("n={n} r={r} s{i} s{j} s{i} = s{j} s{i} s{j}"),
            j => format!("n={n} r={r} s{i} s{j} = s{j} s{i}"),
        };
        (what, check())
    })
}

fn braid_relations(exec: Execution, out: &mut dyn Write) -> io::Result<Vec<bool>> {
    relation_checks(4, 4, exec)
        .into_iter()
        .map(|(what, res)| {
            let ok = matches!(res, Ok(true));
            report(out, ok, &format!("relation {what}"), || match res {
                Err(e) => format!("error: {e}"),
                _ => "blocks differ".into(),
            })
        })
        .collect()
}
