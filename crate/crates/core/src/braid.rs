//! Braid words on `n` strands in the Artin generators `σ_i^±1`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator {letter} is out of range for {strands} strands")]
    IndexOutOfRange { letter: String, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
}

/// One Artin generator `σ_index` or its inverse. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(index: usize, inverse: bool) -> Self {
        Letter { index, inverse }
    }

    /// `+i` for `σ_i`, `-i` for `σ_i^-1`.
    pub fn from_signed(v: i64) -> Option<Self> {
        (v != 0).then(|| Letter::new(v.unsigned_abs() as usize, v < 0))
    }

    pub fn signed(&self) -> i64 {
        if self.inverse {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter::new(self.index, !self.inverse)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

/// Which strands close up into which components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureClass {
    pub is_knot: bool,
    pub component_count: usize,
}

/// A validated braid word. The JSON encoding is
/// `{"strands": n, "word": [±i, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidJson", into = "BraidJson")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct BraidJson {
    strands: usize,
    word: Vec<i64>,
}

impl TryFrom<BraidJson> for BraidWord {
    type Error = BraidError;
    fn try_from(j: BraidJson) -> Result<Self, BraidError> {
        BraidWord::from_signed(j.strands, &j.word)
    }
}

impl From<BraidWord> for BraidJson {
    fn from(w: BraidWord) -> Self {
        BraidJson { strands: w.strands, word: w.signed_letters() }
    }
}

/// One Markov move, as chosen by [`BraidWord::markov_move`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovMove {
    /// `γ w γ^-1`
    Conjugate(BraidWord),
    /// append `σ_n^±1` on a new strand
    Stabilize { positive: bool },
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::IndexOutOfRange { letter: bad.to_string(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn from_signed(strands: usize, word: &[i64]) -> Result<Self, BraidError> {
        let letters = word
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                Letter::from_signed(v).ok_or_else(|| BraidError::Syntax {
                    position: k,
                    message: "generator index 0 does not exist".into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Parses either the textual form `s1 s2^-1 s1` or the list form
    /// `[1,-2,1]` (negative entries are inverse generators).
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        let trimmed = text.trim_start();
        let offset = text.len() - trimmed.len();
        let letters = if trimmed.starts_with('[') {
            parse_list(trimmed, offset)?
        } else {
            parse_text(text)?
        };
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(Letter::signed).collect()
    }

    /// Sum of the crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(Letter::sign).sum()
    }

    /// `perm[p]` is the bottom position reached by the strand starting at
    /// top position `p` (0-based), multiplying transpositions in letter order.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let (a, b) = (l.index - 1, l.index);
            for p in at.iter_mut() {
                if *p == a {
                    *p = b;
                } else if *p == b {
                    *p = a;
                }
            }
        }
        at
    }

    /// Cycles of the permutation, each listed from its smallest element.
    pub fn permutation_cycles(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = perm[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn closure_class(&self) -> ClosureClass {
        let component_count = self.permutation_cycles().len();
        ClosureClass { is_knot: component_count == 1, component_count }
    }

    pub fn is_knot(&self) -> bool {
        self.closure_class().is_knot
    }

    /// Cancels adjacent `σ_i σ_i^-1` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    /// The group inverse: letters reversed and inverted.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inv()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Every crossing flipped, in place; the closure is the mirror image.
    pub fn mirror(&self) -> BraidWord {
        let letters = self.letters.iter().map(|l| l.inv()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Concatenation `self · other`. Panics on a strand-count mismatch.
    pub fn compose(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "composing braids on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// `γ · self · γ^-1`, unreduced.
    pub fn conjugate(&self, gamma: &BraidWord) -> BraidWord {
        gamma.compose(self).compose(&gamma.inverse())
    }

    /// Adds a strand and appends `σ_n^±1`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, !positive));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// A uniformly random word of the given length.
    pub fn random<R: Rng>(strands: usize, len: usize, rng: &mut R) -> Result<BraidWord, BraidError> {
        if strands < 2 {
            return BraidWord::new(strands, Vec::new());
        }
        let letters = (0..len)
            .map(|_| Letter::new(rng.gen_range(1..strands), rng.gen_bool(0.5)))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// A random word of length at most `max_len` whose closure is a knot.
    /// Panics if `max_len < strands - 1`, since no such word exists.
    pub fn random_knot<R: Rng>(strands: usize, max_len: usize, rng: &mut R) -> Result<BraidWord, BraidError> {
        if strands < 2 {
            return BraidWord::new(strands, Vec::new());
        }
        assert!(max_len + 1 >= strands, "a knot on {strands} strands needs at least {} letters", strands - 1);
        loop {
            let len = rng.gen_range(strands - 1..=max_len);
            let w = BraidWord::random(strands, len, rng)?;
            if w.is_knot() {
                return Ok(w);
            }
        }
    }

    /// Picks a conjugation (by a random word of length 1 to 3) or a positive
    /// or negative stabilization, deterministically from `seed`.
    pub fn markov_move(&self, seed: u64) -> (MarkovMove, BraidWord) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kind = if self.strands < 2 { 1 + rng.gen_range(0..2) } else { rng.gen_range(0..3) };
        match kind {
            0 => {
                let len = rng.gen_range(1..=3);
                let gamma = BraidWord::random(self.strands, len, &mut rng).expect("valid strands");
                let out = self.conjugate(&gamma);
                (MarkovMove::Conjugate(gamma), out)
            }
            1 => (MarkovMove::Stabilize { positive: true }, self.stabilize(true)),
            _ => (MarkovMove::Stabilize { positive: false }, self.stabilize(false)),
        }
    }

    /// The random conjugator [`markov_move`](Self::markov_move) would use for
    /// `seed` if it chose a conjugation.
    pub fn random_conjugator(&self, seed: u64) -> BraidWord {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = rng.gen_range(1..=3);
        BraidWord::random(self.strands, len, &mut rng).expect("valid strands")
    }

    /// Text form, e.g. `s1 s2^-1`.
    pub fn render_text(&self) -> String {
        self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// List form, e.g. `[1,-2]`.
    pub fn render_list(&self) -> String {
        let parts: Vec<String> = self.signed_letters().iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_list())
    }
}

fn syntax(position: usize, message: impl Into<String>) -> BraidError {
    BraidError::Syntax { position, message: message.into() }
}

fn parse_list(text: &str, offset: usize) -> Result<Vec<Letter>, BraidError> {
    let body = text.trim_end();
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| syntax(offset + body.len(), "list form must end with ']'"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    let mut pos = offset + 1;
    for item in inner.split(',') {
        let lead = item.len() - item.trim_start().len();
        let v: i64 = item
            .trim()
            .parse()
            .map_err(|_| syntax(pos + lead, format!("expected a nonzero integer, found {:?}", item.trim())))?;
        letters.push(Letter::from_signed(v).ok_or_else(|| syntax(pos + lead, "generator index 0 does not exist"))?);
        pos += item.len() + 1;
    }
    Ok(letters)
}

fn parse_text(text: &str) -> Result<Vec<Letter>, BraidError> {
    let mut letters = Vec::new();
    let mut pos = 0;
    for token in text.split_inclusive(char::is_whitespace) {
        let tok = token.trim_end();
        let start = pos;
        pos += token.len();
        if tok.is_empty() {
            continue;
        }
        let rest = tok
            .strip_prefix('s')
            .ok_or_else(|| syntax(start, format!("expected a letter like s1 or s1^-1, found {tok:?}")))?;
        let (digits, inverse) = match rest.strip_suffix("^-1") {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax(start, format!("expected a letter like s1 or s1^-1, found {tok:?}")));
        }
        let index: usize = digits.parse().map_err(|_| syntax(start + 1, "generator index too large"))?;
        if index == 0 {
            return Err(syntax(start + 1, "generator index 0 does not exist"));
        }
        letters.push(Letter::new(index, inverse));
    }
    Ok(letters)
}
