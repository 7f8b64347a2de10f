use std::collections::HashMap;

/// `C(r+n-1, n-1)`, the number of compositions of `r` into `n` parts.
pub fn weight_space_dim(n: usize, r: u32) -> u128 {
    if n == 0 {
        return u128::from(r == 0);
    }
    let k = (n - 1) as u128;
    let top = r as u128 + k;
    (1..=k).fold(1u128, |acc, i| acc * (top - k + i) / i)
}

/// Ordered basis `v_{i_1} ⊗ ... ⊗ v_{i_n}` of `V_{n,r}`, indexed by the
/// compositions `(i_1, ..., i_n)` of `r` in lexicographic order.
#[derive(Debug, Clone)]
pub struct WeightBasis {
    n: usize,
    r: u32,
    comps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl WeightBasis {
    pub fn new(n: usize, r: u32) -> Self {
        assert!(n >= 1, "weight basis needs at least one tensor factor");
        let mut comps = Vec::new();
        let mut cur = vec![0u32; n];
        fill(&mut cur, 0, r, &mut comps);
        let index = comps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        WeightBasis { n, r, comps, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn composition(&self, pos: usize) -> &[u32] {
        &self.comps[pos]
    }

    pub fn position(&self, comp: &[u32]) -> Option<usize> {
        self.index.get(comp).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.comps.iter().map(|c| c.as_slice())
    }
}

fn fill(cur: &mut Vec<u32>, slot: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if slot + 1 == cur.len() {
        cur[slot] = remaining;
        out.push(cur.clone());
        return;
    }
    for a in 0..=remaining {
        cur[slot] = a;
        fill(cur, slot + 1, remaining - a, out);
    }
}
