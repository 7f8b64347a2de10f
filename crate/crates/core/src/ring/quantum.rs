//! Quantum integers, factorials and binomials in `Z[q^±1]`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{Exponent, LaurentPoly, RingError};

/// `[i]_q = q^(i-1) + q^(i-3) + ... + q^(1-i)`, the closed Laurent form of
/// `(q^i - q^-i) / (q - q^-1)`. `[0]_q` is the zero polynomial.
pub fn quantum_int(i: i64) -> Result<LaurentPoly, RingError> {
    if i < 0 {
        return Err(RingError::NegativeQuantumInteger(i));
    }
    let i = super::narrow(i);
    Ok(LaurentPoly::from_terms((0..i).map(|k| (1, Exponent::new(i - 1 - 2 * k, 0, 0)))))
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`, with `[0]_q! = 1`.
pub fn quantum_factorial(k: u32) -> LaurentPoly {
    (1..=k as i64).map(|i| quantum_int(i).expect("positive")).product()
}

fn binomial_memo() -> &'static Mutex<HashMap<(u32, u32), LaurentPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<(u32, u32), LaurentPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The quantum binomial `[k choose l]_q`, computed with the q-Pascal rule
/// `[k choose l] = q^-l [k-1 choose l] + q^(k-l) [k-1 choose l-1]`.
pub fn quantum_binomial(k: u32, l: u32) -> Result<LaurentPoly, RingError> {
    if l > k {
        return Err(RingError::BinomialOutOfRange { k, l });
    }
    Ok(binomial_cached(k, l.min(k - l)))
}

fn binomial_cached(k: u32, l: u32) -> LaurentPoly {
    if l == 0 || l == k {
        return LaurentPoly::one();
    }
    if let Some(hit) = binomial_memo().lock().expect("binomial memo poisoned").get(&(k, l)) {
        return hit.clone();
    }
    // symmetric in l <-> k-l, so the cache only holds l <= k/2
    let keep = |a: u32, b: u32| binomial_cached(a, b.min(a - b));
    let left = keep(k - 1, l).mul_monomial(&1.into(), Exponent::new(-(l as i32), 0, 0));
    let right = keep(k - 1, l - 1).mul_monomial(&1.into(), Exponent::new((k - l) as i32, 0, 0));
    let value = left + right;
    binomial_memo()
        .lock()
        .expect("binomial memo poisoned")
        .insert((k, l), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Specialization;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Long division of `q^(2i) - q^(-2i)` (as an honest polynomial in q after
    /// clearing `q^(2i)`) by `q^2 - 1`, the textbook way.
    fn quantum_int_by_long_division(i: i32) -> LaurentPoly {
        // (q^i - q^-i)/(q - q^-1) = q^(1-i) (q^(2i) - 1)/(q^2 - 1)
        let deg = 2 * i as usize;
        let mut num = vec![0i64; deg + 1];
        num[deg] = 1;
        num[0] = -1;
        let mut quot = vec![0i64; deg - 1];
        for d in (2..=deg).rev() {
            let c = num[d];
            quot[d - 2] = c;
            num[d] -= c;
            num[d - 2] += c;
        }
        assert!(num.iter().all(|&c| c == 0), "remainder must vanish");
        LaurentPoly::from_terms(
            quot.iter().enumerate().map(|(d, &c)| (c, Exponent::new(d as i32 + 1 - i, 0, 0))),
        )
    }

    #[test]
    fn quantum_int_examples() {
        assert!(quantum_int(1).unwrap().is_one());
        assert_eq!(quantum_int(2).unwrap(), p("q + q^-1"));
        assert_eq!(quantum_int(4).unwrap(), p("q^3 + q + q^-1 + q^-3"));
        assert!(quantum_int(0).unwrap().is_zero());
        assert_eq!(quantum_int(-1), Err(RingError::NegativeQuantumInteger(-1)));
    }

    #[test]
    fn quantum_int_matches_long_division() {
        for i in 1..=12 {
            assert_eq!(quantum_int(i as i64).unwrap(), quantum_int_by_long_division(i));
        }
    }

    #[test]
    fn quantum_factorial_examples() {
        assert!(quantum_factorial(0).is_one());
        assert_eq!(quantum_factorial(2), p("q + q^-1"));
        // (q + q^-1)(q^2 + 1 + q^-2), multiplied out by hand
        assert_eq!(quantum_factorial(3), p("q^3 + 2*q + 2*q^-1 + q^-3"));
    }

    #[test]
    fn quantum_binomial_examples() {
        for k in 0..6 {
            assert!(quantum_binomial(k, 0).unwrap().is_one());
        }
        assert_eq!(quantum_binomial(2, 1).unwrap(), p("q + q^-1"));
        // [4]!/([2]![2]!) with exact division
        let oracle = quantum_factorial(4)
            .exact_div(&(&quantum_factorial(2) * &quantum_factorial(2)))
            .unwrap();
        assert_eq!(oracle, p("q^4 + q^2 + 2 + q^-2 + q^-4"));
        assert_eq!(quantum_binomial(4, 2).unwrap(), oracle);
        assert_eq!(quantum_binomial(2, 3), Err(RingError::BinomialOutOfRange { k: 2, l: 3 }));
    }

    #[test]
    fn binomial_times_factorials_is_factorial() {
        for k in 0..=8 {
            for l in 0..=k {
                let lhs = &(&quantum_binomial(k, l).unwrap() * &quantum_factorial(l))
                    * &quantum_factorial(k - l);
                assert_eq!(lhs, quantum_factorial(k), "k={k} l={l}");
                assert_eq!(quantum_binomial(k, l).unwrap(), quantum_binomial(k, k - l).unwrap());
            }
        }
    }

    #[test]
    fn classical_limit_of_quantum_int() {
        for i in 1..=10 {
            let v = quantum_int(i).unwrap().specialize(&Specialization::Classical);
            assert_eq!(v, LaurentPoly::constant(i));
        }
    }
}
