use super::{narrow, Exponent, LaurentPoly};

/// A ring morphism out of `Z[q^±1, s^±1, t^±1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialization {
    /// `aug^l`: `s ↦ q^l`.
    Augment(u32),
    /// `t ↦ -q^-2`, the local-system value relevant to the Jones polynomial.
    SetT,
    /// `q ↦ 1`. Other variables are left alone.
    Classical,
    /// Apply each morphism in turn, left to right.
    Chain(Vec<Specialization>),
}

impl Specialization {
    /// `self` followed by `next`.
    pub fn then(self, next: Specialization) -> Specialization {
        match self {
            Specialization::Chain(mut v) => {
                v.push(next);
                Specialization::Chain(v)
            }
            first => Specialization::Chain(vec![first, next]),
        }
    }
}

impl LaurentPoly {
    pub fn specialize(&self, phi: &Specialization) -> LaurentPoly {
        match phi {
            Specialization::Augment(l) => {
                if !self.contains_var(super::Var::S) {
                    return self.clone();
                }
                let l = *l as i64;
                self.map_terms(|e, c| {
                    (c.clone(), Exponent::new(narrow(e.q as i64 + l * e.s as i64), 0, e.t))
                })
            }
            Specialization::SetT => self.map_terms(|e, c| {
                let c = if e.t % 2 != 0 { -c } else { c.clone() };
                (c, Exponent::new(narrow(e.q as i64 - 2 * e.t as i64), e.s, 0))
            }),
            Specialization::Classical => self.map_terms(|e, c| (c.clone(), Exponent::new(0, e.s, e.t))),
            Specialization::Chain(steps) => {
                steps.iter().fold(self.clone(), |acc, step| acc.specialize(step))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(p("s*q^-1").specialize(&Specialization::Augment(2)), p("q"));
        assert_eq!(p("t^2").specialize(&Specialization::SetT), p("q^-4"));
        assert_eq!(p("t^-1").specialize(&Specialization::SetT), p("-q^2"));
        assert_eq!(p("q + q^-1").specialize(&Specialization::Classical), p("2"));
    }

    #[test]
    fn augment_fixes_s_free_polynomials() {
        let x = p("3*q^5 - q^-2 + 7");
        for l in 0..4 {
            assert_eq!(x.specialize(&Specialization::Augment(l)), x);
        }
    }

    #[test]
    fn chains_compose_left_to_right() {
        let x = p("s^2*t - q");
        let chain = Specialization::Augment(1).then(Specialization::SetT).then(Specialization::Classical);
        assert_eq!(x.specialize(&chain), p("-2"));
    }
}
