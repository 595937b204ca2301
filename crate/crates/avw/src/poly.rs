//! Multivariate polynomials with exact rational coefficients.
//!
//! Distributed monomial representation: a map from exponent vectors to
//! coefficients, ordered graded-lexicographically so leading terms and
//! printed residuals are deterministic. Degrees here stay at most 6 in at
//! most 16 variables, so nothing fancier is warranted.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::scalar::{format_ratio, ExactScalar};

/// Exponent vector with graded-lex order (total degree first, then lex).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::unit(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Render with the given variable names, e.g. `x0^2*y3`.
    pub fn format(&self, names: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            if e == 1 {
                let _ = write!(out, "{}", names(i));
            } else {
                let _ = write!(out, "{}^{}", names(i), e);
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables. The zero test is syntactic: a value is
/// zero iff the term map is empty, and arithmetic never stores a zero
/// coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: ExactScalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), ExactScalar::from_integer(1.into()));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &ExactScalar) -> MPoly {
        if s.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Accumulate `self += p * s` without an intermediate clone.
    pub fn add_scaled(&mut self, p: &MPoly, s: &ExactScalar) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &p.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn eval(&self, point: &[ExactScalar]) -> ExactScalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Graded-lex-largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    /// Divide every coefficient exactly.
    pub fn div_scalar(&self, s: &ExactScalar) -> MPoly {
        assert!(!s.is_zero());
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / s))
                .collect(),
        }
    }

    pub fn format(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // print leading term first
        for (m, c) in self.terms.iter().rev() {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let _ = write!(out, "{}·{}", format_ratio(c), m.format(names));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn x(i: usize) -> MPoly {
        MPoly::var(4, i)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial { exps: vec![2, 0, 0] }; // x0^2
        let b = Monomial { exps: vec![1, 1, 0] }; // x0 x1
        let c = Monomial { exps: vec![0, 0, 1] }; // x2
        assert!(a > b, "same degree, lex on exponents");
        assert!(b > c, "higher degree wins");
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = x(0).mul(&x(1)); // x0 x1
        let q = x(1).mul(&x(0));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());

        let mut r = p.clone();
        r.add_assign(&p.scale(&int(-1)));
        assert!(r.is_zero());
    }

    #[test]
    fn eval_matches_expansion() {
        // (x0 + 2 x1)^2 = x0^2 + 4 x0 x1 + 4 x1^2
        let p = {
            let mut s = x(0);
            s.add_assign(&x(1).scale(&int(2)));
            s.mul(&s.clone())
        };
        assert_eq!(p.nterms(), 3);
        let point = [frac(1, 2), frac(1, 3), int(0), int(0)];
        let expected = frac(1, 4) + frac(4, 6) + frac(4, 9);
        assert_eq!(p.eval(&point), expected);
    }

    #[test]
    fn leading_term_is_grlex_max() {
        let mut p = x(3); // degree 1
        p.add_assign(&x(0).mul(&x(0))); // x0^2, degree 2
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m.exps(), &[2, 0, 0, 0]);
    }

    #[test]
    fn formatting() {
        let mut p = x(0).mul(&x(0)).scale(&frac(5, 2));
        p.add_assign(&x(2).scale(&int(-1)));
        let names = |i: usize| format!("x{i}");
        assert_eq!(p.format(&names), "5/2·x0^2 + -1·x2");
    }
}
