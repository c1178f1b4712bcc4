//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::CycInt;

/// Coefficient ring of a [`MultiPoly`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    /// Renders the coefficient in front of a monomial; `None` hides a unit coefficient.
    fn render(&self, has_monomial: bool) -> (bool, Option<String>);
}

impl Coefficient for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn render(&self, has_monomial: bool) -> (bool, Option<String>) {
        let negative = *self < 0;
        let mag = self.unsigned_abs();
        if mag == 1 && has_monomial {
            (negative, None)
        } else {
            (negative, Some(mag.to_string()))
        }
    }
}

impl Coefficient for CycInt {
    fn is_zero(&self) -> bool {
        CycInt::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn render(&self, has_monomial: bool) -> (bool, Option<String>) {
        match self.as_integer() {
            Ok(v) => v.render(has_monomial),
            Err(_) => (false, Some(self.to_string())),
        }
    }
}

/// Polynomial in named variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<C: Coefficient = i64> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

/// `prefix0, prefix1, …` starting at `start`.
pub fn numbered_vars(prefix: &str, start: usize, count: usize) -> Vec<String> {
    (start..start + count).map(|i| format!("{prefix}{i}")).collect()
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn new(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = MultiPoly::new(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: C) {
        assert_eq!(exponents.len(), self.vars.len(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(existing) => {
                let sum = existing.add(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&exponents);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exponents, coeff);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Option<&C> {
        self.terms.get(exponents)
    }

    /// Same terms under new variable names.
    pub fn with_vars(mut self, vars: Vec<String>) -> Self {
        assert_eq!(vars.len(), self.vars.len(), "variable count");
        self.vars = vars;
        self
    }

    /// Identifies variable `i` with new variable `target[i]`.
    pub fn merge_vars(&self, vars: Vec<String>, target: &[usize]) -> Self {
        assert_eq!(target.len(), self.vars.len(), "variable map length");
        let mut out = MultiPoly::new(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; out.vars.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[target[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Sum of coefficients, the value at the all-ones point.
    pub fn coefficient_sum(&self) -> Option<C> {
        let mut it = self.terms.values();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, c| acc.add(c)))
    }

    /// Total degree of every term, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl MultiPoly<i64> {
    /// Replaces every variable by a monomial in `vars`, `images[i]` being the exponent vector of
    /// the image of variable `i`.
    pub fn substitute_monomials(&self, vars: Vec<String>, images: &[Vec<u32>]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "substitution length");
        let mut out = MultiPoly::new(vars);
        for (e, &c) in &self.terms {
            let mut ne = vec![0u32; out.vars.len()];
            for (i, &k) in e.iter().enumerate() {
                for (slot, &d) in ne.iter_mut().zip(&images[i]) {
                    *slot += k * d;
                }
            }
            out.add_term(ne, c);
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&d, _)| d > 0)
                .map(|(&d, v)| if d == 1 { v.clone() } else { format!("{v}^{d}") })
                .collect();
            let (negative, coeff) = c.render(!factors.is_empty());
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts: Vec<String> = coeff.into_iter().collect();
            parts.extend(factors);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
