//! Elements of the pivot algebra in tail-times-pivot normal form `Σ c·r·v_n`.

mod engine;
mod oracle;
pub(crate) mod text;

pub use engine::{apply_pivot, monomial_bracket, monomial_square, pivot_bracket, pivot_expand, PivotExpansion};
pub use oracle::{
    oracle_action, oracle_apply, oracle_apply_vector, oracle_bracket_check, oracle_bracket_check_on, oracle_supercommutator, EvalDomain,
    OperatorMatrix, SparseVector,
};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::grassmann::GrassmannMonomial;
use crate::scalars::Ring;

/// The monomial `r·v_n`; ordered by head, then by tail bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PivotMonomial {
    pub head: u32,
    pub tail: GrassmannMonomial,
}

impl PivotMonomial {
    pub fn new(tail: GrassmannMonomial, head: u32) -> Self {
        PivotMonomial { head, tail }
    }

    pub fn pivot(n: u32) -> Self {
        PivotMonomial { head: n, tail: GrassmannMonomial::ONE }
    }

    /// Z2-degree: pivots are odd, each tail letter flips the parity.
    pub fn parity(self) -> u32 {
        (self.tail.degree() + 1) & 1
    }
}

impl fmt::Display for PivotMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tail.is_one() {
            write!(f, "v{}", self.head)
        } else {
            write!(f, "{}·v{}", self.tail, self.head)
        }
    }
}

/// A finite linear combination of pivot monomials over the ring `R`.
#[derive(Clone, Debug)]
pub struct Element<R: Ring> {
    ring: R,
    terms: BTreeMap<PivotMonomial, R::Elem>,
}

impl<R: Ring> PartialEq for Element<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<R: Ring> Eq for Element<R> {}

impl<R: Ring> Element<R> {
    pub fn zero(ring: R) -> Self {
        Element { ring, terms: BTreeMap::new() }
    }

    pub fn monomial(ring: R, m: PivotMonomial) -> Self {
        let one = ring.one();
        Self::term(ring, one, m)
    }

    pub fn pivot(ring: R, n: u32) -> Self {
        Self::monomial(ring, PivotMonomial::pivot(n))
    }

    pub fn term(ring: R, coeff: R::Elem, m: PivotMonomial) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(m, coeff);
        e
    }

    /// Builds an element from small integer coefficients.
    pub fn from_int_terms<I: IntoIterator<Item = (PivotMonomial, i64)>>(ring: R, terms: I) -> Self {
        let mut e = Self::zero(ring);
        for (m, c) in terms {
            let c = e.ring.from_i64(c);
            e.add_term(m, c);
        }
        e
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PivotMonomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = PivotMonomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, m: &PivotMonomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, m: PivotMonomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = self.ring.add(old, &c);
                if self.ring.is_zero(&sum) {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Adds `c·k·m` for a machine-integer multiplier `k`.
    pub(crate) fn add_scaled(&mut self, m: PivotMonomial, c: &R::Elem, k: i64) {
        if k != 0 {
            let v = self.ring.mul_i64(c, k);
            self.add_term(m, v);
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), Error> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.neg(&self.ring.one()))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (m, d) in &self.terms {
            out.add_term(*m, self.ring.mul(c, d));
        }
        out
    }

    /// Common Z2-degree of all terms; `None` for the zero element or mixed parities.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.parity().is_some()
    }

    pub fn max_head(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.head).max()
    }

    pub fn min_head(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.head).min()
    }

    /// The supercommutator `[u, w]` in normal form.
    pub fn bracket(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = self.ring.mul(ca, cb);
                for (m, k) in monomial_bracket(*a, *b) {
                    out.add_scaled(m, &c, k);
                }
            }
        }
        Ok(out)
    }

    /// The square `u² = Σ c_i² t_i² + Σ_{i<j} c_i c_j [t_i, t_j]`.
    ///
    /// Outside characteristic 2 the element must be odd, and the result is `½[u, u]`.
    /// In characteristic 2 every element is accepted and the result is the 2-map.
    pub fn square(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.ring.characteristic() != 2 {
            match self.parity() {
                None => return Err(Error::NotHomogeneous),
                Some(0) => return Err(Error::EvenSquare),
                Some(_) => {}
            }
        }
        let terms: Vec<_> = self.terms.iter().collect();
        let mut out = Self::zero(self.ring.clone());
        for (i, (a, ca)) in terms.iter().enumerate() {
            let c2 = self.ring.mul(ca, ca);
            for (m, k) in monomial_square(**a) {
                out.add_scaled(m, &c2, k);
            }
            for (b, cb) in &terms[i + 1..] {
                let c = self.ring.mul(ca, cb);
                for (m, k) in monomial_bracket(**a, **b) {
                    out.add_scaled(m, &c, k);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests;
