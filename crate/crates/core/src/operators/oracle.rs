//! Finite-dimensional oracle: elements act as explicit linear maps on `Λ(x_0 … x_{M−1})`.
//!
//! Pivots are applied through [`pivot_expand`] and `∂_k` only, never through the
//! closed action formula used by the engine.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::grassmann::GrassmannMonomial;
use crate::scalars::Ring;

use super::{pivot_expand, Element};

/// Largest horizon for which a full operator matrix is built.
pub const MAX_MATRIX_HORIZON: u32 = 20;

/// Sparse vector of the Grassmann algebra keyed by monomial bits.
pub type SparseVector<E> = BTreeMap<u64, E>;

/// Which basis monomials of `Λ_{<M}` an equality check evaluates on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalDomain {
    /// All `2^M` monomials.
    Full,
    /// Monomials of degree at most 2. Superderivations agree everywhere once they
    /// agree here, since both sides obey the Leibniz rule.
    LowDegree,
}

impl EvalDomain {
    pub fn monomials(self, horizon: u32) -> Result<Vec<GrassmannMonomial>, Error> {
        match self {
            EvalDomain::Full => {
                if horizon > MAX_MATRIX_HORIZON {
                    return Err(Error::HorizonTooLarge(horizon));
                }
                Ok((0..1u64 << horizon).map(GrassmannMonomial::from_bits).collect())
            }
            EvalDomain::LowDegree => {
                let m = horizon as usize;
                let mut out = vec![GrassmannMonomial::ONE];
                for i in 0..m {
                    out.push(GrassmannMonomial::letter(i));
                    for j in i + 1..m {
                        out.push(GrassmannMonomial::from_bits((1 << i) | (1 << j)));
                    }
                }
                Ok(out)
            }
        }
    }
}

fn add_into<R: Ring>(ring: &R, v: &mut SparseVector<R::Elem>, key: u64, c: R::Elem) {
    if ring.is_zero(&c) {
        return;
    }
    match v.get_mut(&key) {
        Some(old) => {
            let s = ring.add(old, &c);
            if ring.is_zero(&s) {
                v.remove(&key);
            } else {
                *old = s;
            }
        }
        None => {
            v.insert(key, c);
        }
    }
}

/// `u(g)` for a single basis monomial `g`.
pub fn oracle_apply<R: Ring>(u: &Element<R>, g: GrassmannMonomial) -> SparseVector<R::Elem> {
    let ring = u.ring();
    let mut out = SparseVector::new();
    let Some(top) = g.max_index() else { return out };
    for (m, c) in u.terms() {
        let n = m.head as usize;
        if n > top {
            continue;
        }
        // the trailing pivot of the expansion sits above every letter of g
        let limit = if (top + 1 - n).is_multiple_of(2) { top + 1 } else { top + 2 };
        let expansion = pivot_expand(m.head, limit as u32).expect("limit exceeds head");
        debug_assert!(expansion.trailing.head as usize > top);
        for (prefix, k) in &expansion.partials {
            let Some((s1, h)) = g.apply_partial(*k) else { continue };
            let Some((s2, ph)) = prefix.multiply(h) else { continue };
            let Some((s3, res)) = m.tail.multiply(ph) else { continue };
            add_into(ring, &mut out, res.bits(), ring.mul_i64(c, (s1 * s2 * s3) as i64));
        }
    }
    out
}

/// `u(v)` for a sparse vector `v`.
pub fn oracle_apply_vector<R: Ring>(u: &Element<R>, v: &SparseVector<R::Elem>) -> SparseVector<R::Elem> {
    let ring = u.ring();
    let mut out = SparseVector::new();
    for (bits, c) in v {
        for (k, d) in oracle_apply(u, GrassmannMonomial::from_bits(*bits)) {
            add_into(ring, &mut out, k, ring.mul(c, &d));
        }
    }
    out
}

fn parity_parts<R: Ring>(u: &Element<R>) -> [(u32, Element<R>); 2] {
    let mut even = Element::zero(u.ring().clone());
    let mut odd = Element::zero(u.ring().clone());
    for (m, c) in u.terms() {
        let target = if m.parity() == 0 { &mut even } else { &mut odd };
        target.add_term(*m, c.clone());
    }
    [(0, even), (1, odd)]
}

/// The operator supercommutator `U W − (−1)^{|U||W|} W U` evaluated on `g`,
/// extended bilinearly over the parity components.
pub fn oracle_supercommutator<R: Ring>(
    u: &Element<R>,
    w: &Element<R>,
    g: GrassmannMonomial,
) -> SparseVector<R::Elem> {
    let ring = u.ring();
    let mut out = SparseVector::new();
    let unit = SparseVector::from([(g.bits(), ring.one())]);
    for (pu, uu) in parity_parts(u).iter().filter(|(_, e)| !e.is_zero()) {
        for (pw, ww) in parity_parts(w).iter().filter(|(_, e)| !e.is_zero()) {
            let uw = oracle_apply_vector(uu, &oracle_apply_vector(ww, &unit));
            let wu = oracle_apply_vector(ww, &oracle_apply_vector(uu, &unit));
            let factor = if pu * pw == 1 { 1 } else { -1 };
            for (k, c) in uw {
                add_into(ring, &mut out, k, c);
            }
            for (k, c) in wu {
                add_into(ring, &mut out, k, ring.mul_i64(&c, factor));
            }
        }
    }
    out
}

/// Matrix of an element acting on the monomial basis of `Λ_{<M}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<E> {
    pub horizon: u32,
    /// `columns[b]` is the image of the monomial with bit pattern `b`.
    pub columns: Vec<SparseVector<E>>,
}

impl<E> OperatorMatrix<E> {
    pub fn image(&self, g: GrassmannMonomial) -> &SparseVector<E> {
        &self.columns[g.bits() as usize]
    }
}

/// Full matrix of `u` on `Λ_{<M}`; every head of `u` must lie below `M`.
pub fn oracle_action<R: Ring>(u: &Element<R>, horizon: u32) -> Result<OperatorMatrix<R::Elem>, Error> {
    if let Some(h) = u.max_head() {
        if h >= horizon {
            return Err(Error::HorizonTooSmall { horizon, head: h });
        }
    }
    let columns = EvalDomain::Full
        .monomials(horizon)?
        .into_iter()
        .map(|g| oracle_apply(u, g))
        .collect();
    Ok(OperatorMatrix { horizon, columns })
}

/// Checks the engine bracket against operator composition on every basis monomial of `Λ_{<M}`.
pub fn oracle_bracket_check<R: Ring>(u: &Element<R>, w: &Element<R>, horizon: u32) -> Result<bool, Error> {
    oracle_bracket_check_on(u, w, horizon, EvalDomain::Full)
}

/// As [`oracle_bracket_check`] on a chosen evaluation domain.
pub fn oracle_bracket_check_on<R: Ring>(
    u: &Element<R>,
    w: &Element<R>,
    horizon: u32,
    domain: EvalDomain,
) -> Result<bool, Error> {
    let engine = u.bracket(w)?;
    let head = [u.max_head(), w.max_head(), engine.max_head()].into_iter().flatten().max();
    if let Some(h) = head {
        if h + 2 >= horizon {
            return Err(Error::HorizonTooSmall { horizon, head: h });
        }
    }
    for g in domain.monomials(horizon)? {
        if oracle_apply(&engine, g) != oracle_supercommutator(u, w, g) {
            return Ok(false);
        }
    }
    Ok(true)
}
