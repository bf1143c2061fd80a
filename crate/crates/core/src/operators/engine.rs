//! Integer structure constants of the pivot algebra.
//!
//! Brackets of monomials are computed from the derivation rule
//! `[f v_n, g v_m] = f v_n(g) v_m − (−1)^{|f v_n||g v_m|} g v_m(f) v_n + (−1)^{|g|} f g [v_n, v_m]`
//! together with the closed form of `[v_n, v_m]`.

use crate::error::Error;
use crate::grassmann::GrassmannMonomial;

use super::PivotMonomial;

/// `v_n` applied to a Grassmann monomial, as signed monomials.
///
/// On letters: `v_n(x_k)` is 0 for `k < n`, 1 for `k = n`, 0 for odd `k − n` and
/// `x_n ⋯ x_{k−1}` for even positive `k − n`; monomials follow by the odd Leibniz rule.
pub fn apply_pivot(n: u32, g: GrassmannMonomial) -> Vec<(i8, GrassmannMonomial)> {
    let n = n as usize;
    let mut out = Vec::new();
    for (pos, k) in g.indices().enumerate() {
        if k < n || (k - n) % 2 == 1 {
            continue;
        }
        let image = GrassmannMonomial::range(n, k);
        let below = GrassmannMonomial::from_bits(g.bits() & ((1u64 << k) - 1));
        let above = GrassmannMonomial::from_bits(g.bits() & !((1u64 << k) | ((1u64 << k) - 1)));
        let Some((s1, left)) = below.multiply(image) else { continue };
        let Some((s2, full)) = left.multiply(above) else { continue };
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        out.push((sign * s1 * s2, full));
    }
    out
}

/// `[v_n, v_m]` as `(coefficient, tail, head)`.
pub fn pivot_bracket(n: u32, m: u32) -> (i64, GrassmannMonomial, u32) {
    let (n, m) = if n <= m { (n, m) } else { (m, n) };
    let k = m - n;
    let run = GrassmannMonomial::range(n as usize, m as usize);
    if k % 2 == 0 {
        let tail = run.multiply(GrassmannMonomial::letter(m as usize + 1)).expect("disjoint").1;
        (2, tail, m + 2)
    } else {
        (-1, run, m + 1)
    }
}

fn sign_of(parity: u32) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn push(out: &mut Vec<(PivotMonomial, i64)>, m: PivotMonomial, k: i64) {
    if k == 0 {
        return;
    }
    if let Some(slot) = out.iter_mut().find(|(q, _)| *q == m) {
        slot.1 += k;
    } else {
        out.push((m, k));
    }
}

fn finish(mut out: Vec<(PivotMonomial, i64)>) -> Vec<(PivotMonomial, i64)> {
    out.retain(|(_, k)| *k != 0);
    out.sort_by_key(|(m, _)| *m);
    out
}

/// `[a, b]` for two monomials, with merged integer coefficients.
pub fn monomial_bracket(a: PivotMonomial, b: PivotMonomial) -> Vec<(PivotMonomial, i64)> {
    let (f, n) = (a.tail, a.head);
    let (g, m) = (b.tail, b.head);
    let mut out = Vec::new();

    for (s, h) in apply_pivot(n, g) {
        if let Some((s2, fh)) = f.multiply(h) {
            push(&mut out, PivotMonomial::new(fh, m), (s * s2) as i64);
        }
    }
    let swap = -sign_of(a.parity() * b.parity());
    for (s, h) in apply_pivot(m, f) {
        if let Some((s2, gh)) = g.multiply(h) {
            push(&mut out, PivotMonomial::new(gh, n), swap * (s * s2) as i64);
        }
    }
    if let Some((s, fg)) = f.multiply(g) {
        let (c, p, head) = pivot_bracket(n, m);
        if let Some((s2, tail)) = fg.multiply(p) {
            push(&mut out, PivotMonomial::new(tail, head), sign_of(g.degree()) * c * (s * s2) as i64);
        }
    }
    finish(out)
}

/// The associative square `(r v_n)² = r v_n(r) v_n`, plus `x_{n+1} v_{n+2}` when `r = 1`.
pub fn monomial_square(a: PivotMonomial) -> Vec<(PivotMonomial, i64)> {
    let mut out = Vec::new();
    for (s, h) in apply_pivot(a.head, a.tail) {
        if let Some((s2, rh)) = a.tail.multiply(h) {
            push(&mut out, PivotMonomial::new(rh, a.head), (s * s2) as i64);
        }
    }
    if a.tail.is_one() {
        push(&mut out, PivotMonomial::new(GrassmannMonomial::letter(a.head as usize + 1), a.head + 2), 1);
    }
    finish(out)
}

/// Finite rewriting of `v_n` as `Σ x_n⋯x_{n+2j−1} ∂_{n+2j}` plus one trailing pivot term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotExpansion {
    /// `(prefix, k)` stands for `prefix · ∂_k`.
    pub partials: Vec<(GrassmannMonomial, usize)>,
    pub trailing: PivotMonomial,
}

impl PivotExpansion {
    /// Renders e.g. `∂1 + x1x2·∂3 + x1x2x3x4·v5`.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = self
            .partials
            .iter()
            .map(|(p, k)| if p.is_one() { format!("∂{k}") } else { format!("{p}·∂{k}") })
            .collect();
        parts.push(self.trailing.to_string());
        parts.join(" + ")
    }
}

/// Expands `v_n` up to the limit `m > n`. For even `m − n` the trailing term is
/// `x_n⋯x_{m−1} v_m`; for odd `m − n` it is `x_n⋯x_{m−2} v_{m−1}`.
pub fn pivot_expand(n: u32, m: u32) -> Result<PivotExpansion, Error> {
    if m <= n {
        return Err(Error::ExpansionLimit { head: n, limit: m });
    }
    let top = if (m - n).is_multiple_of(2) { m } else { m - 1 };
    if top as usize >= crate::grassmann::INDEX_LIMIT {
        return Err(Error::IndexOutOfRange(top as usize));
    }
    let partials = (n..top)
        .step_by(2)
        .map(|k| (GrassmannMonomial::range(n as usize, k as usize), k as usize))
        .collect();
    Ok(PivotExpansion {
        partials,
        trailing: PivotMonomial::new(GrassmannMonomial::range(n as usize, top as usize), top),
    })
}
