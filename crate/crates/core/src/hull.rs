//! The associative hull `A = Alg(v0, v1)`.
//!
//! Words in the letters `x_i` and `v_j` are rewritten to a normal form with all
//! Grassmann letters on the left in increasing order, followed by a strictly
//! decreasing run of pivots. The rewriting rules are
//!
//! * `v_a x_k = v_a(x_k) − x_k v_a`
//! * `x_i x_j = −x_j x_i`, `x_i x_i = 0`
//! * `v_a v_a = x_{a+1} v_{a+2}`
//! * `v_a v_b = [v_a, v_b] − v_b v_a` for `a < b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::gradings::{WeightVector, Weighted};
use crate::grassmann::GrassmannMonomial;
use crate::operators::{apply_pivot, oracle_apply_vector, pivot_bracket, Element, OperatorMatrix, SparseVector};
use crate::operators::EvalDomain;
use crate::scalars::Ring;

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// `tail · v_{h_1} v_{h_2} ⋯` with `h_1 > h_2 > ⋯`; the pivot set is stored as a bit set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HullMonomial {
    pub tail: GrassmannMonomial,
    pub heads: u64,
}

/// A letter of a word in the hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(u8),
    V(u8),
}

impl HullMonomial {
    /// Panics if `heads` is empty.
    pub fn new(tail: GrassmannMonomial, heads: u64) -> Self {
        assert!(heads != 0, "a hull monomial needs at least one pivot");
        HullMonomial { tail, heads }
    }

    /// Length `n`: the largest pivot.
    pub fn head(self) -> u32 {
        63 - self.heads.leading_zeros()
    }

    /// The bits `α_{n−1} … α_0`.
    pub fn suffix(self) -> u64 {
        self.heads & !(1u64 << self.head())
    }

    pub fn pivots(self) -> impl Iterator<Item = u32> {
        let h = self.heads;
        (0..64u32).rev().filter(move |i| h >> i & 1 == 1)
    }

    pub fn word(self) -> Vec<Letter> {
        self.tail
            .indices()
            .map(|i| Letter::X(i as u8))
            .chain(self.pivots().map(|j| Letter::V(j as u8)))
            .collect()
    }

    pub fn parity(self) -> u32 {
        (self.tail.degree() + self.heads.count_ones()) % 2
    }

    /// Membership in the monomial basis of `A` (char ≠ 2).
    pub fn is_basis(self) -> bool {
        let n = self.head();
        let t = self.tail.bits();
        if t >> n != 0 {
            return false;
        }
        match n {
            0 => t == 0 && self.heads == 1,
            1 => t == 0,
            2 => t.count_ones() <= 1,
            _ => {
                let xi = (t >> (n - 2)).count_ones();
                let alpha_top = (self.heads >> (n - 1) & 1) as u32;
                if xi > 1 + alpha_top {
                    return false;
                }
                if n == 3 && t & 0b101 == 0b101 {
                    return t == 0b101 && alpha_top == 1;
                }
                true
            }
        }
    }
}

impl Weighted for HullMonomial {
    fn weight(&self) -> WeightVector {
        fast_weight(self.tail.bits(), self.heads)
    }
}

fn fast_weight(tail: u64, heads: u64) -> WeightVector {
    let swt = |b: u64| (b & EVEN_BITS).count_ones() as i128 - (b & !EVEN_BITS).count_ones() as i128;
    WeightVector::new(heads as i128 - tail as i128, swt(heads) - swt(tail))
}

impl fmt::Display for HullMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.tail.is_one() {
            write!(f, "{}·", self.tail)?;
        }
        for j in self.pivots() {
            write!(f, "v{j}")?;
        }
        Ok(())
    }
}

impl Serialize for HullMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits `x0x2v3v2` (separators `·` and `*` allowed) into letters.
pub fn parse_word(s: &str) -> Result<Vec<Letter>, Error> {
    let err = || Error::Parse(format!("bad hull word {s:?}"));
    let cleaned: String = s.chars().filter(|c| !matches!(c, '·' | '*' | ' ')).collect();
    let mut out = Vec::new();
    let mut chars = cleaned.chars().peekable();
    while let Some(c) = chars.next() {
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let i: u8 = digits.parse().map_err(|_| err())?;
        if i >= 62 {
            return Err(Error::IndexOutOfRange(i as usize));
        }
        out.push(match c {
            'x' => Letter::X(i),
            'v' => Letter::V(i),
            _ => return Err(err()),
        });
    }
    if out.is_empty() {
        return Err(err());
    }
    Ok(out)
}

fn as_normal_form(word: &[Letter]) -> Option<HullMonomial> {
    let (mut tail, mut heads) = (0u64, 0u64);
    let (mut last_x, mut last_v): (Option<u8>, Option<u8>) = (None, None);
    for l in word {
        match *l {
            Letter::X(i) => {
                if last_v.is_some() || last_x.is_some_and(|p| p >= i) {
                    return None;
                }
                last_x = Some(i);
                tail |= 1 << i;
            }
            Letter::V(j) => {
                if last_v.is_some_and(|p| p <= j) {
                    return None;
                }
                last_v = Some(j);
                heads |= 1 << j;
            }
        }
    }
    (heads != 0).then(|| HullMonomial::new(GrassmannMonomial::from_bits(tail), heads))
}

/// Strict parser: the word must already be a normal form.
impl FromStr for HullMonomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        as_normal_form(&parse_word(s)?).ok_or_else(|| Error::Parse(format!("{s:?} is not a normal-form hull word")))
    }
}

/// Finite combination of hull monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullElement<R: Ring> {
    ring: R,
    terms: BTreeMap<HullMonomial, R::Elem>,
}

fn accumulate<K: Ord, R: Ring>(ring: &R, map: &mut BTreeMap<K, R::Elem>, key: K, c: R::Elem) {
    if ring.is_zero(&c) {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = ring.add(e.get(), &c);
            if ring.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn tail_letters(t: GrassmannMonomial) -> impl Iterator<Item = Letter> {
    t.indices().map(|i| Letter::X(i as u8))
}

/// One rewriting step at the leftmost position out of normal order.
fn rewrite(word: &[Letter]) -> Option<Vec<(Vec<Letter>, i64)>> {
    let i = (0..word.len().saturating_sub(1)).find(|&i| match (word[i], word[i + 1]) {
        (Letter::V(_), Letter::X(_)) => true,
        (Letter::X(a), Letter::X(b)) => a >= b,
        (Letter::V(a), Letter::V(b)) => a <= b,
        (Letter::X(_), Letter::V(_)) => false,
    })?;
    let splice = |middle: &mut dyn Iterator<Item = Letter>| -> Vec<Letter> {
        word[..i].iter().copied().chain(middle).chain(word[i + 2..].iter().copied()).collect()
    };
    let mut out = Vec::new();
    match (word[i], word[i + 1]) {
        (Letter::V(a), Letter::X(k)) => {
            for (s, image) in apply_pivot(a as u32, GrassmannMonomial::letter(k as usize)) {
                out.push((splice(&mut tail_letters(image)), s as i64));
            }
            out.push((splice(&mut [Letter::X(k), Letter::V(a)].into_iter()), -1));
        }
        (Letter::X(a), Letter::X(b)) => {
            if a != b {
                out.push((splice(&mut [Letter::X(b), Letter::X(a)].into_iter()), -1));
            }
        }
        (Letter::V(a), Letter::V(b)) if a == b => {
            out.push((splice(&mut [Letter::X(a + 1), Letter::V(a + 2)].into_iter()), 1));
        }
        (Letter::V(a), Letter::V(b)) => {
            let (k, tail, h) = pivot_bracket(a as u32, b as u32);
            out.push((splice(&mut tail_letters(tail).chain([Letter::V(h as u8)])), k));
            out.push((splice(&mut [Letter::V(b), Letter::V(a)].into_iter()), -1));
        }
        (Letter::X(_), Letter::V(_)) => unreachable!(),
    }
    Some(out)
}

impl<R: Ring> HullElement<R> {
    pub fn zero(ring: R) -> Self {
        HullElement { ring, terms: BTreeMap::new() }
    }

    pub fn monomial(ring: R, m: HullMonomial) -> Self {
        let one = ring.one();
        HullElement { ring, terms: BTreeMap::from([(m, one)]) }
    }

    /// Embeds an element of the Lie superalgebra.
    pub fn from_element(u: &Element<R>) -> Self {
        let mut out = HullElement::zero(u.ring().clone());
        for (m, c) in u.terms() {
            out.add_term(HullMonomial::new(m.tail, 1 << m.head), c.clone());
        }
        out
    }

    /// Normal form of an arbitrary word with coefficient `c`.
    pub fn from_word(ring: R, word: &[Letter], c: R::Elem) -> Self {
        Self::normalize(ring, vec![(word.to_vec(), c)])
    }

    fn normalize(ring: R, words: Vec<(Vec<Letter>, R::Elem)>) -> Self {
        let mut agenda: BTreeMap<Vec<Letter>, R::Elem> = BTreeMap::new();
        for (w, c) in words {
            accumulate(&ring, &mut agenda, w, c);
        }
        let mut out = HullElement::zero(ring.clone());
        // equal words produced by different branches merge in the agenda before expansion
        while let Some((w, c)) = agenda.pop_last() {
            match rewrite(&w) {
                None => {
                    let m = as_normal_form(&w).expect("rewriting stops at normal forms");
                    out.add_term(m, c);
                }
                Some(steps) => {
                    for (w2, k) in steps {
                        if w2.iter().any(|l| matches!(l, Letter::X(i) | Letter::V(i) if *i >= 62)) {
                            panic!("hull normal form leaves the 62-letter index range");
                        }
                        accumulate(&ring, &mut agenda, w2, ring.mul_i64(&c, k));
                    }
                }
            }
        }
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&HullMonomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &HullMonomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, m: HullMonomial, c: R::Elem) {
        accumulate(&self.ring, &mut self.terms, m, c);
    }

    fn check_ring(&self, other: &Self) -> Result<(), Error> {
        if self.ring.characteristic() != other.ring.characteristic() || self.ring.name() != other.ring.name() {
            return Err(Error::RingMismatch);
        }
        Ok(())
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
        self.add(&other.scale(&self.ring.from_i64(-1)))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = HullElement::zero(self.ring.clone());
        for (m, d) in &self.terms {
            out.add_term(*m, self.ring.mul(c, d));
        }
        out
    }

    /// Associative product, renormalised.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        let mut words = Vec::with_capacity(self.len() * other.len());
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.word();
                w.extend(b.word());
                words.push((w, self.ring.mul(c, d)));
            }
        }
        Ok(Self::normalize(self.ring.clone(), words))
    }

    pub fn max_head(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.head()).max()
    }
}

impl<R: Ring> HullElement<R> {
    /// Parses `c·word ± …` as produced by `Display`; each word is brought to normal form.
    pub fn parse(ring: R, s: &str) -> Result<Self, Error> {
        let mut out = HullElement::zero(ring.clone());
        if s.trim() == "0" {
            return Ok(out);
        }
        if s.trim().is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        for (negative, term) in crate::operators::text::split_terms(s)? {
            let start = term.find(['x', 'v']).ok_or_else(|| Error::Parse(format!("no letters in `{term}`")))?;
            let coeff_text = term[..start].trim_end_matches(['·', '*']);
            let mut c = if coeff_text.is_empty() { ring.one() } else { ring.parse(coeff_text)? };
            if negative {
                c = ring.neg(&c);
            }
            let word = parse_word(&term[start..])?;
            if !word.iter().any(|l| matches!(l, Letter::V(_))) {
                return Err(Error::Parse(format!("`{term}` has no pivot")));
            }
            out = out.add(&HullElement::from_word(ring.clone(), &word, c))?;
        }
        Ok(out)
    }
}

/// `u · w` in the hull.
pub fn hull_product<R: Ring>(u: &HullElement<R>, w: &HullElement<R>) -> Result<HullElement<R>, Error> {
    u.mul(w)
}

impl<R: Ring> fmt::Display for HullElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = self.ring.format(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{magnitude}·{m}")?;
        }
        Ok(())
    }
}

fn left_multiply<R: Ring>(ring: &R, t: GrassmannMonomial, v: &SparseVector<R::Elem>) -> SparseVector<R::Elem> {
    let mut out = SparseVector::new();
    for (bits, c) in v {
        if let Some((s, m)) = t.multiply(GrassmannMonomial::from_bits(*bits)) {
            accumulate(ring, &mut out, m.bits(), ring.mul_i64(c, s as i64));
        }
    }
    out
}

/// Applies a hull element to `g` by composing the pivot actions right to left.
pub fn hull_oracle_apply<R: Ring>(u: &HullElement<R>, g: GrassmannMonomial) -> SparseVector<R::Elem> {
    let ring = u.ring();
    let mut out = SparseVector::new();
    for (m, c) in u.terms() {
        let mut v = SparseVector::from([(g.bits(), c.clone())]);
        for j in m.pivots().collect::<Vec<_>>().into_iter().rev() {
            v = oracle_apply_vector(&Element::pivot(ring.clone(), j), &v);
            if v.is_empty() {
                break;
            }
        }
        for (k, d) in left_multiply(ring, m.tail, &v) {
            accumulate(ring, &mut out, k, d);
        }
    }
    out
}

/// Full matrix of a hull element on `Λ_{<M}`.
pub fn hull_oracle_action<R: Ring>(u: &HullElement<R>, horizon: u32) -> Result<OperatorMatrix<R::Elem>, Error> {
    let columns = EvalDomain::Full
        .monomials(horizon)?
        .into_iter()
        .map(|g| hull_oracle_apply(u, g))
        .collect();
    Ok(OperatorMatrix { horizon, columns })
}

/// Whether the enumeration below is a basis (`true`) or only a spanning set.
pub fn enumeration_is_basis(characteristic: u64) -> bool {
    characteristic != 2
}

/// Visits every basis monomial of length `n`.
pub fn for_each_hull_monomial(n: u32, mut f: impl FnMut(HullMonomial)) {
    assert!(n < 62, "length out of range");
    let top = 1u64 << n;
    for suffix in 0..top {
        let heads = top | suffix;
        let tails: u64 = match n {
            0 | 1 => 1,
            _ => top,
        };
        for t in 0..tails {
            let m = HullMonomial { tail: GrassmannMonomial::from_bits(t), heads };
            if m.is_basis() {
                f(m);
            }
        }
    }
}

/// Basis monomials of length `n`, sorted.
pub fn enumerate_hull(n: u32) -> Vec<HullMonomial> {
    let mut out = Vec::new();
    for_each_hull_monomial(n, |m| out.push(m));
    out.sort();
    out
}

/// Number of basis monomials of length `n`.
pub fn hull_count(n: u32) -> u64 {
    match n {
        0 => 1,
        1 => 2,
        2 => 12,
        3 => 48,
        _ => 7u64 << (2 * n - 3),
    }
}

/// Largest length that can contain a monomial of degree `≤ m`, from `wt > 2^{n−2}` and `|swt| ≤ n + 1`.
fn max_length_for_degree(m: u64) -> u32 {
    let mut n = 0u32;
    // degree = (2 Z1 + Z2) / 3 > (2^{n−1} − n − 1) / 3
    while n < 40 && (((1i128 << (n + 1)) >> 2) - n as i128 - 1) < 3 * m as i128 {
        n += 1;
    }
    n
}

/// `dim A_d` for `d = 0 ..= max_degree` (index 0 is always zero).
pub fn hull_degree_dimensions(max_degree: u64) -> Vec<u64> {
    let mut dims = vec![0u64; max_degree as usize + 1];
    for n in 0..=max_length_for_degree(max_degree) {
        for_each_hull_monomial(n, |m| {
            let w = m.weight();
            let d = (2 * w.z1 + w.z2) / 3;
            if d >= 1 && d as u64 <= max_degree {
                dims[d as usize] += 1;
            }
        });
    }
    dims
}

/// `γ_A(m)`: basis monomials of degree at most `m`.
pub fn hull_growth(m: u64) -> u64 {
    hull_degree_dimensions(m).iter().sum()
}

/// `γ̃_A(m)`: basis monomials of weight at most `m`.
pub fn hull_weight_growth(m: u64) -> u64 {
    let mut count = 0u64;
    let mut n = 0u32;
    while n < 62 && (1u64 << n) >> 2 < m {
        for_each_hull_monomial(n, |h| {
            if h.weight().z1 <= m as i128 {
                count += 1;
            }
        });
        n += 1;
    }
    count
}

/// Whether `|Z2| < log2 Z1 + 3`, decided exactly.
pub fn within_curve(w: WeightVector) -> bool {
    let k = w.z2.abs() - 3;
    k < 0 || (k < 126 && w.z1 > 1i128 << k)
}
