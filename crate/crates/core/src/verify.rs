//! Checks of the structural properties: relations among pivots, ad-nilpotence,
//! non-nil witnesses, local nilpotency of the triangular components, ideal closures.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::basis::{enumerate_by_length, enumerate_by_weight, BasisKind};
use crate::error::Error;
use crate::gradings::{Component, MultiDegree, WeightVector, Weighted};
use crate::grassmann::GrassmannMonomial;
use crate::hull::HullElement;
use crate::operators::{monomial_bracket, oracle_apply, oracle_bracket_check_on, Element, EvalDomain, PivotMonomial};
use crate::scalars::{Field, PrimeField, Ring};
use crate::span::Echelon;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Named list of pass/fail checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}/{}", self.suite, c.name)?;
            } else {
                writeln!(f, "{tag} {}/{}: {}", self.suite, c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

fn pm(tail: GrassmannMonomial, head: u32) -> PivotMonomial {
    PivotMonomial::new(tail, head)
}

fn run(a: usize, b: usize) -> GrassmannMonomial {
    GrassmannMonomial::range(a, b)
}

fn with_letter(t: GrassmannMonomial, i: usize) -> GrassmannMonomial {
    GrassmannMonomial::from_bits(t.bits() | 1 << i)
}

/// Compares an engine result with an expected closed form, and both with the oracle.
fn relation<R: Ring>(
    report: &mut Report,
    name: String,
    engine: Result<Element<R>, Error>,
    expected: Element<R>,
    oracle: impl FnOnce() -> Result<bool, Error>,
) {
    match engine {
        Err(e) => report.push(name, false, e.to_string()),
        Ok(got) if got != expected => report.push(name, false, format!("engine gives {got}, expected {expected}")),
        Ok(got) => match oracle() {
            Ok(true) => report.push(name, true, format!("{got}")),
            Ok(false) => report.push(name, false, "operator composition disagrees"),
            Err(e) => report.push(name, false, e.to_string()),
        },
    }
}

fn square_matches_oracle<R: Ring>(u: &Element<R>, sq: &Element<R>, horizon: u32) -> Result<bool, Error> {
    for g in EvalDomain::LowDegree.monomials(horizon)? {
        let once = oracle_apply(u, g);
        let mut twice = BTreeMap::new();
        for (k, c) in once {
            for (j, d) in oracle_apply(u, GrassmannMonomial::from_bits(k)) {
                let ring = u.ring();
                let e = twice.entry(j).or_insert_with(|| ring.zero());
                *e = ring.add(e, &ring.mul(&c, &d));
            }
        }
        twice.retain(|_, c| !u.ring().is_zero(c));
        if twice != oracle_apply(sq, g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pivot relations for `i ≤ max_index` and the general products for `i + k ≤ max_index`,
/// each through the engine, the closed form and the operator oracle.
pub fn check_relations<R: Ring>(ring: R, max_index: u32) -> Report {
    let mut report = Report::new("relations");
    let v = |n: u32| Element::pivot(ring.clone(), n);
    let mono = |c: i64, t: GrassmannMonomial, h: u32| Element::from_int_terms(ring.clone(), [(pm(t, h), c)]);
    let horizon = |h: u32| h + 3;
    for i in 0..=max_index {
        let iu = i as usize;
        let sq_expected = mono(1, GrassmannMonomial::letter(iu + 1), i + 2);
        relation(&mut report, format!("v{i}^2"), v(i).square(), sq_expected.clone(), || {
            square_matches_oracle(&v(i), &sq_expected, horizon(i + 2))
        });
        relation(
            &mut report,
            format!("[v{i},v{i}]"),
            v(i).bracket(&v(i)),
            mono(2, GrassmannMonomial::letter(iu + 1), i + 2),
            || oracle_bracket_check_on(&v(i), &v(i), horizon(i + 2), EvalDomain::LowDegree),
        );
        relation(
            &mut report,
            format!("[v{i},v{}]", i + 1),
            v(i).bracket(&v(i + 1)),
            mono(-1, GrassmannMonomial::letter(iu), i + 2),
            || oracle_bracket_check_on(&v(i), &v(i + 1), horizon(i + 2), EvalDomain::LowDegree),
        );
        let inner = v(i).bracket(&v(i + 1)).expect("same ring");
        relation(
            &mut report,
            format!("[v{i},[v{i},v{}]]", i + 1),
            v(i).bracket(&inner),
            mono(-1, GrassmannMonomial::ONE, i + 2),
            || oracle_bracket_check_on(&v(i), &inner, horizon(i + 2), EvalDomain::LowDegree),
        );
        let sq = v(i).square().expect("odd pivot");
        relation(
            &mut report,
            format!("[v{i}^2,v{}]", i + 1),
            sq.bracket(&v(i + 1)),
            mono(-1, GrassmannMonomial::ONE, i + 2),
            || oracle_bracket_check_on(&sq, &v(i + 1), horizon(i + 2), EvalDomain::LowDegree),
        );
        let t = with_letter(run(iu, iu + 2), iu + 3);
        relation(
            &mut report,
            format!("[v{i},v{}]", i + 2),
            v(i).bracket(&v(i + 2)),
            mono(2, t, i + 4),
            || oracle_bracket_check_on(&v(i), &v(i + 2), horizon(i + 4), EvalDomain::LowDegree),
        );
    }
    for i in 0..=max_index {
        for k in 0..=max_index - i {
            let (iu, ku) = (i as usize, k as usize);
            let expected = if k % 2 == 0 {
                mono(2, with_letter(run(iu, iu + ku), iu + ku + 1), i + k + 2)
            } else {
                mono(-1, run(iu, iu + ku), i + k + 1)
            };
            let top = expected.max_head().unwrap_or(i + k);
            relation(
                &mut report,
                format!("[v{i},v{}] general", i + k),
                v(i).bracket(&v(i + k)),
                expected,
                || oracle_bracket_check_on(&v(i), &v(i + k), horizon(top), EvalDomain::LowDegree),
            );
        }
    }
    report
}

/// Outcome of an ad-nilpotence search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AdNilpotence {
    /// `(ad a)^degree` kills every probe; `bound` is the a priori bound.
    Nilpotent { degree: u64, bound: u64 },
    NotFoundBelow(u64),
}

fn even_bound(n: u32) -> u64 {
    // k = 2 N_1 − 1 with N_1 = N·2^N + 1
    let n1 = (n as u64).saturating_mul(1u64.checked_shl(n).unwrap_or(u64::MAX)).saturating_add(1);
    n1.saturating_mul(2).saturating_sub(1)
}

/// A priori bound on the nilpotence degree of `ad a`, `a` homogeneous.
pub fn ad_nilpotence_bound<R: Ring>(a: &Element<R>) -> Result<u64, Error> {
    if a.is_zero() {
        return Ok(1);
    }
    match a.parity() {
        None => Err(Error::NotHomogeneous),
        Some(0) => Ok(even_bound(a.max_head().unwrap_or(0))),
        Some(_) => {
            // (ad a)^2 = ad(a^2)
            let sq = a.square()?;
            let n = sq.max_head().unwrap_or(0);
            Ok(even_bound(n).saturating_mul(2))
        }
    }
}

/// Least `k` such that `(ad a)^k` annihilates every basis monomial of weight `≤ probe_weight`.
pub fn ad_nilpotence_degree<R: Ring>(a: &Element<R>, probe_weight: u64, shape: BasisKind) -> Result<AdNilpotence, Error> {
    if !a.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let bound = ad_nilpotence_bound(a)?;
    let mut degree = 0u64;
    for probe in enumerate_by_weight(probe_weight, shape) {
        let mut b = Element::monomial(a.ring().clone(), probe.pivot_monomial());
        let mut k = 0u64;
        while !b.is_zero() {
            if k >= bound {
                return Ok(AdNilpotence::NotFoundBelow(bound));
            }
            b = a.bracket(&b)?;
            k += 1;
        }
        degree = degree.max(k);
    }
    Ok(AdNilpotence::Nilpotent { degree, bound })
}

/// `v, v^2, (v^2)^2, …` for `v = v_n + α x_n v_{n+1}` in characteristic 2, each checked
/// against `c (v_{n+k} + α^{(−1)^k} x_{n+k} v_{n+k+1})` with `c ≠ 0`.
pub fn non_nil_witness(ring: PrimeField, n: u32, alpha: u64, k_max: u32) -> Result<Vec<Element<PrimeField>>, Error> {
    if ring.characteristic() != 2 {
        return Err(Error::Precondition("the non-nil witness needs characteristic 2".into()));
    }
    let alpha = ring.from_i64((alpha % ring.characteristic()) as i64);
    if ring.is_zero(&alpha) {
        return Err(Error::ZeroElement);
    }
    if n + k_max + 1 >= 62 {
        return Err(Error::IndexOutOfRange((n + k_max + 1) as usize));
    }
    let mut v = Element::pivot(ring, n);
    v.add_term(pm(GrassmannMonomial::letter(n as usize), n + 1), alpha);
    let mut out = vec![v.clone()];
    for k in 1..=k_max {
        v = v.square()?;
        let m = n + k;
        let c = v.coeff(&PivotMonomial::pivot(m));
        let power = if k % 2 == 0 { alpha } else { ring.inv(&alpha).expect("nonzero") };
        let mut expected = Element::zero(ring);
        expected.add_term(PivotMonomial::pivot(m), c);
        expected.add_term(pm(GrassmannMonomial::letter(m as usize), m + 1), ring.mul(&c, &power));
        if ring.is_zero(&c) || v != expected {
            return Err(Error::Precondition(format!("v^(2^{k}) = {v} does not match the closed form")));
        }
        out.push(v.clone());
    }
    Ok(out)
}

/// Result of a local-nilpotency probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalNilpotencyReport {
    pub component: Component,
    pub generators: Vec<String>,
    /// Least `k` with all left-normed commutators of `k` generators zero.
    pub lie_index: Option<u64>,
    pub lie_bound: u64,
    /// Least `k` with all associative products of `k` generators zero.
    pub assoc_index: Option<u64>,
    pub assoc_bound: u64,
}

impl LocalNilpotencyReport {
    pub fn passed(&self) -> bool {
        self.lie_index.is_some_and(|k| k <= self.lie_bound) && self.assoc_index.is_some_and(|k| k <= self.assoc_bound)
    }
}

fn first_at_least(f: impl Fn(u64) -> bool) -> u64 {
    (1u64..).find(|&b| f(b)).expect("bound exists")
}

fn pow2(e: i64) -> u128 {
    if e < 0 {
        0
    } else {
        1u128.checked_shl(e as u32).unwrap_or(u128::MAX)
    }
}

/// Bounds `(Lie, associative)` on the nilpotency index of algebras generated in one component.
///
/// A product of `B` generators of `R_+` has `Z2 ≥ B` and `Z1 ≤ B·w`, where `w` is the largest
/// generator weight; the corridor `Z2 < ½ log2 Z1 + 2` for `R` and `|Z2| < log2 Z1 + 3` for
/// `A` force it to vanish once `2^{2B−4} ≥ B·w` and `2^{B−3} ≥ B·w` respectively. For `R_−`
/// the lower curve `Z2 > −½ log2 Z1 − 5/2` gives `2^{2B−5} ≥ B·w`. In `R_0` the Grassmann
/// counting argument gives `N·2^N + 1` for generators of length at most `N`.
pub fn local_nilpotency_bounds(component: Component, max_weight: u64, max_length: u32) -> (u64, u64) {
    let w = max_weight as u128;
    let hull = first_at_least(|b| pow2(b as i64 - 3) >= b as u128 * w);
    match component {
        Component::Plus => (first_at_least(|b| pow2(2 * b as i64 - 4) >= b as u128 * w), hull),
        Component::Minus => (first_at_least(|b| pow2(2 * b as i64 - 5) >= b as u128 * w), hull),
        Component::Zero => {
            let n = (max_length as u64).saturating_mul(1u64.checked_shl(max_length).unwrap_or(u64::MAX)).saturating_add(1);
            (n, n)
        }
    }
}

fn element_component<R: Ring>(u: &Element<R>) -> Option<Component> {
    let mut it = u.monomials().map(|m| m.component());
    let first = it.next()?;
    it.all(|c| c == first).then_some(first)
}

/// Computes the lower central and associative power series of the algebra generated by `gens`
/// until they vanish or pass the a priori bound.
pub fn local_nilpotency_sample<F: Field>(component: Component, gens: &[Element<F>]) -> Result<LocalNilpotencyReport, Error> {
    let ring = gens.first().ok_or_else(|| Error::Precondition("no generators".into()))?.ring().clone();
    for g in gens {
        if g.is_zero() {
            return Err(Error::ZeroElement);
        }
        if element_component(g) != Some(component) {
            return Err(Error::MixedComponents);
        }
    }
    let max_weight = gens.iter().flat_map(|g| g.monomials()).map(|m| m.weight().z1).max().unwrap_or(1).max(1) as u64;
    let max_length = gens.iter().filter_map(|g| g.max_head()).max().unwrap_or(0);
    let (lie_bound, assoc_bound) = local_nilpotency_bounds(component, max_weight, max_length);

    let mut layer: Vec<Element<F>> = gens.to_vec();
    let mut lie_index = None;
    for k in 1..=lie_bound + 1 {
        let mut span = Echelon::new(ring.clone());
        layer.retain(|e| span.insert(e.terms().map(|(m, c)| (*m, c.clone())).collect()));
        if layer.is_empty() {
            lie_index = Some(k);
            break;
        }
        let mut next = Vec::new();
        for e in &layer {
            for g in gens {
                next.push(e.bracket(g)?);
            }
        }
        layer = next;
    }

    let hgens: Vec<HullElement<F>> = gens.iter().map(HullElement::from_element).collect();
    let mut layer = hgens.clone();
    let mut assoc_index = None;
    for k in 1..=assoc_bound + 1 {
        let mut span = Echelon::new(ring.clone());
        layer.retain(|e| span.insert(e.terms().map(|(m, c)| (*m, c.clone())).collect()));
        if layer.is_empty() {
            assoc_index = Some(k);
            break;
        }
        let mut next = Vec::new();
        for e in &layer {
            for g in &hgens {
                next.push(e.mul(g)?);
            }
        }
        layer = next;
    }

    Ok(LocalNilpotencyReport {
        component,
        generators: gens.iter().map(|g| g.to_string()).collect(),
        lie_index,
        lie_bound,
        assoc_index,
        assoc_bound,
    })
}

/// Ideal generated by a seed, computed modulo the monomials of length above `max_len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealClosureReport {
    pub seed: String,
    /// Largest length `N` among the seed's monomials.
    pub seed_length: u32,
    pub max_len: u32,
    /// Least `s` such that every basis monomial of length in `[s, max_len]` lies in the ideal.
    pub stable_length: u32,
    /// Basis monomials of length `≤ max_len` outside the ideal.
    pub codim: u64,
    pub dimension: u64,
    /// Whether lengths `[N + 6, max_len]` are all reached.
    pub saturated: bool,
}

fn truncate<R: Ring>(u: &Element<R>, max_len: u32) -> Element<R> {
    let mut out = Element::zero(u.ring().clone());
    for (m, c) in u.terms() {
        if m.head <= max_len {
            out.add_term(*m, c.clone());
        }
    }
    out
}

fn vector<R: Ring>(u: &Element<R>) -> BTreeMap<PivotMonomial, R::Elem> {
    u.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// Breadth-first closure of `seed` under `ad v0`, `ad v1` (and squaring for the restricted shape).
pub fn just_infinite_closure<F: Field>(seed: &Element<F>, max_len: u32, shape: BasisKind) -> Result<IdealClosureReport, Error> {
    if seed.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = seed.max_head().unwrap_or(0);
    if n + 6 > max_len {
        return Err(Error::Precondition(format!("seed length {n} needs max_len ≥ {}", n + 6)));
    }
    if max_len >= 60 {
        return Err(Error::IndexOutOfRange(max_len as usize));
    }
    let ring = seed.ring().clone();
    let gens = [Element::pivot(ring.clone(), 0), Element::pivot(ring.clone(), 1)];
    let mut span = Echelon::new(ring.clone());
    let mut queue = VecDeque::new();
    let start = truncate(seed, max_len);
    if span.insert(vector(&start)) {
        queue.push_back(start);
    }
    while let Some(u) = queue.pop_front() {
        let mut images = Vec::with_capacity(3);
        for g in &gens {
            images.push(g.bracket(&u)?);
        }
        if shape == BasisKind::WithSquares {
            images.push(u.square()?);
        }
        for w in images {
            let w = truncate(&w, max_len);
            if !w.is_zero() && span.insert(vector(&w)) {
                queue.push_back(w);
            }
        }
    }

    let mut missing_by_length = vec![0u64; max_len as usize + 1];
    for len in 0..=max_len {
        for s in enumerate_by_length(len, shape) {
            let v = BTreeMap::from([(s.pivot_monomial(), ring.one())]);
            if !span.contains(v) {
                missing_by_length[len as usize] += 1;
            }
        }
    }
    let codim = missing_by_length.iter().sum();
    let stable_length = (0..=max_len + 1)
        .rev()
        .take_while(|&l| l > max_len || missing_by_length[l as usize] == 0)
        .last()
        .unwrap_or(max_len + 1);
    Ok(IdealClosureReport {
        seed: seed.to_string(),
        seed_length: n,
        max_len,
        stable_length,
        codim,
        dimension: span.rank() as u64,
        saturated: stable_length <= n + 6,
    })
}

fn reduce_int<R: Ring>(ring: &R, terms: Vec<(PivotMonomial, i64)>) -> Vec<PivotMonomial> {
    terms.into_iter().filter(|(_, k)| !ring.is_zero(&ring.from_i64(*k))).map(|(m, _)| m).collect()
}

/// `R(m)` is the span of basis monomials of length `≥ m` and `J = x0 R(m)`. Checks that
/// `dim R/R(m)` is finite, `J` is an abelian ideal of `R(m)` on all pairs of lengths
/// `m ..= m + pair_extent`, and that `v_i ∉ J` for `m ≤ i ≤ m + 10`.
pub fn not_hereditary_witness<R: Ring>(ring: R, shape: BasisKind, m: u32, pair_extent: u32) -> Result<Report, Error> {
    if m == 0 {
        return Err(Error::Precondition("cutoff must be at least 1".into()));
    }
    if m + pair_extent + 4 >= 60 || m + 10 >= 60 {
        return Err(Error::IndexOutOfRange((m + pair_extent + 4) as usize));
    }
    let mut report = Report::new("not-hereditary");
    let codim: usize = (0..m).map(|n| enumerate_by_length(n, shape).len()).sum();
    report.push(format!("dim R/R({m})"), codim > 0, codim.to_string());

    let rm: Vec<PivotMonomial> =
        (m..=m + pair_extent).flat_map(|n| enumerate_by_length(n, shape)).map(|s| s.pivot_monomial()).collect();
    let in_j = |p: &PivotMonomial| p.tail.contains(0) && p.head >= m;
    let j: Vec<PivotMonomial> = rm.iter().copied().filter(in_j).collect();

    let mut ideal_ok = true;
    let mut abelian_ok = true;
    let mut witness = String::new();
    for a in &j {
        for b in &rm {
            let terms = reduce_int(&ring, monomial_bracket(*a, *b));
            if !terms.iter().all(in_j) && ideal_ok {
                ideal_ok = false;
                witness = format!("[{a},{b}] leaves J");
            }
            if in_j(b) && !terms.is_empty() && abelian_ok {
                abelian_ok = false;
                witness = format!("[{a},{b}] ≠ 0");
            }
        }
    }
    report.push("J is an ideal of R(m)", ideal_ok, format!("{} x {} pairs {witness}", j.len(), rm.len()));
    report.push("J is abelian", abelian_ok, witness.clone());
    let pivots_outside = (m..=m + 10).all(|i| {
        let p = PivotMonomial::pivot(i);
        !in_j(&p) && p.head >= m
    });
    report.push(format!("v_i in R({m}) \\ J, i ≤ {}", m + 10), pivots_outside, "");
    Ok(report)
}

fn monomials_of_degree(shape: BasisKind, d: MultiDegree) -> Vec<PivotMonomial> {
    let deg = d.degree();
    // degree (2 Z1 + Z2)/3 grows like 2^{n−1}/3
    (0..=(2 * deg as u32 + 4).min(60))
        .take_while(|&n| n < 8 || (1i128 << (n - 3)) <= 3 * deg + 8)
        .flat_map(|n| enumerate_by_length(n, shape))
        .map(|s| s.pivot_monomial())
        .filter(|p| p.multidegree().is_ok_and(|q| q == d))
        .collect()
}

fn degree_dim(shape: BasisKind, deg: i128) -> usize {
    (0..=deg).map(|x1| monomials_of_degree(shape, MultiDegree::new(x1, deg - x1)).len()).sum()
}

/// The covering property fails in degree 15 of the characteristic-2 Lie algebra.
pub fn not_thin_witness() -> Report {
    let f2 = PrimeField::new(2).expect("2 is prime");
    let shape = BasisKind::FirstOnly;
    let mut report = Report::new("not-thin");
    let (d15, d16) = (degree_dim(shape, 15), degree_dim(shape, 16));
    report.push("dim R15 = dim R16 = 2", d15 == 2 && d16 == 2, format!("{d15}, {d16}"));
    let zs = monomials_of_degree(shape, MultiDegree::new(8, 7));
    let Some(z) = zs.first().copied() else {
        report.push("R_{8,7} nonzero", false, "no basis monomial");
        return report;
    };
    report.push("R_{8,7} nonzero", zs.len() == 1, format!("z = {z}"));
    let z = Element::monomial(f2, z);
    let b0 = Element::pivot(f2, 0).bracket(&z).expect("same ring");
    let b1 = Element::pivot(f2, 1).bracket(&z).expect("same ring");
    report.push("[v0,z] = 0", b0.is_zero(), format!("{b0}"));
    let mut span = Echelon::new(f2);
    for b in [&b0, &b1] {
        span.insert(vector(b));
    }
    report.push("dim [R1,z] < dim R16", span.rank() < d16, format!("{} < {d16}, [v1,z] = {b1}", span.rank()));
    report
}

/// `−½ log2 Z1 − 5/2 < Z2 < ½ log2 Z1 + 2`, decided exactly.
pub fn lie_corridor_holds(w: WeightVector) -> bool {
    let above = |k: i128| k < 0 || (k < 126 && w.z1 > 1i128 << k);
    w.z1 >= 1 && above(2 * w.z2 - 4) && above(-2 * w.z2 - 5)
}

/// Bracket engine against operator composition for all pairs of basis monomials of weight
/// `≤ max_weight`. The full space `Λ_{<M}` is used for `M ≤ 8`, monomials of degree `≤ 2` above.
pub fn oracle_suite<R: Ring>(ring: R, shape: BasisKind, max_weight: u64) -> Report {
    let mut report = Report::new("oracle");
    let mons = enumerate_by_weight(max_weight, shape);
    let mut failure = None;
    let mut count = 0u64;
    'outer: for a in &mons {
        let u = Element::monomial(ring.clone(), a.pivot_monomial());
        for b in &mons {
            let w = Element::monomial(ring.clone(), b.pivot_monomial());
            let top = match u.bracket(&w) {
                Ok(br) => [u.max_head(), w.max_head(), br.max_head()].into_iter().flatten().max().unwrap_or(0),
                Err(e) => {
                    failure = Some(format!("[{a},{b}]: {e}"));
                    break 'outer;
                }
            };
            let horizon = top + 3;
            let domain = if horizon <= 8 { EvalDomain::Full } else { EvalDomain::LowDegree };
            count += 1;
            if !matches!(oracle_bracket_check_on(&u, &w, horizon, domain), Ok(true)) {
                failure = Some(format!("[{a},{b}]"));
                break 'outer;
            }
        }
    }
    let name = format!("brackets of weight ≤ {max_weight}, char {}", ring.characteristic());
    match failure {
        None => report.push(name, true, format!("{count} pairs")),
        Some(f) => report.push(name, false, f),
    }
    report
}

/// Fine grading, two monomials per weight, length estimates and logarithmic corridors
/// for all basis monomials of weight `≤ 2^k`.
pub fn grading_suite(shape: BasisKind, k: u32) -> Report {
    let mut report = Report::new("grading");
    let limit = 1u64 << k;
    let mons = enumerate_by_weight(limit, shape);
    let mut seen: BTreeMap<MultiDegree, u32> = BTreeMap::new();
    let mut corridor = None;
    let mut estimates = None;
    for s in &mons {
        let w = s.weight();
        match w.multidegree() {
            Ok(d) => *seen.entry(d).or_insert(0) += 1,
            Err(_) => corridor = corridor.or(Some(format!("{s}: non-integral multidegree"))),
        }
        if !lie_corridor_holds(w) {
            corridor = corridor.or(Some(s.to_string()));
        }
        let n = s.length as i128;
        let wt_ok = (1i128 << n) < 4 * w.z1 && w.z1 <= 1i128 << n;
        let swt_ok = -n - 3 <= 2 * w.z2 && 2 * w.z2 <= n + 2;
        if !(wt_ok && swt_ok) {
            estimates = estimates.or(Some(s.to_string()));
        }
    }
    let worst = seen.values().copied().max().unwrap_or(0);
    report.push(format!("at most one monomial per multidegree, weight ≤ {limit}"), worst <= 1, format!("{} points", seen.len()));
    if shape == BasisKind::Full {
        let bad: Vec<u64> = (1..=limit)
            .filter(|&m| {
                let c = mons.iter().filter(|s| s.wt() == m as i128).count();
                c != if m == 1 || m == 3 { 1 } else { 2 }
            })
            .collect();
        report.push("two monomials per weight except 1 and 3", bad.is_empty(), format!("{bad:?}"));
    }
    report.push("length estimates", estimates.is_none(), estimates.unwrap_or_default());
    report.push("logarithmic corridor", corridor.is_none(), corridor.unwrap_or_default());
    report
}

/// Closed form of the weight growth for `m ≤ max_m` and the ordinary growth ratio at `ratio_at`.
pub fn growth_suite(shape: BasisKind, max_m: u64, ratio_at: u64) -> Report {
    use crate::growth::{ordinary_growth, weight_growth, weight_growth_closed_form};
    let mut report = Report::new("growth");
    let start = if shape == BasisKind::Full { 3 } else { 1 };
    let dims = crate::growth::weight_dimensions(max_m, shape);
    let mut total = 0u64;
    let mut bad = None;
    for m in 1..=max_m {
        total += dims[m as usize - 1];
        if m >= start && Some(total) != weight_growth_closed_form(m, shape) {
            bad = bad.or(Some(m));
        }
    }
    debug_assert_eq!(total, weight_growth(max_m, shape));
    report.push(format!("weight growth closed form, m ≤ {max_m}"), bad.is_none(), bad.map(|m| format!("fails at {m}")).unwrap_or_default());
    let ratio = ordinary_growth(ratio_at, shape) as f64 / ratio_at as f64;
    let (lo, hi) = if shape == BasisKind::Full { (2.9, 3.1) } else { (1.45, 1.55) };
    report.push(format!("γ(m)/m at m = {ratio_at}"), (lo..=hi).contains(&ratio), format!("{ratio:.4}"));
    report
}

/// Hull enumeration counts, weight bounds and corridor for lengths `≤ max_length`, and the
/// quadratic growth bracket for `m ≤ max_m`.
pub fn hull_suite(max_length: u32, max_m: u64) -> Report {
    use crate::hull::{enumerate_hull, for_each_hull_monomial, hull_count, hull_degree_dimensions, within_curve};
    let mut report = Report::new("hull");
    let counts_ok = (0..=max_length.min(9)).all(|n| enumerate_hull(n).len() as u64 == hull_count(n));
    report.push("basis counts by length", counts_ok, "");
    let mut bounds = None;
    let mut curve = None;
    for n in 0..=max_length {
        for_each_hull_monomial(n, |m| {
            let w = m.weight();
            let ok = (1i128 << n) < 4 * w.z1 && w.z1 < 1i128 << (n + 1) && w.z2.abs() <= n as i128 + 1;
            if !ok && bounds.is_none() {
                bounds = Some(m.to_string());
            }
            if !within_curve(w) && curve.is_none() {
                curve = Some(m.to_string());
            }
        });
    }
    report.push(format!("weight bounds, length ≤ {max_length}"), bounds.is_none(), bounds.unwrap_or_default());
    report.push(format!("|Z2| < log2 Z1 + 3, length ≤ {max_length}"), curve.is_none(), curve.unwrap_or_default());
    let dims = hull_degree_dimensions(max_m);
    let mut total = 0u64;
    let mut worst = (f64::INFINITY, 0f64);
    let mut ok = true;
    for m in 1..=max_m {
        total += dims[m as usize];
        let r = total as f64 / (m * m) as f64;
        worst = (worst.0.min(r), worst.1.max(r));
        ok &= (1.0 / 32.0..=256.0 / 3.0).contains(&r);
    }
    report.push(
        format!("γ_A(m)/m² in [1/32, 256/3], m ≤ {max_m}"),
        ok,
        format!("range [{:.4}, {:.4}]", worst.0, worst.1),
    );
    report
}

/// Homogeneous elements built from at most three basis monomials of length `≤ max_length`,
/// with seeded random nonzero coefficients; single monomials and pairs exhaustively,
/// triples exhaustively or sampled down to `max_triples`.
pub fn test_elements<R: Ring>(ring: R, shape: BasisKind, max_length: u32, max_triples: usize, seed: u64) -> Vec<Element<R>> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mons: Vec<PivotMonomial> =
        (0..=max_length).flat_map(|n| enumerate_by_length(n, shape)).map(|s| s.pivot_monomial()).collect();
    let p = ring.characteristic();
    let coeff = |rng: &mut rand_chacha::ChaCha8Rng| -> i64 {
        loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 && (p == 0 || c.rem_euclid(p as i64) != 0) {
                return c;
            }
        }
    };
    let mut out = Vec::new();
    for (i, a) in mons.iter().enumerate() {
        out.push(Element::from_int_terms(ring.clone(), [(*a, coeff(&mut rng))]));
        for b in &mons[i + 1..] {
            if a.parity() == b.parity() {
                out.push(Element::from_int_terms(ring.clone(), [(*a, coeff(&mut rng)), (*b, coeff(&mut rng))]));
            }
        }
    }
    let mut triples = Vec::new();
    for (i, a) in mons.iter().enumerate() {
        for (j, b) in mons.iter().enumerate().skip(i + 1) {
            for c in &mons[j + 1..] {
                if a.parity() == b.parity() && b.parity() == c.parity() {
                    triples.push([*a, *b, *c]);
                }
            }
        }
    }
    if triples.len() > max_triples {
        triples.shuffle(&mut rng);
        triples.truncate(max_triples);
        triples.sort();
    }
    for t in triples {
        let terms: Vec<_> = t.iter().map(|m| (*m, coeff(&mut rng))).collect();
        out.push(Element::from_int_terms(ring.clone(), terms));
    }
    out
}

/// Ad-nilpotence on all basis probes of weight `≤ probe_weight` for the given elements.
pub fn adnil_suite<R: Ring>(elements: &[Element<R>], shape: BasisKind, probe_weight: u64) -> Report {
    let mut report = Report::new("ad-nilpotence");
    let mut failure = None;
    let mut max_degree = 0u64;
    for a in elements {
        match ad_nilpotence_degree(a, probe_weight, shape) {
            Ok(AdNilpotence::Nilpotent { degree, .. }) => max_degree = max_degree.max(degree),
            Ok(AdNilpotence::NotFoundBelow(b)) => {
                failure = failure.or(Some(format!("{a}: probes survive {b} steps")));
            }
            Err(e) => failure = failure.or(Some(format!("{a}: {e}"))),
        }
    }
    report.push(
        format!("{} elements, probes of weight ≤ {probe_weight}", elements.len()),
        failure.is_none(),
        failure.unwrap_or_else(|| format!("largest degree {max_degree}")),
    );
    report
}

/// Local nilpotency for generator sets drawn from each triangular component.
pub fn localnil_suite<F: Field>(ring: F, shape: BasisKind, max_length: u32, seed: u64) -> Report {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("local-nilpotency");
    let mons: Vec<PivotMonomial> =
        (0..=max_length).flat_map(|n| enumerate_by_length(n, shape)).map(|s| s.pivot_monomial()).collect();
    for component in [Component::Plus, Component::Zero, Component::Minus] {
        let pool: Vec<PivotMonomial> = mons.iter().copied().filter(|m| m.component() == component).collect();
        let mut sets: Vec<Vec<PivotMonomial>> = pool.iter().map(|m| vec![*m]).collect();
        for _ in 0..4 {
            let k = 3.min(pool.len());
            sets.push(pool.choose_multiple(&mut rng, k).copied().collect());
        }
        for set in sets {
            let gens: Vec<Element<F>> = set.iter().map(|m| Element::monomial(ring.clone(), *m)).collect();
            let names: Vec<String> = set.iter().map(|m| m.to_string()).collect();
            match local_nilpotency_sample(component, &gens) {
                Ok(r) => report.push(
                    format!("{component:?} {{{}}}", names.join(", ")),
                    r.passed(),
                    format!(
                        "Lie {:?} ≤ {}, assoc {:?} ≤ {}",
                        r.lie_index, r.lie_bound, r.assoc_index, r.assoc_bound
                    ),
                ),
                Err(e) => report.push(format!("{component:?} {{{}}}", names.join(", ")), false, e.to_string()),
            }
        }
    }
    report
}

/// Ideal closures of every basis monomial seed of length `N ≤ max_seed_length` within
/// lengths `≤ N + extra`.
pub fn closure_suite<F: Field>(ring: F, shape: BasisKind, max_seed_length: u32, extra: u32) -> Report {
    let mut report = Report::new("just-infinite");
    let mut failures = Vec::new();
    let mut seeds = 0;
    let mut worst = 0;
    for n in 0..=max_seed_length {
        for s in enumerate_by_length(n, shape) {
            seeds += 1;
            let seed = Element::monomial(ring.clone(), s.pivot_monomial());
            match just_infinite_closure(&seed, n + extra, shape) {
                Ok(r) if r.saturated => worst = worst.max(r.stable_length as i64 - n as i64),
                Ok(r) => failures.push(format!("{s}: stable from {}", r.stable_length)),
                Err(e) => failures.push(format!("{s}: {e}")),
            }
        }
    }
    report.push(
        format!("{seeds} seeds of length ≤ {max_seed_length}, closure within N + {extra}"),
        failures.is_empty(),
        if failures.is_empty() { format!("all lengths ≥ N + {worst} reached") } else { failures.join("; ") },
    );
    report
}

/// Desk-scale defaults for every suite.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteLimits {
    pub relation_index: u32,
    pub oracle_weight: u64,
    pub grading_exponent: u32,
    pub growth_max: u64,
    pub growth_ratio_at: u64,
    pub hull_length: u32,
    pub hull_growth: u64,
    pub adnil_length: u32,
    pub adnil_triples: usize,
    pub probe_weight: u64,
    pub closure_seed_length: u32,
    pub closure_extra: u32,
    pub seed: u64,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits {
            relation_index: 12,
            oracle_weight: 32,
            grading_exponent: 10,
            growth_max: 1024,
            growth_ratio_at: 10_000,
            hull_length: 10,
            hull_growth: 128,
            adnil_length: 3,
            adnil_triples: 100,
            probe_weight: 32,
            closure_seed_length: 3,
            closure_extra: 8,
            seed: 0,
        }
    }
}

/// Every suite that applies to the given field and basis shape, run in parallel.
pub fn all_suites<F: Field>(ring: F, shape: BasisKind, limits: SuiteLimits) -> Vec<Report> {
    use rayon::prelude::*;
    type Job<'a> = Box<dyn Fn() -> Report + Send + Sync + 'a>;
    let l = limits;
    let r = ring.clone();
    let characteristic = ring.characteristic();
    let mut jobs: Vec<Job> = vec![
        Box::new(|| check_relations(r.clone(), l.relation_index)),
        Box::new(|| oracle_suite(r.clone(), shape, l.oracle_weight)),
        Box::new(move || grading_suite(shape, l.grading_exponent)),
        Box::new(move || growth_suite(shape, l.growth_max, l.growth_ratio_at)),
        Box::new(|| {
            let elements = test_elements(r.clone(), shape, l.adnil_length, l.adnil_triples, l.seed);
            adnil_suite(&elements, shape, l.probe_weight)
        }),
        Box::new(|| localnil_suite(r.clone(), shape, 3, l.seed)),
        Box::new(|| closure_suite(r.clone(), shape, l.closure_seed_length, l.closure_extra)),
        Box::new(|| not_hereditary_witness(r.clone(), shape, 1, 5).unwrap_or_else(|e| failed("not-hereditary", e))),
        Box::new(|| not_hereditary_witness(r.clone(), shape, 3, 4).unwrap_or_else(|e| failed("not-hereditary", e))),
    ];
    if enumeration_applies(characteristic) {
        jobs.push(Box::new(move || hull_suite(l.hull_length, l.hull_growth)));
    }
    if characteristic == 2 {
        jobs.push(Box::new(|| {
            let mut report = Report::new("non-nil");
            let f2 = PrimeField::new(2).expect("prime");
            match non_nil_witness(f2, 0, 1, 10) {
                Ok(seq) => report.push("v^(2^k) ≠ 0, k ≤ 10", true, format!("v^(2^10) = {}", seq[10])),
                Err(e) => report.push("v^(2^k) ≠ 0, k ≤ 10", false, e.to_string()),
            }
            report
        }));
        if shape == BasisKind::FirstOnly {
            jobs.push(Box::new(not_thin_witness));
        }
    }
    jobs.par_iter().map(|job| job()).collect()
}

fn enumeration_applies(characteristic: u64) -> bool {
    crate::hull::enumeration_is_basis(characteristic)
}

fn failed(suite: &str, e: Error) -> Report {
    let mut r = Report::new(suite);
    r.push("setup", false, e.to_string());
    r
}
