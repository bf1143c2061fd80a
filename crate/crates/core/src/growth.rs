//! Growth functions, Hilbert series, the width word and empty diagonals.
//!
//! The two-variable Hilbert series is computed on exponent lattices: the shift acts as
//! `(n1, n2) ↦ (2 n2, n1 + n2)` and the factor `{1, x0}` adds a copy moved by `(−1, 0)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{enumerate_by_length, monomials_of_weight, BasisKind, Kind};
use crate::gradings::{tau_multidegree, MultiDegree, Weighted};

/// Coefficients of `H(R, t1, t2)` for all points of total degree at most `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries2D {
    pub max_degree: u64,
    pub coeffs: BTreeMap<MultiDegree, u64>,
}

impl HilbertSeries2D {
    pub fn coeff(&self, n1: i128, n2: i128) -> u64 {
        self.coeffs.get(&MultiDegree::new(n1, n2)).copied().unwrap_or(0)
    }

    /// `dim R_n` for `n = 0..=max_degree` (index 0 is always 0).
    pub fn degree_dims(&self) -> Vec<u64> {
        let mut dims = vec![0u64; self.max_degree as usize + 1];
        for (d, c) in &self.coeffs {
            dims[d.degree() as usize] += c;
        }
        dims
    }
}

fn seed_points(shape: BasisKind) -> (Vec<Vec<MultiDegree>>, u32) {
    // lengths 0..=4 explicitly; the shift recursion takes over from there
    let seeds = (0..=4)
        .map(|n| enumerate_by_length(n, shape).iter().map(|s| s.multidegree().expect("basis monomial")).collect())
        .collect();
    (seeds, 4)
}

/// Lattice points of the basis of the given shape with degree at most `max_degree`,
/// from the recursion `T_{n+1} = {1, x0}·τ(T_n)` applied to the first and second kind.
/// Pivot squares, which are not closed under the recursion, are added directly.
pub fn lattice_points(max_degree: u64, shape: BasisKind) -> HilbertSeries2D {
    let d = max_degree as i128;
    let recursive_shape = if shape == BasisKind::WithSquares { BasisKind::FirstOnly } else { shape };
    let (seeds, last) = seed_points(recursive_shape);
    let mut coeffs: BTreeMap<MultiDegree, u64> = BTreeMap::new();
    let add = |p: MultiDegree, coeffs: &mut BTreeMap<MultiDegree, u64>| {
        if (1..=d).contains(&p.degree()) {
            *coeffs.entry(p).or_insert(0) += 1;
        }
    };
    for level in &seeds {
        for p in level {
            add(*p, &mut coeffs);
        }
    }
    // every point from length 4 on has n2 ≥ 1, so children are strictly deeper
    let mut frontier: Vec<MultiDegree> = seeds[last as usize].iter().copied().filter(|p| p.degree() <= d).collect();
    while !frontier.is_empty() {
        frontier = frontier
            .par_iter()
            .flat_map_iter(|p| {
                let t = tau_multidegree(*p);
                [t, t - MultiDegree::new(1, 0)]
            })
            .filter(|p| p.degree() <= d)
            .collect();
        for p in &frontier {
            add(*p, &mut coeffs);
        }
    }
    if shape == BasisKind::WithSquares {
        // x_{n−1} v_n = v_{n−2}² sits at twice the multidegree of v_{n−2}
        let mut n = 2u32;
        loop {
            let sq = crate::basis::StandardMonomial::pivot_square(n).expect("n ≥ 2").multidegree().expect("integral");
            if sq.degree() > d {
                break;
            }
            add(sq, &mut coeffs);
            n += 1;
        }
    }
    HilbertSeries2D { max_degree, coeffs }
}

/// `H(R, t1, t2)` of the Lie superalgebra (characteristic ≠ 2).
pub fn hilbert_2d(max_degree: u64) -> HilbertSeries2D {
    lattice_points(max_degree, BasisKind::Full)
}

/// The same coefficients from direct enumeration of basis monomials by weight.
/// Weight `Z1 = X1 + 2 X2` is at most twice the degree, so weights up to `2D` suffice.
pub fn lattice_points_by_enumeration(max_degree: u64, shape: BasisKind) -> HilbertSeries2D {
    let d = max_degree as i128;
    let mut coeffs = BTreeMap::new();
    for m in 1..=2 * max_degree {
        for s in monomials_of_weight(m, shape) {
            let p = s.multidegree().expect("basis monomial");
            if p.degree() <= d {
                *coeffs.entry(p).or_insert(0) += 1;
            }
        }
    }
    HilbertSeries2D { max_degree, coeffs }
}

/// `dim R_n` for `n = 1..=max_degree`, as a vector indexed from 0 (entry 0 unused).
pub fn degree_dimensions(max_degree: u64, shape: BasisKind) -> Vec<u64> {
    lattice_points(max_degree, shape).degree_dims()
}

/// Ordinary growth `γ_R(m)`: number of basis monomials of degree at most `m`.
pub fn ordinary_growth(m: u64, shape: BasisKind) -> u64 {
    degree_dimensions(m, shape).iter().sum()
}

/// Weight growth `γ̃_R(m)`: number of basis monomials of weight at most `m`.
pub fn weight_growth(m: u64, shape: BasisKind) -> u64 {
    (1..=m).map(|w| monomials_of_weight(w, shape).len() as u64).sum()
}

/// Closed form of the weight growth: `2m − 2` (`m ≥ 3`) for the full basis, `m` for
/// the first kind only and `m + ⌊log2 m⌋` with pivot squares.
pub fn weight_growth_closed_form(m: u64, shape: BasisKind) -> Option<u64> {
    match shape {
        BasisKind::Full => (m >= 3).then(|| 2 * m - 2),
        BasisKind::FirstOnly => Some(m),
        BasisKind::WithSquares => (m >= 1).then(|| m + m.ilog2() as u64),
    }
}

/// Weight-gradation dimensions `dim R̃_n` for `n = 1..=m`.
pub fn weight_dimensions(m: u64, shape: BasisKind) -> Vec<u64> {
    (1..=m).map(|w| monomials_of_weight(w, shape).len() as u64).collect()
}

/// Empty diagonal components: all `n ≤ limit` with `dim R_{n,n} = 0`.
pub fn empty_diagonals(limit: u64) -> Vec<u64> {
    let h = hilbert_2d(2 * limit);
    (1..=limit).filter(|&n| h.coeff(n as i128, n as i128) == 0).collect()
}

/// Segments of the broken line through first-kind monomials ordered by weight:
/// `a = (−1, 1)`, `b = (1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Segment {
    A,
    B,
}

impl Segment {
    pub fn vector(self) -> MultiDegree {
        match self {
            Segment::A => MultiDegree::new(-1, 1),
            Segment::B => MultiDegree::new(1, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WidthWord {
    pub letters: Vec<Segment>,
}

impl fmt::Display for WidthWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.letters {
            f.write_str(match s {
                Segment::A => "a",
                Segment::B => "b",
            })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for WidthWord {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .map(|c| match c {
                'a' => Ok(Segment::A),
                'b' => Ok(Segment::B),
                _ => Err(crate::error::Error::Parse(format!("`{c}` is not a segment letter"))),
            })
            .collect::<Result<_, _>>()?;
        Ok(WidthWord { letters })
    }
}

impl WidthWord {
    /// The broken line through the first-kind monomials of length 3.
    pub fn seed() -> Self {
        WidthWord { letters: vec![Segment::B, Segment::A, Segment::B] }
    }

    /// `a ↦ bb`, `b ↦ ab`, with the prefix `b`.
    pub fn substitute(&self) -> Self {
        let mut letters = Vec::with_capacity(2 * self.letters.len() + 1);
        letters.push(Segment::B);
        for s in &self.letters {
            match s {
                Segment::A => letters.extend([Segment::B, Segment::B]),
                Segment::B => letters.extend([Segment::A, Segment::B]),
            }
        }
        WidthWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `a` keeps the degree, `b` raises it by one.
    pub fn degree_steps(&self) -> impl Iterator<Item = u64> + '_ {
        self.letters.iter().map(|s| matches!(s, Segment::B) as u64)
    }
}

/// The word for first-kind monomials of length `3 + k`.
pub fn width_word(k: u32) -> WidthWord {
    (0..k).fold(WidthWord::seed(), |w, _| w.substitute())
}

/// Dimensions `dim R_n`, `n = 1..=max_degree`, of the characteristic-2 Lie algebra read
/// off the united broken line of all first-kind monomials of length `≥ 3`. The lines
/// for lengths `n − 1` and `n` are joined by `b` for even `n` and by `a` for odd `n`.
pub fn char2_lie_dims_from_word(max_degree: u64) -> Vec<u64> {
    let mut dims = vec![0u64; max_degree as usize + 1];
    let bump = |deg: u64, dims: &mut Vec<u64>| {
        if (1..=max_degree).contains(&deg) {
            dims[deg as usize] += 1;
        }
    };
    // lengths 0..2: v0, v1 in degree 1; x0v2 in degree 2; v2 in degree 3
    for deg in [1, 1, 2, 3] {
        bump(deg, &mut dims);
    }
    // the line starts at x0x1v3 of degree 3
    let mut degree = 3u64;
    bump(degree, &mut dims);
    let mut word = WidthWord::seed();
    let mut length = 3u32;
    loop {
        for step in word.degree_steps() {
            degree += step;
            bump(degree, &mut dims);
        }
        if degree > max_degree {
            break;
        }
        length += 1;
        degree += if length.is_multiple_of(2) { 1 } else { 0 };
        bump(degree, &mut dims);
        word = word.substitute();
    }
    dims
}

/// Diamond sequence `(dim R_n)_{1 ≤ n ≤ N}` of the characteristic-2 Lie algebra.
pub fn diamond_sequence(terms: u64) -> Vec<u64> {
    char2_lie_dims_from_word(terms)[1..].to_vec()
}

/// Splits the sequence from position 5 on into blocks `1,1,2` and `1,1,2,2,2`.
/// Returns the block lengths, or the offending position (1-based) when the pattern breaks.
/// A trailing incomplete block is accepted.
pub fn diamond_blocks(seq: &[u64]) -> Result<Vec<usize>, usize> {
    let mut i = 4;
    let mut blocks = Vec::new();
    while i < seq.len() {
        let rest = &seq[i..];
        let fits = |pattern: &[u64]| rest.iter().zip(pattern).all(|(a, b)| a == b);
        if rest.len() >= 5 && fits(&[1, 1, 2, 2, 2]) {
            blocks.push(5);
            i += 5;
        } else if rest.len() >= 3 && fits(&[1, 1, 2]) && rest.get(3).is_none_or(|&x| x == 1) {
            blocks.push(3);
            i += 3;
        } else if rest.len() < 5 && fits(&[1, 1, 2, 2, 2]) {
            break;
        } else {
            return Err(i + 1);
        }
    }
    Ok(blocks)
}

/// Smallest `p ≤ max_period` such that the second half of `seq` is `p`-periodic.
/// `None` means no such period: a finite-window statement only.
pub fn find_tail_period(seq: &[u64], max_period: usize) -> Option<usize> {
    let start = seq.len() / 2;
    (1..=max_period).find(|&p| (start..seq.len().saturating_sub(p)).all(|i| seq[i] == seq[i + p]))
}

/// Expands the compact notation where `d^k` (single-digit `k`) repeats the digit `d` `k` times.
pub fn expand_power_notation(s: &str) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        if c == '^' {
            let k = chars.next().and_then(|d| d.to_digit(10)).expect("digit exponent after ^") as usize;
            let last = *out.last().expect("digit before ^");
            out.extend(std::iter::repeat_n(last, k - 1));
        } else if let Some(d) = c.to_digit(10) {
            out.push(d as u64);
        }
    }
    out
}

/// Coefficient check of the functional equation
/// `H = t1 + t1² + t1³t2 + t1⁴t2 − t1⁻¹t2 − t1⁻¹t2² + (1 + t1⁻¹)·H(t2, t1²t2)`
/// through total degree `max_degree`.
pub fn hilbert_recursion_holds(max_degree: u64) -> bool {
    let h = hilbert_2d(2 * max_degree + 2);
    let d = max_degree as i128;
    let mut rhs: BTreeMap<MultiDegree, i64> = BTreeMap::new();
    for (p, c) in [((1, 0), 1), ((2, 0), 1), ((3, 1), 1), ((4, 1), 1), ((-1, 1), -1), ((-1, 2), -1)] {
        *rhs.entry(MultiDegree::new(p.0, p.1)).or_insert(0) += c;
    }
    for (p, c) in &h.coeffs {
        let t = tau_multidegree(*p);
        for q in [t, t - MultiDegree::new(1, 0)] {
            *rhs.entry(q).or_insert(0) += *c as i64;
        }
    }
    rhs.retain(|p, c| *c != 0 && p.degree() <= d);
    let lhs: BTreeMap<MultiDegree, i64> =
        h.coeffs.iter().filter(|(p, _)| p.degree() <= d).map(|(p, c)| (*p, *c as i64)).collect();
    lhs == rhs
}

/// Lattice points of the first-kind monomials, for plotting.
pub fn first_kind_points(max_length: u32) -> Vec<(u32, MultiDegree)> {
    (0..=max_length)
        .flat_map(|n| {
            enumerate_by_length(n, BasisKind::FirstOnly)
                .into_iter()
                .filter(|s| s.kind == Kind::First)
                .map(move |s| (n, s.multidegree().expect("basis monomial")))
        })
        .collect()
}
