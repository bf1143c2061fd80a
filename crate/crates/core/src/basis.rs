//! Standard monomial bases.
//!
//! First kind `r_{n−2} v_n`, second kind `r_{n−3} x_{n−1} v_n` (`n ≥ 2`, without the
//! false monomial `x0x2v3`). In characteristic 2 the Lie algebra keeps the first kind
//! only, and the superalgebra and restricted variants add the pivot squares `x_{n−1} v_n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::gradings::{WeightVector, Weighted};
use crate::grassmann::GrassmannMonomial;
use crate::operators::PivotMonomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
    /// `x_{n−1} v_n = v_{n−2}²`, listed separately in the characteristic-2 bases.
    PivotSquare,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::First => "first",
            Kind::Second => "second",
            Kind::PivotSquare => "square",
        }
    }
}

/// Which algebra a session works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// The Lie algebra; differs from `Super` only in characteristic 2.
    Lie,
    #[default]
    Super,
    Restricted,
    /// The integral form; characteristic 0 only.
    ZForm,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "lie" => Ok(Variant::Lie),
            "super" => Ok(Variant::Super),
            "restricted" => Ok(Variant::Restricted),
            "zform" => Ok(Variant::ZForm),
            _ => Err(Error::InvalidConfig(format!("unknown variant `{s}`"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Lie => "lie",
            Variant::Super => "super",
            Variant::Restricted => "restricted",
            Variant::ZForm => "zform",
        })
    }
}

/// Shape of a basis, determined by characteristic and variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisKind {
    /// First and second kind.
    Full,
    /// First kind only.
    FirstOnly,
    /// First kind and pivot squares.
    WithSquares,
}

impl BasisKind {
    pub fn resolve(characteristic: u64, variant: Variant) -> Result<Self, Error> {
        match (characteristic, variant) {
            (0, _) => Ok(BasisKind::Full),
            (_, Variant::ZForm) => Err(Error::InvalidConfig("the integral form needs characteristic 0".into())),
            (2, Variant::Lie) => Ok(BasisKind::FirstOnly),
            (2, _) => Ok(BasisKind::WithSquares),
            _ => Ok(BasisKind::Full),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardMonomial {
    pub kind: Kind,
    /// Head index `n` of `v_n`.
    pub length: u32,
    /// Complete tail, neck `x_{n−1}` included.
    pub tail: GrassmannMonomial,
}

impl StandardMonomial {
    pub fn first(r: GrassmannMonomial, n: u32) -> Option<Self> {
        let allowed = if n >= 2 { (1u64 << (n - 1)) - 1 } else { 0 };
        (r.bits() & !allowed == 0).then_some(StandardMonomial { kind: Kind::First, length: n, tail: r })
    }

    /// `r_{n−3} x_{n−1} v_n`; `None` for the false monomial or an out-of-range tail.
    pub fn second(r: GrassmannMonomial, n: u32) -> Option<Self> {
        if n < 2 {
            return None;
        }
        let allowed = if n >= 3 { (1u64 << (n - 2)) - 1 } else { 0 };
        if r.bits() & !allowed != 0 || (n == 3 && r.bits() == 1) {
            return None;
        }
        let tail = GrassmannMonomial::from_bits(r.bits() | (1u64 << (n - 1)));
        Some(StandardMonomial { kind: Kind::Second, length: n, tail })
    }

    pub fn pivot_square(n: u32) -> Option<Self> {
        (n >= 2).then(|| StandardMonomial {
            kind: Kind::PivotSquare,
            length: n,
            tail: GrassmannMonomial::letter(n as usize - 1),
        })
    }

    /// Recognises a pivot monomial as a basis element of the full basis.
    pub fn classify(m: PivotMonomial) -> Option<Self> {
        let n = m.head;
        if let Some(s) = Self::first(m.tail, n) {
            return Some(s);
        }
        if n >= 2 && m.tail.contains(n as usize - 1) {
            return Self::second(m.tail.without(n as usize - 1), n);
        }
        None
    }

    /// Recognises a pivot monomial as an element of the basis of the given shape.
    pub fn classify_in(m: PivotMonomial, shape: BasisKind) -> Option<Self> {
        let s = Self::classify(m)?;
        match (shape, s.kind) {
            (BasisKind::Full, _) | (_, Kind::First) => Some(s),
            (BasisKind::WithSquares, _) if s.r().is_one() => Some(StandardMonomial { kind: Kind::PivotSquare, ..s }),
            _ => None,
        }
    }

    pub fn pivot_monomial(self) -> PivotMonomial {
        PivotMonomial::new(self.tail, self.length)
    }

    /// The free part of the tail, neck removed.
    pub fn r(self) -> GrassmannMonomial {
        match self.kind {
            Kind::First => self.tail,
            _ => self.tail.without(self.length as usize - 1),
        }
    }

    pub fn wt(self) -> i128 {
        self.weight().z1
    }

    /// Basis coefficient of the integral form: 2 for second-kind monomials other than
    /// pivot squares, otherwise 1.
    pub fn z_form_coefficient(self) -> u32 {
        if self.kind == Kind::Second && !self.r().is_one() {
            2
        } else {
            1
        }
    }
}

impl Weighted for StandardMonomial {
    fn weight(&self) -> WeightVector {
        self.pivot_monomial().weight()
    }
}

impl fmt::Display for StandardMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.pivot_monomial().fmt(f)
    }
}

/// Length `n` with `2^{n−1} < m ≤ 2^n`.
fn first_length(m: u64) -> u32 {
    if m <= 1 {
        0
    } else {
        64 - (m - 1).leading_zeros()
    }
}

/// The unique monomial of the requested kind and weight `m ≥ 1`.
pub fn monomial_of_weight(m: u64, kind: Kind) -> Option<StandardMonomial> {
    if m == 0 || m > 1 << 62 {
        return None;
    }
    match kind {
        Kind::First => {
            let n = first_length(m);
            StandardMonomial::first(GrassmannMonomial::from_bits((1u64 << n) - m), n)
        }
        Kind::Second => {
            if m < 2 {
                return None;
            }
            let n = first_length(m) + 1;
            StandardMonomial::second(GrassmannMonomial::from_bits((1u64 << (n - 1)) - m), n)
        }
        Kind::PivotSquare => {
            (m >= 2 && m.is_power_of_two()).then(|| StandardMonomial::pivot_square(m.trailing_zeros() + 1)).flatten()
        }
    }
}

/// Basis monomials of weight exactly `m`, ordered by kind.
pub fn monomials_of_weight(m: u64, shape: BasisKind) -> Vec<StandardMonomial> {
    let mut out: Vec<_> = monomial_of_weight(m, Kind::First).into_iter().collect();
    match shape {
        BasisKind::Full => out.extend(monomial_of_weight(m, Kind::Second)),
        BasisKind::WithSquares => out.extend(monomial_of_weight(m, Kind::PivotSquare)),
        BasisKind::FirstOnly => {}
    }
    out
}

/// All basis monomials of weight at most `w`, ordered by `(weight, kind)`.
pub fn enumerate_by_weight(w: u64, shape: BasisKind) -> Vec<StandardMonomial> {
    (1..=w).flat_map(|m| monomials_of_weight(m, shape)).collect()
}

/// All basis monomials of length `n`, ordered by `(weight, kind)`.
pub fn enumerate_by_length(n: u32, shape: BasisKind) -> Vec<StandardMonomial> {
    assert!(n < 62, "length {n} exceeds the Grassmann index range");
    let mut out = Vec::new();
    let first_tails = if n >= 1 { 1u64 << (n - 1) } else { 1 };
    for r in 0..first_tails {
        out.extend(StandardMonomial::first(GrassmannMonomial::from_bits(r), n));
    }
    match shape {
        BasisKind::Full if n >= 2 => {
            for r in 0..(1u64 << (n - 2)) {
                out.extend(StandardMonomial::second(GrassmannMonomial::from_bits(r), n));
            }
        }
        BasisKind::WithSquares => out.extend(StandardMonomial::pivot_square(n)),
        _ => {}
    }
    out.sort_by_key(|s| (s.wt(), s.kind));
    out
}

/// `r_{n−2} v_n ↦ r_{n−2} x_n v_{n+1}`, the second-kind monomial of the same weight.
pub fn partner(w1: StandardMonomial) -> Result<StandardMonomial, Error> {
    if w1.kind != Kind::First {
        return Err(Error::Precondition(format!("{w1} is not of the first kind")));
    }
    let wt = w1.wt();
    if wt == 1 || wt == 3 {
        return Err(Error::NoPartner(wt));
    }
    StandardMonomial::second(w1.tail, w1.length + 1).ok_or(Error::NoPartner(wt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::{tau_multidegree, MultiDegree};
    use std::collections::BTreeSet;

    fn names(v: &[StandardMonomial]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn sm(s: &str) -> StandardMonomial {
        StandardMonomial::classify(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_lengths() {
        let full = BasisKind::Full;
        assert_eq!(names(&enumerate_by_length(0, full)), ["v0"]);
        assert_eq!(names(&enumerate_by_length(1, full)), ["v1"]);
        let mut t2 = names(&enumerate_by_length(2, full));
        t2.sort();
        assert_eq!(t2, ["v2", "x0·v2", "x1·v2"]);
        let mut t3 = names(&enumerate_by_length(3, full));
        t3.sort();
        assert_eq!(t3, ["v3", "x0x1·v3", "x0·v3", "x1·v3", "x2·v3"]);
        let lie = names(&enumerate_by_length(3, BasisKind::FirstOnly));
        assert_eq!(lie.iter().cloned().collect::<BTreeSet<_>>(), ["v3", "x0·v3", "x1·v3", "x0x1·v3"].map(String::from).into());
    }

    #[test]
    fn length_four_list() {
        let expected = [
            "v4", "x0·v4", "x1·v4", "x2·v4", "x0x1·v4", "x0x2·v4", "x1x2·v4", "x0x1x2·v4", "x3·v4", "x0x3·v4",
            "x1x3·v4", "x0x1x3·v4",
        ];
        let got: BTreeSet<String> = names(&enumerate_by_length(4, BasisKind::Full)).into_iter().collect();
        assert_eq!(got, expected.map(String::from).into_iter().collect());
    }

    #[test]
    fn counts_per_length() {
        let counts: Vec<usize> = (0..5).map(|n| enumerate_by_length(n, BasisKind::Full).len()).collect();
        assert_eq!(counts, [1, 1, 3, 5, 12]);
        for n in 4..=12u32 {
            assert_eq!(enumerate_by_length(n, BasisKind::Full).len(), 3 << (n - 2));
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(monomial_of_weight(1, Kind::First).unwrap().to_string(), "v0");
        assert_eq!(monomial_of_weight(3, Kind::Second), None);
        assert_eq!(monomial_of_weight(1, Kind::Second), None);
        assert_eq!(monomial_of_weight(6, Kind::First).unwrap().to_string(), "x1·v3");
    }

    #[test]
    fn partner_examples() {
        assert_eq!(partner(sm("v2")).unwrap().to_string(), "x2·v3");
        assert_eq!(partner(sm("v2")).unwrap().wt(), 4);
        assert!(matches!(partner(sm("v0")), Err(Error::NoPartner(1))));
        assert!(matches!(partner(sm("x0v2")), Err(Error::NoPartner(3))));
    }

    #[test]
    fn z_form_examples() {
        assert_eq!(sm("x1v2").z_form_coefficient(), 1);
        assert_eq!(sm("x0x3v4").z_form_coefficient(), 2);
        assert_eq!(sm("v5").z_form_coefficient(), 1);
    }

    #[test]
    fn false_monomial_is_excluded() {
        assert_eq!(StandardMonomial::classify("x0x2v3".parse().unwrap()), None);
        assert!(enumerate_by_length(3, BasisKind::Full).iter().all(|s| s.to_string() != "x0x2·v3"));
    }

    #[test]
    fn weight_bijections() {
        let limit = 1u64 << 12;
        for m in 1..=limit {
            let w1 = monomial_of_weight(m, Kind::First).unwrap();
            assert_eq!(w1.wt(), m as i128);
            match monomial_of_weight(m, Kind::Second) {
                None => assert!(m == 1 || m == 3),
                Some(w2) => {
                    assert_eq!(w2.wt(), m as i128);
                    assert_eq!(partner(w1).unwrap(), w2);
                    let n = w1.length as i128;
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    let diff = w1.multidegree().unwrap() - w2.multidegree().unwrap();
                    assert_eq!(diff, MultiDegree::new(2 * sign, -sign));
                }
            }
        }
        // second-kind monomials of length 13 still have weight at most 2^12
        let by_length: usize = (0..=12).map(|n| enumerate_by_length(n, BasisKind::Full).len()).sum::<usize>() + (1 << 11);
        let by_weight = enumerate_by_weight(1 << 12, BasisKind::Full).len();
        assert_eq!(by_length, by_weight);
    }

    #[test]
    fn shift_bijection_between_lengths() {
        // T_{n+1} = {1, x0}·τ(T_n) for n ≥ 4
        for n in 4..=12u32 {
            let next: BTreeSet<PivotMonomial> =
                enumerate_by_length(n + 1, BasisKind::Full).into_iter().map(|s| s.pivot_monomial()).collect();
            let mut built = BTreeSet::new();
            for s in enumerate_by_length(n, BasisKind::Full) {
                let shifted = GrassmannMonomial::from_bits(s.tail.bits() << 1);
                built.insert(PivotMonomial::new(shifted, n + 1));
                built.insert(PivotMonomial::new(GrassmannMonomial::from_bits(shifted.bits() | 1), n + 1));
                let d = s.multidegree().unwrap();
                let shifted_degree = PivotMonomial::new(shifted, n + 1).multidegree().unwrap();
                assert_eq!(shifted_degree, tau_multidegree(d));
            }
            assert_eq!(built, next);
        }
    }

    #[test]
    fn char_two_bases() {
        assert_eq!(BasisKind::resolve(2, Variant::Lie).unwrap(), BasisKind::FirstOnly);
        assert_eq!(BasisKind::resolve(2, Variant::Restricted).unwrap(), BasisKind::WithSquares);
        assert_eq!(BasisKind::resolve(5, Variant::Lie).unwrap(), BasisKind::Full);
        assert!(BasisKind::resolve(3, Variant::ZForm).is_err());
        let sq = enumerate_by_length(4, BasisKind::WithSquares);
        assert_eq!(sq.len(), 9);
        assert!(sq.iter().any(|s| s.kind == Kind::PivotSquare && s.to_string() == "x3·v4"));
    }
}
