//! Grassmann monomials `x_{i1} x_{i2} ... x_{it}` (`i1 < ... < it`) as 64-bit sets.
//!
//! The letters anticommute and square to zero, so a monomial is determined by its
//! index set up to a sign. All sign bookkeeping reduces to popcounts.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Number of Grassmann letters representable in a monomial (`x_0 .. x_63`).
pub const INDEX_LIMIT: usize = 64;

/// A square-free product of Grassmann letters, stored as a bit set of indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannMonomial(u64);

impl GrassmannMonomial {
    pub const ONE: GrassmannMonomial = GrassmannMonomial(0);

    pub const fn from_bits(bits: u64) -> Self {
        GrassmannMonomial(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn letter(i: usize) -> Self {
        assert!(i < INDEX_LIMIT, "Grassmann index {i} out of range");
        GrassmannMonomial(1 << i)
    }

    /// `x_a x_{a+1} ... x_{b-1}`; the unit when `a >= b`.
    pub fn range(a: usize, b: usize) -> Self {
        if a >= b {
            return Self::ONE;
        }
        assert!(b <= INDEX_LIMIT, "Grassmann index {} out of range", b - 1);
        let upper = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
        GrassmannMonomial(upper & !((1u64 << a) - 1))
    }

    /// Builds a monomial from distinct indices; repeated indices are rejected.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self, Error> {
        let mut bits = 0u64;
        for i in indices {
            if i >= INDEX_LIMIT {
                return Err(Error::IndexOutOfRange(i));
            }
            if bits & (1 << i) != 0 {
                return Err(Error::Parse(format!("repeated Grassmann letter x{i}")));
            }
            bits |= 1 << i;
        }
        Ok(GrassmannMonomial(bits))
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    /// 0 for even monomials, 1 for odd ones.
    pub fn parity(self) -> u32 {
        self.0.count_ones() & 1
    }

    pub fn contains(self, i: usize) -> bool {
        i < INDEX_LIMIT && self.0 & (1 << i) != 0
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn min_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn without(self, i: usize) -> Self {
        GrassmannMonomial(self.0 & !(1 << i))
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Number of letters with index strictly below `i`.
    pub fn count_below(self, i: usize) -> u32 {
        if i >= INDEX_LIMIT {
            self.degree()
        } else {
            (self.0 & ((1u64 << i) - 1)).count_ones()
        }
    }

    /// `self * other` as `(sign, product)`; `None` when a letter repeats.
    pub fn multiply(self, other: Self) -> Option<(i8, Self)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // each letter of `other` passes every larger letter of `self`
        let mut swaps = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            swaps += if j == 63 { 0 } else { (self.0 >> (j + 1)).count_ones() };
            rest &= rest - 1;
        }
        Some((if swaps & 1 == 0 { 1 } else { -1 }, GrassmannMonomial(self.0 | other.0)))
    }

    /// The superderivative `∂_i` applied to the monomial.
    pub fn apply_partial(self, i: usize) -> Option<(i8, Self)> {
        if !self.contains(i) {
            return None;
        }
        let sign = if self.count_below(i) & 1 == 0 { 1 } else { -1 };
        Some((sign, self.without(i)))
    }
}

impl fmt::Display for GrassmannMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for GrassmannMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for GrassmannMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a run of letters such as `x0x2x5` (separators `·` and `*` allowed) in
/// increasing index order. Returns the parsed monomial and its sign relative to the
/// sorted form when the letters are given out of order.
pub fn parse_letters(s: &str) -> Result<(i8, GrassmannMonomial), Error> {
    let s = s.trim();
    if s == "1" || s.is_empty() {
        return Ok((1, GrassmannMonomial::ONE));
    }
    let mut acc = GrassmannMonomial::ONE;
    let mut sign = 1i8;
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'x' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let i: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("letter without index in `{s}`")))?;
                if i >= INDEX_LIMIT {
                    return Err(Error::IndexOutOfRange(i));
                }
                let (sg, next) = acc
                    .multiply(GrassmannMonomial::letter(i))
                    .ok_or_else(|| Error::Parse(format!("repeated letter x{i} in `{s}`")))?;
                sign *= sg;
                acc = next;
            }
            '·' | '*' | ' ' => {}
            _ => return Err(Error::Parse(format!("unexpected `{c}` in Grassmann monomial `{s}`"))),
        }
    }
    Ok((sign, acc))
}

impl FromStr for GrassmannMonomial {
    type Err = Error;

    /// Accepts only letters in strictly increasing order, so the result is exactly
    /// the written monomial.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (sign, m) = parse_letters(s)?;
        let sorted = m.indices().map(|i| format!("x{i}")).collect::<String>();
        let compact: String = s.chars().filter(|c| !matches!(c, '·' | '*' | ' ')).collect();
        if sign != 1 || (compact != sorted && !(compact == "1" && m.is_one()) && !compact.is_empty()) {
            return Err(Error::Parse(format!("`{s}` is not a sorted Grassmann monomial")));
        }
        Ok(m)
    }
}
