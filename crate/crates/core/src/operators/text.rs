//! Text form of elements: `1·v0 - 2·x1·v2 + 1/3·x0x1·v3`, or `0`.
//!
//! Every term carries its coefficient on output. The parser also accepts `*` for
//! `·`, omitted unit coefficients, adjoined factors such as `x0v2`, unsorted letters
//! and `v{n}^2` for a pivot square.

use std::fmt;

use crate::error::Error;
use crate::grassmann::{parse_letters, GrassmannMonomial};
use crate::scalars::Ring;

use super::{monomial_square, Element, PivotMonomial};

impl<R: Ring> fmt::Display for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let text = self.ring().format(c);
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

pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>, Error> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for c in s.chars().filter(|c| !c.is_whitespace()) {
        if (c == '+' || c == '-') && !current.is_empty() {
            out.push((negative, std::mem::take(&mut current)));
            negative = c == '-';
        } else if (c == '+' || c == '-') && current.is_empty() {
            if c == '-' {
                negative = !negative;
            }
        } else {
            current.push(c);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((negative, current));
    Ok(out)
}

fn parse_term<R: Ring>(ring: &R, term: &str) -> Result<Vec<(PivotMonomial, R::Elem)>, Error> {
    let bad = |why: &str| Error::Parse(format!("{why} in term `{term}`"));
    let v = term.rfind('v').ok_or_else(|| bad("missing pivot v{n}"))?;
    let (front, pivot) = term.split_at(v);
    let (head_text, squared) = match pivot[1..].strip_suffix("^2") {
        Some(h) => (h, true),
        None => (&pivot[1..], false),
    };
    let head: u32 = head_text.parse().map_err(|_| bad("bad pivot index"))?;
    let front = front.trim_end_matches(['·', '*']);
    let (coeff_text, letters) = match front.find('x') {
        Some(i) => (&front[..i], &front[i..]),
        None => (front, ""),
    };
    let coeff_text = coeff_text.trim_end_matches(['·', '*']);
    let mut coeff = if coeff_text.is_empty() { ring.one() } else { ring.parse(coeff_text)? };
    let (sign, tail) = parse_letters(letters)?;
    // brackets may raise heads by two
    if head as usize >= crate::grassmann::INDEX_LIMIT - 2 {
        return Err(Error::IndexOutOfRange(head as usize));
    }
    if sign < 0 {
        coeff = ring.neg(&coeff);
    }
    if !squared {
        return Ok(vec![(PivotMonomial::new(tail, head), coeff)]);
    }
    if !tail.is_one() {
        return Err(bad("only bare pivots may be squared"));
    }
    Ok(monomial_square(PivotMonomial::pivot(head))
        .into_iter()
        .map(|(m, k)| (m, ring.mul_i64(&coeff, k)))
        .collect())
}

impl<R: Ring> Element<R> {
    /// Parses the text form produced by `Display`.
    pub fn parse(ring: R, s: &str) -> Result<Self, Error> {
        let mut out = Element::zero(ring);
        if s.trim() == "0" {
            return Ok(out);
        }
        if s.trim().is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        for (negative, term) in split_terms(s)? {
            for (m, c) in parse_term(&out.ring, &term)? {
                let c = if negative { out.ring.neg(&c) } else { c };
                out.add_term(m, c);
            }
        }
        Ok(out)
    }
}

impl std::str::FromStr for PivotMonomial {
    type Err = Error;

    /// Parses a bare monomial such as `x0x1v3` or `x0x1·v3` (sorted letters only).
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let v = s.rfind('v').ok_or_else(|| Error::Parse(format!("missing pivot in `{s}`")))?;
        let head: u32 = s[v + 1..].parse().map_err(|_| Error::Parse(format!("bad pivot index in `{s}`")))?;
        let letters = s[..v].trim_end_matches(['·', '*']);
        let tail: GrassmannMonomial = if letters.is_empty() { GrassmannMonomial::ONE } else { letters.parse()? };
        Ok(PivotMonomial::new(tail, head))
    }
}
