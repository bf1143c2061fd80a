//! Exact coefficient rings: the integers, the rationals and prime fields.
//!
//! Every algebraic object in the crate is generic over a [`Ring`]. The ring is a
//! runtime value (a prime field carries its modulus), so a single binary can work
//! in characteristic 0, 2 or any odd prime without recompiling.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

use crate::error::Error;

/// A commutative ring with exact arithmetic on its elements.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    /// 0 for the integers and rationals, `p` for the prime field of order `p`.
    fn characteristic(&self) -> u64;
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Multiplies by a small signed integer (signs and the factors 2 of pivot brackets).
    fn mul_i64(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        match k {
            1 => a.clone(),
            -1 => self.neg(a),
            _ => self.mul(a, &self.from_i64(k)),
        }
    }

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|b| self.mul(a, &b))
    }
}

/// Characteristic-zero ring backed by any signed `num-traits` number type.
pub struct CharZero<T>(PhantomData<fn() -> T>);

impl<T> CharZero<T> {
    pub const fn new() -> Self {
        CharZero(PhantomData)
    }
}

impl<T> Default for CharZero<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for CharZero<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for CharZero<T> {}

impl<T> PartialEq for CharZero<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> Debug for CharZero<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharZero<{}>", std::any::type_name::<T>())
    }
}

/// Numeric types usable as coefficients of a characteristic-zero ring.
pub trait ExactNumber:
    Num + Signed + FromPrimitive + Clone + Debug + Display + Eq + Hash + Send + Sync + 'static
{
    const RING_NAME: &'static str;

    /// Parses a decimal literal; fractions `a/b` where the type allows them.
    fn parse_exact(s: &str) -> Option<Self>;
}

impl ExactNumber for BigInt {
    const RING_NAME: &'static str = "integers";

    fn parse_exact(s: &str) -> Option<Self> {
        BigInt::from_str(s).ok()
    }
}

impl ExactNumber for BigRational {
    const RING_NAME: &'static str = "rationals";

    fn parse_exact(s: &str) -> Option<Self> {
        match s.split_once('/') {
            None => BigInt::from_str(s).ok().map(BigRational::from_integer),
            Some((n, d)) => {
                let (n, d) = (BigInt::from_str(n.trim()).ok()?, BigInt::from_str(d.trim()).ok()?);
                (!num_traits::Zero::is_zero(&d)).then(|| BigRational::new(n, d))
            }
        }
    }
}

impl<T: ExactNumber> Ring for CharZero<T> {
    type Elem = T;

    fn characteristic(&self) -> u64 {
        0
    }

    fn name(&self) -> String {
        T::RING_NAME.to_string()
    }

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn from_i64(&self, n: i64) -> T {
        T::from_i64(n).expect("every exact number type embeds the machine integers")
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn neg(&self, a: &T) -> T {
        -a.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }

    fn is_one(&self, a: &T) -> bool {
        a.is_one()
    }

    fn format(&self, a: &T) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<T, Error> {
        T::parse_exact(s.trim()).ok_or_else(|| Error::Parse(format!("bad {} coefficient `{s}`", T::RING_NAME)))
    }
}

impl Field for CharZero<BigRational> {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if num_traits::Zero::is_zero(a) {
            None
        } else {
            Some(num_traits::Inv::inv(a.clone()))
        }
    }
}

pub type Integers = CharZero<BigInt>;
pub type Rationals = CharZero<BigRational>;

/// The prime field of order `p`; representatives live in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad coefficient `{s}` for GF({})", self.p));
        let parse_int = |t: &str| -> Result<u64, Error> {
            let v = BigInt::from_str(t.trim()).map_err(|_| bad())?;
            let r = ((v % self.p) + self.p) % self.p;
            Ok(u64::try_from(r).expect("reduced residue fits"))
        };
        match s.split_once('/') {
            None => parse_int(s),
            Some((num, den)) => {
                let den = parse_int(den)?;
                let inv = self.inv(&den).ok_or_else(bad)?;
                Ok(self.mul(&parse_int(num)?, &inv))
            }
        }
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if (*a).is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn characteristics() {
        assert_eq!(Integers::new().characteristic(), 0);
        assert_eq!(Rationals::new().characteristic(), 0);
        assert_eq!(PrimeField::new(2).unwrap().characteristic(), 2);
        assert_eq!(PrimeField::new(7).unwrap().characteristic(), 7);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(PrimeField::new(9), Err(Error::NotPrime(9))));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Rationals::new();
        let a = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&a), "-3/2");
        assert_eq!(q.format(&q.inv(&a).unwrap()), "-2/3");
    }

    #[test]
    fn prime_field_parsing_normalizes() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert_eq!(f.parse("1/2").unwrap(), 3);
        assert!(f.parse("1/5").is_err());
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
            let f = PrimeField::new(13).unwrap();
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }

        #[test]
        fn char_two_doubles_vanish(a in 0u64..2) {
            let f = PrimeField::new(2).unwrap();
            prop_assert_eq!(f.add(&a, &a), 0);
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..50) {
            let q = Rationals::new();
            let (a, b, c) = (q.from_i64(a), q.from_i64(b), q.inv(&q.from_i64(c)).unwrap());
            prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            prop_assert_eq!(q.sub(&q.add(&a, &b), &b), a.clone());
            if !q.is_zero(&a) {
                prop_assert!(q.is_one(&q.mul(&a, &q.inv(&a).unwrap())));
            }
        }
    }
}
