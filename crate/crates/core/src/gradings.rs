//! Weight coordinates `(Z1, Z2) = (wt, swt)` and multidegree coordinates `(X1, X2)`.
//!
//! `wt(v_n) = 2^n`, `swt(v_n) = (−1)^n`, and `x_n` carries the negatives. The two
//! coordinate systems are tied by `Z1 = X1 + 2X2`, `Z2 = X1 − X2`.

use std::ops::{Add, Sub};

use serde::Serialize;

use crate::basis::{BasisKind, Variant};
use crate::error::Error;
use crate::grassmann::GrassmannMonomial;
use crate::operators::PivotMonomial;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector {
    pub z1: i128,
    pub z2: i128,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiDegree {
    pub x1: i128,
    pub x2: i128,
}

impl MultiDegree {
    pub const fn new(x1: i128, x2: i128) -> Self {
        MultiDegree { x1, x2 }
    }

    /// Total degree `X1 + X2`.
    pub fn degree(self) -> i128 {
        self.x1 + self.x2
    }

    pub fn weight(self) -> WeightVector {
        WeightVector { z1: self.x1 + 2 * self.x2, z2: self.x1 - self.x2 }
    }
}

impl WeightVector {
    pub const fn new(z1: i128, z2: i128) -> Self {
        WeightVector { z1, z2 }
    }

    /// Inverse coordinate change `X1 = (Z1 + 2Z2)/3`, `X2 = (Z1 − Z2)/3`.
    pub fn multidegree(self) -> Result<MultiDegree, Error> {
        let (a, b) = (self.z1 + 2 * self.z2, self.z1 - self.z2);
        if a % 3 != 0 || b % 3 != 0 {
            return Err(Error::NonIntegralMultidegree(self.z1, self.z2));
        }
        Ok(MultiDegree { x1: a / 3, x2: b / 3 })
    }
}

impl Add for WeightVector {
    type Output = WeightVector;
    fn add(self, o: Self) -> Self {
        WeightVector::new(self.z1 + o.z1, self.z2 + o.z2)
    }
}

impl Sub for WeightVector {
    type Output = WeightVector;
    fn sub(self, o: Self) -> Self {
        WeightVector::new(self.z1 - o.z1, self.z2 - o.z2)
    }
}

impl Add for MultiDegree {
    type Output = MultiDegree;
    fn add(self, o: Self) -> Self {
        MultiDegree::new(self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl Sub for MultiDegree {
    type Output = MultiDegree;
    fn sub(self, o: Self) -> Self {
        MultiDegree::new(self.x1 - o.x1, self.x2 - o.x2)
    }
}

pub fn pivot_weight(n: u32) -> WeightVector {
    WeightVector::new(1i128 << n, if n.is_multiple_of(2) { 1 } else { -1 })
}

/// Weight of a Grassmann monomial: the negated sum over its letters.
pub fn tail_weight(t: GrassmannMonomial) -> WeightVector {
    t.indices().fold(WeightVector::default(), |acc, i| acc - pivot_weight(i as u32))
}

/// Anything with a vector weight.
pub trait Weighted {
    fn weight(&self) -> WeightVector;

    fn multidegree(&self) -> Result<MultiDegree, Error> {
        self.weight().multidegree()
    }

    fn degree(&self) -> Result<i128, Error> {
        self.multidegree().map(MultiDegree::degree)
    }

    fn component(&self) -> Component {
        triangular_component(self.weight())
    }
}

impl Weighted for PivotMonomial {
    fn weight(&self) -> WeightVector {
        pivot_weight(self.head) + tail_weight(self.tail)
    }
}

impl Weighted for WeightVector {
    fn weight(&self) -> WeightVector {
        *self
    }
}

/// `Gr(τ v) = (2 n2, n1 + n2)` for the shift `x_i ↦ x_{i+1}`, `v_i ↦ v_{i+1}`.
pub fn tau_multidegree(d: MultiDegree) -> MultiDegree {
    MultiDegree::new(2 * d.x2, d.x1 + d.x2)
}

/// Component of the triangular decomposition, by the sign of the superweight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Component {
    Plus,
    Zero,
    Minus,
}

pub fn triangular_component(w: WeightVector) -> Component {
    match w.z2.signum() {
        1 => Component::Plus,
        0 => Component::Zero,
        _ => Component::Minus,
    }
}

/// `dim R_n`: basis monomials of total degree `n` for the given characteristic and variant.
pub fn degree_dimension(n: u64, characteristic: u64, variant: Variant) -> Result<u64, Error> {
    let shape = BasisKind::resolve(characteristic, variant)?;
    if n == 0 {
        return Ok(0);
    }
    Ok(crate::growth::degree_dimensions(n, shape)[n as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> PivotMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn weights_of_examples() {
        assert_eq!(m("v3").weight(), WeightVector::new(8, -1));
        assert_eq!(m("x0v2").weight(), WeightVector::new(3, 0));
        assert_eq!(m("x0x2v3").weight(), WeightVector::new(3, -3));
    }

    #[test]
    fn multidegrees_of_examples() {
        assert_eq!(m("v2").multidegree().unwrap(), MultiDegree::new(2, 1));
        assert_eq!(m("v1").multidegree().unwrap(), MultiDegree::new(0, 1));
        assert_eq!(m("x0x2v3").multidegree().unwrap(), MultiDegree::new(-1, 2));
        assert!(WeightVector::new(1, 0).multidegree().is_err());
    }

    #[test]
    fn pivot_multidegree_closed_form() {
        for n in 0..40u32 {
            let p = 1i128 << n;
            let s = if n % 2 == 0 { 1 } else { -1 };
            let expected = MultiDegree::new((p + 2 * s) / 3, (p - s) / 3);
            assert_eq!(m(&format!("v{n}")).multidegree().unwrap(), expected);
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_multidegree(MultiDegree::new(1, 0)), MultiDegree::new(0, 1));
        assert_eq!(tau_multidegree(MultiDegree::new(0, 1)), MultiDegree::new(2, 1));
        assert_eq!(tau_multidegree(MultiDegree::new(2, 1)), MultiDegree::new(2, 3));
        assert_eq!(m("v3").multidegree().unwrap(), MultiDegree::new(2, 3));
    }

    #[test]
    fn degree_dimension_examples() {
        assert_eq!(degree_dimension(1, 0, Variant::Super).unwrap(), 2);
        assert_eq!(degree_dimension(3, 0, Variant::Super).unwrap(), 2);
        assert_eq!(degree_dimension(5, 0, Variant::Super).unwrap(), 4);
        assert!(degree_dimension(5, 2, Variant::ZForm).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(m("v0").component(), Component::Plus);
        assert_eq!(m("v1").component(), Component::Minus);
        assert_eq!(m("x0v2").component(), Component::Zero);
    }

    proptest! {
        #[test]
        fn coordinate_change_round_trips(x1 in -1000i128..1000, x2 in -1000i128..1000) {
            let d = MultiDegree::new(x1, x2);
            prop_assert_eq!(d.weight().multidegree().unwrap(), d);
        }

        #[test]
        fn shift_commutes_with_multidegree(bits in 0u64..(1 << 12), head in 0u32..14) {
            // shifting every index by one realises τ on multidegrees
            let tail = GrassmannMonomial::from_bits(bits & ((1u64 << head) - 1));
            let w = PivotMonomial::new(tail, head);
            let shifted = PivotMonomial::new(GrassmannMonomial::from_bits(tail.bits() << 1), head + 1);
            if let Ok(d) = w.multidegree() {
                prop_assert_eq!(shifted.multidegree().unwrap(), tau_multidegree(d));
            }
        }
    }
}
