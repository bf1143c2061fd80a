//! Incremental row echelon form of sparse vectors over a field.

use std::collections::BTreeMap;

use crate::scalars::Field;

/// Rows kept reduced against each other's pivots; the pivot of a row is its smallest key.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field, K: Ord + Clone> {
    field: F,
    rows: BTreeMap<K, BTreeMap<K, F::Elem>>,
}

impl<F: Field, K: Ord + Clone> Echelon<F, K> {
    pub fn new(field: F) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, mut v: BTreeMap<K, F::Elem>) -> BTreeMap<K, F::Elem> {
        let f = &self.field;
        let mut floor: Option<K> = None;
        loop {
            let next = match &floor {
                None => v.iter().find(|(k, _)| self.rows.contains_key(*k)),
                Some(fl) => v.range(fl.clone()..).find(|(k, _)| self.rows.contains_key(*k)),
            }
            .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else { return v };
            let row = &self.rows[&k];
            // rows are normalised to a leading 1
            for (j, d) in row {
                let e = v.entry(j.clone()).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(&c, d));
                if f.is_zero(e) {
                    v.remove(j);
                }
            }
            floor = Some(k);
        }
    }

    pub fn contains(&self, v: BTreeMap<K, F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: BTreeMap<K, F::Elem>) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else { return false };
        let inv = self.field.inv(&c).expect("nonzero leading coefficient");
        let r: BTreeMap<K, F::Elem> = r.into_iter().map(|(k, d)| (k, self.field.mul(&d, &inv))).collect();
        self.rows.insert(lead, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, Rationals, Ring};

    #[test]
    fn rank_of_small_system() {
        let q = Rationals::new();
        let v = |pairs: &[(u32, i64)]| pairs.iter().map(|(k, c)| (*k, q.from_i64(*c))).collect::<BTreeMap<_, _>>();
        let mut e = Echelon::new(q);
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert!(e.contains(v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(v(&[(2, 1)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn modular_dependence() {
        let f = PrimeField::new(2).unwrap();
        let mut e = Echelon::new(f);
        assert!(e.insert(BTreeMap::from([(0u8, 1), (1, 1)])));
        assert!(e.insert(BTreeMap::from([(1u8, 1), (2, 1)])));
        assert!(!e.insert(BTreeMap::from([(0u8, 1), (2, 1)])));
    }
}
