//! Incremental row reduction over the rationals for sparse vectors.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use num::{One, Zero};

use crate::kernel::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// Echelon basis of a growing subspace. Every stored row has its smallest key
/// as pivot, with pivot coefficient 1, and pivots are pairwise distinct.
#[derive(Clone, Debug)]
pub struct EchelonBasis<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for EchelonBasis<K> {
    fn default() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        v.retain(|_, c| !c.is_zero());
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(k) => v
                    .range((Excluded(k.clone()), Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let factor = v[&k].clone();
                for (key, c) in row {
                    let slot = v.entry(key.clone()).or_insert_with(Rational::zero);
                    *slot -= &factor * c;
                    if slot.is_zero() {
                        v.remove(key);
                    }
                }
            }
            cursor = Some(k);
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let rem = self.reduce(v);
        let Some((pivot, lead)) = rem.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Rational::one() / lead;
        let row = rem.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    fn v(cs: &[i64]) -> SparseVec<usize> {
        cs.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, int(c)))
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 0, 0])]), 1);
        assert_eq!(rank(vec![v(&[1, 2, 3]), v(&[0, 1, 1]), v(&[1, 3, 4])]), 2);
        assert_eq!(rank(vec![v(&[1, 0, 0]), v(&[1, 1, 0]), v(&[1, 1, 1])]), 3);
    }

    #[test]
    fn membership() {
        let mut b = EchelonBasis::new();
        b.insert(v(&[0, 1, 1]));
        b.insert(v(&[1, 1, 0]));
        assert!(b.contains(v(&[1, 2, 1])));
        assert!(!b.contains(v(&[0, 0, 1])));
    }

    #[test]
    fn pivot_is_leading_key() {
        let mut b = EchelonBasis::new();
        b.insert(v(&[0, 2, 5]));
        b.insert(v(&[0, 4, 1]));
        let pivots: Vec<usize> = b.pivots().copied().collect();
        assert_eq!(pivots, vec![1, 2]);
    }
}
