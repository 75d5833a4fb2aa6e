//! Finite formal linear combinations with exact scalars.
//!
//! Backed by a `BTreeMap` so that term order (and hence printing) is
//! canonical. Zero coefficients are never stored.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<B: Ord + Clone, S: Scalar> {
    terms: BTreeMap<B, S>,
}

impl<B: Ord + Clone, S: Scalar> Default for LinComb<B, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone, S: Scalar> LinComb<B, S> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(basis: B, coef: S) -> Self {
        let mut out = Self::zero();
        out.add_term(basis, coef);
        out
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

    pub fn coeff(&self, basis: &B) -> Option<&S> {
        self.terms.get(basis)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &S)> {
        self.terms.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (B, S)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, basis: B, coef: S) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(basis) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coef);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero();
        for (b, c) in self.iter() {
            out.add_term(b.clone(), c.mul(s));
        }
        out
    }

    /// Applies `f` to every basis element, merging coefficients.
    pub fn map_basis<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> B2) -> LinComb<B2, S> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }
}

impl<B: Ord + Clone, S: Scalar> FromIterator<(B, S)> for LinComb<B, S> {
    fn from_iter<T: IntoIterator<Item = (B, S)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

/// Tensor square of a based space: pairs of basis elements.
pub type Tensor2<B, S> = LinComb<(B, B), S>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x: LinComb<u32, Rat> = LinComb::zero();
        x.add_term(3, rat(2));
        x.add_term(3, rat(-2));
        assert!(x.is_zero());
    }

    #[test]
    fn addition_is_coefficientwise() {
        let x = LinComb::from_iter([(1u32, rat(1)), (2, rat(5))]);
        let y = LinComb::from_iter([(2u32, rat(-5)), (3, rat(7))]);
        let z = x.add(&y);
        assert_eq!(z, LinComb::from_iter([(1u32, rat(1)), (3, rat(7))]));
    }
}
