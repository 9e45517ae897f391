//! Finite-set additive primitives: translates, dilates, h-fold sumsets,
//! sum-difference sets, and shifted sumsets.
//!
//! Sumsets are computed by exhaustive multiset enumeration with exact
//! deduplication; with k elements and order h that is C(k+h-1, h) terms,
//! which is comfortable at the scales this crate targets (k up to a few
//! dozen, h up to 5 or so).

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite set of rationals, stored sorted ascending without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FiniteSet(Vec<Rational>);

impl FiniteSet {
    /// Builds a set from arbitrary elements, sorting and deduplicating.
    pub fn new(elements: impl IntoIterator<Item = Rational>) -> Self {
        let mut v: Vec<Rational> = elements.into_iter().collect();
        v.sort();
        v.dedup();
        FiniteSet(v)
    }

    pub fn empty() -> Self {
        FiniteSet(Vec::new())
    }

    pub fn singleton(x: Rational) -> Self {
        FiniteSet(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(
            self.0
                .iter()
                .filter(|x| other.contains(x))
                .cloned()
                .collect(),
        )
    }

    /// Linear-time disjointness over the two sorted element lists.
    pub fn is_disjoint(&self, other: &FiniteSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

impl FromIterator<Rational> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        FiniteSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<'de> Deserialize<'de> for FiniteSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<Rational>::deserialize(deserializer)?;
        Ok(FiniteSet::new(elements))
    }
}

/// `A + c = { a + c : a in A }`.
pub fn translate(a: &FiniteSet, c: &Rational) -> FiniteSet {
    // Adding a constant preserves order, so no re-sort is needed.
    FiniteSet(a.iter().map(|x| x + c).collect())
}

/// `c * A = { c a : a in A }`.
pub fn dilate(c: &Rational, a: &FiniteSet) -> FiniteSet {
    FiniteSet::new(a.iter().map(|x| c * x))
}

/// The h-fold sumset `hA`: all sums of h elements of A with repetition.
///
/// By convention `0A = {0}` for any A, and `hA` is empty when A is empty
/// and h >= 1.
pub fn h_fold_sumset(a: &FiniteSet, h: u32) -> FiniteSet {
    if h == 0 {
        return FiniteSet::singleton(Rational::zero());
    }
    if a.is_empty() {
        return FiniteSet::empty();
    }
    FiniteSet::new(
        a.iter()
            .combinations_with_replacement(h as usize)
            .map(|pick| pick.into_iter().cloned().sum()),
    )
}

/// The (r,s)-sum-difference set `rA - sA`: sums of r elements minus sums of
/// s elements, all chosen independently from A with repetition.
pub fn r_s_sum_difference(a: &FiniteSet, r: u32, s: u32) -> FiniteSet {
    let plus = h_fold_sumset(a, r);
    let minus = h_fold_sumset(a, s);
    FiniteSet::new(
        plus.iter()
            .cartesian_product(minus.iter())
            .map(|(x, y)| x - y),
    )
}

/// The shifted sumset `rA + (h - r) b`, for `0 <= r <= h`.
///
/// The union of these over r = 0..=h is exactly `h (A ∪ {b})` when b is not
/// already in A.
pub fn shifted_sumset(a: &FiniteSet, b: &Rational, r: u32, h: u32) -> Result<FiniteSet> {
    if r > h {
        return Err(Error::ShiftOutOfRange { r, h });
    }
    let shift = Rational::from(h - r) * b;
    Ok(translate(&h_fold_sumset(a, r), &shift))
}
