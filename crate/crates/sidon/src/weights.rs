//! Weight vectors and the linear forms they induce.
//!
//! A weight vector over the index set {1..k} at order h is an integer vector
//! w with nonempty support whose coordinates sum to zero and whose positive
//! part sums to at most h (and at least 1). Each one defines the linear form
//! `f_w(a) = sum_i w_i a_i`; a point configuration lies on the associated
//! hyperplane exactly when the form vanishes. These hyperplanes are the
//! complete obstruction set for the h-Sidon property, which is what makes
//! enumerating the family worthwhile: a configuration is h-Sidon if and only
//! if it avoids every one of them.

use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An integer weight vector with zero coordinate sum and positive part
/// between 1 and h.
///
/// `k` records the index universe the vector was enumerated over; it is kept
/// for serialization but does not participate in equality, which compares
/// the coefficient map and the order only.
#[derive(Clone, Debug, Serialize)]
pub struct WeightVector {
    k: usize,
    h: u32,
    coeffs: BTreeMap<usize, i64>,
}

impl WeightVector {
    /// Validates and builds a weight vector.
    ///
    /// Requirements: nonempty support, no explicit zero coefficients, all
    /// indices in 1..=k, coordinate sum zero, and positive part in 1..=h.
    pub fn new(k: usize, h: u32, coeffs: BTreeMap<usize, i64>) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidWeightVector(msg));
        if coeffs.is_empty() {
            return fail("support is empty".into());
        }
        for (&i, &c) in &coeffs {
            if c == 0 {
                return fail(format!("explicit zero coefficient at index {i}"));
            }
            if i == 0 || i > k {
                return fail(format!("index {i} outside 1..={k}"));
            }
        }
        let total: i64 = coeffs.values().sum();
        if total != 0 {
            return fail(format!("coordinates sum to {total}, not 0"));
        }
        let positive: i64 = coeffs.values().filter(|&&c| c > 0).sum();
        if positive < 1 || positive as u64 > h as u64 {
            return fail(format!("positive part {positive} outside 1..={h}"));
        }
        Ok(WeightVector { k, h, coeffs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    /// Coefficient at a 1-based index (zero off the support).
    pub fn coeff(&self, index: usize) -> i64 {
        self.coeffs.get(&index).copied().unwrap_or(0)
    }

    /// Indices with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    /// Sum of the positive coefficients (equals the sum of the negated
    /// negative ones).
    pub fn positive_sum(&self) -> u64 {
        self.coeffs.values().filter(|&&c| c > 0).sum::<i64>() as u64
    }

    pub fn negated(&self) -> WeightVector {
        WeightVector {
            k: self.k,
            h: self.h,
            coeffs: self.coeffs.iter().map(|(&i, &c)| (i, -c)).collect(),
        }
    }

    /// True when the lowest-index nonzero coefficient is positive; exactly
    /// one of w and -w is canonical.
    pub fn is_canonical(&self) -> bool {
        self.coeffs
            .first_key_value()
            .map(|(_, &c)| c > 0)
            .unwrap_or(false)
    }

    /// The coefficients as a dense length-k vector (used for ordering).
    pub fn dense(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.k];
        for (&i, &c) in &self.coeffs {
            v[i - 1] = c;
        }
        v
    }
}

// k is enumeration metadata; identity is the form itself plus the order.
impl PartialEq for WeightVector {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && self.coeffs == other.coeffs
    }
}

impl Eq for WeightVector {}

impl Hash for WeightVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.h.hash(state);
        self.coeffs.hash(state);
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            k: usize,
            h: u32,
            coeffs: BTreeMap<usize, i64>,
        }
        let r = Repr::deserialize(deserializer)?;
        WeightVector::new(r.k, r.h, r.coeffs).map_err(serde::de::Error::custom)
    }
}

/// Enumerates the full weight-vector family over {1..k} at order h, in
/// lexicographic order of the dense coefficient vectors.
///
/// With `canonical` set, exactly one of each {w, -w} pair is kept (the one
/// whose lowest-index coefficient is positive), halving the family.
///
/// The generator works positive part by positive part: for each s in 1..=h,
/// every multiset of s indices gives a positive part, every multiset of s
/// indices on a disjoint support gives a matching negative part, and the
/// difference of the two is a member of the family. Every member arises
/// exactly once this way, so the full (2h+1)^k grid never has to be scanned.
pub fn enumerate_weight_vectors(k: usize, h: u32, canonical: bool) -> Vec<WeightVector> {
    let mut out = Vec::new();
    if k < 2 {
        // A single nonzero coordinate cannot sum to zero.
        return out;
    }
    for s in 1..=h {
        let parts = index_multisets(k, s as usize);
        for pos in &parts {
            let pos_min = *pos.keys().next().expect("nonempty part");
            for neg in &parts {
                let neg_min = *neg.keys().next().expect("nonempty part");
                if canonical && pos_min > neg_min {
                    continue;
                }
                if !disjoint_supports(pos, neg) {
                    continue;
                }
                let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
                for (&i, &c) in pos {
                    coeffs.insert(i, c as i64);
                }
                for (&i, &c) in neg {
                    coeffs.insert(i, -(c as i64));
                }
                out.push(WeightVector { k, h, coeffs });
            }
        }
    }
    out.sort_by_cached_key(|w| w.dense());
    out
}

/// All maps from subsets of {1..k} to positive integers summing to s,
/// as occurrence counts of the s-multisets over {1..k}.
fn index_multisets(k: usize, s: usize) -> Vec<BTreeMap<usize, u32>> {
    (1..=k)
        .combinations_with_replacement(s)
        .map(|pick| {
            let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
            for i in pick {
                *counts.entry(i).or_insert(0) += 1;
            }
            counts
        })
        .collect()
}

fn disjoint_supports(a: &BTreeMap<usize, u32>, b: &BTreeMap<usize, u32>) -> bool {
    a.keys().all(|i| !b.contains_key(i))
}

/// The linear form `f_w(a) = sum_i w_i a_i`, evaluated exactly.
///
/// The points are taken in order with 1-based indexing; distinctness is not
/// required here, only coverage of the support.
pub fn evaluate_form(w: &WeightVector, points: &[Rational]) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (&i, &c) in w.coeffs() {
        let a = points.get(i - 1).ok_or(Error::IndexOutOfRange {
            index: i,
            len: points.len(),
        })?;
        acc = acc + Rational::from(c) * a;
    }
    Ok(acc)
}

/// Whether the points lie on the hyperplane of w, i.e. `f_w` vanishes.
pub fn hyperplane_member(w: &WeightVector, points: &[Rational]) -> Result<bool> {
    Ok(evaluate_form(w, points)?.is_zero())
}
