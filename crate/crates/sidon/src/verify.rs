//! h-Sidon verification with certificates.
//!
//! A configuration is h-Sidon when every element of its h-fold sumset has a
//! unique representation as a multiset of h points. Two independent
//! verifiers are provided:
//!
//! * [`verify_bruteforce`] enumerates all h-multisets and looks for a
//!   repeated sum, producing a [`CollisionWitness`] (the two coefficient
//!   vectors of a doubly-represented sum);
//! * [`verify_hyperplane`] sweeps the weight-vector family and looks for a
//!   vanishing linear form, producing a [`WeightVector`] certificate.
//!
//! The two answers always agree, and the certificates convert into one
//! another: subtracting the witness coefficient vectors yields a weight
//! vector, and splitting a weight vector into its positive and negative
//! parts (padded up to order h at a chosen index) yields a witness.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::weights::{enumerate_weight_vectors, evaluate_form, WeightVector};

/// Two distinct representations of the same h-fold sum.
///
/// `u` and `v` map 1-based indices to multiplicities; both sum to the order
/// h, and they differ somewhere. Serialized as `{"u":{...},"v":{...}}`; the
/// order is recovered from the multiplicity sums on the way back in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionWitness {
    #[serde(skip)]
    h: u32,
    u: BTreeMap<usize, u32>,
    v: BTreeMap<usize, u32>,
}

impl CollisionWitness {
    /// Validates multiplicities: no zero entries, both sides summing to h,
    /// and u != v.
    pub fn new(h: u32, u: BTreeMap<usize, u32>, v: BTreeMap<usize, u32>) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidWitness(msg));
        for side in [&u, &v] {
            if side.values().any(|&c| c == 0) {
                return fail("explicit zero multiplicity".into());
            }
            if side.keys().any(|&i| i == 0) {
                return fail("indices are 1-based".into());
            }
            let total: u64 = side.values().map(|&c| c as u64).sum();
            if total != h as u64 {
                return fail(format!("multiplicities sum to {total}, expected {h}"));
            }
        }
        if u == v {
            return Err(Error::NotACollision);
        }
        Ok(CollisionWitness { h, u, v })
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn u(&self) -> &BTreeMap<usize, u32> {
        &self.u
    }

    pub fn v(&self) -> &BTreeMap<usize, u32> {
        &self.v
    }

    /// Replays the witness against a configuration: both weighted sums must
    /// agree exactly, and the common value is returned.
    pub fn collision_sum(&self, config: &PointConfiguration) -> Result<Rational> {
        let eval = |side: &BTreeMap<usize, u32>| -> Result<Rational> {
            let mut acc = Rational::zero();
            for (&i, &c) in side {
                acc = acc + Rational::from(c) * config.point(i)?;
            }
            Ok(acc)
        };
        let left = eval(&self.u)?;
        let right = eval(&self.v)?;
        if left != right {
            return Err(Error::InvalidWitness(format!(
                "sides sum to {left} and {right} on this configuration"
            )));
        }
        Ok(left)
    }
}

impl<'de> Deserialize<'de> for CollisionWitness {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            u: BTreeMap<usize, u32>,
            v: BTreeMap<usize, u32>,
        }
        let r = Repr::deserialize(deserializer)?;
        let h: u64 = r.u.values().map(|&c| c as u64).sum();
        let h = u32::try_from(h).map_err(serde::de::Error::custom)?;
        CollisionWitness::new(h, r.u, r.v).map_err(serde::de::Error::custom)
    }
}

/// Outcome of a verification run.
///
/// A negative verdict always carries at least one certificate; which one
/// depends on the verifier that produced it. [`Verdict::enriched`] fills in
/// the other via the conversion constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub is_sidon: bool,
    pub h: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CollisionWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<WeightVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision_sum: Option<Rational>,
}

impl Verdict {
    fn positive(h: u32) -> Self {
        Verdict {
            is_sidon: true,
            h,
            witness: None,
            weight: None,
            collision_sum: None,
        }
    }

    /// Completes a negative verdict so both certificate forms are present,
    /// by converting whichever one exists into the other.
    pub fn enriched(mut self, config: &PointConfiguration) -> Result<Verdict> {
        if self.is_sidon {
            return Ok(self);
        }
        if self.weight.is_none() {
            let witness = self.witness.as_ref().expect("negative verdict carries a certificate");
            self.weight = Some(witness_to_weight(witness)?);
        }
        if self.witness.is_none() {
            let weight = self.weight.as_ref().expect("negative verdict carries a certificate");
            let i0 = default_padding_index(weight);
            self.witness = Some(weight_to_witness(weight, self.h, i0)?);
        }
        if self.collision_sum.is_none() {
            self.collision_sum = Some(
                self.witness
                    .as_ref()
                    .expect("witness filled above")
                    .collision_sum(config)?,
            );
        }
        Ok(self)
    }
}

/// Checks the h-Sidon property by enumerating all h-element multisets.
///
/// Multisets are visited in lexicographic order of their nondecreasing index
/// tuples; the first repeated sum yields the witness, with `u` taken from
/// the earlier multiset. The verdict also records the collided sum.
pub fn verify_bruteforce(config: &PointConfiguration, h: u32) -> Verdict {
    if h == 0 {
        return Verdict::positive(h);
    }
    let k = config.len();
    let points = config.points();
    let mut first_seen: HashMap<Rational, Vec<usize>> = HashMap::new();
    for pick in (0..k).combinations_with_replacement(h as usize) {
        let sum: Rational = pick.iter().map(|&i| points[i].clone()).sum();
        if let Some(earlier) = first_seen.get(&sum) {
            let witness = CollisionWitness::new(h, multiplicities(earlier), multiplicities(&pick))
                .expect("distinct multisets with equal sums form a witness");
            return Verdict {
                is_sidon: false,
                h,
                witness: Some(witness),
                weight: None,
                collision_sum: Some(sum),
            };
        }
        first_seen.insert(sum, pick);
    }
    Verdict::positive(h)
}

/// 0-based index multiset -> 1-based multiplicity map.
fn multiplicities(pick: &[usize]) -> BTreeMap<usize, u32> {
    let mut counts = BTreeMap::new();
    for &i in pick {
        *counts.entry(i + 1).or_insert(0) += 1;
    }
    counts
}

/// Checks the h-Sidon property by sweeping the weight-vector family.
///
/// Canonical representatives suffice because w and -w cut the same
/// hyperplane. Vectors are visited in lexicographic order; the first
/// vanishing form is returned as the certificate.
pub fn verify_hyperplane(config: &PointConfiguration, h: u32) -> Verdict {
    if h == 0 {
        return Verdict::positive(h);
    }
    let points = config.points();
    for w in enumerate_weight_vectors(config.len(), h, true) {
        let value = evaluate_form(&w, points).expect("enumerated support fits the configuration");
        if value.is_zero() {
            return Verdict {
                is_sidon: false,
                h,
                witness: None,
                weight: Some(w),
                collision_sum: None,
            };
        }
    }
    Verdict::positive(h)
}

/// Converts a collision witness to the weight vector `w = u - v`.
///
/// The difference inherits every family invariant from the witness: the
/// coordinate sum telescopes to zero and the positive part is bounded by the
/// order. Fails with [`Error::NotACollision`] when u = v.
pub fn witness_to_weight(witness: &CollisionWitness) -> Result<WeightVector> {
    let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
    for (&i, &c) in witness.u() {
        *coeffs.entry(i).or_insert(0) += c as i64;
    }
    for (&i, &c) in witness.v() {
        *coeffs.entry(i).or_insert(0) -= c as i64;
    }
    coeffs.retain(|_, c| *c != 0);
    if coeffs.is_empty() {
        return Err(Error::NotACollision);
    }
    let k = coeffs.keys().max().copied().unwrap_or(0);
    WeightVector::new(k, witness.h(), coeffs)
}

/// Converts a weight vector to a collision witness at order h.
///
/// The positive part becomes u and the negated negative part becomes v; both
/// sides then receive `h - h1` extra copies at the padding index `i0`, where
/// h1 is the positive-part sum. Fails when h1 exceeds h.
pub fn weight_to_witness(w: &WeightVector, h: u32, i0: usize) -> Result<CollisionWitness> {
    let h1 = w.positive_sum();
    if h1 > h as u64 {
        return Err(Error::OrderMismatch { positive: h1, h });
    }
    if i0 == 0 || i0 > w.k() {
        return Err(Error::IndexOutOfRange { index: i0, len: w.k() });
    }
    let padding = h as u64 - h1;
    let mut u: BTreeMap<usize, u32> = BTreeMap::new();
    let mut v: BTreeMap<usize, u32> = BTreeMap::new();
    for (&i, &c) in w.coeffs() {
        if c > 0 {
            u.insert(i, c as u32);
        } else {
            v.insert(i, (-c) as u32);
        }
    }
    if padding > 0 {
        *u.entry(i0).or_insert(0) += padding as u32;
        *v.entry(i0).or_insert(0) += padding as u32;
    }
    CollisionWitness::new(h, u, v)
}

/// The padding index used when none is requested: the smallest index outside
/// the support, falling back to 1 when the support covers everything.
///
/// Padding off the support keeps the witness -> weight round trip exact.
pub fn default_padding_index(w: &WeightVector) -> usize {
    (1..=w.k()).find(|i| w.coeff(*i) == 0).unwrap_or(1)
}
