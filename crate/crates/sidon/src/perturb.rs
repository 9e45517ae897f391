//! Greedy perturbation of sequences into h-Sidon sets.
//!
//! The engine is a single-point construction: given a finite h-Sidon set A,
//! a target point a*, and a bound delta, there is a replacement
//! b = a* + x with 0 < |b - a*| < delta such that the h+1 shifted sumsets
//! `rA + (h-r) b` are pairwise disjoint — which is exactly what is needed
//! for A ∪ {b} to stay h-Sidon. The admissible shifts are the complement of
//! a computable finite "forbidden set", so a valid x can be picked
//! deterministically below the smallest nonzero forbidden magnitude.
//!
//! Iterating the step over an input sequence perturbs it, in order, into an
//! h-Sidon sequence whose i-th displacement stays strictly below any
//! prescribed positive epsilon_i. The first element is never moved.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::absval::{min_nonzero_abs, small_nonzero_element, AbsoluteValue, Magnitude};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::setops::{r_s_sum_difference, translate, FiniteSet};

/// Shifts x for which some pair of the sets `rA + (h-r)(a* + x)` would
/// intersect.
///
/// For each pair 0 <= s < r <= h the offending shifts form the set
/// `(1/(r-s)) * (rA - sA) - a*`; the forbidden set is their union. Any x
/// outside it leaves all h+1 shifted sumsets of `b = a* + x` pairwise
/// disjoint.
pub fn forbidden_set(a: &FiniteSet, a_star: &Rational, h: u32) -> FiniteSet {
    let mut shifts: Vec<Rational> = Vec::new();
    let neg_a_star = -a_star;
    for r in 1..=h {
        for s in 0..r {
            let spread = r_s_sum_difference(a, r, s);
            let scale = Rational::from(r - s).recip();
            let scaled = crate::setops::dilate(&scale, &spread);
            shifts.extend(translate(&scaled, &neg_a_star).elements().iter().cloned());
        }
    }
    FiniteSet::new(shifts)
}

/// Outcome of one perturbation step, including the audit quantities.
struct StepDetail {
    output: Rational,
    forbidden_size: usize,
    delta1: Option<Magnitude>,
    shift: Rational,
}

fn perturb_point_detail(
    a: &FiniteSet,
    a_star: &Rational,
    delta: &Magnitude,
    h: u32,
    av: &AbsoluteValue,
) -> Result<StepDetail> {
    if delta.is_zero() {
        return Err(Error::InvalidBound(delta.to_string()));
    }
    let forbidden = forbidden_set(a, a_star, h);
    let delta1 = min_nonzero_abs(forbidden.elements(), av);
    // Stay strictly below both delta and every nonzero forbidden magnitude;
    // a forbidden set with no nonzero element constrains nothing.
    let bound = match &delta1 {
        Some(d1) if d1 < delta => d1.clone(),
        _ => delta.clone(),
    };
    let shift = small_nonzero_element(&bound, av)?;
    let output = a_star + &shift;
    Ok(StepDetail {
        output,
        forbidden_size: forbidden.len(),
        delta1,
        shift,
    })
}

/// Picks `b = a* + x` with `0 < |b - a*| < delta` such that the h+1 sets
/// `rA + (h-r) b`, r = 0..=h, are pairwise disjoint (hence b is not in A).
///
/// The shift is the deterministic small element below
/// `min(delta1, delta)`, where delta1 is the least nonzero magnitude in the
/// forbidden set. The target a* may already lie in A; the construction
/// still applies and moves it off.
pub fn perturb_point(
    a: &FiniteSet,
    a_star: &Rational,
    delta: &Magnitude,
    h: u32,
    av: &AbsoluteValue,
) -> Result<Rational> {
    perturb_point_detail(a, a_star, delta, h, av).map(|d| d.output)
}

/// Per-index displacement bounds plus the order and absolute value they are
/// measured under.
#[derive(Clone, Debug)]
pub struct PerturbationPlan {
    epsilons: Vec<Magnitude>,
    h: u32,
    av: AbsoluteValue,
    allow_duplicate_inputs: bool,
}

impl PerturbationPlan {
    /// Validates that h >= 1 and every bound is strictly positive.
    pub fn new(epsilons: Vec<Magnitude>, h: u32, av: AbsoluteValue) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidPlan("order h must be at least 1".into()));
        }
        if let Some(pos) = epsilons.iter().position(Magnitude::is_zero) {
            return Err(Error::InvalidPlan(format!(
                "epsilon at position {} must be strictly positive",
                pos + 1
            )));
        }
        Ok(PerturbationPlan {
            epsilons,
            h,
            av,
            allow_duplicate_inputs: false,
        })
    }

    /// Permits repeated input values. Each output is forced off the set
    /// already built, so outputs stay pairwise distinct regardless.
    pub fn allow_duplicate_inputs(mut self, allow: bool) -> Self {
        self.allow_duplicate_inputs = allow;
        self
    }

    pub fn epsilons(&self) -> &[Magnitude] {
        &self.epsilons
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn absolute_value(&self) -> &AbsoluteValue {
        &self.av
    }
}

/// Audit record for one applied perturbation step (steps 2 onward; the
/// first element is copied verbatim and produces no record).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// 1-based position in the sequence.
    #[serde(rename = "i")]
    pub index: usize,
    /// Input value at this position.
    #[serde(rename = "a")]
    pub input: Rational,
    /// Output value chosen for this position.
    #[serde(rename = "b")]
    pub output: Rational,
    /// Least nonzero magnitude in the forbidden set; absent when the
    /// forbidden set had no nonzero element.
    #[serde(
        rename = "delta1",
        serialize_with = "serialize_delta1",
        deserialize_with = "deserialize_delta1"
    )]
    pub delta1: Option<Magnitude>,
    /// The shift applied: output - input.
    #[serde(rename = "x")]
    pub shift: Rational,
    /// Size of the forbidden set at this step.
    #[serde(rename = "C_size")]
    pub forbidden_size: usize,
}

impl TraceStep {
    /// `|output - input|` under the given absolute value.
    pub fn displacement(&self, av: &AbsoluteValue) -> Magnitude {
        av.abs(&(&self.output - &self.input))
    }
}

fn serialize_delta1<S: serde::Serializer>(
    value: &Option<Magnitude>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(m) => m.serialize(serializer),
        None => serializer.serialize_str("infinite"),
    }
}

fn deserialize_delta1<'de, D: serde::Deserializer<'de>>(
    deserializer: D,
) -> std::result::Result<Option<Magnitude>, D::Error> {
    let text = String::deserialize(deserializer)?;
    if text == "infinite" {
        return Ok(None);
    }
    let value: Rational = text.parse().map_err(serde::de::Error::custom)?;
    Magnitude::new(value).map(Some).map_err(serde::de::Error::custom)
}

/// The audit log of a perturbation run.
pub type PerturbationTrace = Vec<TraceStep>;

/// Incremental perturbation state: feed inputs one at a time, read back the
/// h-Sidon prefix built so far.
#[derive(Clone, Debug)]
pub struct Perturber {
    h: u32,
    av: AbsoluteValue,
    allow_duplicate_inputs: bool,
    outputs: Vec<Rational>,
    first_position: HashMap<Rational, usize>,
    trace: Vec<TraceStep>,
}

impl Perturber {
    pub fn new(h: u32, av: AbsoluteValue) -> Self {
        Perturber {
            h,
            av,
            allow_duplicate_inputs: false,
            outputs: Vec::new(),
            first_position: HashMap::new(),
            trace: Vec::new(),
        }
    }

    pub fn allow_duplicate_inputs(mut self, allow: bool) -> Self {
        self.allow_duplicate_inputs = allow;
        self
    }

    /// Consumes the next input value under the given displacement bound and
    /// returns the output placed at that position.
    pub fn step(&mut self, input: Rational, epsilon: &Magnitude) -> Result<Rational> {
        let position = self.outputs.len() + 1;
        if epsilon.is_zero() {
            return Err(Error::InvalidPlan(format!(
                "epsilon at position {position} must be strictly positive"
            )));
        }
        if !self.allow_duplicate_inputs {
            if let Some(&first) = self.first_position.get(&input) {
                return Err(Error::DuplicateElement {
                    value: input.to_string(),
                    first,
                    second: position,
                });
            }
        }
        let output = if self.outputs.is_empty() {
            input.clone()
        } else {
            let built = FiniteSet::new(self.outputs.iter().cloned());
            let detail = perturb_point_detail(&built, &input, epsilon, self.h, &self.av)?;
            self.trace.push(TraceStep {
                index: position,
                input: input.clone(),
                output: detail.output.clone(),
                delta1: detail.delta1,
                shift: detail.shift,
                forbidden_size: detail.forbidden_size,
            });
            detail.output
        };
        self.first_position.entry(input).or_insert(position);
        self.outputs.push(output.clone());
        Ok(output)
    }

    /// Outputs placed so far, in order.
    pub fn outputs(&self) -> &[Rational] {
        &self.outputs
    }

    pub fn trace(&self) -> &[TraceStep] {
        &self.trace
    }

    pub fn into_parts(self) -> (Vec<Rational>, PerturbationTrace) {
        (self.outputs, self.trace)
    }
}

/// Perturbs a whole sequence under a plan.
///
/// The first output equals the first input; every later output moves its
/// input by strictly less than the matching epsilon, and every prefix of
/// the output is an h-Sidon set.
pub fn perturb_sequence(
    alpha: &[Rational],
    plan: &PerturbationPlan,
) -> Result<(Vec<Rational>, PerturbationTrace)> {
    if plan.epsilons.len() < alpha.len() {
        return Err(Error::InvalidPlan(format!(
            "plan provides {} epsilons for {} inputs",
            plan.epsilons.len(),
            alpha.len()
        )));
    }
    let mut perturber =
        Perturber::new(plan.h, plan.av.clone()).allow_duplicate_inputs(plan.allow_duplicate_inputs);
    for (input, epsilon) in alpha.iter().zip(&plan.epsilons) {
        perturber.step(input.clone(), epsilon)?;
    }
    Ok(perturber.into_parts())
}

/// Lazily perturbs an unbounded source of inputs.
///
/// `epsilons` maps each 1-based position to its displacement bound, so
/// schedules like `epsilon_i = 1/i` — which drive the displacements to
/// zero while every prefix stays h-Sidon — are a one-liner. Emission is in
/// input order; the first error (bad epsilon, duplicate input) fuses the
/// stream.
pub fn perturb_stream<I, E>(inputs: I, epsilons: E, h: u32, av: AbsoluteValue) -> PerturbStream<I::IntoIter, E>
where
    I: IntoIterator<Item = Rational>,
    E: FnMut(usize) -> Magnitude,
{
    PerturbStream {
        perturber: Perturber::new(h, av),
        inputs: inputs.into_iter(),
        epsilons,
        failed: false,
    }
}

/// Iterator over perturbed outputs; see [`perturb_stream`].
#[derive(Debug)]
pub struct PerturbStream<I, E> {
    perturber: Perturber,
    inputs: I,
    epsilons: E,
    failed: bool,
}

impl<I, E> PerturbStream<I, E> {
    pub fn allow_duplicate_inputs(mut self, allow: bool) -> Self {
        self.perturber = self.perturber.allow_duplicate_inputs(allow);
        self
    }

    /// Trace of the steps emitted so far.
    pub fn trace(&self) -> &[TraceStep] {
        self.perturber.trace()
    }

    pub fn outputs(&self) -> &[Rational] {
        self.perturber.outputs()
    }
}

impl<I, E> Iterator for PerturbStream<I, E>
where
    I: Iterator<Item = Rational>,
    E: FnMut(usize) -> Magnitude,
{
    type Item = Result<Rational>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let input = self.inputs.next()?;
        let position = self.perturber.outputs().len() + 1;
        let epsilon = (self.epsilons)(position);
        match self.perturber.step(input, &epsilon) {
            Ok(output) => Some(Ok(output)),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}
