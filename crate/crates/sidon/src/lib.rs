//! Exact verification and construction of h-Sidon (B_h) sets over the
//! rationals.
//!
//! An h-Sidon set is one in which every sum of h elements (repetition
//! allowed) determines its summands uniquely. This crate decides that
//! property exactly — no floating point anywhere — and constructs h-Sidon
//! sets by nudging arbitrary input sequences:
//!
//! * [`rational`]: arbitrary-precision rationals with a strict `"p/q"` text
//!   form.
//! * [`absval`]: archimedean and p-adic absolute values with exact
//!   magnitudes, plus deterministic selection of arbitrarily small nonzero
//!   elements.
//! * [`setops`]: translates, dilates, h-fold sumsets, sum-difference sets,
//!   and shifted sumsets of finite sets.
//! * [`weights`]: the weight-vector family whose hyperplanes are the
//!   complete obstruction set for the h-Sidon property.
//! * [`verify`]: two independent verifiers (multiset enumeration and
//!   hyperplane sweep) with interconvertible certificates.
//! * [`perturb`]: the greedy construction that moves each point by less
//!   than epsilon_i while keeping every prefix h-Sidon.
//! * [`experiments`]: seeded samplers and exact grid counts showing that
//!   failing configurations are vanishingly rare.
//!
//! The companion guide in `book/` walks through the concepts; its code
//! blocks compile and run as this crate's doc-tests.

pub mod absval;
pub mod config;
pub mod error;
pub mod experiments;
pub mod perturb;
pub mod rational;
pub mod setops;
pub mod verify;
pub mod weights;

mod guide;

pub use absval::{min_nonzero_abs, small_nonzero_element, AbsoluteValue, Magnitude};
pub use config::PointConfiguration;
pub use error::{Error, Result};
pub use perturb::{
    forbidden_set, perturb_point, perturb_sequence, perturb_stream, PerturbationPlan,
    PerturbationTrace, Perturber, TraceStep,
};
pub use rational::Rational;
pub use setops::{
    dilate, h_fold_sumset, r_s_sum_difference, shifted_sumset, translate, FiniteSet,
};
pub use verify::{
    default_padding_index, verify_bruteforce, verify_hyperplane, weight_to_witness,
    witness_to_weight, CollisionWitness, Verdict,
};
pub use weights::{enumerate_weight_vectors, evaluate_form, hyperplane_member, WeightVector};
pub use experiments::{
    exact_grid_density, sample_configuration, sidon_density, DensityReport, SamplerKind,
    SamplerSpec,
};

#[cfg(test)]
mod tests {
    // Every value type is immutable data; verifiers and enumerators are
    // pure functions, so values move freely across threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn ok<T: Send + Sync>() {}
        ok::<crate::Rational>();
        ok::<crate::Magnitude>();
        ok::<crate::AbsoluteValue>();
        ok::<crate::FiniteSet>();
        ok::<crate::PointConfiguration>();
        ok::<crate::WeightVector>();
        ok::<crate::CollisionWitness>();
        ok::<crate::Verdict>();
        ok::<crate::PerturbationPlan>();
        ok::<crate::Perturber>();
        ok::<crate::DensityReport>();
        ok::<crate::Error>();
    }
}
