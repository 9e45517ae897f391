//! The user guide, wired in so its code blocks run under `cargo test --doc`.
//!
//! Each chapter of the mdbook in `book/` becomes the documentation of one
//! module here; rustdoc then compiles and executes every Rust code fence,
//! keeping the book and the crate in lockstep. The modules are hidden from
//! the rendered API docs — read the book instead.

#![allow(unused)]

#[doc = include_str!("../../../book/src/introduction.md")]
#[doc(hidden)]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
#[doc(hidden)]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/sumsets.md")]
#[doc(hidden)]
pub mod sumsets {}

#[doc = include_str!("../../../book/src/weights-and-hyperplanes.md")]
#[doc(hidden)]
pub mod weights_and_hyperplanes {}

#[doc = include_str!("../../../book/src/verifying.md")]
#[doc(hidden)]
pub mod verifying {}

#[doc = include_str!("../../../book/src/perturbation.md")]
#[doc(hidden)]
pub mod perturbation {}

#[doc = include_str!("../../../book/src/experiments.md")]
#[doc(hidden)]
pub mod experiments {}

#[doc = include_str!("../../../book/src/cli.md")]
#[doc(hidden)]
pub mod cli {}
