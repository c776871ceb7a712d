#![forbid(unsafe_code)]
//! Estimation and exact randomization inference for treatment and placebo
//! effects in randomized trials.
//!
//! The library is built around two randomized instruments: a treatment
//! assignment `Z` and a psychological encouragement `Q`. The encouragement
//! identifies the placebo effect of the emotion level `M` on the outcome `Y`
//! even in the presence of unmeasured confounders; the treatment effect of
//! the received treatment `X` is then estimated on the outcome residuals
//! after the placebo contribution has been removed.
//!
//! Modules:
//! - [`trial_data`]: the trial dataset model, validation, and CSV interchange.
//! - [`estimators`]: IV ratio estimators, the two-step residual procedure,
//!   ITT forms, an OLS comparator, diagnostics, and the pretest strategy.
//! - [`rand_inference`]: exact randomization tests, shifted-null two-sample
//!   tests, one-sided p-value profiles, and test-inversion confidence
//!   intervals.
//! - [`dgp`]: the synthetic-trial generator (threshold models for the binary
//!   variables, linear models for emotion and outcome).
//! - [`design`]: Latin hypercube sampling with maximin optimization.
//! - [`harness`]: Monte Carlo experiment orchestration (type-I error and
//!   power curves, bias summaries, stratified power, consistency, coverage).

pub mod design;
pub mod dgp;
pub mod estimators;
pub mod harness;
pub mod rand_inference;
pub mod seed;
pub mod trial_data;
