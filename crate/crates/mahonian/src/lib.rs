//! Exact combinatorics of Mahonian statistics on words and permutations.
//!
//! This crate implements, with exact integer arithmetic throughout:
//!
//! - the fundamental word types and structural maps (standardization,
//!   inverse standardization, permutation inverse, the run-splitting map
//!   `theta` and its inverse) in [`word`];
//! - sparse exact polynomials in the variables `q`, `t`, `x`, together with
//!   q-integers, q-binomial and q-multinomial coefficients, polynomial
//!   determinants, and the Mahonian-Stirling product in [`poly`];
//! - every statistic used by the identity suite (inversions, major index,
//!   Denert's statistic and its r-gap extension, `mak`/`mad`, `stat`,
//!   r-analogues, minima/maxima extractors, inverse statistics,
//!   alternating runs) in [`stats`];
//! - five statistic-transporting bijection families (the r-analogue of
//!   Foata's transformation, Rawlings' insertion bijection, the dominated
//!   cycle decomposition, the descent-block bijection and its word version,
//!   and the Stirling-to-quasi-increasing bijection) in [`bij`];
//! - exhaustive generators for every restricted family the identities
//!   quantify over (words of fixed content, fixed weak/strict right-to-left
//!   minima, bounded or exact descent sets, set partitions, pattern
//!   avoiders, alternating permutations, alternating-run classes) in
//!   [`families`];
//! - a data-driven identity registry plus distribution and counterexample
//!   engines in [`verify`].
//!
//! The command line binary `mahonian` exposes all of it; see the crate
//! README for usage.

pub mod bij;
pub mod error;
pub mod families;
pub mod poly;
pub mod stats;
pub mod verify;
pub mod word;

pub use error::Error;
pub use poly::MultiPoly;
pub use word::{Biword, Composition, LetterMultiset, Permutation, SetPartition, Word};
