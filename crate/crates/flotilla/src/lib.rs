//! Exact desk-scale tooling for tournament pattern classes.
//!
//! The crate is organized around one pipeline:
//!
//! * [`tournament`] — bit-matrix tournaments, partial digraphs, orderings,
//!   exact directed densities, and the backward-arc graph.
//! * [`transitive`] — subset-DP tables for the maximum transitive
//!   subtournament and exact epsilon-criticality checks.
//! * [`patterns`] — classification of backward-arc components (stars, boats),
//!   flotilla-galaxy recognition, and ordering search.
//! * [`hat`] — constructions derived from a flotilla-galaxy ordering:
//!   regularization, the hatted digraph with its ordering, signature vectors,
//!   the alpha/beta ordering family, and the super tournaments.
//! * [`smooth`] — smooth (c, lambda, w)-structures: verification, the xi
//!   position map, neighborhood restriction, divisibility trimming, a
//!   best-effort finder, and synthetic blowup fixtures.
//! * [`embed`] — well-containment checks, the inductive embedding of a hatted
//!   digraph into a smooth structure, copy extraction, and a generic
//!   containment oracle.
//! * [`harness`] — enumeration, seeded generation, canonical forms, and
//!   forbidden-pattern census curves.

pub mod embed;
pub mod fixtures;
pub mod harness;
pub mod hat;
pub mod patterns;
pub mod rng;
pub mod smooth;
pub mod tournament;
pub mod transitive;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational used for all densities and thresholds.
pub type Rat = BigRational;

/// Builds an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("structural error: {0}")]
    Structure(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Runtime caps, overridable via environment and the CLI `--cap` flag.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Largest n for which the 2^n subset table is built.
    pub tr: usize,
    /// Largest n for labeled exhaustive enumeration.
    pub labeled: usize,
    /// Largest n for canonical (isomorphism-free) enumeration.
    pub canonical: usize,
    /// Largest n for the flotilla-galaxy ordering search.
    pub ordering: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            tr: 24,
            labeled: 7,
            canonical: 8,
            ordering: 10,
        }
    }
}

impl Caps {
    /// Applies `FLOTILLA_CAP_*` environment overrides on top of the defaults.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |name: &str| {
            std::env::var(name)
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
        };
        if let Some(v) = read("FLOTILLA_CAP_TR") {
            caps.tr = v;
        }
        if let Some(v) = read("FLOTILLA_CAP_LABELED") {
            caps.labeled = v;
        }
        if let Some(v) = read("FLOTILLA_CAP_CANONICAL") {
            caps.canonical = v;
        }
        if let Some(v) = read("FLOTILLA_CAP_ORDERING") {
            caps.ordering = v;
        }
        caps
    }
}
