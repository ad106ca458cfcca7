//! Marked random graphs with a prescribed degree sequence, studied in the
//! local weak topology.
//!
//! The crate is organized by subsystem:
//!
//! - [`graph`]: marked graphs, rooted truncation, canonical forms and the
//!   local metric between rooted marked graphs.
//! - [`measure`]: empirical neighborhood distributions, pushforwards, the
//!   exact Lévy–Prokhorov distance and unimodularity checks.
//! - [`sampler`]: uniform and i.i.d.-marked graphs with given degrees.
//! - [`colored`]: the colored configuration model, `C(G)` colorings and the
//!   marked color-blind reconstruction.
//! - [`transport`]: modification of colored-degree matrices towards a target
//!   column-sum vector.
//! - [`surgery`]: the full degree-fixing pipeline built on the above.
//! - [`entropy`]: entropy, relative entropy and the rate-function formulas.
//! - [`enumerate`]: brute-force enumeration of tiny labeled graph classes.
//! - [`verify`]: the acceptance checks, shared by the test suite and the CLI.
//!
//! All measures carry exact rational weights; all randomized routines take an
//! explicit seeded generator.

pub mod colored;
pub mod entropy;
pub mod enumerate;
mod error;
pub mod graph;
pub mod measure;
pub mod rational;
pub mod sampler;
pub mod stats;
pub mod surgery;
pub mod transport;
pub mod verify;
mod text;

pub use error::{Error, Result};

/// The generator type used by every randomized routine.
pub type Rng = rand_chacha::ChaCha8Rng;

/// Builds the crate's generator from a 64-bit seed.
pub fn seeded_rng(seed: u64) -> Rng {
    use rand::SeedableRng;
    Rng::seed_from_u64(seed)
}

/// Derives an independent stream for worker `index` of a seeded experiment.
pub fn stream_rng(seed: u64, index: u64) -> Rng {
    use rand::SeedableRng;
    let mut rng = Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}
