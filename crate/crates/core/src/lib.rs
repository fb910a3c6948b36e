//! Exact analysis of generalized Boolean functions `Z2^n -> Z8`.
//!
//! * [`function`]: packed truth tables for Boolean and octal functions.
//! * [`cyclotomic`]: arithmetic in `Z[ζ8]` and exact squared moduli in `Z + Z√2`.
//! * [`transform`]: classical and generalized Walsh-Hadamard transforms (naive, butterfly, and
//!   through the bit-plane decomposition), with inverses.
//! * [`correlation`]: crosscorrelation, autocorrelation and their spectral identities.
//! * [`classify`]: bent, semibent and gbent tests by independent routes.
//! * [`construct`]: gbent constructions from bent ingredients.
//! * [`sweep`]: exhaustive and random sweeps and identity verification.
//! * [`cli`]: the `gbent` command-line front end.
//!
//! All spectra are stored unnormalized, so every value is an exact integer or `Z[ζ8]` element.

pub mod classify;
pub mod cli;
pub mod construct;
pub mod correlation;
pub mod cyclotomic;
pub mod error;
pub mod function;
pub mod random;
pub mod sweep;
pub mod transform;

pub use classify::{
    component_spectra, is_bent, is_gbent_by_tuples, is_gbent_characterized, is_gbent_direct, is_semibent,
    ClassifyReport, ComponentSpectra, Verdict,
};
pub use construct::{ConstructionRecipe, Epsilon, Kind};
pub use cyclotomic::{CycZ8, QuadNorm};
pub use error::{Error, Result};
pub use function::{BooleanFunction, OctalFunction};
pub use transform::{gwht_fast, gwht_naive, inverse_gwht, inverse_wht, wht_fast, wht_naive, GSpectrum, Spectrum};
