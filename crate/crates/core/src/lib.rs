//! Lower bounds on the energy × surface cost of storing information in a
//! non-relativistic quantum device.
//!
//! The crate is organised bottom-up:
//!
//! * [`spectrum`] enumerates the levels of the dimensionless optimal
//!   Hamiltonian (critical inverse-square well plus harmonic confinement).
//! * [`thermo`] evaluates the factorised partition function `Z = Z_n · Z_l`
//!   and the canonical energies and entropies of both subsystems.
//! * [`inversion`] solves for the inverse temperature that realises a given
//!   entropy and evaluates the sum-form cost.
//! * [`bound`] turns the sum-form cost into the product bound
//!   `(ħ²/2m) d² (e^{S/d} − 1)²` in SI units.
//! * [`lemma`] is a brute-force oracle for the Boltzmann minimality claim on
//!   finite spectra.
//! * [`devices`] models the textbook storage devices (box, oscillator,
//!   hydrogen) for comparison.
//! * [`cli`] renders everything as reports and CSV.

// `!(x > 0.0)` is used on purpose so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound;
pub mod cli;
pub mod devices;
pub mod error;
pub mod inversion;
pub mod lemma;
pub mod numeric;
pub mod scenario;
pub mod spectrum;
pub mod thermo;

pub use error::{Error, Result};
