//! Information metrics for two toy harmonic systems.
//!
//! * Two coupled oscillators in a magnetic field: Ermakov scale factors,
//!   time-dependent Gaussian ground states, circuit depth, synchronization
//!   and mutual information ([`coupled`], [`metrics`]).
//! * A single ion carried by a moving harmonic trap: coherent amplitude,
//!   fidelity, thermofield-double complexity and nonadiabaticity
//!   ([`transport`]).
//!
//! Units: `ħ = m = 1` for the coupled model; the transport model carries
//! an explicit mass. Logarithms are natural, entropies are in nats.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coupled;
pub mod error;
pub mod gaussian;
pub mod grid;
pub mod metrics;
pub mod transport;

pub use error::{Error, Result};
pub use gaussian::{CovarianceMatrix, GaussianExponent, SymplecticSpectrum};
pub use grid::TimeGrid;
