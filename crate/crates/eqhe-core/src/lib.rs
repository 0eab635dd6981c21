//! Thermodynamics of a two-spin quantum Otto engine with z-axis
//! Dzyaloshinskii-Moriya coupling.
//!
//! The working substance is a pair of spin-1/2 particles coupled through
//!
//! ```text
//! H = J [ (1 + iD) s1+ s2- + (1 - iD) s1- s2+ ]
//! ```
//!
//! where `J` is the exchange coupling (J > 0 antiferromagnetic, J < 0
//! ferromagnetic) and `D` the Dzyaloshinskii-Moriya strength along z. The
//! spectrum is `{0, 0, eps, -eps}` with `eps = J*sqrt(1 + D^2)`, so only that
//! single gap enters the thermodynamics.
//!
//! The engine runs a four-stroke Otto cycle: thermalize against a hot bath,
//! shift `(J, D)` adiabatically, thermalize against a cold bath, shift back.
//! Heat flows only while occupations relax against a fixed spectrum; work is
//! exchanged only while the spectrum shifts under frozen occupations.
//!
//! - [`spin`] — closed-form spectrum, Gibbs occupations, thermal concurrence,
//!   and the inversion from a target concurrence back to a coupling.
//! - [`otto`] — stroke-level heat/work bookkeeping and the closed-form cycle
//!   quantities in `(J, D, T)` variables.
//! - [`concurrence_view`] — the same cycle re-parameterized by the thermal
//!   entanglement of the two bath-contact stages.
//! - [`oracle`] — an independent numeric path (explicit 4x4 Hamiltonian,
//!   numeric diagonalization, Wootters concurrence from the density matrix,
//!   cycle by direct summation) that shares no closed forms with the modules
//!   it cross-checks.
//!
//! A cycle between a gap of 2 at `Th = 4` and a gap of 1 at `Tl = 1`
//! delivers net work at half the gap-ratio efficiency:
//!
//! ```
//! use eqhe_core::otto::run_cycle;
//! use eqhe_core::{CycleSpec, ModelParams};
//!
//! let spec = CycleSpec::new(
//!     ModelParams::new(2.0, 0.0)?, 4.0, // hot stage
//!     ModelParams::new(1.0, 0.0)?, 1.0, // cold stage
//! )?;
//! let cycle = run_cycle(&spec);
//! assert!((cycle.w - 0.217198).abs() < 1e-6);
//! assert_eq!(cycle.eta, Some(0.5));
//! # Ok::<(), eqhe_core::Error>(())
//! ```
//!
//! The crate is `no_std`-compatible and allocation-free: build with
//! `--no-default-features --features libm` to drop the standard library.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("eqhe-core needs either the `std` (default) or the `libm` feature");

pub mod concurrence_view;
mod error;
mod math;
pub mod oracle;
pub mod otto;
pub mod spin;

pub use error::{Error, Result};
pub use otto::{CycleCase, CycleResult, CycleSpec};
pub use spin::{CouplingSign, ModelParams, Spectrum, ThermalState};
