//! Pulsed-optomechanics simulation core.
//!
//! A short, intense light pulse kicks a mechanical oscillator with a momentum
//! proportional to the photon number, producing a photon-number/mirror-position
//! entangled state. This crate evaluates a separability witness for that state
//! (analytically and via truncated-Fock oracles), models spatial-decoherence
//! channels γ(x) and the optical phase-noise kernel ξ(η) they induce, runs a
//! Monte Carlo homodyne protocol with readout and local-oscillator
//! imperfections, and computes the experimental budget (pulse duration, drive
//! power, occupation and precision bounds) for a given platform.
//!
//! Conventions used throughout: X = (a + a†)/√2, P = (a − a†)/(i√2) with
//! [X, P] = i, so a coherent state |β⟩ has ⟨X⟩ = √2 Re β and Var(X) = 1/2.
//! Mechanical quadratures are dimensionless in zero-point units; the physical
//! position in units of x₀ is √2·X_M. All dimensional inputs are SI.
//!
//! The crate is `no_std`-compatible (requires `alloc`); enable the `libm`
//! feature instead of `std` for float math on bare targets.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod constants;
pub mod decoherence;
mod error;
pub mod feasibility;
pub mod kernel;
pub mod protocol;
pub mod pulse;
pub mod quad;
pub mod rng;
pub mod sampler;
pub mod system;
pub mod witness;

pub use error::{Error, Result};
pub use kernel::{DoublingTime, PhaseKernel};
pub use protocol::{MomentEstimate, ProtocolConfig, ShotRecord};
pub use system::SystemParams;
pub use witness::{WitnessInputs, WitnessReport};
