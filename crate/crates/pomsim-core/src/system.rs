//! Optomechanical platform parameters.

#[allow(unused_imports)]
use num_traits::Float;

use crate::constants::SPEED_OF_LIGHT;
use crate::{pulse, Error, Result};

/// A pulsed optomechanical platform: a mechanical oscillator of mass `mass`
/// and frequency `omega_m` forming one mirror of a cavity of length
/// `cavity_length`, finesse `finesse` and optical frequency `omega_c`, driven
/// by pulses of duration `tau` with coherent amplitude `alpha` (real), the
/// mechanics starting in a thermal state of occupation `n_th`.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    /// Effective mass, kg.
    pub mass: f64,
    /// Mechanical angular frequency, rad/s.
    pub omega_m: f64,
    /// Cavity length, m.
    pub cavity_length: f64,
    /// Optical angular frequency, rad/s.
    pub omega_c: f64,
    /// Cavity finesse.
    pub finesse: f64,
    /// Pulse duration, s.
    pub tau: f64,
    /// Coherent drive amplitude (photon number = alpha²).
    pub alpha: f64,
    /// Initial mechanical thermal occupation.
    pub n_th: f64,
}

impl SystemParams {
    /// Checks positivity constraints (`alpha`, `n_th` only need to be ≥ 0).
    pub fn validate(&self) -> Result<()> {
        let positive: [(&'static str, f64); 6] = [
            ("mass", self.mass),
            ("omega_m", self.omega_m),
            ("cavity_length", self.cavity_length),
            ("omega_c", self.omega_c),
            ("finesse", self.finesse),
            ("tau", self.tau),
        ];
        for (name, value) in positive {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidParam {
                    name,
                    value,
                    constraint: "a finite value > 0",
                });
            }
        }
        for (name, value) in [("alpha", self.alpha), ("n_th", self.n_th)] {
            if !(value >= 0.0) || !value.is_finite() {
                return Err(Error::InvalidParam {
                    name,
                    value,
                    constraint: "a finite value >= 0",
                });
            }
        }
        Ok(())
    }

    /// Pulsed-regime gate: any computation that uses the kicked state needs
    /// g₀τ < 1 and ω_mτ < 1. Violation is an error, not silent degradation.
    pub fn validate_pulsed_regime(&self) -> Result<()> {
        self.validate()?;
        let g0_tau = self.g0_tau();
        if g0_tau >= 1.0 {
            return Err(Error::RegimeViolation {
                quantity: "g0*tau",
                value: g0_tau,
                limit: 1.0,
            });
        }
        let wm_tau = self.omega_m * self.tau;
        if wm_tau >= 1.0 {
            return Err(Error::RegimeViolation {
                quantity: "omega_m*tau",
                value: wm_tau,
                limit: 1.0,
            });
        }
        Ok(())
    }

    /// Mechanical zero-point spread x₀, m.
    pub fn zero_point_spread(&self) -> f64 {
        pulse::zero_point_spread(self.mass, self.omega_m).expect("validated params")
    }

    /// Single-photon coupling g₀ = (ω_c/L)·x₀, rad/s.
    pub fn coupling_g0(&self) -> f64 {
        pulse::coupling_g0(self.omega_c, self.cavity_length, self.mass, self.omega_m)
            .expect("validated params")
    }

    /// Dimensionless kick strength g₀τ.
    pub fn g0_tau(&self) -> f64 {
        self.coupling_g0() * self.tau
    }

    /// Amplitude decay rate κ = πc/(2LF), rad/s.
    pub fn kappa(&self) -> f64 {
        core::f64::consts::PI * SPEED_OF_LIGHT / (2.0 * self.cavity_length * self.finesse)
    }

    /// The 60 ng trampoline platform: M = 60 ng, ω_m = 2π·20 kHz, L = 0.5 cm,
    /// F = 1.5e5. The optical frequency is back-solved from the g₀ ≈ 2π·100 s⁻¹
    /// design point (λ ≈ 1.59 µm); τ = ln2/κ and α² = 0.6/((g₀τ)²ω_mτ) are the
    /// recommended operating values, with the mechanics precooled (n_th = 0
    /// placeholder, to be replaced by the achieved occupation).
    pub fn trampoline_60ng() -> Self {
        let mass = 6.0e-11;
        let omega_m = 2.0 * core::f64::consts::PI * 2.0e4;
        let cavity_length = 5.0e-3;
        let finesse = 1.5e5;
        let g0_design = 2.0 * core::f64::consts::PI * 100.0;
        let x0 = pulse::zero_point_spread(mass, omega_m).unwrap();
        let omega_c = g0_design * cavity_length / x0;
        let kappa = core::f64::consts::PI * SPEED_OF_LIGHT / (2.0 * cavity_length * finesse);
        let tau = core::f64::consts::LN_2 / kappa;
        let g0_tau = g0_design * tau;
        let alpha_sq = 0.6 / (g0_tau * g0_tau * omega_m * tau);
        SystemParams {
            mass,
            omega_m,
            cavity_length,
            omega_c,
            finesse,
            tau,
            alpha: alpha_sq.sqrt(),
            n_th: 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trampoline_preset_chain() {
        let p = SystemParams::trampoline_60ng();
        p.validate().unwrap();
        p.validate_pulsed_regime().unwrap();
        // frozen against an independent evaluation of the same chain
        assert!((p.zero_point_spread() - 2.644493630806e-15).abs() < 1e-24);
        assert!((p.kappa() - 6.278838557696e5).abs() < 1e-3);
        assert!((p.tau - 1.103941715001e-6).abs() < 1e-15);
        assert!((p.coupling_g0() - 2.0 * core::f64::consts::PI * 100.0).abs() < 1e-9);
        assert!((p.g0_tau() - 6.936270363679e-4).abs() < 1e-13);
        assert!((p.alpha * p.alpha - 8.989658959164e6).abs() < 1.0);
        // back-solved optical frequency sits near 1.59 um
        let lambda = 2.0 * core::f64::consts::PI * SPEED_OF_LIGHT / p.omega_c;
        assert!((lambda - 1.5856e-6).abs() < 1e-9);
    }

    #[test]
    fn validation_rejects_nonpositive_and_nan() {
        let mut p = SystemParams::trampoline_60ng();
        p.mass = 0.0;
        assert!(matches!(p.validate(), Err(Error::InvalidParam { name: "mass", .. })));
        let mut p = SystemParams::trampoline_60ng();
        p.alpha = -1.0;
        assert!(p.validate().is_err());
        let mut p = SystemParams::trampoline_60ng();
        p.n_th = f64::NAN;
        assert!(p.validate().is_err());
    }

    #[test]
    fn pulsed_regime_gate() {
        let mut p = SystemParams::trampoline_60ng();
        p.tau = 1.0; // omega_m * tau huge
        assert!(matches!(
            p.validate_pulsed_regime(),
            Err(Error::RegimeViolation { .. })
        ));
    }
}
