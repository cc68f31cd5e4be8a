//! CODATA-2018 physical constants, SI units.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054571817e-34;

/// Newtonian constant of gravitation, m³·kg⁻¹·s⁻².
pub const GRAVITATIONAL: f64 = 6.67430e-11;

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Atomic mass unit, kg.
pub const ATOMIC_MASS: f64 = 1.66053906660e-27;
