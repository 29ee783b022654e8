//! Open-loop control law for the standing-wave intensity.
//!
//! Everything is dimensionless: times are in recoil units (tau = omega_R * t),
//! momenta in photon-recoil units (hbar*k), and the coupling scale R0^2 is the
//! effective Rabi frequency squared in recoil units. The physical conversion
//! R^2 = R0_phys^2 / (2 * detuning * recoil) lives in [`effective_coupling_scale`].

use crate::error::{Error, Result};

/// Time-dependent effective coupling R^2(tau) driving the momentum lattice.
///
/// `Constant` keeps R^2 fixed at `r0_squared`. `Harmonic` modulates the field
/// amplitude, so the coupling follows
/// R^2(tau) = r0_squared * (1 + epsilon * cos(nu * tau + phi0))^2.
#[derive(Debug, Clone, PartialEq)]
pub enum ModulationProfile {
    Constant {
        r0_squared: f64,
    },
    Harmonic {
        r0_squared: f64,
        epsilon: f64,
        nu: f64,
        phi0: f64,
    },
}

impl ModulationProfile {
    pub fn constant(r0_squared: f64) -> Result<Self> {
        if !(r0_squared >= 0.0) {
            return Err(Error::invalid("r0_squared", "must be >= 0"));
        }
        Ok(ModulationProfile::Constant { r0_squared })
    }

    pub fn harmonic(r0_squared: f64, epsilon: f64, nu: f64, phi0: f64) -> Result<Self> {
        if !(r0_squared >= 0.0) {
            return Err(Error::invalid("r0_squared", "must be >= 0"));
        }
        if !(epsilon >= 0.0) {
            return Err(Error::invalid("epsilon", "must be >= 0"));
        }
        if !(nu >= 0.0) {
            return Err(Error::invalid("nu", "must be >= 0"));
        }
        if !phi0.is_finite() {
            return Err(Error::invalid("phi0", "must be finite"));
        }
        Ok(ModulationProfile::Harmonic {
            r0_squared,
            epsilon,
            nu,
            phi0,
        })
    }

    /// Builds a harmonic profile whose *cycle-averaged* coupling equals
    /// `mean_r_squared`. The average of (1 + eps*cos)^2 over one period is
    /// 1 + eps^2/2, so r0_squared = mean / (1 + eps^2/2).
    pub fn from_cycle_average(mean_r_squared: f64, epsilon: f64, nu: f64, phi0: f64) -> Result<Self> {
        if !(mean_r_squared >= 0.0) {
            return Err(Error::invalid("r_squared_mean", "must be >= 0"));
        }
        let r0_squared = mean_r_squared / (1.0 + 0.5 * epsilon * epsilon);
        Self::harmonic(r0_squared, epsilon, nu, phi0)
    }

    /// The coupling R^2(tau) at a given dimensionless time. Always >= 0.
    pub fn coupling_at(&self, tau: f64) -> f64 {
        match *self {
            ModulationProfile::Constant { r0_squared } => r0_squared,
            ModulationProfile::Harmonic {
                r0_squared,
                epsilon,
                nu,
                phi0,
            } => {
                let f = 1.0 + epsilon * (nu * tau + phi0).cos();
                r0_squared * f * f
            }
        }
    }

    /// Upper bound of R^2(tau) over all tau; used for step-size control.
    pub fn max_coupling(&self) -> f64 {
        match *self {
            ModulationProfile::Constant { r0_squared } => r0_squared,
            ModulationProfile::Harmonic {
                r0_squared, epsilon, ..
            } => {
                let f = 1.0 + epsilon;
                r0_squared * f * f
            }
        }
    }

    pub fn r0_squared(&self) -> f64 {
        match *self {
            ModulationProfile::Constant { r0_squared } => r0_squared,
            ModulationProfile::Harmonic { r0_squared, .. } => r0_squared,
        }
    }

    pub fn epsilon(&self) -> f64 {
        match *self {
            ModulationProfile::Constant { .. } => 0.0,
            ModulationProfile::Harmonic { epsilon, .. } => epsilon,
        }
    }

    pub fn nu(&self) -> f64 {
        match *self {
            ModulationProfile::Constant { .. } => 0.0,
            ModulationProfile::Harmonic { nu, .. } => nu,
        }
    }

    pub fn phi0(&self) -> f64 {
        match *self {
            ModulationProfile::Constant { .. } => 0.0,
            ModulationProfile::Harmonic { phi0, .. } => phi0,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ModulationProfile::Constant { .. } => "constant",
            ModulationProfile::Harmonic { .. } => "harmonic",
        }
    }
}

/// Converts a physical coupling scale to the dimensionless one:
/// rabi_squared / (2 * detuning * recoil).
///
/// `detuning` and `recoil` must be positive; `rabi_squared` >= 0.
pub fn effective_coupling_scale(rabi_squared: f64, detuning: f64, recoil: f64) -> Result<f64> {
    if !(rabi_squared >= 0.0) {
        return Err(Error::invalid("rabi_squared", "must be >= 0"));
    }
    if !(detuning > 0.0) {
        return Err(Error::invalid("detuning", "must be > 0"));
    }
    if !(recoil > 0.0) {
        return Err(Error::invalid("recoil", "must be > 0"));
    }
    Ok(rabi_squared / (2.0 * detuning * recoil))
}

/// Outcome of the adiabatic-elimination validity diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Pass,
    Warn,
}

impl Validity {
    pub fn is_pass(self) -> bool {
        self == Validity::Pass
    }
}

impl std::fmt::Display for Validity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Validity::Pass => write!(f, "pass"),
            Validity::Warn => write!(f, "warn"),
        }
    }
}

/// Factor encoding "much larger than" for the validity diagnostic.
pub const VALIDITY_FACTOR: f64 = 10.0;

/// Checks the elimination condition: the detuning must dominate both the
/// Rabi frequency and the transition linewidth by [`VALIDITY_FACTOR`].
/// Diagnostic only; never blocks a run.
pub fn validity_check(rabi: f64, detuning: f64, linewidth: f64) -> Validity {
    debug_assert!(rabi >= 0.0 && detuning >= 0.0 && linewidth >= 0.0);
    if detuning < VALIDITY_FACTOR * rabi.max(linewidth) {
        Validity::Warn
    } else {
        Validity::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn constant_profile_is_time_independent() {
        let p = ModulationProfile::constant(320.0).unwrap();
        for tau in [0.0, 0.1, 0.567, 12.0] {
            assert_eq!(p.coupling_at(tau), 320.0);
        }
    }

    #[test]
    fn harmonic_coupling_at_crest_and_trough() {
        let p = ModulationProfile::harmonic(280.0, 0.8, 29.0, 0.0).unwrap();
        // crest: cos = +1 -> 280 * 1.8^2
        assert_relative_eq!(p.coupling_at(0.0), 907.2, max_relative = 1e-14);
        // trough: cos = -1 -> 280 * 0.2^2
        assert_relative_eq!(p.coupling_at(PI / 29.0), 11.2, max_relative = 1e-12);
    }

    #[test]
    fn zero_epsilon_harmonic_behaves_constant() {
        let h = ModulationProfile::harmonic(320.0, 0.0, 29.0, 0.3).unwrap();
        for tau in [0.0, 0.01, 1.0, 7.5] {
            assert_eq!(h.coupling_at(tau), 320.0);
        }
    }

    #[test]
    fn cycle_average_constructor_matches_mean() {
        let p = ModulationProfile::from_cycle_average(300.0, 0.8, 29.0, 0.0).unwrap();
        // numeric cycle average of the law
        let n = 20_000;
        let period = 2.0 * PI / 29.0;
        let mean = (0..n)
            .map(|i| p.coupling_at((i as f64 + 0.5) / n as f64 * period))
            .sum::<f64>()
            / n as f64;
        assert_relative_eq!(mean, 300.0, max_relative = 1e-9);
    }

    #[test]
    fn rejects_negative_parameters() {
        assert!(ModulationProfile::constant(-1.0).is_err());
        assert!(ModulationProfile::harmonic(1.0, -0.1, 1.0, 0.0).is_err());
        assert!(ModulationProfile::harmonic(1.0, 0.1, -1.0, 0.0).is_err());
    }

    #[test]
    fn coupling_scale_examples() {
        // 2 * detuning * recoil = 2
        assert_eq!(effective_coupling_scale(600.0, 1.0, 1.0).unwrap(), 300.0);
        assert_eq!(effective_coupling_scale(0.0, 3.0, 2.0).unwrap(), 0.0);
        // unit denominator
        assert_eq!(effective_coupling_scale(320.0, 0.5, 1.0).unwrap(), 320.0);
        assert!(effective_coupling_scale(1.0, 0.0, 1.0).is_err());
        assert!(effective_coupling_scale(1.0, 1.0, -2.0).is_err());
    }

    #[test]
    fn validity_boundary() {
        assert_eq!(validity_check(10.0, 1000.0, 1.0), Validity::Pass);
        assert_eq!(validity_check(10.0, 10.0, 1.0), Validity::Warn);
        // exactly at the 10x threshold counts as pass
        assert_eq!(validity_check(10.0, 100.0, 10.0), Validity::Pass);
    }

    proptest! {
        #[test]
        fn coupling_is_nonnegative(
            r0 in 0.0..1e4f64,
            eps in 0.0..5.0f64,
            nu in 0.0..200.0f64,
            phi in -10.0..10.0f64,
            tau in 0.0..50.0f64,
        ) {
            let p = ModulationProfile::harmonic(r0, eps, nu, phi).unwrap();
            prop_assert!(p.coupling_at(tau) >= 0.0);
            prop_assert!(p.coupling_at(tau) <= p.max_coupling() * (1.0 + 1e-12));
        }

        #[test]
        fn harmonic_coupling_is_periodic(
            r0 in 1e-3..1e4f64,
            eps in 0.0..2.0f64,
            nu in 0.1..100.0f64,
            phi in -3.0..3.0f64,
            tau in 0.0..10.0f64,
        ) {
            let p = ModulationProfile::harmonic(r0, eps, nu, phi).unwrap();
            let period = 2.0 * PI / nu;
            let a = p.coupling_at(tau);
            let b = p.coupling_at(tau + period);
            // relative tolerance with an absolute floor near coupling zeros
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0) * r0.max(1.0));
        }
    }
}
