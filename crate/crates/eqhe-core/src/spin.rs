//! Closed-form physics of a single two-spin stage: spectrum, thermal
//! occupations, thermal concurrence, and the inversion from a target
//! concurrence back to a coupling strength.
//!
//! Eigenstates are kept in a fixed order that never changes with the sign of
//! the coupling:
//!
//! ```text
//! 0: |00>            energy 0
//! 1: |11>            energy 0
//! 2: (|01> + e^{i theta} |10>)/sqrt(2)   energy  eps
//! 3: (|01> - e^{i theta} |10>)/sqrt(2)   energy -eps
//! ```
//!
//! with `eps = J*sqrt(1 + D^2)` and `theta = atan(D)`. Keeping state identity
//! (rather than sorting by energy) lets cycle code pair occupations across
//! strokes regardless of `sign(J)`.

use crate::error::{ensure_finite, Error, Result};
use crate::math;

/// Dimensionless gap-to-temperature ratio `|eps|/T` at or below which the
/// thermal state is separable: `asinh(1) = ln(1 + sqrt(2)) ~ 0.8814`.
pub fn separability_threshold() -> f64 {
    math::ln(1.0 + math::sqrt(2.0))
}

/// Exchange coupling `J` and Dzyaloshinskii-Moriya strength `D` of one stage.
///
/// `J > 0` is the antiferromagnetic branch, `J < 0` the ferromagnetic one;
/// `D` may be any real. Construction checks that `J`, `D`, and the derived
/// gap `J*sqrt(1 + D^2)` are all finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    j: f64,
    d: f64,
}

impl ModelParams {
    pub fn new(j: f64, d: f64) -> Result<Self> {
        ensure_finite("coupling j", j)?;
        ensure_finite("dm strength d", d)?;
        let params = Self { j, d };
        ensure_finite("gap j*sqrt(1+d^2)", params.gap())?;
        Ok(params)
    }

    pub fn j(&self) -> f64 {
        self.j
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Signed spectral gap `eps = J*sqrt(1 + D^2)`, the only combination of
    /// `J` and `D` that enters the thermodynamics.
    pub fn gap(&self) -> f64 {
        self.j * math::sqrt(1.0 + self.d * self.d)
    }
}

/// The four eigenenergies in fixed eigenstate order, plus the phase `theta`
/// fixing the entangled eigenvectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    /// `(0, 0, eps, -eps)` in the fixed state order, not sorted by energy.
    pub energies: [f64; 4],
    /// `atan(D)`, in `(-pi/2, pi/2)`.
    pub theta: f64,
}

/// Eigenenergies and eigenvector phase for one parameter set.
pub fn spectrum(params: &ModelParams) -> Spectrum {
    let eps = params.gap();
    Spectrum {
        energies: [0.0, 0.0, eps, -eps],
        theta: math::atan(params.d),
    }
}

/// Thermal equilibrium occupations of the four eigenstates at temperature `T`
/// (units with k = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalState {
    pub temperature: f64,
    pub beta: f64,
    /// Partition function `Z = 2 + 2 cosh(beta*eps)`.
    pub partition: f64,
    /// Boltzmann occupations in fixed eigenstate order; the two zero-energy
    /// states always share the same weight.
    pub probabilities: [f64; 4],
}

/// Gibbs occupations `p_i = exp(-beta*E_i)/Z` over the fixed-order spectrum.
///
/// `T = 0` is rejected: beta diverges there, and zero-temperature behavior is
/// meaningful only as a limit inside the cycle formulas.
pub fn gibbs_occupations(params: &ModelParams, temperature: f64) -> Result<ThermalState> {
    let temperature = positive_temperature(temperature)?;
    let beta = 1.0 / temperature;
    let x = ensure_finite("beta*gap", beta * params.gap())?;
    // Weights (1, 1, e^{-x}, e^{x}) rescaled by e^{-|x|} so that nothing
    // overflows even deep in the low-temperature regime.
    let m = math::abs(x);
    let w = [
        math::exp(-m),
        math::exp(-m),
        math::exp(-x - m),
        math::exp(x - m),
    ];
    let sum = w[0] + w[1] + w[2] + w[3];
    Ok(ThermalState {
        temperature,
        beta,
        partition: 2.0 + 2.0 * math::cosh(x),
        probabilities: [w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum],
    })
}

/// Thermal concurrence of the Gibbs state:
/// `(sinh(x) - 1)/(cosh(x) + 1)` for `x = |eps|/T` above `asinh(1)`, else 0.
///
/// Evaluated as `(1 - 2u - u^2)/(1 + u)^2` with `u = e^{-x}`, which is the
/// same expression without large-`x` overflow.
pub fn concurrence(params: &ModelParams, temperature: f64) -> Result<f64> {
    let temperature = positive_temperature(temperature)?;
    let x = ensure_finite("gap/temperature", math::abs(params.gap()) / temperature)?;
    if x <= separability_threshold() {
        return Ok(0.0);
    }
    let u = math::exp(-x);
    Ok((1.0 - 2.0 * u - u * u) / ((1.0 + u) * (1.0 + u)))
}

/// Temperature above which the thermal state is separable:
/// `T_c = |eps| / asinh(1) ~ 1.1346 |eps|`.
pub fn critical_temperature(params: &ModelParams) -> f64 {
    math::abs(params.gap()) / separability_threshold()
}

/// Which sign branch of the coupling to reconstruct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingSign {
    /// `J > 0`.
    Antiferromagnetic,
    /// `J < 0`.
    Ferromagnetic,
}

/// Gap-to-temperature ratio `x = |eps|/T` whose thermal concurrence equals
/// `c`:
///
/// ```text
/// x(c) = ln( ((1 + c) + sqrt(2(1 + c))) / (1 - c) )
/// ```
///
/// the positive root of the quadratic in `e^x`; this form stays accurate as
/// `c -> 1` where the reciprocal form cancels.
pub fn gap_ratio_from_concurrence(c: f64) -> Result<f64> {
    Ok(gap_ratio_raw(valid_concurrence(c)?))
}

/// Algebraically equivalent reciprocal form
/// `x(c) = ln( 1 / (sqrt(2/(1 + c)) - 1) )`, kept for cross-checking against
/// [`gap_ratio_from_concurrence`].
pub fn gap_ratio_from_concurrence_reciprocal(c: f64) -> Result<f64> {
    let c = valid_concurrence(c)?;
    Ok(math::ln(1.0 / (math::sqrt(2.0 / (1.0 + c)) - 1.0)))
}

pub(crate) fn gap_ratio_raw(c: f64) -> f64 {
    math::ln(((1.0 + c) + math::sqrt(2.0 * (1.0 + c))) / (1.0 - c))
}

/// Coupling `J` whose thermal state at temperature `T` and DM strength `d`
/// has concurrence `c`.
///
/// The antiferromagnetic branch returns `J = T*x(c)/sqrt(1 + d^2) > 0`; the
/// ferromagnetic branch is its negation. For `c > 0` this inverts
/// [`concurrence`] exactly; `c = 0` maps onto the separability boundary, where
/// the closed zero branch also round-trips to 0.
pub fn coupling_from_concurrence(
    c: f64,
    d: f64,
    temperature: f64,
    sign: CouplingSign,
) -> Result<f64> {
    ensure_finite("dm strength d", d)?;
    let temperature = positive_temperature(temperature)?;
    let x = gap_ratio_from_concurrence(c)?;
    let j = temperature * x / math::sqrt(1.0 + d * d);
    Ok(match sign {
        CouplingSign::Antiferromagnetic => j,
        CouplingSign::Ferromagnetic => -j,
    })
}

pub(crate) fn positive_temperature(temperature: f64) -> Result<f64> {
    ensure_finite("temperature", temperature)?;
    if temperature <= 0.0 {
        return Err(Error::NonPositiveTemperature { value: temperature });
    }
    Ok(temperature)
}

pub(crate) fn valid_concurrence(c: f64) -> Result<f64> {
    if !c.is_finite() || !(0.0..1.0).contains(&c) {
        return Err(Error::ConcurrenceOutOfRange { value: c });
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::{FRAC_PI_3, PI};

    #[test]
    fn spectrum_without_dm() {
        let s = spectrum(&ModelParams::new(1.0, 0.0).unwrap());
        assert_eq!(s.energies, [0.0, 0.0, 1.0, -1.0]);
        assert_eq!(s.theta, 0.0);
    }

    #[test]
    fn spectrum_with_dm_strength_sqrt3() {
        let s = spectrum(&ModelParams::new(1.0, 3.0_f64.sqrt()).unwrap());
        assert_abs_diff_eq!(s.energies[2], 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.energies[3], -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.theta, FRAC_PI_3, epsilon = 1e-15);
    }

    #[test]
    fn spectrum_carries_coupling_sign() {
        let s = spectrum(&ModelParams::new(-2.0, 0.0).unwrap());
        assert_eq!(s.energies, [0.0, 0.0, -2.0, 2.0]);
        assert_eq!(s.theta, 0.0);
    }

    #[test]
    fn spectrum_is_traceless() {
        for &(j, d) in &[(1.0, 0.0), (-3.5, 2.0), (0.0, 7.0), (4.2, -1.3)] {
            let s = spectrum(&ModelParams::new(j, d).unwrap());
            assert_eq!(s.energies.iter().sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn params_reject_non_finite() {
        assert!(ModelParams::new(f64::NAN, 0.0).is_err());
        assert!(ModelParams::new(0.0, f64::INFINITY).is_err());
        // finite inputs whose gap overflows are rejected too
        assert!(ModelParams::new(1e308, 1e308).is_err());
    }

    #[test]
    fn gibbs_worked_example() {
        let ts = gibbs_occupations(&ModelParams::new(1.0, 0.0).unwrap(), 1.0).unwrap();
        assert_abs_diff_eq!(ts.partition, 5.08616126963, epsilon = 1e-9);
        assert_abs_diff_eq!(ts.probabilities[0], 0.196611933241, epsilon = 1e-9);
        assert_abs_diff_eq!(ts.probabilities[1], 0.196611933241, epsilon = 1e-9);
        assert_abs_diff_eq!(ts.probabilities[2], 0.0723294881285, epsilon = 1e-9);
        assert_abs_diff_eq!(ts.probabilities[3], 0.534446645389, epsilon = 1e-9);
        let sum: f64 = ts.probabilities.iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-12);
        assert_eq!(ts.probabilities[0], ts.probabilities[1]);
    }

    #[test]
    fn gibbs_high_temperature_is_uniform() {
        let ts = gibbs_occupations(&ModelParams::new(1.0, 0.0).unwrap(), 1e12).unwrap();
        for p in ts.probabilities {
            assert_abs_diff_eq!(p, 0.25, epsilon = 1e-9);
        }
    }

    #[test]
    fn gibbs_low_temperature_selects_ground_state() {
        // j > 0: state 3 has energy -eps and takes all the weight
        let ts = gibbs_occupations(&ModelParams::new(1.0, 0.0).unwrap(), 1e-4).unwrap();
        assert_eq!(ts.probabilities, [0.0, 0.0, 0.0, 1.0]);
        // j < 0: the roles of states 2 and 3 swap
        let ts = gibbs_occupations(&ModelParams::new(-1.0, 0.0).unwrap(), 1e-4).unwrap();
        assert_eq!(ts.probabilities, [0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn gibbs_rejects_bad_temperatures() {
        let p = ModelParams::new(1.0, 0.0).unwrap();
        assert_eq!(
            gibbs_occupations(&p, 0.0),
            Err(Error::NonPositiveTemperature { value: 0.0 })
        );
        assert!(gibbs_occupations(&p, -1.0).is_err());
        assert!(gibbs_occupations(&p, f64::NAN).is_err());
    }

    #[test]
    fn concurrence_worked_example() {
        let c = concurrence(&ModelParams::new(1.0, 0.0).unwrap(), 1.0).unwrap();
        assert_abs_diff_eq!(c, 0.068893290777, epsilon = 1e-9);
    }

    #[test]
    fn concurrence_is_zero_at_the_threshold() {
        // T = 1/asinh(1) puts x exactly on the separability boundary
        let t = 1.0 / separability_threshold();
        let c = concurrence(&ModelParams::new(1.0, 0.0).unwrap(), t).unwrap();
        assert_eq!(c, 0.0);
    }

    #[test]
    fn concurrence_approaches_one_at_low_temperature() {
        let c = concurrence(&ModelParams::new(1.0, 0.0).unwrap(), 0.05).unwrap();
        assert!(c > 1.0 - 1e-8 && c < 1.0);
        // once e^{-gap/T} underflows the value saturates at 1.0
        let c = concurrence(&ModelParams::new(1.0, 0.0).unwrap(), 1e-3).unwrap();
        assert_eq!(c, 1.0);
    }

    #[test]
    fn concurrence_depends_only_on_gap_magnitude() {
        let afm = concurrence(&ModelParams::new(2.0, 1.5).unwrap(), 0.9).unwrap();
        let fm = concurrence(&ModelParams::new(-2.0, -1.5).unwrap(), 0.9).unwrap();
        assert_eq!(afm, fm);
    }

    #[test]
    fn critical_temperature_examples() {
        let tc = critical_temperature(&ModelParams::new(1.0, 0.0).unwrap());
        assert_abs_diff_eq!(tc, 1.13459265711, epsilon = 1e-9);
        let tc = critical_temperature(&ModelParams::new(1.0, 3.0_f64.sqrt()).unwrap());
        assert_abs_diff_eq!(tc, 2.26918531421, epsilon = 1e-9);
        assert_eq!(
            critical_temperature(&ModelParams::new(0.0, 123.0).unwrap()),
            0.0
        );
    }

    #[test]
    fn coupling_inversion_at_zero_concurrence() {
        let j = coupling_from_concurrence(0.0, 0.0, 2.0, CouplingSign::Antiferromagnetic).unwrap();
        assert_abs_diff_eq!(j, 1.76274717404, epsilon = 1e-9);
        let j = coupling_from_concurrence(0.0, 0.0, 2.0, CouplingSign::Ferromagnetic).unwrap();
        assert_abs_diff_eq!(j, -1.76274717404, epsilon = 1e-9);
    }

    #[test]
    fn coupling_inversion_rejects_unit_concurrence() {
        for bad in [1.0, 1.5, -0.2, f64::NAN] {
            assert!(
                coupling_from_concurrence(bad, 0.0, 1.0, CouplingSign::Antiferromagnetic).is_err()
            );
        }
    }

    #[test]
    fn inversion_round_trip_spot_check() {
        for &c in &[0.01, 0.3, 0.97] {
            for sign in [CouplingSign::Antiferromagnetic, CouplingSign::Ferromagnetic] {
                let j = coupling_from_concurrence(c, 1.0, 0.7, sign).unwrap();
                let back = concurrence(&ModelParams::new(j, 1.0).unwrap(), 0.7).unwrap();
                assert_abs_diff_eq!(back, c, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn gap_ratio_forms_agree() {
        for i in 0..100 {
            let c = 0.99 * i as f64 / 99.0;
            let a = gap_ratio_from_concurrence(c).unwrap();
            let b = gap_ratio_from_concurrence_reciprocal(c).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn theta_stays_in_principal_range() {
        for &d in &[-1e6, -1.0, 0.0, 1.0, 1e6] {
            let s = spectrum(&ModelParams::new(1.0, d).unwrap());
            assert!(s.theta > -PI / 2.0 && s.theta < PI / 2.0);
        }
    }
}
