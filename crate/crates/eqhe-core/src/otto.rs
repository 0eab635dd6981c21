//! The four-stroke quantum Otto cycle in coupling/temperature variables.
//!
//! Heat is identified with occupation change against a fixed spectrum,
//! `dQ = sum_i E_i dp_i`, and work with a spectral shift under frozen
//! occupations, `dW = sum_i p_i dE_i`. Over the two bath-contact strokes the
//! closed cycle gives
//!
//! ```text
//! Q_h = eps1 * (tanh(eps2/(2*Tl)) - tanh(eps1/(2*Th)))
//! Q_l = eps2 * (tanh(eps1/(2*Th)) - tanh(eps2/(2*Tl)))
//! W   = Q_h + Q_l
//! ```
//!
//! with `eps_k` the stage gaps. Signs: `Q > 0` means heat absorbed by the
//! working substance, `W > 0` means net work delivered by the engine.

use crate::error::{ensure_finite, Error, Result};
use crate::math;
use crate::spin::{positive_temperature, ModelParams};

/// Heats within this of zero classify a cycle as trivial; it also bounds the
/// boundary ties of the positive-work condition.
pub const TRIVIAL_TOLERANCE: f64 = 1e-12;

const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// Hot-stage and cold-stage parameters of one cycle.
///
/// Construction enforces `Th > Tl > 0` and that the two couplings are nonzero
/// and share a sign; cycles mixing an antiferromagnetic stroke with a
/// ferromagnetic one are rejected rather than guessed at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleSpec {
    hot: ModelParams,
    cold: ModelParams,
    th: f64,
    tl: f64,
}

impl CycleSpec {
    pub fn new(hot: ModelParams, th: f64, cold: ModelParams, tl: f64) -> Result<Self> {
        ensure_finite("hot temperature", th)?;
        positive_temperature(tl)?;
        if th <= tl {
            return Err(Error::BathOrdering { th, tl });
        }
        if hot.j() == 0.0 || cold.j() == 0.0 {
            return Err(Error::ZeroCoupling);
        }
        if (hot.j() > 0.0) != (cold.j() > 0.0) {
            return Err(Error::MixedCouplingSigns {
                j1: hot.j(),
                j2: cold.j(),
            });
        }
        Ok(Self { hot, cold, th, tl })
    }

    pub fn hot(&self) -> ModelParams {
        self.hot
    }

    pub fn cold(&self) -> ModelParams {
        self.cold
    }

    pub fn hot_temperature(&self) -> f64 {
        self.th
    }

    pub fn cold_temperature(&self) -> f64 {
        self.tl
    }

    /// Hot-stage gap `eps1 = J1*sqrt(1 + D1^2)`.
    pub fn hot_gap(&self) -> f64 {
        self.hot.gap()
    }

    /// Cold-stage gap `eps2 = J2*sqrt(1 + D2^2)`.
    pub fn cold_gap(&self) -> f64 {
        self.cold.gap()
    }
}

/// How a completed cycle turned out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleCase {
    /// `W > 0`, realized as `Q_h > -Q_l > 0`.
    Engine,
    /// Both heats vanish (identical effective stages).
    Trivial,
    /// `W <= 0`: the cycle consumes work.
    NonEngine,
}

impl core::fmt::Display for CycleCase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            CycleCase::Engine => "Engine",
            CycleCase::Trivial => "Trivial",
            CycleCase::NonEngine => "NonEngine",
        })
    }
}

/// Heats, net work, and efficiency of one completed cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleResult {
    /// Heat exchanged with the hot bath (positive = absorbed).
    pub q_h: f64,
    /// Heat exchanged with the cold bath (negative = rejected).
    pub q_l: f64,
    /// Net work delivered by the engine; always exactly `q_h + q_l`.
    pub w: f64,
    /// Efficiency `1 - eps2/eps1`; defined only for working engines.
    pub eta: Option<f64>,
    /// Carnot bound `1 - Tl/Th`.
    pub eta_carnot: f64,
    pub case: CycleCase,
    /// Diagnostic ratio `W/Q_h`, also available for non-engine cycles; not an
    /// efficiency unless the cycle actually runs as an engine.
    pub w_over_qh: Option<f64>,
}

impl CycleResult {
    /// Assemble a result from the two heats. `gap_hot`/`gap_cold` are the
    /// effective stage gaps used for the engine efficiency `1 - gap_cold/gap_hot`.
    pub(crate) fn from_heats(
        q_h: f64,
        q_l: f64,
        gap_hot: f64,
        gap_cold: f64,
        th: f64,
        tl: f64,
    ) -> Self {
        let w = q_h + q_l;
        let case = if math::abs(q_h) <= TRIVIAL_TOLERANCE && math::abs(q_l) <= TRIVIAL_TOLERANCE {
            CycleCase::Trivial
        } else if w > 0.0 {
            CycleCase::Engine
        } else {
            CycleCase::NonEngine
        };
        CycleResult {
            q_h,
            q_l,
            w,
            eta: (case == CycleCase::Engine).then(|| 1.0 - gap_cold / gap_hot),
            eta_carnot: 1.0 - tl / th,
            case,
            w_over_qh: (q_h != 0.0).then(|| w / q_h),
        }
    }
}

/// Heat taken up during one bath-contact stroke: `sum_i E_i (p_after - p_before)`.
///
/// The spectrum is fixed during the stroke; both occupation vectors must be
/// normalized within 1e-10.
pub fn stroke_heat(energies: &[f64; 4], p_before: &[f64; 4], p_after: &[f64; 4]) -> Result<f64> {
    check_normalized(p_before)?;
    check_normalized(p_after)?;
    let mut q = 0.0;
    for i in 0..4 {
        q += energies[i] * (p_after[i] - p_before[i]);
    }
    Ok(q)
}

/// Work done ON the system during one adiabatic stroke:
/// `sum_i p_i (E_after - E_before)`, occupations frozen by adiabaticity.
pub fn stroke_work(
    probabilities: &[f64; 4],
    energies_before: &[f64; 4],
    energies_after: &[f64; 4],
) -> Result<f64> {
    check_normalized(probabilities)?;
    let mut w = 0.0;
    for i in 0..4 {
        w += probabilities[i] * (energies_after[i] - energies_before[i]);
    }
    Ok(w)
}

// comparison negated so a NaN sum lands on the error path
#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn check_normalized(p: &[f64; 4]) -> Result<()> {
    let sum: f64 = p.iter().sum();
    if !(math::abs(sum - 1.0) <= NORMALIZATION_TOLERANCE) {
        return Err(Error::UnnormalizedProbabilities { sum });
    }
    Ok(())
}

/// Closed-form heats, work, and efficiency for one cycle.
pub fn run_cycle(spec: &CycleSpec) -> CycleResult {
    let eps1 = spec.hot_gap();
    let eps2 = spec.cold_gap();
    let t_hot = math::tanh(eps1 / (2.0 * spec.th));
    let t_cold = math::tanh(eps2 / (2.0 * spec.tl));
    let q_h = eps1 * (t_cold - t_hot);
    let q_l = eps2 * (t_hot - t_cold);
    CycleResult::from_heats(q_h, q_l, eps1, eps2, spec.th, spec.tl)
}

/// The positive-work inequality `eps1/Th < eps2/Tl`, equivalently
/// `Th > Tl*(eps1/eps2)`.
///
/// Stated for antiferromagnetic cycles with `0 < eps2 < eps1`; outside that
/// regime the question is reported as a regime violation instead of a
/// boolean. Within the regime the returned flag agrees with `sign(W)` from
/// [`run_cycle`], with boundary ties giving `W = 0`.
pub fn positive_work_condition(spec: &CycleSpec) -> Result<bool> {
    let gap_hot = spec.hot_gap();
    let gap_cold = spec.cold_gap();
    if gap_hot <= 0.0 || gap_cold >= gap_hot {
        return Err(Error::PositiveWorkRegime { gap_hot, gap_cold });
    }
    Ok(gap_hot / spec.th < gap_cold / spec.tl)
}

/// Engine efficiency `1 - eps2/eps1`; independent of the bath temperatures.
pub fn efficiency(spec: &CycleSpec) -> f64 {
    1.0 - spec.cold_gap() / spec.hot_gap()
}

/// Carnot bound `1 - Tl/Th`. Equal temperatures are accepted here (the limit
/// value 0), though they never form a valid cycle.
pub fn carnot_efficiency(th: f64, tl: f64) -> Result<f64> {
    ensure_finite("hot temperature", th)?;
    positive_temperature(tl)?;
    if th < tl {
        return Err(Error::BathOrdering { th, tl });
    }
    Ok(1.0 - tl / th)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::{gibbs_occupations, spectrum};
    use approx::assert_abs_diff_eq;

    fn params(j: f64, d: f64) -> ModelParams {
        ModelParams::new(j, d).unwrap()
    }

    fn spec(j1: f64, d1: f64, th: f64, j2: f64, d2: f64, tl: f64) -> CycleSpec {
        CycleSpec::new(params(j1, d1), th, params(j2, d2), tl).unwrap()
    }

    #[test]
    fn stroke_heat_vanishes_without_occupation_change() {
        let p = [0.1, 0.2, 0.3, 0.4];
        assert_eq!(stroke_heat(&[0.0, 0.0, 1.0, -1.0], &p, &p).unwrap(), 0.0);
    }

    #[test]
    fn stroke_heat_vanishes_for_degenerate_spectrum() {
        let before = [0.25; 4];
        let after = [0.7, 0.1, 0.1, 0.1];
        assert_eq!(stroke_heat(&[0.0; 4], &before, &after).unwrap(), 0.0);
    }

    #[test]
    fn stroke_heat_worked_example() {
        // uniform occupations relaxing against the (j=2, d=0, T=4) bath
        let ts = gibbs_occupations(&params(2.0, 0.0), 4.0).unwrap();
        assert_abs_diff_eq!(ts.probabilities[0], 0.235003712202, epsilon = 1e-9);
        assert_abs_diff_eq!(ts.probabilities[2], 0.142536956597, epsilon = 1e-9);
        assert_abs_diff_eq!(ts.probabilities[3], 0.387455619000, epsilon = 1e-9);
        let q = stroke_heat(&[0.0, 0.0, 2.0, -2.0], &[0.25; 4], &ts.probabilities).unwrap();
        assert_abs_diff_eq!(q, -0.489837324807418, epsilon = 1e-12);
    }

    #[test]
    fn stroke_heat_rejects_unnormalized_input() {
        let bad = [0.5, 0.5, 0.5, 0.5];
        assert!(matches!(
            stroke_heat(&[0.0; 4], &bad, &[0.25; 4]),
            Err(Error::UnnormalizedProbabilities { .. })
        ));
    }

    #[test]
    fn stroke_work_vanishes_without_spectral_shift() {
        let e = [0.0, 0.0, 3.0, -3.0];
        assert_eq!(stroke_work(&[0.25; 4], &e, &e).unwrap(), 0.0);
    }

    #[test]
    fn stroke_work_vanishes_for_uniform_occupations_of_symmetric_spectra() {
        let w = stroke_work(&[0.25; 4], &[0.0, 0.0, 5.0, -5.0], &[0.0, 0.0, 0.3, -0.3]).unwrap();
        assert_eq!(w, 0.0);
    }

    #[test]
    fn stroke_work_worked_example() {
        let ts = gibbs_occupations(&params(2.0, 0.0), 4.0).unwrap();
        let w = stroke_work(
            &ts.probabilities,
            &[0.0, 0.0, 2.0, -2.0],
            &[0.0, 0.0, 1.0, -1.0],
        )
        .unwrap();
        assert_abs_diff_eq!(w, 0.244918662403709, epsilon = 1e-12);
    }

    #[test]
    fn run_cycle_worked_example() {
        let r = run_cycle(&spec(2.0, 0.0, 4.0, 1.0, 0.0, 1.0));
        assert_abs_diff_eq!(r.q_h, 0.434396989713, epsilon = 1e-9);
        assert_abs_diff_eq!(r.q_l, -0.217198494856, epsilon = 1e-9);
        assert_abs_diff_eq!(r.w, 0.217198494856, epsilon = 1e-9);
        assert_eq!(r.eta, Some(0.5));
        assert_abs_diff_eq!(r.eta_carnot, 0.75, epsilon = 1e-15);
        assert_eq!(r.case, CycleCase::Engine);
        assert_abs_diff_eq!(r.w_over_qh.unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn identical_stages_shuttle_heat_without_work() {
        // the spectrum never changes, so the adiabatic strokes do nothing:
        // heat flows straight from hot to cold and no work is extracted
        let r = run_cycle(&spec(1.5, 0.7, 2.0, 1.5, 0.7, 1.0));
        assert!(r.q_h > 0.0);
        assert_eq!(r.q_l, -r.q_h);
        assert_eq!(r.w, 0.0);
        assert_eq!(r.case, CycleCase::NonEngine);
        assert_eq!(r.eta, None);
    }

    #[test]
    fn matched_gap_to_temperature_ratios_give_a_trivial_cycle() {
        // eps1/Th = eps2/Tl exactly: both tanh arguments are 0.5
        let r = run_cycle(&spec(2.0, 0.0, 2.0, 1.0, 0.0, 1.0));
        assert_eq!((r.q_h, r.q_l, r.w), (0.0, 0.0, 0.0));
        assert_eq!(r.case, CycleCase::Trivial);
    }

    #[test]
    fn first_law_holds_exactly() {
        let r = run_cycle(&spec(3.0, 1.0, 4.5, 0.4, 2.0, 0.3));
        assert_eq!(r.w, r.q_h + r.q_l);
    }

    #[test]
    fn cycle_composes_from_strokes() {
        let s = spec(2.0, 0.0, 4.0, 1.0, 0.0, 1.0);
        let e1 = spectrum(&s.hot()).energies;
        let e2 = spectrum(&s.cold()).energies;
        let p1 = gibbs_occupations(&s.hot(), s.hot_temperature())
            .unwrap()
            .probabilities;
        let p2 = gibbs_occupations(&s.cold(), s.cold_temperature())
            .unwrap()
            .probabilities;
        let q_h = stroke_heat(&e1, &p2, &p1).unwrap();
        let q_l = stroke_heat(&e2, &p1, &p2).unwrap();
        let work_on = stroke_work(&p1, &e1, &e2).unwrap() + stroke_work(&p2, &e2, &e1).unwrap();
        let r = run_cycle(&s);
        assert_abs_diff_eq!(q_h, r.q_h, epsilon = 1e-14);
        assert_abs_diff_eq!(q_l, r.q_l, epsilon = 1e-14);
        assert_abs_diff_eq!(-work_on, r.w, epsilon = 1e-14);
    }

    #[test]
    fn spec_validation_errors() {
        let p1 = params(1.0, 0.0);
        assert!(matches!(
            CycleSpec::new(p1, 1.0, p1, 1.0),
            Err(Error::BathOrdering { .. })
        ));
        assert!(matches!(
            CycleSpec::new(p1, 0.5, p1, 1.0),
            Err(Error::BathOrdering { .. })
        ));
        assert!(matches!(
            CycleSpec::new(p1, 2.0, params(-1.0, 0.0), 1.0),
            Err(Error::MixedCouplingSigns { .. })
        ));
        assert!(matches!(
            CycleSpec::new(p1, 2.0, params(0.0, 0.0), 1.0),
            Err(Error::ZeroCoupling)
        ));
        assert!(CycleSpec::new(p1, f64::NAN, p1, 1.0).is_err());
        assert!(CycleSpec::new(p1, 2.0, p1, -1.0).is_err());
    }

    #[test]
    fn positive_work_condition_examples() {
        assert_eq!(
            positive_work_condition(&spec(2.0, 0.0, 4.0, 1.0, 0.0, 1.0)),
            Ok(true)
        );
        // boundary: eps1/Th = eps2/Tl, so no net work
        assert_eq!(
            positive_work_condition(&spec(2.0, 0.0, 2.0, 1.0, 0.0, 1.0)),
            Ok(false)
        );
        // ferromagnetic cycles are outside the stated regime
        assert!(matches!(
            positive_work_condition(&spec(-2.0, 0.0, 4.0, -1.0, 0.0, 1.0)),
            Err(Error::PositiveWorkRegime { .. })
        ));
        // as are cycles whose cold gap is not below the hot gap
        assert!(matches!(
            positive_work_condition(&spec(1.0, 0.0, 4.0, 2.0, 0.0, 1.0)),
            Err(Error::PositiveWorkRegime { .. })
        ));
    }

    #[test]
    fn positive_work_condition_reduces_to_coupling_ratio_without_dm() {
        // with d1 = d2 = 0 the condition is Th > Tl*(j1/j2)
        for &(j1, j2, th, tl) in &[
            (2.0, 1.0, 4.0, 1.0),
            (3.0, 1.0, 2.9, 1.0),
            (5.0, 4.0, 1.3, 1.0),
        ] {
            let got = positive_work_condition(&spec(j1, 0.0, th, j2, 0.0, tl)).unwrap();
            assert_eq!(got, th > tl * (j1 / j2));
        }
    }

    #[test]
    fn efficiency_examples() {
        assert_abs_diff_eq!(
            efficiency(&spec(2.0, 0.0, 4.0, 1.0, 0.0, 1.0)),
            0.5,
            epsilon = 1e-15
        );
        // the DM strength alone can tune the gap ratio
        let s = spec(1.0, 3.0_f64.sqrt(), 4.0, 1.0, 0.0, 1.0);
        assert_abs_diff_eq!(efficiency(&s), 0.5, epsilon = 1e-15);
        assert_eq!(efficiency(&spec(1.5, 0.0, 2.0, 1.5, 0.0, 1.0)), 0.0);
    }

    #[test]
    fn efficiency_is_temperature_independent() {
        let a = efficiency(&spec(2.0, 1.0, 4.0, 1.0, 0.5, 1.0));
        let b = efficiency(&spec(2.0, 1.0, 400.0, 1.0, 0.5, 0.07));
        assert_eq!(a, b);
    }

    #[test]
    fn carnot_efficiency_examples() {
        assert_eq!(carnot_efficiency(2.0, 1.0), Ok(0.5));
        assert_eq!(carnot_efficiency(4.0, 1.0), Ok(0.75));
        assert_eq!(carnot_efficiency(1.0, 1.0), Ok(0.0));
        assert!(matches!(
            carnot_efficiency(1.0, 2.0),
            Err(Error::BathOrdering { .. })
        ));
        assert!(carnot_efficiency(2.0, 0.0).is_err());
    }

    #[test]
    fn ferromagnetic_cycles_run_through_the_same_formulas() {
        let afm = run_cycle(&spec(2.0, 0.0, 4.0, 1.0, 0.0, 1.0));
        let fm = run_cycle(&spec(-2.0, 0.0, 4.0, -1.0, 0.0, 1.0));
        assert_abs_diff_eq!(afm.q_h, fm.q_h, epsilon = 1e-15);
        assert_abs_diff_eq!(afm.q_l, fm.q_l, epsilon = 1e-15);
        assert_abs_diff_eq!(afm.w, fm.w, epsilon = 1e-15);
        assert_eq!(afm.eta, fm.eta);
    }
}
