//! The Otto cycle re-parameterized by the thermal entanglement of its two
//! bath-contact stages.
//!
//! Write `c1` for the concurrence of the hot-stage Gibbs state (at `Th`) and
//! `c2` for the cold-stage one (at `Tl`), and let `L(c)` be the
//! gap-to-temperature ratio realizing concurrence `c`
//! ([`crate::spin::gap_ratio_from_concurrence`]). Substituting the reconstructed
//! gaps `eps1 = Th*L(c1)`, `eps2 = Tl*L(c2)` into the closed cycle and using
//! `tanh(L(c)/2) = sqrt(2(1+c)) - 1` gives
//!
//! ```text
//! Q_h = sqrt(2) * Th * L(c1) * (sqrt(1+c2) - sqrt(1+c1))
//! Q_l = sqrt(2) * Tl * L(c2) * (sqrt(1+c1) - sqrt(1+c2))
//! ```
//!
//! The antiferromagnetic and ferromagnetic branches produce identical heats,
//! work, and efficiency: flipping the coupling sign flips both the gaps and
//! the tanh factors, and the signs cancel. The efficiency jumps abruptly at
//! `c1 = c2`: the formula limit is the Carnot bound, but the cycle there is
//! trivial (all heats vanish) so the realized efficiency is zero.

use crate::error::{ensure_finite, Error, Result};
use crate::otto::{CycleResult, CycleSpec};
use crate::spin::{
    coupling_from_concurrence, gap_ratio_raw, positive_temperature, valid_concurrence,
    CouplingSign, ModelParams,
};
use core::f64::consts::SQRT_2;

/// One cycle specified by stage concurrences instead of couplings.
///
/// The DM strengths are irrelevant to the thermodynamics in this view (only
/// the gaps enter); they are kept so that couplings can be reconstructed
/// unambiguously.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceCycleSpec {
    c1: f64,
    c2: f64,
    th: f64,
    tl: f64,
    d1: f64,
    d2: f64,
    sign: CouplingSign,
}

impl ConcurrenceCycleSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        c1: f64,
        c2: f64,
        th: f64,
        tl: f64,
        d1: f64,
        d2: f64,
        sign: CouplingSign,
    ) -> Result<Self> {
        valid_concurrence(c1)?;
        valid_concurrence(c2)?;
        ensure_finite("hot temperature", th)?;
        positive_temperature(tl)?;
        if th <= tl {
            return Err(Error::BathOrdering { th, tl });
        }
        ensure_finite("dm strength d1", d1)?;
        ensure_finite("dm strength d2", d2)?;
        Ok(Self {
            c1,
            c2,
            th,
            tl,
            d1,
            d2,
            sign,
        })
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn hot_temperature(&self) -> f64 {
        self.th
    }

    pub fn cold_temperature(&self) -> f64 {
        self.tl
    }

    pub fn d1(&self) -> f64 {
        self.d1
    }

    pub fn d2(&self) -> f64 {
        self.d2
    }

    pub fn sign(&self) -> CouplingSign {
        self.sign
    }

    /// Concurrence ratio `gamma = c1/c2`, undefined when `c2 = 0`.
    pub fn gamma(&self) -> Option<f64> {
        (self.c2 > 0.0).then(|| self.c1 / self.c2)
    }

    /// Rebuild the coupling/temperature form of this cycle by inverting each
    /// stage concurrence at its own bath temperature.
    pub fn reconstruct_couplings(&self) -> Result<CycleSpec> {
        let j1 = coupling_from_concurrence(self.c1, self.d1, self.th, self.sign)?;
        let j2 = coupling_from_concurrence(self.c2, self.d2, self.tl, self.sign)?;
        CycleSpec::new(
            ModelParams::new(j1, self.d1)?,
            self.th,
            ModelParams::new(j2, self.d2)?,
            self.tl,
        )
    }
}

/// Closed-form cycle quantities in concurrence variables. Identical for both
/// coupling signs.
pub fn cycle_from_concurrence(spec: &ConcurrenceCycleSpec) -> CycleResult {
    let l1 = gap_ratio_raw(spec.c1);
    let l2 = gap_ratio_raw(spec.c2);
    let s1 = crate::math::sqrt(1.0 + spec.c1);
    let s2 = crate::math::sqrt(1.0 + spec.c2);
    let q_h = SQRT_2 * spec.th * l1 * (s2 - s1);
    let q_l = SQRT_2 * spec.tl * l2 * (s1 - s2);
    // effective gaps reconstructed from the concurrences
    CycleResult::from_heats(q_h, q_l, spec.th * l1, spec.tl * l2, spec.th, spec.tl)
}

/// Why a concurrence-specified cycle can or cannot deliver net work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityReason {
    /// Both positive-work inequalities hold.
    PositiveWork,
    /// `c1 = c2`: the cycle is trivial, all heats vanish.
    EqualConcurrence,
    /// `c1 > c2`: the cycle would have to absorb from the cold bath, which
    /// the bath ordering `Th > Tl` rules out.
    HotMoreEntangled,
    /// `c1 < c2` but the temperature-weighted gap ratios do not separate:
    /// `Th*L(c1) <= Tl*L(c2)`.
    InsufficientTemperatureBias,
}

/// Positive-work classification of a concurrence-specified cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkCaseReport {
    /// The engine-shaped branch: `c1 < c2` and `Th*L(c1) > Tl*L(c2)`
    /// (heat in from the hot bath, out to the cold bath).
    pub engine_branch: bool,
    /// The inverted branch: `c1 > c2` and `Th*L(c1) < Tl*L(c2)`. Provably
    /// never holds while `Th > Tl`.
    pub inverted_branch: bool,
    /// Net work is positive; holds exactly when `engine_branch` does.
    pub feasible: bool,
    pub reason: FeasibilityReason,
}

/// Evaluate both candidate positive-work branches literally.
pub fn classify_positive_work(spec: &ConcurrenceCycleSpec) -> WorkCaseReport {
    let weighted_hot = spec.th * gap_ratio_raw(spec.c1);
    let weighted_cold = spec.tl * gap_ratio_raw(spec.c2);
    let engine_branch = spec.c1 < spec.c2 && weighted_hot > weighted_cold;
    let inverted_branch = spec.c1 > spec.c2 && weighted_hot < weighted_cold;
    debug_assert!(!inverted_branch, "impossible while Th > Tl");
    let reason = if engine_branch {
        FeasibilityReason::PositiveWork
    } else if spec.c1 == spec.c2 {
        FeasibilityReason::EqualConcurrence
    } else if spec.c1 > spec.c2 {
        FeasibilityReason::HotMoreEntangled
    } else {
        FeasibilityReason::InsufficientTemperatureBias
    };
    WorkCaseReport {
        engine_branch,
        inverted_branch,
        feasible: engine_branch,
        reason,
    }
}

/// Efficiency in concurrence variables, with the abrupt transition at
/// `c1 = c2` made explicit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceEfficiency {
    pub eta: f64,
    /// Set at `c1 = c2`, where the formula limit would be the Carnot bound
    /// but the trivial cycle forces the realized efficiency to zero.
    pub abrupt_transition: bool,
}

/// Efficiency `1 - (Tl*L(c2)) / (Th*L(c1))` for `c1 < c2`; zero (flagged)
/// at `c1 = c2`; a regime violation for `c1 > c2`. Identical for both
/// coupling signs.
pub fn efficiency_from_concurrence(
    c1: f64,
    c2: f64,
    th: f64,
    tl: f64,
) -> Result<ConcurrenceEfficiency> {
    valid_concurrence(c1)?;
    valid_concurrence(c2)?;
    ensure_finite("hot temperature", th)?;
    positive_temperature(tl)?;
    if th <= tl {
        return Err(Error::BathOrdering { th, tl });
    }
    if c1 > c2 {
        return Err(Error::EfficiencyRegime { c1, c2 });
    }
    if c1 == c2 {
        return Ok(ConcurrenceEfficiency {
            eta: 0.0,
            abrupt_transition: true,
        });
    }
    let eta = 1.0 - (tl * gap_ratio_raw(c2)) / (th * gap_ratio_raw(c1));
    Ok(ConcurrenceEfficiency {
        eta,
        abrupt_transition: false,
    })
}
