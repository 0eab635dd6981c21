//! Seeded verification suites driving the numeric oracle against the closed
//! forms. The report is deterministic for a fixed seed and sample count.

use eqhe_core::oracle::{gibbs_density, simulate_cycle, wootters_concurrence};
use eqhe_core::otto::{run_cycle, stroke_work};
use eqhe_core::spin::{
    concurrence, coupling_from_concurrence, critical_temperature, gibbs_occupations, spectrum,
    CouplingSign, ModelParams,
};
use eqhe_core::CycleSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::fmt::Write;

/// Every suite must stay within this of exact agreement.
const TOLERANCE: f64 = 1e-10;

pub struct VerifyOutcome {
    pub report: String,
    pub passed: bool,
}

struct Suite {
    max_deviation: f64,
    first_failure: Option<String>,
}

impl Suite {
    fn new() -> Self {
        Suite {
            max_deviation: 0.0,
            first_failure: None,
        }
    }

    fn record(&mut self, deviation: f64, context: impl Fn() -> String) {
        if deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
        if deviation > TOLERANCE && self.first_failure.is_none() {
            self.first_failure = Some(context());
        }
    }

    fn report(&self, name: &str, out: &mut String, passed: &mut bool) {
        match &self.first_failure {
            None => {
                writeln!(
                    out,
                    "suite {name}: max deviation = {:.3e} PASS",
                    self.max_deviation
                )
                .unwrap();
            }
            Some(context) => {
                *passed = false;
                writeln!(
                    out,
                    "suite {name}: max deviation = {:.3e} FAIL first failure at {context}",
                    self.max_deviation
                )
                .unwrap();
            }
        }
    }
}

fn sample_params(rng: &mut ChaCha12Rng, sign: f64) -> ModelParams {
    let j = sign * rng.random_range(0.1..=5.0);
    let d = rng.random_range(-3.0..=3.0);
    ModelParams::new(j, d).unwrap()
}

fn sample_spec(rng: &mut ChaCha12Rng) -> CycleSpec {
    let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let hot = sample_params(rng, sign);
    let cold = sample_params(rng, sign);
    let tl = rng.random_range(0.05..=3.0);
    let th = tl + rng.random_range(0.001..=1.0) * (5.0 - tl);
    CycleSpec::new(hot, th, cold, tl).unwrap()
}

fn describe_spec(spec: &CycleSpec) -> String {
    format!(
        "(j1={:?}, d1={:?}, th={:?}, j2={:?}, d2={:?}, tl={:?})",
        spec.hot().j(),
        spec.hot().d(),
        spec.hot_temperature(),
        spec.cold().j(),
        spec.cold().d(),
        spec.cold_temperature()
    )
}

pub fn run(seed: u64, samples: u32, inject_fault: bool) -> VerifyOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut report = String::new();
    let mut passed = true;
    writeln!(report, "seed: {seed}").unwrap();
    writeln!(report, "samples: {samples}").unwrap();

    // closed-form cycle vs direct-summation oracle
    let mut suite = Suite::new();
    for _ in 0..samples {
        let spec = sample_spec(&mut rng);
        let mut closed = run_cycle(&spec);
        if inject_fault {
            closed.q_h = -closed.q_h;
        }
        let numeric = simulate_cycle(&spec);
        let dev = (closed.q_h - numeric.q_h)
            .abs()
            .max((closed.q_l - numeric.q_l).abs())
            .max((closed.w - numeric.w).abs());
        suite.record(dev, || describe_spec(&spec));
    }
    suite.report("cycle_oracle_equivalence", &mut report, &mut passed);

    // closed-form concurrence vs Wootters on the numeric Gibbs state,
    // including samples straddling the critical temperature
    let mut suite = Suite::new();
    for i in 0..samples {
        let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let params = sample_params(&mut rng, sign);
        let t = if i % 20 == 19 {
            critical_temperature(&params) * (1.0 + rng.random_range(-1e-3..=1e-3))
        } else {
            rng.random_range(0.05..=5.0)
        };
        let closed = concurrence(&params, t).unwrap();
        let numeric = wootters_concurrence(&gibbs_density(&params, t).unwrap());
        suite.record((closed - numeric).abs(), || {
            format!("(j={:?}, d={:?}, t={:?})", params.j(), params.d(), t)
        });
    }
    suite.report("concurrence_oracle_equivalence", &mut report, &mut passed);

    // first law: w = q_h + q_l, and the cycle work equals the negated sum of
    // the two adiabatic stroke works composed from Gibbs occupations
    let mut suite = Suite::new();
    for _ in 0..samples {
        let spec = sample_spec(&mut rng);
        let r = run_cycle(&spec);
        let e_hot = spectrum(&spec.hot()).energies;
        let e_cold = spectrum(&spec.cold()).energies;
        let p_hot = gibbs_occupations(&spec.hot(), spec.hot_temperature())
            .unwrap()
            .probabilities;
        let p_cold = gibbs_occupations(&spec.cold(), spec.cold_temperature())
            .unwrap()
            .probabilities;
        let work_on = stroke_work(&p_hot, &e_hot, &e_cold).unwrap()
            + stroke_work(&p_cold, &e_cold, &e_hot).unwrap();
        let dev = (r.w - (r.q_h + r.q_l)).abs().max((r.w + work_on).abs());
        suite.record(dev, || describe_spec(&spec));
    }
    suite.report("first_law", &mut report, &mut passed);

    // second law: every positive-work cycle absorbs from the hot bath,
    // rejects less to the cold bath, and stays below the Carnot bound
    let mut violations = 0u32;
    let mut first_violation = None;
    for _ in 0..samples {
        let spec = sample_spec(&mut rng);
        let r = run_cycle(&spec);
        if r.w > 0.0 {
            let case_ok = r.q_h > 0.0 && r.q_l < 0.0 && r.q_h > -r.q_l;
            let eta_ok = r.eta.is_some_and(|eta| eta <= r.eta_carnot);
            if !case_ok || !eta_ok {
                violations += 1;
                if first_violation.is_none() {
                    first_violation = Some(describe_spec(&spec));
                }
            }
        }
    }
    match first_violation {
        None => writeln!(report, "suite second_law: violations = 0 PASS").unwrap(),
        Some(context) => {
            passed = false;
            writeln!(
                report,
                "suite second_law: violations = {violations} FAIL first violation at {context}"
            )
            .unwrap();
        }
    }

    // concurrence -> coupling -> concurrence round trip, both branches
    let mut suite = Suite::new();
    for i in 0..samples {
        let c: f64 = rng.random_range(0.0..=0.995);
        let d: f64 = rng.random_range(-3.0..=3.0);
        let t: f64 = rng.random_range(0.05..=5.0);
        let branch = if i % 2 == 0 {
            CouplingSign::Antiferromagnetic
        } else {
            CouplingSign::Ferromagnetic
        };
        let j = coupling_from_concurrence(c, d, t, branch).unwrap();
        let back = concurrence(&ModelParams::new(j, d).unwrap(), t).unwrap();
        suite.record((back - c).abs(), || {
            format!("(c={c:?}, d={d:?}, t={t:?}, {branch:?})")
        });
    }
    suite.report("inversion_round_trip", &mut report, &mut passed);

    writeln!(report, "result: {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    VerifyOutcome { report, passed }
}
