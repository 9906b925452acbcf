//! Verification suites. Each case records an exact expected/computed pair.

use clap::ValueEnum;
use eqidx_core::equiv_index::{
    conservation_check, hom_index, radial_index, reduced_radial_index, st_sum, ConservationMode,
};
use eqidx_core::poly::Rational;
use eqidx_core::rep_rings::{
    burnside_mul, induce, is_zero_divisor, reduce_to_rep, rep_mul, restrict_rep, BurnsideElement,
    CyclicGroup,
};
use eqidx_core::{DiagonalAction, IndexError, OneForm, RepRingElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::CliError;
use crate::generator::{FormGenerator, Limits};
use crate::problem::Problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coincidence,
    SebastianiThom,
    Conservation,
    Rings,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Coincidence => "coincidence",
            Suite::SebastianiThom => "sebastiani-thom",
            Suite::Conservation => "conservation",
            Suite::Rings => "rings",
        }
    }

    fn default_cases(&self) -> usize {
        match self {
            Suite::Coincidence => 50,
            Suite::SebastianiThom => 10,
            Suite::Conservation => 0,
            Suite::Rings => 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub input: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Number of generated cases; `None` uses the suite default.
    pub cases: Option<usize>,
}

/// A case that has not been evaluated yet.
type Job = Box<dyn Fn() -> Result<CaseResult, IndexError> + Send + Sync>;

fn job(
    id: String,
    f: impl Fn(&str) -> Result<CaseResult, IndexError> + Send + Sync + 'static,
) -> (String, Job) {
    let key = id.clone();
    (key, Box::new(move || f(&id)))
}

fn case(id: &str, input: String, expected: String, computed: String) -> CaseResult {
    CaseResult {
        id: id.to_string(),
        pass: expected == computed,
        input,
        expected,
        computed,
    }
}

fn describe(form: &OneForm, action: &DiagonalAction) -> String {
    format!("m={} k={:?} {}", action.order(), action.weights(), form)
}

pub fn run_suite(
    suite: Suite,
    input: Option<&Problem>,
    opts: VerifyOptions,
) -> Result<VerificationReport, CliError> {
    let count = opts.cases.unwrap_or_else(|| suite.default_cases());
    let jobs = match (suite, input) {
        (Suite::Coincidence, Some(p)) => vec![coincidence_job(
            "input".into(),
            p.form.clone(),
            p.action.clone(),
            None,
        )],
        (Suite::Coincidence, None) => coincidence_jobs(opts.seed, count),
        (Suite::SebastianiThom, Some(p)) => {
            vec![st_job(
                "input".into(),
                (p.form.clone(), p.action.clone()),
                (p.form.clone(), p.action.clone()),
            )]
        }
        (Suite::SebastianiThom, None) => st_jobs(opts.seed, count),
        (Suite::Conservation, Some(p)) => {
            let Some(deformed) = p.deformation.clone() else {
                return Err(CliError::Usage(
                    "the conservation suite needs a \"deformation\"".into(),
                ));
            };
            vec![conservation_job(
                "input".into(),
                p.form.clone(),
                deformed,
                p.action.clone(),
                p.points.clone(),
            )]
        }
        (Suite::Conservation, None) => catalog::deformations()
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                conservation_job(
                    format!("{:02}-{}", i, d.name),
                    d.form,
                    d.deformed,
                    d.action,
                    d.points,
                )
            })
            .collect(),
        (Suite::Rings, _) => ring_jobs(opts.seed, count),
    };
    let from_input = input.is_some();
    let mut cases = jobs
        .into_par_iter()
        .map(|(id, run)| match run() {
            Ok(c) => Ok(c),
            // a bad input file is a precondition failure, a bad built-in case a failed check
            Err(e) if from_input => Err(CliError::Math(e)),
            Err(e) => Ok(CaseResult {
                id,
                input: String::new(),
                expected: "a value".into(),
                computed: format!("error {}: {e}", e.kind()),
                pass: false,
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerificationReport {
        suite: suite.name().into(),
        seed: opts.seed,
        passed: cases.iter().all(|c| c.pass),
        cases,
    })
}

/// Checks `reduced_radial == hom`, and both against `expected` when given.
fn coincidence_job(
    id: String,
    form: OneForm,
    action: DiagonalAction,
    expected: Option<RepRingElement>,
) -> (String, Job) {
    job(id, move |id| {
        let hom = hom_index(&form, &action)?;
        let rad = reduced_radial_index(&form, &action)?;
        let want = expected.clone().unwrap_or_else(|| hom.clone());
        Ok(case(
            id,
            describe(&form, &action),
            format!("hom = rrad = {want}"),
            if hom == rad {
                format!("hom = rrad = {hom}")
            } else {
                format!("hom = {hom}, rrad = {rad}")
            },
        ))
    })
}

fn coincidence_jobs(seed: u64, count: usize) -> Vec<(String, Job)> {
    let mut jobs = Vec::new();
    for m in 2..=6 {
        for s in 1..=3 {
            let (form, action) = catalog::family_member(m, s);
            let expected = catalog::family_value(m, i64::from(s));
            jobs.push(coincidence_job(
                format!("family-m{m}-s{s}"),
                form,
                action,
                Some(expected),
            ));
        }
    }
    for (i, ex) in catalog::worked_examples().into_iter().enumerate() {
        jobs.push(coincidence_job(
            format!("hand-{:02}-{}", i, ex.name),
            ex.form,
            ex.action,
            Some(ex.hom),
        ));
    }
    let mut gen = FormGenerator::new(seed, Limits::default());
    for i in 0..count {
        let inst = gen.next_instance();
        jobs.push(coincidence_job(
            format!("gen-{i:04}"),
            inst.form,
            inst.action,
            None,
        ));
    }
    jobs
}

fn st_job(
    id: String,
    (omega, a): (OneForm, DiagonalAction),
    (eta, b): (OneForm, DiagonalAction),
) -> (String, Job) {
    job(id, move |id| {
        let (sum, ab) = st_sum((&omega, &a), (&eta, &b))?;
        let (hom_a, hom_b) = (hom_index(&omega, &a)?, hom_index(&eta, &b)?);
        let (rad_a, rad_b) = (radial_index(&omega, &a)?, radial_index(&eta, &b)?);
        let rrad_a = reduced_radial_index(&omega, &a)?;
        let rrad_b = reduced_radial_index(&eta, &b)?;
        let expected = format!(
            "hom = {}; rad = {}; rrad = {}",
            rep_mul(&hom_a, &hom_b)?,
            burnside_mul(&rad_a, &rad_b)?,
            rep_mul(&rrad_a, &rrad_b)?
        );
        let computed = format!(
            "hom = {}; rad = {}; rrad = {}",
            hom_index(&sum, &ab)?,
            radial_index(&sum, &ab)?,
            reduced_radial_index(&sum, &ab)?
        );
        Ok(case(
            id,
            format!("{} (+) {}", describe(&omega, &a), describe(&eta, &b)),
            expected,
            computed,
        ))
    })
}

fn st_jobs(seed: u64, count: usize) -> Vec<(String, Job)> {
    let mut jobs = Vec::new();
    let quad = |w: i64| {
        (
            OneForm::parse(&["z1^2"]).expect("valid"),
            DiagonalAction::new(CyclicGroup::new(3).expect("3"), &[w]).expect("valid"),
        )
    };
    jobs.push(st_job("hand-quadrics-z3".into(), quad(1), quad(2)));
    let mut gen = FormGenerator::new(
        seed,
        Limits {
            max_vars: 2,
            max_degree: 5,
            ..Limits::default()
        },
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5354);
    for i in 0..count {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=2);
        let x = gen.instance_with(m, n);
        let y = gen.instance_with(m, 1);
        jobs.push(st_job(
            format!("gen-{i:04}"),
            (x.form, x.action),
            (y.form, y.action),
        ));
    }
    jobs
}

fn conservation_job(
    id: String,
    form: OneForm,
    deformed: OneForm,
    action: DiagonalAction,
    points: Option<Vec<Vec<Rational>>>,
) -> (String, Job) {
    job(id, move |id| {
        let report = conservation_check(&form, &deformed, &action, points.as_deref())?;
        let detail = match (&report.mode, &report.origin) {
            (ConservationMode::Pointwise, Some(origin)) => {
                let terms: Vec<String> = std::iter::once(format!("({origin})"))
                    .chain(
                        report
                            .orbits
                            .iter()
                            .map(|o| format!("Ind_{}({})", o.isotropy.order(), o.local_index)),
                    )
                    .collect();
                format!("pointwise {}", terms.join(" + "))
            }
            _ => "global".to_string(),
        };
        Ok(case(
            id,
            format!(
                "{} -> {}; {detail}; guard {} = {}",
                describe(&form, &action),
                deformed,
                report.deformed_global_dimension,
                report.local_milnor
            ),
            report.expected.to_string(),
            report.computed.to_string(),
        ))
    })
}

fn ring_jobs(seed: u64, count: usize) -> Vec<(String, Job)> {
    let mut jobs = Vec::new();
    for m in 2..=8u32 {
        for s in 1..=4i64 {
            jobs.push(job(format!("nzd-m{m}-s{s}"), move |id| {
                let x = catalog::family_value(m, s);
                let det = x.multiplication_determinant();
                let target = s * i64::from(m) - 1;
                let zd = is_zero_divisor(&x);
                Ok(case(
                    id,
                    format!("{x}"),
                    format!("det = +-{target}, zero divisor: false"),
                    format!("det = +-{}, zero divisor: {zd}", det.magnitude()),
                ))
            }));
        }
        jobs.push(job(format!("reg-m{m}"), move |id| {
            let reg = RepRingElement::regular(CyclicGroup::new(m).expect("m >= 1"));
            Ok(case(
                id,
                format!("{reg}"),
                "zero divisor: true".into(),
                format!("zero divisor: {}", is_zero_divisor(&reg)),
            ))
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x52494e47);
    for i in 0..count {
        let m = rng.gen_range(1..=8u32);
        let g = CyclicGroup::new(m).expect("m >= 1");
        let divisors = g.divisors();
        let a = divisors[rng.gen_range(0..divisors.len())];
        let burnside = |rng: &mut ChaCha8Rng| {
            BurnsideElement::from_map(g, divisors.iter().map(|&d| (d, rng.gen_range(-3..=3))))
                .expect("divisors")
        };
        let (x, y) = (burnside(&mut rng), burnside(&mut rng));
        let psi = RepRingElement::from_coeffs(
            CyclicGroup::new(a).expect("a >= 1"),
            (0..a).map(|_| rng.gen_range(-3..=3)).collect(),
        )
        .expect("length a");
        let chi = RepRingElement::from_coeffs(g, (0..m).map(|_| rng.gen_range(-3..=3)).collect())
            .expect("length m");
        jobs.push(job(format!("hom-{i:04}"), move |id| {
            Ok(case(
                id,
                format!("x = {x}, y = {y}"),
                format!(
                    "r(xy) = {}",
                    rep_mul(&reduce_to_rep(&x), &reduce_to_rep(&y))?
                ),
                format!("r(xy) = {}", reduce_to_rep(&burnside_mul(&x, &y)?)),
            ))
        }));
        jobs.push(job(format!("frobenius-{i:04}"), move |id| {
            let h = g.subgroup(a)?;
            let pair = |u: &RepRingElement, v: &RepRingElement| -> i64 {
                u.coeffs().iter().zip(v.coeffs()).map(|(p, q)| p * q).sum()
            };
            Ok(case(
                id,
                format!("H_{a} in Z_{m}, psi = {psi}, chi = {chi}"),
                format!("<Ind psi, chi> = {}", pair(&psi, &restrict_rep(&chi, &h)?)),
                format!("<Ind psi, chi> = {}", pair(&induce(&h, &psi)?, &chi)),
            ))
        }));
    }
    jobs
}
