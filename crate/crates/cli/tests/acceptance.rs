//! Acceptance criteria 1 to 8. Prints one line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eqidx_cli::catalog::{deformations, family_member, family_value, shears, worked_examples};
use eqidx_cli::generator::{FormGenerator, Limits};
use eqidx_cli::{run_suite, Suite, VerifyOptions};
use eqidx_core::equiv_index::{
    conservation_check, equivariant_pullback, fixed_components_vanish, hom_index,
    hom_index_in_order, milnor_number, point, radial_index, reduced_radial_index, ConservationMode,
};
use eqidx_core::rep_rings::{
    burnside_mul, induce, is_zero_divisor, reduce_to_rep, rep_mul, restrict_rep, BurnsideElement,
    CyclicGroup, RepRingElement,
};
use eqidx_core::{parse_polynomial, DiagonalAction, MonomialOrder, OneForm};
use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rep(m: u32, coeffs: &[i64]) -> RepRingElement {
    RepRingElement::from_coeffs(CyclicGroup::new(m).unwrap(), coeffs.to_vec()).unwrap()
}

fn failed_case(report: &eqidx_cli::VerificationReport) -> Result<(), String> {
    match report.cases.iter().find(|c| !c.pass) {
        Some(bad) => Err(format!(
            "{}: expected {}, computed {}",
            bad.id, bad.expected, bad.computed
        )),
        None => Ok(()),
    }
}

fn one_dimensional_table() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for m in 2..=6 {
        for s in 1..=3 {
            let (form, action) = family_member(m, s);
            let want = family_value(m, i64::from(s));
            let hom = hom_index(&form, &action).map_err(|e| e.to_string())?;
            let rad = reduced_radial_index(&form, &action).map_err(|e| e.to_string())?;
            ensure(hom == want && rad == want, || {
                format!("m={m} s={s}: hom {hom}, rrad {rad}, expected {want}")
            })?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{count} cases in {elapsed:.2?}"))
}

fn coincidence_suite() -> Outcome {
    let start = Instant::now();
    let report = run_suite(
        Suite::Coincidence,
        None,
        VerifyOptions {
            seed: 0,
            cases: Some(50),
        },
    )
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    failed_case(&report)?;
    let hand = report
        .cases
        .iter()
        .filter(|c| c.id.starts_with("hand-"))
        .count();
    let generated = report
        .cases
        .iter()
        .filter(|c| c.id.starts_with("gen-"))
        .count();
    ensure(hand >= 12 && generated >= 50, || {
        format!("only {hand} hand and {generated} generated cases")
    })?;
    let named = |name: &str| {
        worked_examples()
            .into_iter()
            .find(|e| e.name == name)
            .map(|e| e.hom)
    };
    ensure(named("mixed-fixed-z2") == Some(rep(2, &[0, 3])), || {
        "mixed-fixed-z2 is not 3σ".into()
    })?;
    ensure(named("quadrics-z3") == Some(rep(3, &[2, 1, 1])), || {
        "quadrics-z3 is not 2 + σ + σ^2".into()
    })?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{hand} hand and {generated} generated cases in {elapsed:.2?}"
    ))
}

fn sebastiani_thom() -> Outcome {
    let report = run_suite(
        Suite::SebastianiThom,
        None,
        VerifyOptions {
            seed: 0,
            cases: Some(10),
        },
    )
    .map_err(|e| e.to_string())?;
    failed_case(&report)?;
    ensure(report.cases.len() >= 10, || {
        format!("only {} pairs", report.cases.len())
    })?;
    Ok(format!("{} pairs", report.cases.len()))
}

fn conservation() -> Outcome {
    let g = CyclicGroup::new(2).unwrap();
    let action = DiagonalAction::new(g, &[1]).unwrap();
    let cubic = OneForm::parse(&["z1^3"]).unwrap();
    let deformed = OneForm::parse(&["z1^3 - z1"]).unwrap();
    let r = conservation_check(&cubic, &deformed, &action, Some(&[point(&[1])]))
        .map_err(|e| e.to_string())?;
    ensure(r.mode == ConservationMode::Pointwise, || {
        "pointwise mode not used".into()
    })?;
    ensure(r.expected == rep(2, &[1, 2]), || {
        format!("index at the origin {}", r.expected)
    })?;
    ensure(r.origin == Some(rep(2, &[0, 1])), || {
        format!("deformed origin {:?}", r.origin)
    })?;
    let trivial = g.subgroup(1).unwrap();
    ensure(
        r.orbits.len() == 1
            && r.orbits[0].isotropy == trivial
            && r.orbits[0].local_index == rep(1, &[1])
            && r.orbits[0].induced == induce(&trivial, &rep(1, &[1])).unwrap(),
        || format!("orbit terms {:?}", r.orbits),
    )?;
    ensure(r.passed(), || format!("{} != {}", r.computed, r.expected))?;

    let mut global = 0;
    for d in deformations() {
        let r = conservation_check(&d.form, &d.deformed, &d.action, d.points.as_deref())
            .map_err(|e| format!("{}: {e}", d.name))?;
        ensure(r.passed(), || {
            format!("{}: {} != {}", d.name, r.computed, r.expected)
        })?;
        ensure(r.deformed_global_dimension == r.local_milnor, || {
            format!("{}: dimension guard", d.name)
        })?;
        if r.mode == ConservationMode::Global {
            global += 1;
        }
    }
    ensure(global >= 5, || format!("only {global} global families"))?;
    Ok(format!("1 + 2σ = σ + Ind(1); {global} global families"))
}

fn non_zero_divisor() -> Outcome {
    for m in 2..=8u32 {
        for s in 1..=4i64 {
            let x = family_value(m, s);
            let det = x.multiplication_determinant();
            let target = s * i64::from(m) - 1;
            ensure(
                det.magnitude() == &BigUint::from(target.unsigned_abs()),
                || format!("m={m} s={s}: det {det}"),
            )?;
            ensure(!is_zero_divisor(&x), || {
                format!("m={m} s={s}: zero divisor")
            })?;
        }
        let reg = RepRingElement::regular(CyclicGroup::new(m).unwrap());
        ensure(is_zero_divisor(&reg), || {
            format!("reg over Z_{m} not a zero divisor")
        })?;
    }
    Ok("m in 2..=8, s in 1..=4".into())
}

fn milnor_oracle() -> Outcome {
    for a in 2..=5u32 {
        for b in 2..=5u32 {
            let f = parse_polynomial(&format!("z1^{a} + z2^{b}"), 2).unwrap();
            let mu =
                milnor_number(&OneForm::differential(&f).unwrap()).map_err(|e| e.to_string())?;
            let want = ((a - 1) * (b - 1)) as usize;
            ensure(mu == want, || format!("a={a} b={b}: {mu} != {want}"))?;
        }
    }
    Ok("a, b in 2..=5".into())
}

fn pullback_invariance() -> Outcome {
    let all = shears();
    for s in &all {
        let pulled = equivariant_pullback(&s.form, &s.map, &s.action)
            .map_err(|e| format!("{}: {e}", s.name))?;
        let before = (
            hom_index(&s.form, &s.action),
            radial_index(&s.form, &s.action),
        );
        let after = (
            hom_index(&pulled, &s.action),
            radial_index(&pulled, &s.action),
        );
        ensure(before.0.is_ok() && before.1.is_ok(), || {
            format!("{}: {before:?}", s.name)
        })?;
        ensure(before == after, || {
            format!("{}: {before:?} vs {after:?}", s.name)
        })?;
    }
    ensure(all.len() >= 5, || format!("only {} shears", all.len()))?;
    Ok(format!("{} shears", all.len()))
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]))
}

fn group() -> impl Strategy<Value = CyclicGroup> + Clone {
    (1u32..=8).prop_map(|m| CyclicGroup::new(m).unwrap())
}

fn burnside(g: CyclicGroup) -> impl Strategy<Value = BurnsideElement> {
    let divisors = g.divisors();
    prop::collection::vec(-4i64..=4, divisors.len())
        .prop_map(move |c| BurnsideElement::from_map(g, divisors.iter().copied().zip(c)).unwrap())
}

/// Draws `(m, n, seed)` and feeds them to the form generator.
fn invariant_form() -> impl Strategy<Value = (OneForm, DiagonalAction)> {
    (1u32..=6, 1usize..=3, any::<u64>()).prop_map(|(m, n, seed)| {
        let limits = Limits {
            max_degree: 5,
            ..Limits::default()
        };
        let inst = FormGenerator::new(seed, limits).instance_with(m, n);
        (inst.form, inst.action)
    })
}

fn property_suites() -> Outcome {
    runner(200)
        .run(
            &group().prop_flat_map(|g| (burnside(g), burnside(g))),
            |(x, y)| {
                let lhs = reduce_to_rep(&burnside_mul(&x, &y).unwrap());
                let rhs = rep_mul(&reduce_to_rep(&x), &reduce_to_rep(&y)).unwrap();
                prop_assert_eq!(lhs, rhs);
                Ok(())
            },
        )
        .map_err(|e| format!("r_G homomorphism: {e}"))?;

    let frobenius = group().prop_flat_map(|g| {
        let m = g.order() as usize;
        (
            prop::sample::select(g.divisors()),
            prop::collection::vec(-4i64..=4, m),
            prop::collection::vec(-4i64..=4, m),
        )
            .prop_map(move |(a, psi, chi)| (g, a, psi, chi))
    });
    runner(200)
        .run(&frobenius, |(g, a, psi, chi)| {
            let h = g.subgroup(a).unwrap();
            let psi =
                RepRingElement::from_coeffs(h.as_group(), psi[..a as usize].to_vec()).unwrap();
            let chi = RepRingElement::from_coeffs(g, chi).unwrap();
            let pair = |u: &RepRingElement, v: &RepRingElement| -> i64 {
                u.coeffs().iter().zip(v.coeffs()).map(|(p, q)| p * q).sum()
            };
            prop_assert_eq!(
                pair(&induce(&h, &psi).unwrap(), &chi),
                pair(&psi, &restrict_rep(&chi, &h).unwrap())
            );
            Ok(())
        })
        .map_err(|e| format!("Frobenius reciprocity: {e}"))?;

    runner(64)
        .run(&invariant_form(), |(form, action)| {
            let x = hom_index_in_order(&form, &action, MonomialOrder::NegDegRevLex).unwrap();
            let y = hom_index_in_order(&form, &action, MonomialOrder::NegDegLex).unwrap();
            prop_assert_eq!(x, y);
            Ok(())
        })
        .map_err(|e| format!("purity under two local orders: {e}"))?;

    runner(64)
        .run(&invariant_form(), |(form, action)| {
            for a in action.group().divisors() {
                prop_assert!(fixed_components_vanish(&form, &action, a));
            }
            Ok(())
        })
        .map_err(|e| format!("fixed-component vanishing: {e}"))?;

    Ok("r_G homomorphism, Frobenius, purity, vanishing; 528 cases".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("one-dimensional table", one_dimensional_table),
        ("coincidence suite", coincidence_suite),
        ("Sebastiani-Thom", sebastiani_thom),
        ("conservation of number", conservation),
        ("non-zero-divisor", non_zero_divisor),
        ("Milnor oracle", milnor_oracle),
        ("pullback invariance", pullback_invariance),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
