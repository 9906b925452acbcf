//! Built-in worked examples with hand-derived values.

use eqidx_core::poly::{parse_polynomial, Polynomial, Rational};
use eqidx_core::{CyclicGroup, DiagonalAction, OneForm, RepRingElement};

#[derive(Debug, Clone)]
pub struct Example {
    pub name: &'static str,
    pub form: OneForm,
    pub action: DiagonalAction,
    /// Expected homological index.
    pub hom: RepRingElement,
}

fn action(m: u32, weights: &[i64]) -> DiagonalAction {
    DiagonalAction::new(CyclicGroup::new(m).expect("m >= 1"), weights).expect("valid weights")
}

fn form(comps: &[&str]) -> OneForm {
    OneForm::parse(comps).expect("valid components")
}

fn rep(m: u32, coeffs: &[i64]) -> RepRingElement {
    RepRingElement::from_coeffs(CyclicGroup::new(m).expect("m >= 1"), coeffs.to_vec())
        .expect("length m")
}

/// `s·(1 + σ + … + σ^{m-1}) - 1`.
pub fn family_value(m: u32, s: i64) -> RepRingElement {
    let g = CyclicGroup::new(m).expect("m >= 1");
    RepRingElement::regular(g)
        .scale(s)
        .try_sub(&RepRingElement::one(g))
        .expect("same group")
}

/// `z^{sm-1} dz` with weight 1 over `Z_m`.
pub fn family_member(m: u32, s: u32) -> (OneForm, DiagonalAction) {
    (form(&[&format!("z1^{}", s * m - 1)]), action(m, &[1]))
}

/// Forms whose homological index is known by hand. Comments give the local
/// quotient basis and the weights `⟨k,a⟩ + Σk_i`.
pub fn worked_examples() -> Vec<Example> {
    let ex = |name, m, weights: &[i64], comps: &[&str], hom: &[i64]| Example {
        name,
        form: form(comps),
        action: action(m, weights),
        hom: rep(m, hom),
    };
    vec![
        // {1, z, z²} with weights 1, 2, 3
        ex("cubic-z2", 2, &[1], &["z1^3"], &[1, 2]),
        // {1}, twist 2
        ex("hyperbolic-z2", 2, &[1, 1], &["z2", "z1"], &[1, 0]),
        // {1, z2, z2²}, twist 1
        ex("mixed-fixed-z2", 2, &[1, 0], &["z1", "z2^3"], &[0, 3]),
        // {1, z1, z2, z1z2}, weights 0, 1, 2, 0
        ex("quadrics-z3", 3, &[1, 2], &["z1^2", "z2^2"], &[2, 1, 1]),
        // trivial group: the Milnor number
        ex("trivial-group", 1, &[0], &["z1^2"], &[2]),
        // {1, z}, weights 1, 2
        ex("quadric-z3", 3, &[1], &["z1^2"], &[0, 1, 1]),
        // {1, z}, weights 2, 4
        ex("quadric-z3-weight2", 3, &[2], &["z1^2"], &[0, 1, 1]),
        // z(z² - 1) is z times a unit: {1}, twist 1
        ex("deformed-cubic-origin", 2, &[1], &["z1^3 - z1"], &[0, 1]),
        // (1 + 2σ)²
        ex("cubics-z2", 2, &[1, 1], &["z1^3", "z2^3"], &[5, 4]),
        // same ideal after the shear (z1 + z2³, z2)
        ex(
            "sheared-cubics-z2",
            2,
            &[1, 1],
            &[
                "z1^3 + 3*z1^2*z2^3 + 3*z1*z2^6 + z2^9",
                "3*z1^3*z2^2 + 9*z1^2*z2^5 + 9*z1*z2^8 + 3*z2^11 + z2^3",
            ],
            &[5, 4],
        ),
        // s = 2 over Z_4
        ex("septic-z4", 4, &[1], &["z1^7"], &[1, 2, 2, 2]),
        // {1}, twist 2
        ex("quadratic-z2", 2, &[1, 1], &["z1", "z2"], &[1, 0]),
        // {1, z1}, weights 0, 0, twist 1
        ex("fixed-quadric-z2", 2, &[0, 1], &["z1^2", "z2"], &[0, 2]),
        // (σ + σ²)³
        ex(
            "three-quadrics-z3",
            3,
            &[1, 1, 1],
            &["z1^2", "z2^2", "z3^2"],
            &[2, 3, 3],
        ),
        // z1 = -z2² locally, leaving z2³(1 + z2²): {1, z2, z2²}, twist 1
        ex(
            "graph-z2",
            2,
            &[0, 1],
            &["z1 + z2^2", "z2^3 + z1^2*z2"],
            &[1, 2],
        ),
    ]
}

/// A deformation pair for the conservation check.
#[derive(Debug, Clone)]
pub struct Deformation {
    pub name: &'static str,
    pub form: OneForm,
    pub deformed: OneForm,
    pub action: DiagonalAction,
    /// One representative per orbit of nonzero zeros, when all are rational.
    pub points: Option<Vec<Vec<Rational>>>,
}

fn pts(coords: &[&[i64]]) -> Option<Vec<Vec<Rational>>> {
    Some(
        coords
            .iter()
            .map(|p| eqidx_core::equiv_index::point(p))
            .collect(),
    )
}

pub fn deformations() -> Vec<Deformation> {
    let d = |name, m, weights: &[i64], comps: &[&str], deformed: &[&str], points| Deformation {
        name,
        form: form(comps),
        deformed: form(deformed),
        action: action(m, weights),
        points,
    };
    vec![
        d(
            "cubic-pointwise",
            2,
            &[1],
            &["z1^3"],
            &["z1^3 - z1"],
            pts(&[&[1]]),
        ),
        d(
            "quintic-pointwise",
            2,
            &[1],
            &["z1^5"],
            &["z1^5 - 5*z1^3 + 4*z1"],
            pts(&[&[1], &[2]]),
        ),
        d("cubic", 2, &[1], &["z1^3"], &["z1^3 - z1"], None),
        d(
            "cubics",
            2,
            &[1, 1],
            &["z1^3", "z2^3"],
            &["z1^3 - z1", "z2^3"],
            None,
        ),
        d("quintic-z3", 3, &[1], &["z1^5"], &["z1^5 - z1^2"], None),
        d(
            "quintic",
            2,
            &[1],
            &["z1^5"],
            &["z1^5 - 5*z1^3 + 4*z1"],
            None,
        ),
        d("septic-z4", 4, &[1], &["z1^7"], &["z1^7 - z1^3"], None),
        d(
            "mixed-fixed",
            2,
            &[1, 0],
            &["z1", "z2^3"],
            &["z1", "z2^3 - z2"],
            None,
        ),
        d(
            "quadrics-z3",
            3,
            &[1, 2],
            &["z1^2", "z2^2"],
            &["z1^2 - z2", "z2^2 - z1"],
            None,
        ),
    ]
}

/// An equivariant germ of automorphism for the pullback check.
#[derive(Debug, Clone)]
pub struct Shear {
    pub name: &'static str,
    pub form: OneForm,
    pub action: DiagonalAction,
    pub map: Vec<Polynomial>,
}

pub fn shears() -> Vec<Shear> {
    let s = |name, m, weights: &[i64], comps: &[&str], map: &[&str]| Shear {
        name,
        form: form(comps),
        action: action(m, weights),
        map: map
            .iter()
            .map(|p| parse_polynomial(p, weights.len()).expect("valid map"))
            .collect(),
    };
    vec![
        s("identity", 2, &[1], &["z1^3"], &["z1"]),
        s("scale", 2, &[1], &["z1^3"], &["2*z1 + z1^3"]),
        s(
            "shear-first",
            2,
            &[1, 1],
            &["z1^3", "z2^3"],
            &["z1 + z2^3", "z2"],
        ),
        s(
            "shear-second",
            2,
            &[1, 1],
            &["z1^3", "z2^3"],
            &["z1", "z2 + z1^3"],
        ),
        s(
            "shear-both",
            2,
            &[1, 1],
            &["z1^3", "z2^3"],
            &["z1 + z1^2*z2", "z2 - z1*z2^2"],
        ),
        s(
            "quadrics-z3",
            3,
            &[1, 2],
            &["z1^2", "z2^2"],
            &["z1 + z2^2", "z2 + z1^2"],
        ),
        s(
            "trivial-group",
            1,
            &[0, 0],
            &["z1^2", "z2^2"],
            &["z1 + z2^2", "3*z2 - z1"],
        ),
        s(
            "mixed-fixed",
            2,
            &[1, 0],
            &["z1", "z2^3"],
            &["z1 + z1*z2", "z2 + z1^2"],
        ),
    ]
}
