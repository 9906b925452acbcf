//! Equivariant indices of `Z_m`-invariant polynomial 1-forms at the origin of
//! `C^n`, for diagonal actions `σ⋆z = (σ^{k_1} z_1, …, σ^{k_n} z_n)`.
//!
//! * The homological index is the character of the twisted local algebra
//!   `(O/⟨f_1,…,f_n⟩) dz_1∧…∧dz_n`: every standard monomial `z^a` contributes
//!   `σ^{⟨k,a⟩ + Σ k_i}`.
//! * The radial index is computed from fixed subspaces. `H_a` fixes the
//!   coordinate subspace `F_a = {i : a | k_i}`; the zeros of a radial
//!   perturbation lying in `Fix(H_a)` add up to the index of the real part of
//!   `ω|Fix(H_a)`, i.e. `(-1)^{|F_a|} μ_a`. The orbit counts `d_b` of the real
//!   form solve `(-1)^{|F_a|} μ_a = Σ_{a | b | m} d_b·(m/b)` top-down over the
//!   divisor lattice, and the complex index is `(-1)^n Σ d_b [G/H_b]`. An empty
//!   fixed subspace contributes multiplicity 1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{parse_polynomial, Monomial, MonomialOrder, PolyError, Polynomial, Rational};
use crate::rep_rings::{
    induce, reduce_to_rep, BurnsideElement, CyclicGroup, RepRingElement, RingError, SubgroupRef,
};
use crate::standard_basis::{
    buchberger_global, isolated_local_basis, quotient_basis, BasisError, GeneratorSet,
    QuotientBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("a 1-form needs at least one variable")]
    Empty,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("component {component} is not invariant: monomial {monomial} has weight {weight}, expected {expected}")]
    NotInvariant {
        component: usize,
        monomial: String,
        weight: u32,
        expected: u32,
    },
    #[error("the zero at the origin is not isolated")]
    NonIsolated,
    #[error("restriction to the fixed subspace of H_{subgroup} has a non-isolated zero")]
    RestrictedNonIsolated { subgroup: u32 },
    #[error("the fixed-point counts for H_{subgroup} are not divisible by the orbit size")]
    NonIntegralInversion { subgroup: u32 },
    #[error("the global quotient is not finite-dimensional")]
    GloballyNonZeroDimensional,
    #[error("map component {component} is not equivariant: monomial {monomial} has weight {weight}, expected {expected}")]
    NotEquivariantMap {
        component: usize,
        monomial: String,
        weight: u32,
        expected: u32,
    },
    #[error("map component {component} does not vanish at the origin")]
    MapNotAtOrigin { component: usize },
    #[error("the linear part of the map is singular")]
    SingularLinearPart,
    #[error("point {point} is not a zero of the 1-form")]
    NotAZero { point: String },
    #[error("points {first} and {second} lie in the same orbit")]
    DuplicateOrbit { first: usize, second: usize },
    #[error("dimension guard failed: global quotient has dimension {global}, local Milnor number is {local}")]
    DimensionGuardFailed { global: usize, local: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl IndexError {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            IndexError::Empty => "Empty",
            IndexError::DimensionMismatch { .. } => "DimensionMismatch",
            IndexError::NotInvariant { .. } => "NotInvariant",
            IndexError::NonIsolated => "NonIsolated",
            IndexError::RestrictedNonIsolated { .. } => "RestrictedNonIsolated",
            IndexError::NonIntegralInversion { .. } => "NonIntegralInversion",
            IndexError::GloballyNonZeroDimensional => "GloballyNonZeroDimensional",
            IndexError::NotEquivariantMap { .. } => "NotEquivariantMap",
            IndexError::MapNotAtOrigin { .. } => "MapNotAtOrigin",
            IndexError::SingularLinearPart => "SingularLinearPart",
            IndexError::NotAZero { .. } => "NotAZero",
            IndexError::DuplicateOrbit { .. } => "DuplicateOrbit",
            IndexError::DimensionGuardFailed { .. } => "DimensionGuardFailed",
            IndexError::Ring(RingError::InvalidOrder) => "InvalidOrder",
            IndexError::Ring(RingError::GroupMismatch { .. }) => "GroupMismatch",
            IndexError::Ring(RingError::NotASubgroup { .. }) => "NotASubgroup",
            IndexError::Ring(RingError::LengthMismatch { .. }) => "LengthMismatch",
            IndexError::Poly(_) => "PolynomialError",
        }
    }
}

/// `σ⋆(z_1,…,z_n) = (σ^{k_1} z_1, …, σ^{k_n} z_n)` with residues `0 ≤ k_i < m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalAction {
    group: CyclicGroup,
    weights: Vec<u32>,
}

impl DiagonalAction {
    /// Weights are reduced modulo `m`; negative weights are allowed.
    pub fn new(group: CyclicGroup, weights: &[i64]) -> Result<Self, IndexError> {
        if weights.is_empty() {
            return Err(IndexError::Empty);
        }
        let m = i64::from(group.order());
        Ok(Self {
            group,
            weights: weights.iter().map(|k| k.rem_euclid(m) as u32).collect(),
        })
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn order(&self) -> u32 {
        self.group.order()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Weight of the volume form `dz_1∧…∧dz_n`.
    pub fn volume_weight(&self) -> u32 {
        self.weights
            .iter()
            .map(|&k| u64::from(k))
            .sum::<u64>()
            .rem_euclid(u64::from(self.order())) as u32
    }

    /// Variables fixed by `H_a`: `{i : a | k_i}`.
    pub fn fixed_vars(&self, a: u32) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.weights[i].is_multiple_of(a))
            .collect()
    }

    /// The action of `H_a` in terms of its generator `σ^(m/a)`: weights `k_i mod a`.
    pub fn restrict_to(&self, sub: &SubgroupRef) -> Self {
        let a = sub.order();
        Self {
            group: sub.as_group(),
            weights: self.weights.iter().map(|k| k % a).collect(),
        }
    }

    fn check_dims(&self, n: usize) -> Result<(), IndexError> {
        if n != self.nvars() {
            return Err(IndexError::DimensionMismatch {
                left: n,
                right: self.nvars(),
            });
        }
        Ok(())
    }
}

/// `⟨k, a⟩ mod m`.
pub fn monomial_weight(mon: &Monomial, action: &DiagonalAction) -> Result<u32, IndexError> {
    action.check_dims(mon.nvars())?;
    Ok(mon.weight(&action.weights, action.order()))
}

/// `ω = Σ f_i dz_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneForm {
    components: Vec<Polynomial>,
}

impl OneForm {
    pub fn new(components: Vec<Polynomial>) -> Result<Self, IndexError> {
        let n = components.len();
        if n == 0 {
            return Err(IndexError::Empty);
        }
        if let Some(bad) = components.iter().find(|f| f.nvars() != n) {
            return Err(IndexError::DimensionMismatch {
                left: n,
                right: bad.nvars(),
            });
        }
        Ok(Self { components })
    }

    pub fn parse<S: AsRef<str>>(components: &[S]) -> Result<Self, IndexError> {
        let n = components.len();
        let polys = components
            .iter()
            .map(|s| parse_polynomial(s.as_ref(), n))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(polys)
    }

    /// `df = Σ ∂f/∂z_i dz_i`.
    pub fn differential(f: &Polynomial) -> Result<Self, IndexError> {
        let comps = (0..f.nvars())
            .map(|i| f.derivative(i))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    /// The 1-form on the coordinate subspace spanned by `vars`: the components
    /// `f_i`, `i ∈ vars`, with every other variable set to zero.
    pub fn restrict_to(&self, vars: &[usize]) -> Option<Self> {
        if vars.is_empty() {
            return None;
        }
        let comps = vars
            .iter()
            .map(|&i| self.components[i].restrict_to(vars))
            .collect();
        Some(Self { components: comps })
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) dz{}", i + 1)?;
        }
        Ok(())
    }
}

/// Per-subgroup data of the radial computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedStratum {
    /// Zero-based indices of the variables fixed by the subgroup.
    pub fixed_vars: Vec<usize>,
    /// Local quotient dimension of the restricted form (1 for an empty fixed set).
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub hom: RepRingElement,
    pub radial: BurnsideElement,
    pub reduced_radial: RepRingElement,
    /// Keyed by subgroup order.
    pub diagnostics: BTreeMap<u32, FixedStratum>,
}

/// True iff every monomial `z^a` of every `f_i` has `⟨k,a⟩ + k_i ≡ 0 mod m`.
pub fn check_invariance(form: &OneForm, action: &DiagonalAction) -> Result<bool, IndexError> {
    match ensure_invariant(form, action) {
        Ok(()) => Ok(true),
        Err(IndexError::NotInvariant { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

fn ensure_invariant(form: &OneForm, action: &DiagonalAction) -> Result<(), IndexError> {
    action.check_dims(form.nvars())?;
    let m = action.order();
    for (i, f) in form.components.iter().enumerate() {
        let expected = (m - action.weights[i]) % m;
        for mon in f.terms().keys() {
            let weight = mon.weight(&action.weights, m);
            if weight != expected {
                return Err(IndexError::NotInvariant {
                    component: i + 1,
                    monomial: mon.to_string(),
                    weight,
                    expected,
                });
            }
        }
    }
    Ok(())
}

/// Standard monomials of `O_{C^n,0}/⟨f_1,…,f_n⟩` under a local order.
pub fn local_quotient(form: &OneForm, order: MonomialOrder) -> Result<QuotientBasis, IndexError> {
    let gens = GeneratorSet::new(form.components.clone(), order).expect("a form has components");
    let basis = isolated_local_basis(&gens).map_err(|_| IndexError::NonIsolated)?;
    quotient_basis(&basis).map_err(|e| match e {
        BasisError::NonZeroDimensional { .. } => IndexError::NonIsolated,
        _ => unreachable!("standard basis of a valid generator set"),
    })
}

/// Local Milnor number `dim O/⟨f_1,…,f_n⟩`.
pub fn milnor_number(form: &OneForm) -> Result<usize, IndexError> {
    Ok(local_quotient(form, MonomialOrder::NegDegRevLex)?.dimension())
}

fn twisted_character(monomials: &[Monomial], action: &DiagonalAction) -> RepRingElement {
    let mut out = RepRingElement::zero(action.group);
    let twist = i64::from(action.volume_weight());
    for mon in monomials {
        out.add_term(
            i64::from(mon.weight(&action.weights, action.order())) + twist,
            1,
        );
    }
    out
}

/// Equivariant homological index in `R(Z_m)`.
pub fn hom_index(form: &OneForm, action: &DiagonalAction) -> Result<RepRingElement, IndexError> {
    hom_index_in_order(form, action, MonomialOrder::NegDegRevLex)
}

/// Same as [`hom_index`] with an explicit local order for the standard basis.
pub fn hom_index_in_order(
    form: &OneForm,
    action: &DiagonalAction,
    order: MonomialOrder,
) -> Result<RepRingElement, IndexError> {
    assert!(
        order.is_local(),
        "the homological index lives in the local ring"
    );
    ensure_invariant(form, action)?;
    let q = local_quotient(form, order)?;
    Ok(twisted_character(q.monomials(), action))
}

/// True iff, for every `i ∉ F_a`, `f_i` vanishes identically on `Fix(H_a)`.
pub fn fixed_components_vanish(form: &OneForm, action: &DiagonalAction, a: u32) -> bool {
    let fixed = action.fixed_vars(a);
    (0..form.nvars())
        .filter(|i| !fixed.contains(i))
        .all(|i| form.components[i].restrict_to(&fixed).is_zero())
}

/// `F_a` and `μ_a` for every subgroup order `a`.
pub fn fixed_strata(
    form: &OneForm,
    action: &DiagonalAction,
) -> Result<BTreeMap<u32, FixedStratum>, IndexError> {
    ensure_invariant(form, action)?;
    let mut out = BTreeMap::new();
    for a in action.group.divisors() {
        let fixed_vars = action.fixed_vars(a);
        let mu = match form.restrict_to(&fixed_vars) {
            None => 1,
            Some(restricted) => {
                let q = local_quotient(&restricted, MonomialOrder::NegDegRevLex);
                match q {
                    Ok(q) => q.dimension(),
                    Err(IndexError::NonIsolated) if fixed_vars.len() == form.nvars() => {
                        return Err(IndexError::NonIsolated)
                    }
                    Err(IndexError::NonIsolated) => {
                        return Err(IndexError::RestrictedNonIsolated { subgroup: a })
                    }
                    Err(e) => return Err(e),
                }
            }
        };
        out.insert(a, FixedStratum { fixed_vars, mu });
    }
    Ok(out)
}

/// Solves the fixed-point counts for the orbit decomposition.
fn radial_from_strata(
    strata: &BTreeMap<u32, FixedStratum>,
    action: &DiagonalAction,
) -> Result<BurnsideElement, IndexError> {
    let m = action.order();
    let mut d: BTreeMap<u32, i64> = BTreeMap::new();
    for (&a, stratum) in strata.iter().rev() {
        let sign = if stratum.fixed_vars.len() % 2 == 0 {
            1
        } else {
            -1
        };
        let mut rhs = sign * stratum.mu as i64;
        for (&b, &db) in d.range(a + 1..) {
            if b % a == 0 {
                rhs -= db * i64::from(m / b);
            }
        }
        let orbit = i64::from(m / a);
        if rhs % orbit != 0 {
            return Err(IndexError::NonIntegralInversion { subgroup: a });
        }
        d.insert(a, rhs / orbit);
    }
    let sign = if action.nvars().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(BurnsideElement::from_map(
        action.group,
        d.into_iter().map(|(b, c)| (b, sign * c)),
    )?)
}

/// Equivariant radial index in the Burnside ring `A(Z_m)`.
pub fn radial_index(
    form: &OneForm,
    action: &DiagonalAction,
) -> Result<BurnsideElement, IndexError> {
    let strata = fixed_strata(form, action)?;
    radial_from_strata(&strata, action)
}

/// Image of the radial index in `R(Z_m)`.
pub fn reduced_radial_index(
    form: &OneForm,
    action: &DiagonalAction,
) -> Result<RepRingElement, IndexError> {
    Ok(reduce_to_rep(&radial_index(form, action)?))
}

/// Both indices together with the per-subgroup data.
pub fn index_report(form: &OneForm, action: &DiagonalAction) -> Result<IndexReport, IndexError> {
    let hom = hom_index(form, action)?;
    let diagnostics = fixed_strata(form, action)?;
    let radial = radial_from_strata(&diagnostics, action)?;
    let reduced_radial = reduce_to_rep(&radial);
    Ok(IndexReport {
        hom,
        radial,
        reduced_radial,
        diagnostics,
    })
}

/// Sebastiani–Thom sum: `ω(z') + η(z'')` on disjoint variable sets, weights concatenated.
pub fn st_sum(
    (omega, a): (&OneForm, &DiagonalAction),
    (eta, b): (&OneForm, &DiagonalAction),
) -> Result<(OneForm, DiagonalAction), IndexError> {
    if a.group != b.group {
        return Err(RingError::GroupMismatch {
            left: a.order(),
            right: b.order(),
        }
        .into());
    }
    a.check_dims(omega.nvars())?;
    b.check_dims(eta.nvars())?;
    let (n, p) = (omega.nvars(), eta.nvars());
    let comps = omega
        .components
        .iter()
        .map(|f| f.embed(0, n + p))
        .chain(eta.components.iter().map(|g| g.embed(n, n + p)))
        .collect();
    let weights: Vec<i64> = a
        .weights
        .iter()
        .chain(&b.weights)
        .map(|&k| i64::from(k))
        .collect();
    Ok((
        OneForm::new(comps)?,
        DiagonalAction::new(a.group, &weights)?,
    ))
}

/// `(Φ*ω)_i = Σ_j f_j(Φ(z)) ∂Φ_j/∂z_i` for an equivariant germ of automorphism `Φ`.
pub fn equivariant_pullback(
    form: &OneForm,
    map: &[Polynomial],
    action: &DiagonalAction,
) -> Result<OneForm, IndexError> {
    ensure_invariant(form, action)?;
    let n = form.nvars();
    if map.len() != n {
        return Err(IndexError::DimensionMismatch {
            left: n,
            right: map.len(),
        });
    }
    let m = action.order();
    for (j, phi) in map.iter().enumerate() {
        if phi.nvars() != n {
            return Err(IndexError::DimensionMismatch {
                left: n,
                right: phi.nvars(),
            });
        }
        if !phi.constant_term().is_zero() {
            return Err(IndexError::MapNotAtOrigin { component: j + 1 });
        }
        for mon in phi.terms().keys() {
            let weight = mon.weight(&action.weights, m);
            if weight != action.weights[j] {
                return Err(IndexError::NotEquivariantMap {
                    component: j + 1,
                    monomial: mon.to_string(),
                    weight,
                    expected: action.weights[j],
                });
            }
        }
    }
    let linear: Vec<Vec<Rational>> = map
        .iter()
        .map(|phi| {
            (0..n)
                .map(|i| phi.coefficient(&Monomial::var(n, i)))
                .collect()
        })
        .collect();
    if rational_rank(linear) < n {
        return Err(IndexError::SingularLinearPart);
    }
    let pulled: Vec<Polynomial> = form
        .components
        .iter()
        .map(|f| f.compose(map))
        .collect::<Result<_, _>>()?;
    let mut comps = vec![Polynomial::zero(n); n];
    for (j, phi) in map.iter().enumerate() {
        for (i, comp) in comps.iter_mut().enumerate() {
            *comp = &*comp + &(&pulled[j] * &phi.derivative(i)?);
        }
    }
    OneForm::new(comps)
}

fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] * &inv;
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= p * &factor;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Stabilizer `H_a` of a point: `a = #{t mod m : t·k_i ≡ 0 mod m whenever p_i ≠ 0}`.
pub fn isotropy_subgroup(
    point: &[Rational],
    action: &DiagonalAction,
) -> Result<SubgroupRef, IndexError> {
    action.check_dims(point.len())?;
    let m = action.order();
    let a = (0..m)
        .filter(|t| {
            point
                .iter()
                .zip(&action.weights)
                .all(|(p, k)| p.is_zero() || (u64::from(*t) * u64::from(*k)) % u64::from(m) == 0)
        })
        .count() as u32;
    Ok(action.group.subgroup(a)?)
}

fn format_point(point: &[Rational]) -> String {
    let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
    format!("({})", coords.join(", "))
}

/// Homological index of `ω` at a zero `p`, over the isotropy group `G_p` acting
/// in the shifted coordinates `w = z - p`.
pub fn local_index_at_point(
    form: &OneForm,
    point: &[Rational],
    action: &DiagonalAction,
) -> Result<(SubgroupRef, RepRingElement), IndexError> {
    action.check_dims(form.nvars())?;
    let sub = isotropy_subgroup(point, action)?;
    for f in &form.components {
        if !f.evaluate(point)?.is_zero() {
            return Err(IndexError::NotAZero {
                point: format_point(point),
            });
        }
    }
    let n = form.nvars();
    let shift: Vec<Polynomial> = point
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut s = Polynomial::var(n, i);
            s.add_term(Monomial::one(n), p.clone());
            s
        })
        .collect();
    let shifted = OneForm::new(
        form.components
            .iter()
            .map(|f| f.compose(&shift))
            .collect::<Result<_, _>>()?,
    )?;
    let index = hom_index(&shifted, &action.restrict_to(&sub))?;
    Ok((sub, index))
}

/// Twisted character of the global algebra `Q[z]/⟨f_1,…,f_n⟩`; the sum of the
/// induced local indices over all orbits of zeros.
pub fn global_index_character(
    form: &OneForm,
    action: &DiagonalAction,
) -> Result<RepRingElement, IndexError> {
    ensure_invariant(form, action)?;
    Ok(twisted_character(
        global_quotient(form)?.monomials(),
        action,
    ))
}

fn global_quotient(form: &OneForm) -> Result<QuotientBasis, IndexError> {
    let gens = GeneratorSet::new(form.components.clone(), MonomialOrder::DegRevLex)
        .expect("a form has components");
    let basis = buchberger_global(&gens).expect("degrevlex is global");
    quotient_basis(&basis).map_err(|_| IndexError::GloballyNonZeroDimensional)
}

/// Whether two rational points lie in one orbit. `σ^t` only maps rationals to
/// rationals through the real roots of unity `±1`.
fn same_orbit(p: &[Rational], q: &[Rational], action: &DiagonalAction) -> bool {
    let m = u64::from(action.order());
    (0..m).any(|t| {
        p.iter().zip(q).zip(&action.weights).all(|((x, y), k)| {
            let e = t * u64::from(*k) % m;
            if e == 0 {
                x == y
            } else if 2 * e == m {
                *x == -y.clone()
            } else {
                x.is_zero() && y.is_zero()
            }
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConservationMode {
    Global,
    Pointwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitContribution {
    pub point: Vec<Rational>,
    pub isotropy: SubgroupRef,
    pub local_index: RepRingElement,
    pub induced: RepRingElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservationReport {
    pub mode: ConservationMode,
    /// `ind_hom(ω)` at the origin.
    pub expected: RepRingElement,
    /// Global character, or the origin term plus induced orbit terms.
    pub computed: RepRingElement,
    pub local_milnor: usize,
    pub deformed_global_dimension: usize,
    /// Pointwise mode only: the deformed form's index at the origin.
    pub origin: Option<RepRingElement>,
    pub orbits: Vec<OrbitContribution>,
}

impl ConservationReport {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

/// Conservation of number for a deformation `ω'` of `ω`. With `points` (one
/// representative per orbit of nonzero zeros of `ω'`) the sum of induced local
/// indices is compared; otherwise the global twisted character of `ω'` is.
pub fn conservation_check(
    form: &OneForm,
    deformed: &OneForm,
    action: &DiagonalAction,
    points: Option<&[Vec<Rational>]>,
) -> Result<ConservationReport, IndexError> {
    let expected = hom_index(form, action)?;
    ensure_invariant(deformed, action)?;
    let local_milnor = milnor_number(form)?;
    let deformed_global_dimension = global_quotient(deformed)?.dimension();
    if deformed_global_dimension != local_milnor {
        return Err(IndexError::DimensionGuardFailed {
            global: deformed_global_dimension,
            local: local_milnor,
        });
    }
    let Some(points) = points else {
        return Ok(ConservationReport {
            mode: ConservationMode::Global,
            expected,
            computed: global_index_character(deformed, action)?,
            local_milnor,
            deformed_global_dimension,
            origin: None,
            orbits: Vec::new(),
        });
    };
    for (i, p) in points.iter().enumerate() {
        action.check_dims(p.len())?;
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if same_orbit(p, q, action) {
                return Err(IndexError::DuplicateOrbit {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }
    let origin = hom_index(deformed, action)?;
    let mut computed = origin.clone();
    let mut orbits = Vec::with_capacity(points.len());
    for p in points {
        let (isotropy, local_index) = local_index_at_point(deformed, p, action)?;
        let induced = induce(&isotropy, &local_index)?;
        computed = computed.try_add(&induced)?;
        orbits.push(OrbitContribution {
            point: p.clone(),
            isotropy,
            local_index,
            induced,
        });
    }
    Ok(ConservationReport {
        mode: ConservationMode::Pointwise,
        expected,
        computed,
        local_milnor,
        deformed_global_dimension,
        origin: Some(origin),
        orbits,
    })
}

impl IndexReport {
    /// `virtual_dimension(hom)`, which equals the full Milnor number `μ_1`.
    pub fn milnor_number(&self) -> usize {
        self.diagnostics.get(&1).map_or(0, |s| s.mu)
    }
}

/// `Rational` point from integers.
pub fn point(coords: &[i64]) -> Vec<Rational> {
    coords
        .iter()
        .map(|&c| Rational::from_integer(c.into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;
    use crate::rep_rings::virtual_dimension;

    fn z(m: u32) -> CyclicGroup {
        CyclicGroup::new(m).unwrap()
    }

    fn act(m: u32, k: &[i64]) -> DiagonalAction {
        DiagonalAction::new(z(m), k).unwrap()
    }

    fn form(c: &[&str]) -> OneForm {
        OneForm::parse(c).unwrap()
    }

    fn rep(m: u32, c: &[i64]) -> RepRingElement {
        RepRingElement::from_coeffs(z(m), c.to_vec()).unwrap()
    }

    fn burnside(m: u32, e: &[(u32, i64)]) -> BurnsideElement {
        BurnsideElement::from_map(z(m), e.iter().copied()).unwrap()
    }

    #[test]
    fn weights_of_monomials() {
        let a = act(3, &[1, 2]);
        assert_eq!(monomial_weight(&Monomial::one(2), &a).unwrap(), 0);
        assert_eq!(monomial_weight(&Monomial::new(vec![1, 1]), &a).unwrap(), 0);
        assert_eq!(
            monomial_weight(&Monomial::new(vec![2]), &act(2, &[1])).unwrap(),
            0
        );
        assert!(monomial_weight(&Monomial::new(vec![1]), &a).is_err());
    }

    #[test]
    fn invariance() {
        for m in 2..=6 {
            for s in 1..=3 {
                let f = form(&[&format!("z^{}", s * m - 1)]);
                assert!(check_invariance(&f, &act(m, &[1])).unwrap());
            }
        }
        assert!(!check_invariance(&form(&["z1"]), &act(3, &[1])).unwrap());
        assert!(check_invariance(&form(&["z2", "z1"]), &act(2, &[1, 1])).unwrap());
        assert!(check_invariance(&form(&["z1"]), &act(2, &[1, 1])).is_err());
        assert!(matches!(
            hom_index(&form(&["z1"]), &act(3, &[1])),
            Err(IndexError::NotInvariant { component: 1, .. })
        ));
    }

    #[test]
    fn one_dimensional_family() {
        for m in 2..=6u32 {
            for s in 1..=3i64 {
                let f = form(&[&format!("z^{}", s * i64::from(m) - 1)]);
                let expected = RepRingElement::regular(z(m))
                    .scale(s)
                    .try_sub(&RepRingElement::one(z(m)))
                    .unwrap();
                assert_eq!(hom_index(&f, &act(m, &[1])).unwrap(), expected);
                assert_eq!(reduced_radial_index(&f, &act(m, &[1])).unwrap(), expected);
            }
        }
    }

    #[test]
    fn worked_radial_examples() {
        let r = index_report(&form(&["z^3"]), &act(2, &[1])).unwrap();
        assert_eq!(r.radial, burnside(2, &[(1, 2), (2, -1)]));
        assert_eq!(r.reduced_radial, rep(2, &[1, 2]));
        assert_eq!(r.hom, rep(2, &[1, 2]));
        assert_eq!(
            r.diagnostics[&1],
            FixedStratum {
                fixed_vars: vec![0],
                mu: 3
            }
        );
        assert_eq!(
            r.diagnostics[&2],
            FixedStratum {
                fixed_vars: vec![],
                mu: 1
            }
        );

        let r = index_report(&form(&["z2", "z1"]), &act(2, &[1, 1])).unwrap();
        assert_eq!(r.radial, burnside(2, &[(2, 1)]));
        assert_eq!(r.hom, RepRingElement::one(z(2)));

        let r = index_report(&form(&["z1", "z2^3"]), &act(2, &[1, 0])).unwrap();
        assert_eq!(r.radial, burnside(2, &[(1, 3), (2, -3)]));
        assert_eq!(r.hom, rep(2, &[0, 3]));
        assert_eq!(r.reduced_radial, r.hom);

        let r = index_report(&form(&["z1^2", "z2^2"]), &act(3, &[1, 2])).unwrap();
        assert_eq!(r.hom, rep(3, &[2, 1, 1]));
        assert_eq!(r.reduced_radial, r.hom);
        assert_eq!(virtual_dimension(&r.hom), r.milnor_number() as i64);

        let trivial = index_report(&form(&["z^2"]), &act(1, &[0])).unwrap();
        assert_eq!(trivial.hom, rep(1, &[2]));
        assert_eq!(trivial.reduced_radial, rep(1, &[2]));
    }

    #[test]
    fn sebastiani_thom_pair() {
        let (f, a) = (form(&["z1^2"]), act(3, &[1]));
        let (g, b) = (form(&["z1^2"]), act(3, &[2]));
        let (sum, ab) = st_sum((&f, &a), (&g, &b)).unwrap();
        assert_eq!(sum, form(&["z1^2", "z2^2"]));
        assert_eq!(ab, act(3, &[1, 2]));
        assert_eq!(hom_index(&f, &a).unwrap(), rep(3, &[0, 1, 1]));
        assert_eq!(hom_index(&g, &b).unwrap(), rep(3, &[0, 1, 1]));
        assert!(st_sum((&f, &a), (&g, &act(2, &[1]))).is_err());
    }

    #[test]
    fn pullbacks() {
        let a = act(2, &[1, 1]);
        let w = form(&["z1^3", "z2^3"]);
        let id = vec![Polynomial::var(2, 0), Polynomial::var(2, 1)];
        assert_eq!(equivariant_pullback(&w, &id, &a).unwrap(), w);

        let shear = vec![
            parse_polynomial("z1 + z2^3", 2).unwrap(),
            Polynomial::var(2, 1),
        ];
        let pulled = equivariant_pullback(&w, &shear, &a).unwrap();
        assert_eq!(hom_index(&pulled, &a).unwrap(), hom_index(&w, &a).unwrap());
        assert_eq!(
            radial_index(&pulled, &a).unwrap(),
            radial_index(&w, &a).unwrap()
        );

        let bad = vec![
            parse_polynomial("z1 + z2^2", 2).unwrap(),
            Polynomial::var(2, 1),
        ];
        assert!(matches!(
            equivariant_pullback(&w, &bad, &a),
            Err(IndexError::NotEquivariantMap { .. })
        ));
        let singular = vec![Polynomial::var(2, 0), Polynomial::var(2, 0)];
        assert_eq!(
            equivariant_pullback(&w, &singular, &a),
            Err(IndexError::SingularLinearPart)
        );
        let shifted = vec![
            parse_polynomial("z1 + 1", 2).unwrap(),
            Polynomial::var(2, 1),
        ];
        assert!(matches!(
            equivariant_pullback(&w, &shifted, &act(1, &[0, 0])),
            Err(IndexError::MapNotAtOrigin { component: 1 })
        ));
    }

    #[test]
    fn isotropy() {
        let a = act(4, &[2, 1]);
        assert_eq!(isotropy_subgroup(&point(&[0, 0]), &a).unwrap().order(), 4);
        assert_eq!(isotropy_subgroup(&point(&[1, 0]), &a).unwrap().order(), 2);
        assert_eq!(isotropy_subgroup(&point(&[1, 1]), &a).unwrap().order(), 1);
    }

    #[test]
    fn local_indices_at_points() {
        let a = act(2, &[1]);
        let w = form(&["z^3 - z"]);
        let (h, idx) = local_index_at_point(&w, &point(&[1]), &a).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(idx, RepRingElement::one(z(1)));
        let (h, idx) = local_index_at_point(&w, &point(&[0]), &a).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(idx, rep(2, &[0, 1]));
        assert!(matches!(
            local_index_at_point(&w, &[rational(1, 2)], &a),
            Err(IndexError::NotAZero { .. })
        ));
    }

    #[test]
    fn conservation() {
        let a = act(2, &[1]);
        let w = form(&["z^3"]);
        let wd = form(&["z^3 - z"]);
        assert_eq!(global_index_character(&w, &a).unwrap(), rep(2, &[1, 2]));
        assert_eq!(global_index_character(&wd, &a).unwrap(), rep(2, &[1, 2]));

        let pts = vec![point(&[1])];
        let r = conservation_check(&w, &wd, &a, Some(&pts)).unwrap();
        assert!(r.passed());
        assert_eq!(r.origin, Some(rep(2, &[0, 1])));
        assert_eq!(r.orbits[0].induced, RepRingElement::regular(z(2)));

        let r = conservation_check(&w, &w, &a, None).unwrap();
        assert!(r.passed());

        let dup = vec![point(&[1]), point(&[-1])];
        assert!(matches!(
            conservation_check(&w, &wd, &a, Some(&dup)),
            Err(IndexError::DuplicateOrbit {
                first: 1,
                second: 2
            })
        ));
        // z^3 - z^5 has extra zeros far away: the guard catches them
        let escaped = form(&["z^3 - z^5"]);
        assert!(matches!(
            conservation_check(&w, &escaped, &a, None),
            Err(IndexError::DimensionGuardFailed {
                global: 5,
                local: 3
            })
        ));
    }

    #[test]
    fn non_isolated_inputs() {
        assert_eq!(
            hom_index(&form(&["z1*z2", "0"]), &act(1, &[0, 0])),
            Err(IndexError::NonIsolated)
        );
        assert_eq!(
            radial_index(&form(&["z1*z2", "0"]), &act(1, &[0, 0])),
            Err(IndexError::NonIsolated)
        );
        assert_eq!(
            global_index_character(&form(&["z1*z2", "z1"]), &act(1, &[0, 0])),
            Err(IndexError::GloballyNonZeroDimensional)
        );
    }

    #[test]
    fn empty_inputs_are_rejected() {
        assert_eq!(DiagonalAction::new(z(2), &[]), Err(IndexError::Empty));
        assert_eq!(OneForm::new(vec![]), Err(IndexError::Empty));
        assert!(OneForm::new(vec![Polynomial::var(2, 0)]).is_err());
    }
}
