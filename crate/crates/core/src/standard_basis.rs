//! Gröbner bases in `Q[z]` (Buchberger) and standard bases in the local ring
//! `Q[z]_(z)` (Mora's tangent cone algorithm), plus monomial bases of
//! zero-dimensional quotients.
//!
//! Pair selection: smallest `lcm` degree first, then the smaller `lcm` under
//! the basis order, then insertion order.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("generators live in {expected} and {got} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{engine} requires a {expected} monomial order, got {got}")]
    WrongOrderKind {
        engine: &'static str,
        expected: &'static str,
        got: MonomialOrder,
    },
    #[error("quotient is not finite-dimensional: no pure power of z{} is a leading monomial", variable + 1)]
    NonZeroDimensional { variable: usize },
    #[error("the origin is not an isolated zero: no certificate below truncation degree {bound}")]
    NotIsolated { bound: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Global,
    Local,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    nvars: usize,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self, BasisError> {
        let nvars = generators.first().ok_or(BasisError::NoGenerators)?.nvars();
        if let Some(bad) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(BasisError::DimensionMismatch {
                expected: nvars,
                got: bad.nvars(),
            });
        }
        Ok(Self {
            generators,
            order,
            nvars,
        })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

/// A minimal basis with monic elements. Global bases are fully reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    kind: BasisKind,
    nvars: usize,
}

impl ReducedBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| {
                g.leading_monomial(self.order)
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }
}

/// Standard monomials of a zero-dimensional quotient, sorted by increasing
/// degree (degrevlex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn contains(&self, mon: &Monomial) -> bool {
        self.monomials.contains(mon)
    }

    /// Highest degree of a standard monomial; `None` for the zero quotient.
    pub fn max_degree(&self) -> Option<u32> {
        self.monomials.iter().map(Monomial::degree).max()
    }
}

fn lead(p: &Polynomial, order: MonomialOrder) -> (Monomial, Rational) {
    let (m, c) = p.leading_term(order).expect("nonzero polynomial");
    (m.clone(), c.clone())
}

fn spoly(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (mf, cf) = lead(f, order);
    let (mg, cg) = lead(g, order);
    let l = mf.lcm(&mg);
    let mut s = f.mul_term(&l.div(&mf).expect("lcm"), &cf.recip());
    s.add_scaled(g, &l.div(&mg).expect("lcm"), &-cg.recip());
    s
}

struct PairQueue {
    pairs: Vec<(usize, usize, Monomial)>,
}

impl PairQueue {
    fn new() -> Self {
        Self { pairs: Vec::new() }
    }

    fn push(&mut self, i: usize, j: usize, lcm: Monomial) {
        self.pairs.push((i, j, lcm));
    }

    fn pop(&mut self, order: MonomialOrder) -> Option<(usize, usize, Monomial)> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.2.degree()
                    .cmp(&b.2.degree())
                    .then_with(|| order.compare(&a.2, &b.2))
                    .then_with(|| (a.0, a.1).cmp(&(b.0, b.1)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.remove(best))
    }
}

/// Reduced Gröbner basis for a global order.
pub fn buchberger_global(gens: &GeneratorSet) -> Result<ReducedBasis, BasisError> {
    let order = gens.order;
    if !order.is_global() {
        return Err(BasisError::WrongOrderKind {
            engine: "Buchberger",
            expected: "global",
            got: order,
        });
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut queue = PairQueue::new();
    let add = |p: Polynomial,
               basis: &mut Vec<Polynomial>,
               lms: &mut Vec<Monomial>,
               queue: &mut PairQueue| {
        let p = p.monic(order);
        let lm = lead(&p, order).0;
        for (i, other) in lms.iter().enumerate() {
            // product criterion
            if !lm.is_coprime(other) {
                queue.push(i, basis.len(), lm.lcm(other));
            }
        }
        lms.push(lm);
        basis.push(p);
    };
    for g in &gens.generators {
        let r = reduce_full(g, &basis, order);
        if !r.is_zero() {
            add(r, &mut basis, &mut lms, &mut queue);
        }
    }
    while let Some((i, j, _)) = queue.pop(order) {
        let s = spoly(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            add(r, &mut basis, &mut lms, &mut queue);
        }
    }
    let minimal = minimize(basis, order);
    // interreduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(reduce_full(g, &others, order).monic(order));
    }
    reduced.sort_by(|a, b| order.compare(&lead(a, order).0, &lead(b, order).0));
    Ok(ReducedBasis {
        elements: reduced,
        order,
        kind: BasisKind::Global,
        nvars: gens.nvars,
    })
}

/// Drops elements whose leading monomial is divisible by another's (the
/// earlier one wins on ties) and makes the rest monic.
fn minimize(basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let lms: Vec<Monomial> = basis.iter().map(|g| lead(g, order).0).collect();
    basis
        .into_iter()
        .enumerate()
        .filter(|(k, _)| {
            !lms.iter().enumerate().any(|(l, other)| {
                l != *k && other.divides(&lms[*k]) && (other != &lms[*k] || l < *k)
            })
        })
        .map(|(_, g)| g.monic(order))
        .collect()
}

/// Full multivariate division remainder (global orders only).
fn reduce_full(p: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, Rational)> = divisors.iter().map(|g| lead(g, order)).collect();
    let mut h = p.clone();
    let mut rem = Polynomial::zero(p.nvars());
    while let Some((lm, lc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(m, _)| m.divides(&lm)) {
            Some(k) => {
                let t = lm.div(&leads[k].0).expect("divides");
                h.add_scaled(&divisors[k], &t, &(-(&lc / &leads[k].1)));
            }
            None => {
                h.add_term(lm.clone(), -lc.clone());
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

fn ecart(p: &Polynomial, order: MonomialOrder) -> u32 {
    let top = p.total_degree().unwrap_or(0);
    top - p.leading_monomial(order).map_or(0, Monomial::degree)
}

/// Mora's weak normal form. Returns `(h, u)` with `u ≡ 1 mod (z)` and
/// `u·p - h ∈ ⟨divisors⟩`; either `h = 0` or no divisor's leading monomial
/// divides `LM(h)`. The unit is only tracked when `track_unit` is set
/// (otherwise `u = 1` is returned). With `bound`, terms of degree `>= bound`
/// are dropped after every step, which is only valid when `m^bound` lies in
/// the ideal.
fn nf_mora(
    p: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
    track_unit: bool,
    bound: Option<u32>,
) -> (Polynomial, Polynomial) {
    struct Reducer {
        poly: Polynomial,
        lm: Monomial,
        lc: Rational,
        ecart: u32,
        unit: Option<Polynomial>,
    }
    let n = p.nvars();
    let mut reducers: Vec<Reducer> = divisors
        .iter()
        .map(|g| {
            let (lm, lc) = lead(g, order);
            Reducer {
                ecart: ecart(g, order),
                poly: g.clone(),
                lm,
                lc,
                unit: None,
            }
        })
        .collect();
    let mut h = p.clone();
    let mut u = Polynomial::one(n);
    while let Some((lm, lc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let Some(k) = reducers
            .iter()
            .enumerate()
            .filter(|(_, r)| r.lm.divides(&lm))
            .min_by_key(|(k, r)| (r.ecart, *k))
            .map(|(k, _)| k)
        else {
            break;
        };
        let e = ecart(&h, order);
        if reducers[k].ecart > e {
            reducers.push(Reducer {
                poly: h.clone(),
                lm: lm.clone(),
                lc: lc.clone(),
                ecart: e,
                unit: track_unit.then(|| u.clone()),
            });
        }
        let r = &reducers[k];
        let t = lm.div(&r.lm).expect("divides");
        let c = -(&lc / &r.lc);
        h.add_scaled(&r.poly, &t, &c);
        if let (true, Some(ru)) = (track_unit, &r.unit) {
            u.add_scaled(ru, &t, &c);
        }
        if let Some(b) = bound {
            h = h.truncate(b);
        }
    }
    (h, u)
}

/// Standard basis in the localization at the origin.
pub fn mora_local(gens: &GeneratorSet) -> Result<ReducedBasis, BasisError> {
    let order = gens.order;
    if !order.is_local() {
        return Err(BasisError::WrongOrderKind {
            engine: "Mora",
            expected: "local",
            got: order,
        });
    }
    Ok(local_basis(mora(&gens.generators, order, None), gens))
}

fn local_basis(basis: Vec<Polynomial>, gens: &GeneratorSet) -> ReducedBasis {
    let order = gens.order;
    let mut elements = minimize(basis, order);
    elements.sort_by(|a, b| order.compare(&lead(b, order).0, &lead(a, order).0));
    ReducedBasis {
        elements,
        order,
        kind: BasisKind::Local,
        nvars: gens.nvars,
    }
}

/// Standard basis of `⟨gens⟩ + m^truncation`, all terms of degree
/// `>= truncation` being dropped.
fn mora(gens: &[Polynomial], order: MonomialOrder, truncation: Option<u32>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut queue = PairQueue::new();
    let add = |p: Polynomial, basis: &mut Vec<Polynomial>, queue: &mut PairQueue| {
        let p = p.monic(order);
        let lm = lead(&p, order).0;
        for (i, other) in basis.iter().enumerate() {
            queue.push(i, basis.len(), lm.lcm(&lead(other, order).0));
        }
        basis.push(p);
    };
    for g in gens {
        let g = truncation.map_or_else(|| g.clone(), |b| g.truncate(b));
        if !g.is_zero() {
            add(g, &mut basis, &mut queue);
        }
    }
    // Once every variable has a pure power among the leading monomials, all
    // monomials of degree >= bound are in the ideal and can be dropped.
    let tighter = |basis: &[Polynomial]| match (truncation, corner_bound(basis, order)) {
        (Some(t), Some(c)) => Some(t.min(c)),
        (t, c) => t.or(c),
    };
    let mut bound = tighter(&basis);
    while let Some((i, j, lcm)) = queue.pop(order) {
        if bound.is_some_and(|b| lcm.degree() >= b) {
            continue;
        }
        let mut s = spoly(&basis[i], &basis[j], order);
        if let Some(b) = bound {
            s = s.truncate(b);
        }
        let (h, _) = nf_mora(&s, &basis, order, false, bound);
        if !h.is_zero() {
            add(h, &mut basis, &mut queue);
            bound = tighter(&basis);
        }
    }
    basis
}

/// Local standard basis for an ideal that should have an isolated zero at the
/// origin, failing with [`BasisError::NotIsolated`] otherwise.
///
/// With `n` generators in `n` variables the basis is computed modulo `m^N` for
/// growing `N`. If every standard monomial has degree `<= N - 2` then
/// `m^(N-1) ⊂ I + m^N`, so `m^(N-1) ⊂ I` by Nakayama and the truncated basis is
/// a standard basis of `I`. An isolated zero has multiplicity at most
/// `Π deg f_i`, which bounds the ladder. Other shapes use plain Mora.
pub fn isolated_local_basis(gens: &GeneratorSet) -> Result<ReducedBasis, BasisError> {
    let order = gens.order;
    if !order.is_local() {
        return Err(BasisError::WrongOrderKind {
            engine: "Mora",
            expected: "local",
            got: order,
        });
    }
    let n = gens.nvars;
    if gens.generators.len() != n {
        let basis = mora_local(gens)?;
        return match quotient_basis(&basis) {
            Ok(_) => Ok(basis),
            Err(_) => Err(BasisError::NotIsolated { bound: 0 }),
        };
    }
    if gens.generators.iter().any(|g| !g.constant_term().is_zero()) {
        return Ok(ReducedBasis {
            elements: vec![Polynomial::one(n)],
            order,
            kind: BasisKind::Local,
            nvars: n,
        });
    }
    let mut cap: u64 = 1;
    for g in &gens.generators {
        match g.total_degree() {
            None => return Err(BasisError::NotIsolated { bound: 0 }),
            Some(d) => cap = cap.saturating_mul(u64::from(d)),
        }
    }
    let cap = u32::try_from(cap.saturating_add(1)).unwrap_or(u32::MAX);
    let mut truncation = cap.min(8);
    loop {
        let basis = mora(&gens.generators, order, Some(truncation));
        let lms: Vec<Monomial> = basis.iter().map(|g| lead(g, order).0).collect();
        let top = standard_monomials_below(&lms, n, truncation)
            .iter()
            .map(Monomial::degree)
            .max();
        if top.is_none_or(|d| d + 2 <= truncation) {
            return Ok(local_basis(basis, gens));
        }
        if truncation >= cap {
            return Err(BasisError::NotIsolated { bound: truncation });
        }
        // cost grows steeply with the truncation degree, so step gently
        truncation = truncation.saturating_add(truncation / 4 + 1).min(cap);
    }
}

/// Monomials of degree `< bound` outside the monomial ideal `⟨lms⟩`.
fn standard_monomials_below(lms: &[Monomial], n: usize, bound: u32) -> Vec<Monomial> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = vec![Monomial::one(n)];
    while let Some(m) = frontier.pop() {
        if m.degree() >= bound || seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        for i in 0..n {
            frontier.push(m.mul(&Monomial::var(n, i)));
        }
        seen.insert(m);
    }
    seen.into_iter().collect()
}

/// `1 + Σ (e_i - 1)` over the smallest pure powers `z_i^{e_i}` among the
/// leading monomials, if every variable has one.
fn corner_bound(basis: &[Polynomial], order: MonomialOrder) -> Option<u32> {
    let n = basis.first()?.nvars();
    let mut exps = vec![u32::MAX; n];
    for g in basis {
        let lm = lead(g, order).0;
        if lm.is_one() {
            return Some(0);
        }
        if let Some((i, e)) = lm.as_pure_power() {
            exps[i] = exps[i].min(e);
        }
    }
    if exps.contains(&u32::MAX) {
        return None;
    }
    Some(1 + exps.iter().map(|e| e - 1).sum::<u32>())
}

/// Monomials outside the leading ideal. Fails unless every variable has a
/// pure power among the leading monomials.
pub fn quotient_basis(basis: &ReducedBasis) -> Result<QuotientBasis, BasisError> {
    let lms = basis.leading_monomials();
    if lms.iter().any(Monomial::is_one) {
        return Ok(QuotientBasis {
            monomials: Vec::new(),
        });
    }
    let n = basis.nvars;
    let mut bounds = vec![u32::MAX; n];
    for m in &lms {
        if let Some((i, e)) = m.as_pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if let Some(variable) = bounds.iter().position(|b| *b == u32::MAX) {
        return Err(BasisError::NonZeroDimensional { variable });
    }
    // walk the order ideal outward from 1
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = vec![Monomial::one(n)];
    while let Some(m) = frontier.pop() {
        if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        for (i, &bound) in bounds.iter().enumerate() {
            if m.exponents()[i] + 1 < bound {
                frontier.push(m.mul(&Monomial::var(n, i)));
            }
        }
        seen.insert(m);
    }
    let mut monomials: Vec<Monomial> = seen.into_iter().collect();
    monomials.sort_by(|a, b| MonomialOrder::DegRevLex.compare(a, b));
    Ok(QuotientBasis { monomials })
}

/// Remainder of `p` modulo the ideal, supported on standard monomials.
///
/// Global bases give the usual canonical remainder. For local bases of
/// zero-dimensional ideals the remainder is also canonical in the local ring:
/// Mora's unit is inverted as a truncated power series, which is exact because
/// every monomial above the highest standard degree lies in the ideal. For
/// local bases of positive-dimensional ideals only Mora's weak normal form is
/// returned.
pub fn normal_form(p: &Polynomial, basis: &ReducedBasis) -> Polynomial {
    let order = basis.order;
    match basis.kind {
        BasisKind::Global => reduce_full(p, &basis.elements, order),
        BasisKind::Local => match quotient_basis(basis) {
            Ok(q) => match q.max_degree() {
                None => Polynomial::zero(p.nvars()),
                Some(d) => reduce_local(p, &basis.elements, order, d + 1),
            },
            Err(_) => nf_mora(p, &basis.elements, order, false, None).0,
        },
    }
}

fn reduce_local(
    p: &Polynomial,
    elements: &[Polynomial],
    order: MonomialOrder,
    bound: u32,
) -> Polynomial {
    let mut rem = Polynomial::zero(p.nvars());
    let mut h = p.truncate(bound);
    while !h.is_zero() {
        let (r, u) = nf_mora(&h, elements, order, true, Some(bound));
        if r.is_zero() {
            break;
        }
        h = (&inverse_unit(&u, bound) * &r).truncate(bound);
        let Some((lm, lc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) else {
            break;
        };
        h.add_term(lm.clone(), -lc.clone());
        rem.add_term(lm, lc);
    }
    rem
}

/// `u^{-1} mod (z)^bound` for a polynomial with nonzero constant term.
fn inverse_unit(u: &Polynomial, bound: u32) -> Polynomial {
    let n = u.nvars();
    let c0 = u.constant_term();
    debug_assert!(!c0.is_zero());
    let inv_c0 = c0.recip();
    // u = c0(1 - w)  =>  u^{-1} = c0^{-1} Σ w^k
    let mut w = u.scale(&-inv_c0.clone());
    w.add_term(Monomial::one(n), Rational::one());
    let mut sum = Polynomial::one(n);
    let mut power = Polynomial::one(n);
    for _ in 1..bound {
        power = (&power * &w).truncate(bound);
        if power.is_zero() {
            break;
        }
        sum = &sum + &power;
    }
    sum.scale(&inv_c0)
}

/// Dimension of `O_{C^n,0}/⟨gens⟩` using the default local order.
pub fn local_dimension(gens: &[Polynomial]) -> Result<usize, BasisError> {
    let set = GeneratorSet::new(gens.to_vec(), MonomialOrder::NegDegRevLex)?;
    Ok(quotient_basis(&isolated_local_basis(&set)?)?.dimension())
}

/// Dimension of `Q[z]/⟨gens⟩`.
pub fn global_dimension(gens: &[Polynomial]) -> Result<usize, BasisError> {
    let set = GeneratorSet::new(gens.to_vec(), MonomialOrder::DegRevLex)?;
    Ok(quotient_basis(&buchberger_global(&set)?)?.dimension())
}
