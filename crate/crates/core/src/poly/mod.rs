//! Exact sparse multivariate polynomials over `Q`.

mod order;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use order::MonomialOrder;
pub use parse::parse_polynomial;

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable z{index} at position {pos} is out of range for {nvars} variables")]
    VariableOutOfRange {
        pos: usize,
        index: usize,
        nvars: usize,
    },
    #[error("division by zero at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("division by a non-constant expression at position {pos}")]
    NonConstantDivisor { pos: usize },
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
}

/// `z_1^{a_1} … z_n^{a_n}`. The derived `Ord` is plain lexicographic on the
/// exponent vector; use [`MonomialOrder`] for term orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Σ w_i a_i mod m`.
    pub fn weight(&self, weights: &[u32], modulus: u32) -> u32 {
        let m = u64::from(modulus);
        let w = self
            .0
            .iter()
            .zip(weights)
            .map(|(a, k)| u64::from(*a) * u64::from(*k) % m)
            .sum::<u64>();
        (w % m) as u32
    }

    /// If this monomial is a pure power `z_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "z{}", i + 1)?,
                _ => write!(f, "z{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// A polynomial in a fixed number of variables. No zero coefficient is ever stored,
/// so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(mon: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(mon.nvars());
        p.add_term(mon, c);
        p
    }

    /// Collects like terms; the monomials must all have `nvars` variables.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (mon, c) in terms {
            assert_eq!(mon.nvars(), nvars, "monomial dimension mismatch");
            p.add_term(mon, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coefficient(&self, mon: &Monomial) -> Rational {
        self.terms.get(mon).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn add_term(&mut self, mon: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mon) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_term(&self, mon: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(mon), v * c))
                .collect(),
        }
    }

    /// `self += c · mon · other`, in place.
    pub fn add_scaled(&mut self, other: &Polynomial, mon: &Monomial, c: &Rational) {
        for (m, v) in &other.terms {
            self.add_term(m.mul(mon), v * c);
        }
    }

    fn check_dims(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Self, PolyError> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.nvars);
        for (m, c) in &other.terms {
            out.add_scaled(self, m, c);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::VariableOutOfRange {
                pos: 0,
                index: i + 1,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.0.clone();
            d[i] -= 1;
            out.add_term(Monomial(d), c * int(i64::from(e)));
        }
        Ok(out)
    }

    /// Substitutes `z_i ↦ subs[i]`. All substitutes share one ambient dimension,
    /// which becomes the dimension of the result.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Self, PolyError> {
        if subs.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: subs.len(),
            });
        }
        let target = subs.first().map_or(0, Polynomial::nvars);
        if let Some(bad) = subs.iter().find(|s| s.nvars != target) {
            return Err(PolyError::DimensionMismatch {
                left: target,
                right: bad.nvars,
            });
        }
        // cache powers of each substitute
        let mut powers: Vec<Vec<Polynomial>> = subs
            .iter()
            .map(|s| vec![Self::one(target), s.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sets every variable outside `keep` to zero and renumbers the kept ones
    /// `0..keep.len()` in the given order.
    pub fn restrict_to(&self, keep: &[usize]) -> Self {
        let mut out = Self::zero(keep.len());
        'terms: for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 && !keep.contains(&i) {
                    continue 'terms;
                }
            }
            let exps = keep.iter().map(|&i| m.0[i]).collect();
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Embeds into `total` variables, mapping `z_i` to `z_{offset+i}`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.nvars <= total);
        let mut out = Self::zero(total);
        for (m, c) in &self.terms {
            let mut e = vec![0; total];
            e[offset..offset + self.nvars].copy_from_slice(&m.0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

// Operator forms panic on a dimension mismatch; the `try_*` methods report it.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

/// Canonical text form: terms in decreasing degrevlex order, rational
/// coefficients as `p/q*`, variables `z1 … zn`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self
            .sorted_terms(MonomialOrder::DegRevLex)
            .into_iter()
            .enumerate()
        {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Compares polynomials by their sorted term lists; only used for deterministic output.
pub fn cmp_polys(a: &Polynomial, b: &Polynomial, order: MonomialOrder) -> Ordering {
    let ta = a.sorted_terms(order);
    let tb = b.sorted_terms(order);
    for (x, y) in ta.iter().zip(&tb) {
        let c = order.compare(x.0, y.0).then_with(|| x.1.cmp(y.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    ta.len().cmp(&tb.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(p("z1^3", 1).derivative(0).unwrap(), p("3*z1^2", 1));
        assert!(p("z1", 1).derivative(1).is_err());
    }

    #[test]
    fn compose_shear() {
        let f = p("z1*z2", 2);
        let out = f.compose(&[p("z1", 2), p("z1+z2", 2)]).unwrap();
        assert_eq!(out, p("z1^2 + z1*z2", 2));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("z1+z2", 2) * &p("z1-z2", 2), p("z1^2-z2^2", 2));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(matches!(
            p("z1", 1).try_add(&p("z2", 2)),
            Err(PolyError::DimensionMismatch { left: 1, right: 2 })
        ));
        assert!(p("z1", 1).compose(&[p("z1", 1), p("z1", 1)]).is_err());
    }

    #[test]
    fn restriction_and_embedding() {
        let f = p("z1^2 + z2*z3 + z3^4 - 7", 3);
        assert_eq!(f.restrict_to(&[2]), p("z1^4 - 7", 1));
        assert_eq!(f.restrict_to(&[1, 2]), p("z1*z2 + z2^4 - 7", 2));
        assert_eq!(p("z1^2 + z2", 2).embed(1, 3), p("z2^2 + z3", 3));
    }

    #[test]
    fn evaluate_and_truncate() {
        let f = p("z1^3 - z1 + 1/2", 1);
        assert_eq!(f.evaluate(&[int(2)]).unwrap(), rational(13, 2));
        assert_eq!(f.truncate(2), p("-z1 + 1/2", 1));
        assert_eq!(f.order(), Some(0));
        assert_eq!(f.total_degree(), Some(3));
    }

    #[test]
    fn leading_terms_under_both_kinds() {
        let f = p("z1^3 + z1", 1);
        assert_eq!(
            f.leading_monomial(MonomialOrder::DegRevLex),
            Some(&Monomial::new(vec![3]))
        );
        assert_eq!(
            f.leading_monomial(MonomialOrder::NegDegRevLex),
            Some(&Monomial::new(vec![1]))
        );
    }

    #[test]
    fn canonical_print() {
        assert_eq!(
            p("1/2*z1*z2 + z1*z2 - z1^2 + 3", 2).to_string(),
            "-z1^2 + 3/2*z1*z2 + 3"
        );
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn weights() {
        assert_eq!(Monomial::one(2).weight(&[1, 2], 3), 0);
        assert_eq!(Monomial::new(vec![1, 1]).weight(&[1, 2], 3), 0);
        assert_eq!(Monomial::new(vec![2]).weight(&[1], 2), 0);
        assert_eq!(Monomial::new(vec![1, 3]).weight(&[1, 2], 5), 2);
    }
}
