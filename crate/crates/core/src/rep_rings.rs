//! Representation ring `R(Z_m) = Z[σ]/(σ^m - 1)` and Burnside ring `A(Z_m)` of a
//! cyclic group, with the maps between them.
//!
//! Subgroups of a cyclic group are unique per order, so a subgroup is just a
//! divisor `a` of `m`: `H_a` is generated by `σ^(m/a)`. The character `σ`
//! restricted to `H_a` is the generator character `τ` of `R(Z_a)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("group order must be at least 1")]
    InvalidOrder,
    #[error("group mismatch: Z_{left} vs Z_{right}")]
    GroupMismatch { left: u32, right: u32 },
    #[error("{sub} does not divide the group order {order}")]
    NotASubgroup { sub: u32, order: u32 },
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// The cyclic group `Z_m` with a fixed generator `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicGroup {
    order: u32,
}

impl CyclicGroup {
    pub fn new(order: u32) -> Result<Self, RingError> {
        if order == 0 {
            return Err(RingError::InvalidOrder);
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// All divisors of `m` in increasing order; one per subgroup.
    pub fn divisors(&self) -> Vec<u32> {
        (1..=self.order)
            .filter(|d| self.order.is_multiple_of(*d))
            .collect()
    }

    pub fn subgroup(&self, order: u32) -> Result<SubgroupRef, RingError> {
        if order == 0 || !self.order.is_multiple_of(order) {
            return Err(RingError::NotASubgroup {
                sub: order,
                order: self.order,
            });
        }
        Ok(SubgroupRef {
            group: *self,
            order,
        })
    }

    pub fn whole(&self) -> SubgroupRef {
        SubgroupRef {
            group: *self,
            order: self.order,
        }
    }

    fn ensure_same(&self, other: &CyclicGroup) -> Result<(), RingError> {
        if self.order != other.order {
            return Err(RingError::GroupMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.order)
    }
}

/// The subgroup `H_a` of order `a` inside `Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupRef {
    group: CyclicGroup,
    order: u32,
}

impl SubgroupRef {
    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `[G : H_a] = m / a`.
    pub fn index(&self) -> u32 {
        self.group.order / self.order
    }

    /// `H_a` as an abstract cyclic group, generated by `σ^(m/a)`.
    pub fn as_group(&self) -> CyclicGroup {
        CyclicGroup { order: self.order }
    }
}

/// A virtual character `Σ c_j σ^j` of `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepRingElement {
    group: CyclicGroup,
    coeffs: Vec<i64>,
}

impl RepRingElement {
    pub fn from_coeffs(group: CyclicGroup, coeffs: Vec<i64>) -> Result<Self, RingError> {
        if coeffs.len() != group.order as usize {
            return Err(RingError::LengthMismatch {
                expected: group.order as usize,
                got: coeffs.len(),
            });
        }
        Ok(Self { group, coeffs })
    }

    pub fn zero(group: CyclicGroup) -> Self {
        Self {
            group,
            coeffs: vec![0; group.order as usize],
        }
    }

    pub fn one(group: CyclicGroup) -> Self {
        Self::sigma_pow(group, 0)
    }

    /// `σ^j`, with `j` taken modulo `m` (negative exponents allowed).
    pub fn sigma_pow(group: CyclicGroup, j: i64) -> Self {
        let mut out = Self::zero(group);
        out.coeffs[j.rem_euclid(group.order as i64) as usize] = 1;
        out
    }

    /// The regular representation `1 + σ + … + σ^(m-1)`.
    pub fn regular(group: CyclicGroup) -> Self {
        Self {
            group,
            coeffs: vec![1; group.order as usize],
        }
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: i64) -> i64 {
        self.coeffs[j.rem_euclid(self.group.order as i64) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn add_term(&mut self, j: i64, c: i64) {
        let m = self.group.order as i64;
        self.coeffs[j.rem_euclid(m) as usize] += c;
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.group.ensure_same(&other.group)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            group: self.group,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            group: self.group,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        rep_mul(self, other)
    }

    /// Matrix of `y ↦ self·y` on the basis `σ^0, …, σ^(m-1)`; column `j` holds
    /// the coefficients of `self·σ^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.group.order as usize;
        (0..m)
            .map(|i| (0..m).map(|j| self.coeffs[(i + m - j) % m]).collect())
            .collect()
    }

    pub fn multiplication_determinant(&self) -> BigInt {
        determinant(&self.multiplication_matrix())
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let basis = match j {
                0 => String::new(),
                1 => "σ".to_string(),
                _ => format!("σ^{j}"),
            };
            write_signed_term(f, c, &basis, first)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn write_signed_term(f: &mut fmt::Formatter<'_>, c: i64, basis: &str, first: bool) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let a = c.abs();
    if basis.is_empty() {
        write!(f, "{a}")
    } else if a == 1 {
        write!(f, "{basis}")
    } else {
        write!(f, "{a}{basis}")
    }
}

/// A virtual `Z_m`-set `Σ c_a [G/H_a]`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    group: CyclicGroup,
    coeffs: BTreeMap<u32, i64>,
}

impl BurnsideElement {
    pub fn zero(group: CyclicGroup) -> Self {
        Self {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    /// The orbit class `[G/H_a]`.
    pub fn orbit(group: CyclicGroup, a: u32) -> Result<Self, RingError> {
        Self::from_map(group, [(a, 1)])
    }

    /// The one-point orbit `[G/G]`, the unit of `A(G)`.
    pub fn one(group: CyclicGroup) -> Self {
        Self::orbit(group, group.order).expect("m divides m")
    }

    pub fn from_map(
        group: CyclicGroup,
        entries: impl IntoIterator<Item = (u32, i64)>,
    ) -> Result<Self, RingError> {
        let mut out = Self::zero(group);
        for (a, c) in entries {
            group.subgroup(a)?;
            out.add_orbits(a, c);
        }
        Ok(out)
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, a: u32) -> i64 {
        self.coeffs.get(&a).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_orbits(&mut self, a: u32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(a).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&a);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.group.ensure_same(&other.group)?;
        let mut out = self.clone();
        for (&a, &c) in &other.coeffs {
            out.add_orbits(a, c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.group);
        for (&a, &c) in &self.coeffs {
            out.add_orbits(a, c * k);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        burnside_mul(self, other)
    }

    /// Number of points fixed by `H_a` (the mark of `H_a`).
    pub fn mark(&self, a: u32) -> i64 {
        let m = self.group.order;
        self.coeffs
            .iter()
            .filter(|(b, _)| *b % a == 0)
            .map(|(b, c)| c * i64::from(m / b))
            .sum()
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, &c)) in self.coeffs.iter().enumerate() {
            write_signed_term(f, c, &format!("[G/H_{a}]"), i == 0)?;
        }
        Ok(())
    }
}

/// Cyclic convolution in `Z[σ]/(σ^m - 1)`.
pub fn rep_mul(x: &RepRingElement, y: &RepRingElement) -> Result<RepRingElement, RingError> {
    x.group.ensure_same(&y.group)?;
    let m = x.group.order as usize;
    let mut coeffs = vec![0i64; m];
    for (i, &a) in x.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.coeffs.iter().enumerate() {
            coeffs[(i + j) % m] += a * b;
        }
    }
    Ok(RepRingElement {
        group: x.group,
        coeffs,
    })
}

/// `[G/H_a]·[G/H_b] = (m·gcd(a,b)/(a·b)) [G/H_gcd(a,b)]`, extended bilinearly.
pub fn burnside_mul(
    x: &BurnsideElement,
    y: &BurnsideElement,
) -> Result<BurnsideElement, RingError> {
    x.group.ensure_same(&y.group)?;
    let m = u64::from(x.group.order);
    let mut out = BurnsideElement::zero(x.group);
    for (&a, &ca) in &x.coeffs {
        for (&b, &cb) in &y.coeffs {
            let g = a.gcd(&b);
            let orbits = m * u64::from(g) / (u64::from(a) * u64::from(b));
            out.add_orbits(g, ca * cb * orbits as i64);
        }
    }
    Ok(out)
}

/// Permutation character: `r([G/H_a]) = Σ_{j ≡ 0 mod a} σ^j`.
pub fn reduce_to_rep(x: &BurnsideElement) -> RepRingElement {
    let mut out = RepRingElement::zero(x.group);
    for (&a, &c) in &x.coeffs {
        for j in (0..x.group.order).step_by(a as usize) {
            out.coeffs[j as usize] += c;
        }
    }
    out
}

/// Induction `R(H_a) → R(G)`: `τ^i ↦ Σ_{j ≡ i mod a} σ^j`.
pub fn induce(sub: &SubgroupRef, x: &RepRingElement) -> Result<RepRingElement, RingError> {
    sub.as_group().ensure_same(&x.group)?;
    let a = sub.order as usize;
    let mut out = RepRingElement::zero(sub.group);
    for j in 0..sub.group.order as usize {
        out.coeffs[j] = x.coeffs[j % a];
    }
    Ok(out)
}

/// Restriction `R(G) → R(H_a)`: `σ^j ↦ τ^(j mod a)`.
pub fn restrict_rep(x: &RepRingElement, sub: &SubgroupRef) -> Result<RepRingElement, RingError> {
    x.group.ensure_same(&sub.group)?;
    let a = sub.order as usize;
    let mut out = RepRingElement::zero(sub.as_group());
    for (j, &c) in x.coeffs.iter().enumerate() {
        out.coeffs[j % a] += c;
    }
    Ok(out)
}

/// True iff multiplication by `x` is singular on `Z^m`. Zero counts as a zero divisor.
pub fn is_zero_divisor(x: &RepRingElement) -> bool {
    x.is_zero() || x.multiplication_determinant().is_zero()
}

/// Character value at the identity, `Σ c_j`.
pub fn virtual_dimension(x: &RepRingElement) -> i64 {
    x.coeffs.iter().sum()
}

/// Fraction-free (Bareiss) elimination; exact over the integers.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
