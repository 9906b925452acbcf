use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// Monomial orderings. The global one is a well-order with `1` smallest; the
/// local ones have `1 > z_i` and are used for computations in the local ring at
/// the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic.
    DegRevLex,
    /// Negative degree, ties broken reverse lexicographically.
    NegDegRevLex,
    /// Negative degree, ties broken lexicographically. A second local order
    /// used to cross-check order independence.
    NegDegLex,
}

impl MonomialOrder {
    pub fn is_local(&self) -> bool {
        !matches!(self, MonomialOrder::DegRevLex)
    }

    pub fn is_global(&self) -> bool {
        !self.is_local()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let by_degree = a.degree().cmp(&b.degree());
        match self {
            MonomialOrder::DegRevLex => by_degree.then_with(|| revlex(a, b)),
            MonomialOrder::NegDegRevLex => by_degree.reverse().then_with(|| revlex(a, b)),
            MonomialOrder::NegDegLex => by_degree.reverse().then_with(|| lex(a, b)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::NegDegRevLex => "negdegrevlex",
            MonomialOrder::NegDegLex => "negdeglex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Among equal degrees: the monomial with the smaller exponent in the last
// differing variable is bigger.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponents().cmp(b.exponents())
}
