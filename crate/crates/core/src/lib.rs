//! Exact computation of equivariant indices of invariant polynomial 1-forms
//! under diagonal cyclic group actions on `C^n`.
//!
//! * [`rep_rings`]: `R(Z_m)` and `A(Z_m)` with reduction, induction and restriction.
//! * [`poly`]: sparse polynomials over `Q`, monomial orders and the text parser.
//! * [`standard_basis`]: Buchberger (global) and Mora (local) engines.
//! * [`equiv_index`]: homological and radial indices and the maps between forms.

pub mod equiv_index;
pub mod poly;
pub mod rep_rings;
pub mod standard_basis;

pub use equiv_index::{DiagonalAction, IndexError, IndexReport, OneForm};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational};
pub use rep_rings::{BurnsideElement, CyclicGroup, RepRingElement, SubgroupRef};
