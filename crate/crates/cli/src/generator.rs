//! Seeded generator of invariant 1-forms with an isolated zero.
//!
//! Component `i` gets a pure power `z_i^{c_i}` with `(c_i + 1)k_i ≡ 0 mod m`
//! plus a few random monomials satisfying the same weight congruence. Draws
//! whose zero turns out not to be isolated are rejected.

use eqidx_core::equiv_index::milnor_number;
use eqidx_core::poly::{int, Monomial, Polynomial};
use eqidx_core::{CyclicGroup, DiagonalAction, IndexError, OneForm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct Instance {
    pub form: OneForm,
    pub action: DiagonalAction,
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_vars: usize,
    pub max_order: u32,
    pub max_degree: u32,
    pub max_extra_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vars: 3,
            max_order: 6,
            max_degree: 6,
            max_extra_terms: 2,
        }
    }
}

pub struct FormGenerator {
    rng: ChaCha8Rng,
    limits: Limits,
}

impl FormGenerator {
    pub fn new(seed: u64, limits: Limits) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            limits,
        }
    }

    pub fn next_instance(&mut self) -> Instance {
        let m = self.rng.gen_range(1..=self.limits.max_order);
        let n = self.rng.gen_range(1..=self.limits.max_vars);
        self.instance_with(m, n)
    }

    /// An instance over `Z_m` in exactly `n` variables.
    pub fn instance_with(&mut self, m: u32, n: usize) -> Instance {
        loop {
            let weights: Vec<u32> = (0..n).map(|_| self.rng.gen_range(0..m)).collect();
            let comps = (0..n).map(|i| self.component(&weights, m, i)).collect();
            let form = OneForm::new(comps).expect("n >= 1");
            let w: Vec<i64> = weights.iter().map(|&k| i64::from(k)).collect();
            let action = DiagonalAction::new(CyclicGroup::new(m).expect("m >= 1"), &w)
                .expect("weights match");
            match milnor_number(&form) {
                Ok(_) => return Instance { form, action },
                Err(IndexError::NonIsolated) => continue,
                Err(e) => unreachable!("generated form failed unexpectedly: {e}"),
            }
        }
    }

    fn component(&mut self, weights: &[u32], m: u32, i: usize) -> Polynomial {
        let n = weights.len();
        let c = brieskorn_exponent(weights[i], m);
        let mut e = vec![0; n];
        e[i] = c;
        let lead = Monomial::new(e);
        let mut f = Polynomial::term(lead.clone(), int(1));
        let target = (m - weights[i]) % m;
        let pool: Vec<Monomial> = admissible_monomials(weights, m, target, self.limits.max_degree)
            .into_iter()
            .filter(|t| *t != lead)
            .collect();
        let extra = self.rng.gen_range(0..=self.limits.max_extra_terms);
        for _ in 0..extra {
            if let Some(t) = pool.choose(&mut self.rng) {
                let c = *[-3, -2, -1, 1, 2, 3]
                    .choose(&mut self.rng)
                    .expect("nonempty");
                f.add_term(t.clone(), int(c));
            }
        }
        f
    }
}

/// Smallest `c >= 1` with `(c + 1)k ≡ 0 mod m`.
pub fn brieskorn_exponent(k: u32, m: u32) -> u32 {
    (1..)
        .find(|c| ((c + 1) * k).is_multiple_of(m))
        .expect("c = m - 1 works")
}

/// Monomials of degree `1..=max_degree` with weight `target` mod `m`, in a
/// fixed order.
pub fn admissible_monomials(
    weights: &[u32],
    m: u32,
    target: u32,
    max_degree: u32,
) -> Vec<Monomial> {
    let n = weights.len();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let deg: u32 = exps.iter().sum();
        if deg >= 1 {
            let mon = Monomial::new(exps.clone());
            if mon.weight(weights, m) == target % m {
                out.push(mon);
            }
        }
        // odometer over exponent vectors of total degree <= max_degree
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            exps[i] += 1;
            if exps.iter().sum::<u32>() <= max_degree {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eqidx_core::equiv_index::check_invariance;

    #[test]
    fn exponents() {
        assert_eq!(brieskorn_exponent(1, 2), 1);
        assert_eq!(brieskorn_exponent(1, 3), 2);
        assert_eq!(brieskorn_exponent(2, 4), 1);
        assert_eq!(brieskorn_exponent(0, 5), 1);
        assert_eq!(brieskorn_exponent(4, 6), 2);
    }

    #[test]
    fn pool_respects_congruence() {
        let pool = admissible_monomials(&[1, 2], 3, 1, 3);
        assert!(!pool.is_empty());
        assert!(pool
            .iter()
            .all(|t| t.weight(&[1, 2], 3) == 1 && (1..=3).contains(&t.degree())));
    }

    #[test]
    fn instances_are_invariant_isolated_and_reproducible() {
        let mut a = FormGenerator::new(7, Limits::default());
        let mut b = FormGenerator::new(7, Limits::default());
        for _ in 0..20 {
            let x = a.next_instance();
            let y = b.next_instance();
            assert_eq!(x.form, y.form);
            assert_eq!(x.action, y.action);
            assert!(check_invariance(&x.form, &x.action).unwrap());
            assert!(milnor_number(&x.form).is_ok());
            assert!(x
                .form
                .components()
                .iter()
                .all(|f| f.total_degree().unwrap() <= 6));
        }
    }
}
