//! Exact coefficient fields, monomials, monomial orders and sparse polynomials.

pub mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;

use std::sync::Arc;

pub use field::{Coeff, Field, FieldElement, CHECK_PRIME, DEFAULT_PRIME};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use polynomial::{Polynomial, Ring};


use crate::error::{Error, Result};

/// Multivariate division with remainder.
///
/// Reduces by the first generator (in listed order) whose leading monomial
/// divides the current leading term; terms no generator can reduce move to
/// the remainder. The result has no term divisible by any leading monomial
/// of `gens`.
pub fn normal_form(f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    ord.validate(f.ring().nvars())?;
    let mut leads = Vec::with_capacity(gens.len());
    for g in gens {
        f.check_ring(g)?;
        let (m, c) = g
            .leading_term_in(ord)
            .ok_or_else(|| Error::contract("division by the zero polynomial"))?;
        leads.push((m.clone(), c.clone()));
    }
    let field = f.field();
    let ring = f.ring().clone();
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term_in(ord).cloned() {
        let hit = leads.iter().position(|(lm, _)| lm.divides(&m));
        match hit {
            Some(i) => {
                let q = leads[i].0.quotient_of(&m).unwrap();
                let k = field.div(&c, &leads[i].1).unwrap();
                p = p.sub(&gens[i].mul_monomial(&q, &k))?;
            }
            None => {
                rem.push((m.clone(), c.clone()));
                p = p.sub(&Polynomial::monomial(&ring, m, c))?;
            }
        }
    }
    Ok(Polynomial::from_terms(&ring, rem))
}

/// Variables of `ring` as polynomials.
pub fn variables(ring: &Arc<Ring>) -> Vec<Polynomial> {
    (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()
}
