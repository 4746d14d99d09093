use std::sync::Arc;

use super::{Budget, Ideal};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// `I ∩ k[kept variables]`, returned in the ring of the kept variables.
/// A degree cap that stops the basis early is reported as [`Error::Truncated`].
///
/// The dropped variables are moved to the front and eliminated with a block
/// order; the basis elements free of them generate the intersection.
pub fn eliminate(ideal: &Ideal, drop_vars: &[usize], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if drop_vars.iter().any(|&v| v >= n) {
        return Err(Error::structural("elimination variable out of range"));
    }
    let mut dropped: Vec<usize> = drop_vars.to_vec();
    dropped.sort_unstable();
    dropped.dedup();
    let kept: Vec<usize> = (0..n).filter(|v| !dropped.contains(v)).collect();

    // permuted ring: dropped block first
    let order_vars: Vec<usize> = dropped.iter().chain(kept.iter()).copied().collect();
    let names: Vec<&str> = order_vars.iter().map(|&v| ring.names()[v].as_str()).collect();
    let perm_ring = Ring::new(ring.field(), &names)?;
    let mut to_perm = vec![0usize; n];
    for (new, &old) in order_vars.iter().enumerate() {
        to_perm[old] = new;
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.remap(&perm_ring, &to_perm))
        .collect::<Result<Vec<_>>>()?;
    let k = dropped.len();
    let gb = Ideal::new(&perm_ring, gens)?.groebner(&MonomialOrder::BlockElim(k), budget)?;
    if gb.truncated {
        return Err(Error::Truncated {
            cap: budget.degree_cap.unwrap_or(0),
            stats: gb.stats.clone(),
        });
    }

    let kept_names: Vec<&str> = kept.iter().map(|&v| ring.names()[v].as_str()).collect();
    let kept_ring = Ring::new(ring.field(), &kept_names)?;
    // perm index k+j -> kept index j
    let back: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    let out = gb
        .basis
        .iter()
        .filter(|g| (0..k).all(|v| !g.uses_var(v)))
        .map(|g| g.remap(&kept_ring, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&kept_ring, out)
}

pub fn ideal_membership(
    f: &Polynomial,
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::structural("polynomial and ideal live in different rings"));
    }
    ideal.groebner(order, budget)?.contains(f)
}

/// Ring with one extra variable appended (`front` = false) or prepended.
fn with_extra_var(ring: &Arc<Ring>, base: &str, front: bool) -> Result<(Arc<Ring>, Vec<usize>, usize)> {
    let z = ring.fresh_name(base);
    let n = ring.nvars();
    if front {
        let r = ring.extend(&[z.as_str()], &[])?;
        Ok((r, (1..=n).collect(), 0))
    } else {
        let r = ring.extend(&[], &[z.as_str()])?;
        Ok((r, (0..n).collect(), n))
    }
}

/// Rabinowitsch test: `f ∈ √I` iff `1 ∈ I + (1 - z f)`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::structural("polynomial and ideal live in different rings"));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let (ext, map, z) = with_extra_var(ideal.ring(), "z", false)?;
    let mut gens = ideal
        .gens()
        .iter()
        .map(|g| g.remap(&ext, &map))
        .collect::<Result<Vec<_>>>()?;
    let fz = f.remap(&ext, &map)?.mul(&Polynomial::var(&ext, z))?;
    gens.push(Polynomial::one(&ext).sub(&fz)?);
    let gb = Ideal::new(&ext, gens)?.groebner(&MonomialOrder::Grevlex, &budget.uncapped())?;
    Ok(gb.is_unit())
}

/// `I : f^∞`, by eliminating `z` from `I + (1 - z f)`.
pub fn saturation(ideal: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if f.ring() != ideal.ring() {
        return Err(Error::structural("polynomial and ideal live in different rings"));
    }
    if f.is_zero() {
        return Err(Error::contract("saturation by the zero polynomial"));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let (ext, map, z) = with_extra_var(ideal.ring(), "z", true)?;
    let mut gens = ideal
        .gens()
        .iter()
        .map(|g| g.remap(&ext, &map))
        .collect::<Result<Vec<_>>>()?;
    let fz = f.remap(&ext, &map)?.mul(&Polynomial::var(&ext, z))?;
    gens.push(Polynomial::one(&ext).sub(&fz)?);
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[z], budget)?;
    // the kept ring has the original variables in the original order
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.embed_by_name(ideal.ring()))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `I ∩ J` via `t I + (1 - t) J`, eliminating `t`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::structural("ideals live in different rings"));
    }
    if a.gens().is_empty() || b.gens().is_empty() {
        return Ideal::new(a.ring(), vec![]);
    }
    let (ext, map, t) = with_extra_var(a.ring(), "t", true)?;
    let tv = Polynomial::var(&ext, t);
    let one_minus_t = Polynomial::one(&ext).sub(&tv)?;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(g.remap(&ext, &map)?.mul(&tv)?);
    }
    for g in b.gens() {
        gens.push(g.remap(&ext, &map)?.mul(&one_minus_t)?);
    }
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[t], budget)?;
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.embed_by_name(a.ring()))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(a.ring(), gens)
}

fn quotient_by_element(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    let principal = Ideal::new(ideal.ring(), vec![g.clone()])?;
    let meet = intersect(ideal, &principal, budget)?;
    let gens = meet
        .gens()
        .iter()
        .map(|h| {
            h.div_exact(g)
                .ok_or_else(|| Error::structural("intersection generator not divisible by quotient element"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `I : J = { f : f J ⊆ I }`, as the intersection of `I : g` over generators of `J`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal> {
    if i.ring() != j.ring() {
        return Err(Error::structural("ideals live in different rings"));
    }
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let q = quotient_by_element(i, g, budget)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q, budget)?,
        });
    }
    match acc {
        Some(q) => Ok(q),
        None => Ideal::new(i.ring(), vec![Polynomial::one(i.ring())]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::new(Field::Rational, vars).unwrap()
    }

    fn gb_strings(i: &Ideal) -> Vec<String> {
        let gb = i.groebner(&MonomialOrder::Grevlex, &Budget::unlimited()).unwrap();
        gb.basis.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn eliminate_affine_cubic() {
        let r = ring(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["x - t^2", "y - t^3"]).unwrap();
        let e = eliminate(&i, &[0], &Budget::unlimited()).unwrap();
        assert_eq!(e.ring().names(), &["x", "y"]);
        assert_eq!(gb_strings(&e), vec!["x^3 - y^2"]);
    }

    #[test]
    fn eliminate_linear() {
        let r = ring(&["u", "x", "y"]);
        let i = Ideal::parse(&r, &["x - u", "y - u"]).unwrap();
        let e = eliminate(&i, &[0], &Budget::unlimited()).unwrap();
        assert_eq!(gb_strings(&e), vec!["x - y"]);
    }

    #[test]
    fn eliminate_to_zero_ideal() {
        let r = ring(&["u", "x"]);
        let i = Ideal::parse(&r, &["u^2 + 1"]).unwrap();
        let e = eliminate(&i, &[0], &Budget::unlimited()).unwrap();
        assert!(e.gens().is_empty());
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        let b = Budget::unlimited();
        let x = parse_poly(&r, "x").unwrap();
        let x2 = parse_poly(&r, "x^2").unwrap();
        let ix = Ideal::new(&r, vec![x.clone()]).unwrap();
        let ix2 = Ideal::new(&r, vec![x2.clone()]).unwrap();
        assert!(ideal_membership(&x2, &ix, &MonomialOrder::Grevlex, &b).unwrap());
        assert!(!ideal_membership(&x, &ix2, &MonomialOrder::Grevlex, &b).unwrap());
    }

    #[test]
    fn radical() {
        let r = ring(&["x", "y"]);
        let b = Budget::unlimited();
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(radical_membership(&parse_poly(&r, "x").unwrap(), &i, &b).unwrap());
        assert!(!radical_membership(&parse_poly(&r, "y").unwrap(), &i, &b).unwrap());
        let j = Ideal::parse(&r, &["(x+y)^3*(x-y)", "(x+y)^2"]).unwrap();
        assert!(radical_membership(&parse_poly(&r, "x+y").unwrap(), &j, &b).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let b = Budget::unlimited();
        let x = parse_poly(&r, "x").unwrap();
        let y = parse_poly(&r, "y").unwrap();
        let s = saturation(&Ideal::parse(&r, &["x*y"]).unwrap(), &x, &b).unwrap();
        assert_eq!(gb_strings(&s), vec!["y"]);
        let s = saturation(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap(), &x, &b).unwrap();
        assert_eq!(gb_strings(&s), vec!["1"]);
        let s = saturation(&Ideal::parse(&r, &["x"]).unwrap(), &y, &b).unwrap();
        assert_eq!(gb_strings(&s), vec!["x"]);
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y"]);
        let b = Budget::unlimited();
        let q = ideal_quotient(
            &Ideal::parse(&r, &["x*y"]).unwrap(),
            &Ideal::parse(&r, &["x"]).unwrap(),
            &b,
        )
        .unwrap();
        assert_eq!(gb_strings(&q), vec!["y"]);
        let q = ideal_quotient(
            &Ideal::parse(&r, &["x^2"]).unwrap(),
            &Ideal::parse(&r, &["x"]).unwrap(),
            &b,
        )
        .unwrap();
        assert_eq!(gb_strings(&q), vec!["x"]);
        let q = ideal_quotient(
            &Ideal::parse(&r, &["x^2*y", "x*y^2"]).unwrap(),
            &Ideal::parse(&r, &["x*y"]).unwrap(),
            &b,
        )
        .unwrap();
        assert_eq!(gb_strings(&q), vec!["y", "x"]);
    }
}
