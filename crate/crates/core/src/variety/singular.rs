use crate::error::{Error, Result};
use std::time::Instant;

use crate::groebner::{radical_membership, saturation, Budget, GbStats, Ideal};
use crate::hilbert::dim_degree;
use crate::poly::{MonomialOrder, Polynomial};

/// `I + (c x c minors of the Jacobian)`, left unsaturated.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub ideal: Ideal,
    pub codim: usize,
    /// Nonzero minors computed, before reduction modulo the ideal.
    pub minors: usize,
}

impl SingularLocus {
    /// Whether `V(self) = V(reference)` as sets.
    pub fn matches(&self, reference: &Ideal, budget: &Budget) -> Result<bool> {
        same_radical(&self.ideal, reference, budget)
    }
}

fn det(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    match m.len() {
        0 => unreachable!(),
        1 => Ok(m[0][0].clone()),
        2 => m[0][0].mul(&m[1][1])?.sub(&m[0][1].mul(&m[1][0])?),
        n => {
            let ring = m[0][0].ring();
            let mut acc = Polynomial::zero(ring);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det(&minor)?)?;
                acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
            }
            Ok(acc)
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Nonzero `c x c` minors of the Jacobian of `gens`, made monic and deduplicated.
pub fn jacobian_minors(gens: &[Polynomial], c: usize) -> Result<Vec<Polynomial>> {
    minors_within(gens, c, &Budget::unlimited(), |d| Ok(Some(d)))
}

/// Minor enumeration with a deadline check per row subset; `keep` may
/// rewrite a minor or drop it.
fn minors_within(
    gens: &[Polynomial],
    c: usize,
    budget: &Budget,
    mut keep: impl FnMut(Polynomial) -> Result<Option<Polynomial>>,
) -> Result<Vec<Polynomial>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(vec![]),
    };
    if c == 0 {
        return Ok(vec![Polynomial::one(&ring)]);
    }
    let n = ring.nvars();
    if c > gens.len() || c > n {
        return Ok(vec![]);
    }
    let jac: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v)).collect())
        .collect();
    let mut out: Vec<Polynomial> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for rows in subsets(gens.len(), c) {
        if budget.deadline.is_some_and(|t| Instant::now() >= t) {
            return Err(Error::Timeout { stats: GbStats::default() });
        }
        for cols in subsets(n, c) {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&k| jac[r][k].clone()).collect())
                .collect();
            let d = det(&m)?;
            if d.is_zero() {
                continue;
            }
            if let Some(d) = keep(d)? {
                let d = d.monic();
                if seen.insert(d.to_string()) {
                    out.push(d);
                }
            }
        }
    }
    Ok(out)
}

/// Jacobian ideal of `I` with minor size `codim`; for homogeneous `I` the
/// codimension may be left to the Hilbert series.
pub fn singular_locus(ideal: &Ideal, codim: Option<usize>, budget: &Budget) -> Result<SingularLocus> {
    let c = match codim {
        Some(c) => c,
        None if ideal.is_homogeneous() => dim_degree(ideal, budget)?.codim(),
        None => return Err(Error::contract("minor size unknown: pass the codimension of a nonhomogeneous ideal")),
    };
    // minors are reduced modulo I; those lying in I add nothing
    let gb = ideal.groebner(&MonomialOrder::Grevlex, budget)?;
    let mut count = 0;
    let minors = minors_within(ideal.gens(), c, budget, |d| {
        count += 1;
        let r = gb.normal_form(&d)?;
        Ok((!r.is_zero()).then_some(r))
    })?;
    let mut gens = ideal.gens().to_vec();
    gens.extend(minors);
    Ok(SingularLocus {
        ideal: Ideal::new(ideal.ring(), gens)?,
        codim: c,
        minors: count,
    })
}

/// Every generator of `a` lies in `√b`. Exact membership is tried first.
fn radical_contains(b: &Ideal, a: &Ideal, budget: &Budget) -> Result<bool> {
    let gb = b.groebner(&MonomialOrder::Grevlex, budget)?;
    for f in a.gens() {
        if gb.contains(f)? {
            continue;
        }
        if !radical_membership(f, b, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `√a = √b`, by radical membership of generators in both directions.
pub fn same_radical(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::structural("ideals live in different rings"));
    }
    Ok(radical_contains(b, a, budget)? && radical_contains(a, b, budget)?)
}

/// Whether a homogeneous ideal cuts out the empty set in projective space:
/// saturating by each coordinate gives the unit ideal.
pub fn projectively_empty(ideal: &Ideal, budget: &Budget) -> Result<bool> {
    let ring = ideal.ring();
    for v in 0..ring.nvars() {
        let sat = saturation(ideal, &Polynomial::var(ring, v), budget)?;
        if !sat.groebner(&MonomialOrder::Grevlex, budget)?.is_unit() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Ring};

    #[test]
    fn cusp_origin() {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^3 - y^2"]).unwrap();
        assert!(matches!(singular_locus(&i, None, &Budget::unlimited()), Err(Error::Contract(_))));
        let s = singular_locus(&i, Some(1), &Budget::unlimited()).unwrap();
        let origin = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(s.matches(&origin, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn smooth_conic_empty() {
        let r = Ring::new(Field::Rational, &["x0", "x1", "x2"]).unwrap();
        let i = Ideal::parse(&r, &["x0*x2 - x1^2"]).unwrap();
        let s = singular_locus(&i, None, &Budget::unlimited()).unwrap();
        assert_eq!(s.codim, 1);
        assert!(projectively_empty(&s.ideal, &Budget::unlimited()).unwrap());
        assert!(!projectively_empty(&i, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn determinant_three() {
        let r = Ring::new(Field::Rational, &["a", "b", "c"]).unwrap();
        let gens: Vec<Polynomial> = ["a^2", "b^2", "c^2"]
            .iter()
            .map(|s| crate::poly::parse_poly(&r, s).unwrap())
            .collect();
        let m = jacobian_minors(&gens, 3).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].to_string(), "a*b*c");
    }
}
