use std::sync::Arc;

use super::FreeModuleMap;
use crate::error::{Error, Result};
use crate::groebner::engine::{Engine, VPoly, VTerm};
use crate::groebner::Budget;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

fn column_degree(col: &[Polynomial], target_degrees: &[i64]) -> i64 {
    col.iter()
        .zip(target_degrees)
        .filter(|(e, _)| !e.is_zero())
        .map(|(e, d)| e.total_degree().unwrap() as i64 + d)
        .max()
        .unwrap_or(0)
}

/// Degrees of the source basis implied by the entries (exact for homogeneous maps).
pub(crate) fn implied_source_degrees(map: &FreeModuleMap) -> Vec<i64> {
    let td = map
        .target_degrees
        .clone()
        .unwrap_or_else(|| vec![0; map.rows()]);
    map.columns().iter().map(|c| column_degree(c, &td)).collect()
}

fn to_terms(col: &[Polynomial], comp0: u32) -> Vec<VTerm> {
    let mut out = Vec::new();
    for (r, e) in col.iter().enumerate() {
        for (m, c) in e.terms() {
            out.push(VTerm {
                comp: comp0 + r as u32,
                mon: m.clone(),
                coeff: c.clone(),
            });
        }
    }
    out
}

fn normalize_shifts(d: &[i64]) -> Vec<u32> {
    let min = d.iter().copied().min().unwrap_or(0).min(0);
    d.iter().map(|x| (x - min) as u32).collect()
}

/// Generators of the syzygy module of the columns of `map`, returned as a
/// map `S^m -> S^cols` whose composition with `map` is zero.
///
/// Computed from a position-over-term Gröbner basis of the rows `(v_j, e_j)`:
/// basis elements with no support in the first `rows` components are
/// exactly the syzygies.
pub fn syzygies(map: &FreeModuleMap, order: &MonomialOrder, budget: &Budget) -> Result<FreeModuleMap> {
    let ring = map.ring().clone();
    order.validate(ring.nvars())?;
    let r = map.rows();
    let s = map.cols();
    let td = map.target_degrees.clone().unwrap_or_else(|| vec![0; r]);
    let sd = map
        .source_degrees
        .clone()
        .unwrap_or_else(|| implied_source_degrees(map));
    let mut all_shifts = td.clone();
    all_shifts.extend(sd.iter().copied());
    let shifts = normalize_shifts(&all_shifts);

    let mut engine = Engine::new(ring.field(), order, budget.uncapped().limits()).with_shifts(shifts);
    let one = ring.field().one();
    let n = ring.nvars();
    let input: Vec<VPoly> = map
        .columns()
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut terms = to_terms(col, 0);
            terms.push(VTerm {
                comp: (r + j) as u32,
                mon: Monomial::one(n),
                coeff: one.clone(),
            });
            engine.sort(terms)
        })
        .collect();
    let out = engine.buchberger(input)?;

    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    for g in out.basis.iter().filter(|g| g[0].comp as usize >= r) {
        let mut col: Vec<Vec<(Monomial, crate::poly::Coeff)>> = vec![Vec::new(); s];
        for t in g {
            col[t.comp as usize - r].push((t.mon.clone(), t.coeff.clone()));
        }
        columns.push(
            col.into_iter()
                .map(|terms| Polynomial::from_terms(&ring, terms))
                .collect(),
        );
    }
    let mut syz = FreeModuleMap::from_columns(&ring, s, &columns)?;
    syz.target_degrees = Some(sd);
    syz.source_degrees = Some(implied_source_degrees(&syz));
    Ok(syz)
}

/// Syzygies of a list of polynomials (a `1 x n` map).
pub fn syzygies_of(gens: &[Polynomial], order: &MonomialOrder, budget: &Budget) -> Result<FreeModuleMap> {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::contract("syzygies of an empty list"))?;
    let mut m = FreeModuleMap::row(&ring, gens)?;
    m.target_degrees = Some(vec![0]);
    syzygies(&m, order, budget)
}

/// `(N : v) = { f : f v ∈ N }` for a submodule `N` of `S^rows` given by
/// generator columns and a vector `v`.
pub fn module_quotient(
    ring: &Arc<Ring>,
    rows: usize,
    submodule: &[Vec<Polynomial>],
    v: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut cols = vec![v.to_vec()];
    cols.extend(submodule.iter().cloned());
    let m = FreeModuleMap::from_columns(ring, rows, &cols)?;
    let syz = syzygies(&m, &MonomialOrder::Grevlex, budget)?;
    Ok((0..syz.cols())
        .map(|c| syz.entry(0, c).clone())
        .filter(|p| !p.is_zero())
        .collect())
}

/// Whether `v` lies in the submodule generated by `gens`.
pub fn module_contains(
    ring: &Arc<Ring>,
    rows: usize,
    gens: &[Vec<Polynomial>],
    v: &[Polynomial],
    budget: &Budget,
) -> Result<bool> {
    if v.iter().all(|e| e.is_zero()) {
        return Ok(true);
    }
    let q = module_quotient(ring, rows, gens, v, budget)?;
    // v ∈ N iff 1 ∈ (N : v)
    let ideal = crate::groebner::Ideal::new(ring, q)?;
    Ok(ideal.groebner(&MonomialOrder::Grevlex, budget)?.is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    fn ring() -> Arc<Ring> {
        Ring::new(Field::Rational, &["x", "y"]).unwrap()
    }

    fn check_complex(gens: &[Polynomial], syz: &FreeModuleMap) {
        let row = FreeModuleMap::row(gens[0].ring(), gens).unwrap();
        assert!(row.compose(syz).unwrap().is_zero());
    }

    #[test]
    fn koszul_pair() {
        let r = ring();
        let gens = vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()];
        let syz = syzygies_of(&gens, &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap();
        assert_eq!(syz.cols(), 1);
        check_complex(&gens, &syz);
        let col = syz.column(0);
        let expect = [parse_poly(&r, "-y").unwrap(), parse_poly(&r, "x").unwrap()];
        let neg = [expect[0].neg(), expect[1].neg()];
        assert!(col == expect || col == neg);
    }

    #[test]
    fn quadrics_in_two_vars() {
        let r = ring();
        let gens: Vec<Polynomial> = ["x^2", "x*y", "y^2"].iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        let syz = syzygies_of(&gens, &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap();
        assert_eq!(syz.cols(), 2);
        check_complex(&gens, &syz);
        assert_eq!(syz.source_degrees, Some(vec![3, 3]));
    }

    #[test]
    fn nonzerodivisor() {
        let r = ring();
        let gens = vec![parse_poly(&r, "x").unwrap()];
        let syz = syzygies_of(&gens, &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap();
        assert_eq!(syz.cols(), 0);
    }

    #[test]
    fn membership_in_submodule() {
        let r = ring();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let gens = vec![vec![p("x"), p("y")]];
        let b = Budget::unlimited();
        assert!(module_contains(&r, 2, &gens, &[p("x^2"), p("x*y")], &b).unwrap());
        assert!(!module_contains(&r, 2, &gens, &[p("x"), p("x")], &b).unwrap());
    }
}
