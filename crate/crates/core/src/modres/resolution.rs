use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::syzygy::{implied_source_degrees, syzygies};
use super::FreeModuleMap;
use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::poly::MonomialOrder;

/// A free resolution `S = F_0 <- F_1 <- ... <- F_c` of `S/I`.
#[derive(Clone, Debug)]
pub struct ResolutionData {
    /// `maps[i]` is the differential `F_{i+1} -> F_i`.
    pub maps: Vec<FreeModuleMap>,
    /// Set when the input was homogeneous and unit entries were pruned.
    pub minimal: bool,
    pub nvars: usize,
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Triples `[i, j, rank]` sorted by `(i, j)`.
    pub fn triples(&self) -> Vec<[i64; 3]> {
        self.entries
            .iter()
            .map(|(&(i, j), &r)| [i as i64, j, r as i64])
            .collect()
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, r)| *r)
            .sum()
    }
}

impl ResolutionData {
    /// Projective dimension of `S/I`: the number of nonzero differentials.
    pub fn pd(&self) -> usize {
        self.maps.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            1
        } else {
            self.maps.get(i - 1).map_or(0, |m| m.cols())
        }
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::default();
        t.entries.insert((0, 0), 1);
        for (k, m) in self.maps.iter().enumerate() {
            let degs = m
                .source_degrees
                .clone()
                .unwrap_or_else(|| implied_source_degrees(m));
            for d in degs {
                *t.entries.entry((k + 1, d)).or_insert(0) += 1;
            }
        }
        t
    }

    /// Consecutive differentials compose to zero.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Removes redundant columns of `a` witnessed by unit entries of its syzygy
/// map `b`, keeping `b` a generating set of the syzygies of the pruned `a`.
fn prune(a: &mut FreeModuleMap, b: &mut FreeModuleMap) -> Result<()> {
    while let Some((c, k)) = b.find_unit() {
        // column c of a is a combination of the others
        a.remove_column(c);
        *b = b.split_unit(c, k)?;
    }
    b.drop_zero_columns();
    Ok(())
}

/// Iterated syzygies of the generators of `I`, pruning unit entries at each
/// step. For homogeneous input the result is the minimal graded resolution.
pub fn free_resolution(ideal: &Ideal, minimal: bool, budget: &Budget) -> Result<ResolutionData> {
    let homogeneous = ideal.is_homogeneous();
    if minimal && !homogeneous {
        return Err(Error::contract("minimal resolution requested for a nonhomogeneous ideal"));
    }
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    // start from a Gröbner basis so the first syzygy step sees a clean generating set
    let gb = ideal.groebner(&MonomialOrder::Grevlex, budget)?;
    if gb.is_unit() {
        return Err(Error::contract("resolution of the unit ideal"));
    }
    if gb.basis.is_empty() {
        return Ok(ResolutionData {
            maps: vec![],
            minimal: homogeneous,
            nvars: n,
        });
    }
    let mut current = FreeModuleMap::row(&ring, &gb.basis)?;
    current.target_degrees = Some(vec![0]);
    current.source_degrees = Some(implied_source_degrees(&current));

    let mut maps = Vec::new();
    loop {
        if maps.len() > n {
            return Err(Error::structural("resolution exceeded the Hilbert syzygy bound"));
        }
        let mut next = syzygies(&current, &MonomialOrder::Grevlex, budget)?;
        prune(&mut current, &mut next)?;
        if let Some(d) = &current.source_degrees {
            next.target_degrees = Some(d.clone());
        }
        maps.push(current);
        if next.cols() == 0 {
            break;
        }
        next.source_degrees = Some(implied_source_degrees(&next));
        current = next;
    }
    Ok(ResolutionData {
        maps,
        minimal: homogeneous,
        nvars: n,
    })
}

/// Depth of `S/I` at the irrelevant ideal, `#vars - pd(S/I)`.
pub fn graded_depth(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    if !ideal.is_homogeneous() {
        return Err(Error::contract("graded depth needs a homogeneous ideal"));
    }
    let res = free_resolution(ideal, true, budget)?;
    Ok(res.nvars - res.pd())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Ring};

    #[test]
    fn koszul_two_vars() {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let res = free_resolution(&i, true, &Budget::unlimited()).unwrap();
        let b = res.betti();
        assert_eq!((b.get(0, 0), b.get(1, 1), b.get(2, 2)), (1, 2, 1));
        assert_eq!(res.pd(), 2);
        assert!(res.is_complex().unwrap());
        assert_eq!(graded_depth(&i, &Budget::unlimited()).unwrap(), 0);
    }

    #[test]
    fn principal() {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert_eq!(free_resolution(&i, true, &Budget::unlimited()).unwrap().pd(), 1);
    }

    #[test]
    fn cone_over_two_monomials() {
        let r = Ring::new(Field::Rational, &["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["x*z", "y*z"]).unwrap();
        let res = free_resolution(&i, true, &Budget::unlimited()).unwrap();
        assert_eq!(res.pd(), 2);
        assert_eq!(graded_depth(&i, &Budget::unlimited()).unwrap(), 1);
    }

    #[test]
    fn nonhomogeneous_minimal_rejected() {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2 - y"]).unwrap();
        assert!(matches!(free_resolution(&i, true, &Budget::unlimited()), Err(Error::Contract(_))));
        assert_eq!(free_resolution(&i, false, &Budget::unlimited()).unwrap().pd(), 1);
    }

    #[test]
    fn redundant_generators_pruned() {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y", "x + y", "x*y"]).unwrap();
        let res = free_resolution(&i, true, &Budget::unlimited()).unwrap();
        assert_eq!(res.rank(1), 2);
        assert_eq!(res.rank(2), 1);
    }
}
