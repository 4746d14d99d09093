use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::engine::{Engine, VPoly, VTerm};
use super::{Budget, GbStats};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Reduced Gröbner basis for one monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub ring: Arc<Ring>,
    pub basis: Vec<Polynomial>,
    pub stats: GbStats,
    /// Set when a degree cap stopped the computation with pairs left over.
    pub truncated: bool,
}

pub(crate) fn to_vpoly(engine: &Engine<'_>, p: &Polynomial, comp: u32) -> VPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| VTerm {
            comp,
            mon: m.clone(),
            coeff: c.clone(),
        })
        .collect();
    engine.sort(terms)
}

pub(crate) fn from_vpoly(ring: &Arc<Ring>, v: &VPoly) -> Polynomial {
    Polynomial::from_terms(ring, v.iter().map(|t| (t.mon.clone(), t.coeff.clone())).collect())
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_term_in(&self.order).unwrap().0.clone())
            .collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::structural("polynomial lives in a different ring"));
        }
        if self.basis.is_empty() {
            return Ok(f.clone());
        }
        let engine = Engine::new(self.ring.field(), &self.order, Default::default());
        let basis: Vec<VPoly> = self.basis.iter().map(|g| to_vpoly(&engine, g, 0)).collect();
        let active: Vec<usize> = (0..basis.len()).collect();
        let v = to_vpoly(&engine, f, 0);
        let r = engine.reduce(v, &basis, &active, true, &GbStats::default())?;
        Ok(from_vpoly(&self.ring, &r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// An ideal given by generators, with Gröbner bases cached per order.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Zero generators are dropped; the empty list is the zero ideal.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::structural("generator lives in a different ring"));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| crate::poly::parse_poly(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Gröbner basis. Complete results (no degree cap) are cached.
    pub fn groebner(&self, order: &MonomialOrder, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger_polys(&self.ring, &self.gens, order, budget)?);
        if !gb.truncated {
            // same key always yields the same basis, so last writer wins harmlessly
            self.cache
                .lock()
                .unwrap()
                .insert(order.clone(), gb.clone());
        }
        Ok(gb)
    }

    pub fn cached_orders(&self) -> Vec<MonomialOrder> {
        self.cache.lock().unwrap().keys().cloned().collect()
    }

    /// A copy of the ring and generators with the basis cache left empty.
    pub fn with_gens(&self, gens: Vec<Polynomial>) -> Result<Ideal> {
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::structural("ideals live in different rings"));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Reduces every generator modulo a prime (the ring's variables are kept).
    pub fn change_field(&self, field: crate::poly::Field) -> Result<Ideal> {
        let target = self.ring.with_field(field);
        let gens = self
            .gens
            .iter()
            .map(|g| g.change_field(&target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, gens)
    }

    /// Equality of ideals via reduced Gröbner bases in grevlex.
    pub fn same_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let a = self.groebner(&MonomialOrder::Grevlex, budget)?;
        let b = other.groebner(&MonomialOrder::Grevlex, budget)?;
        Ok(a.basis == b.basis)
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let gb = self.groebner(&MonomialOrder::Grevlex, budget)?;
        for g in other.gens() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn buchberger_polys(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    order.validate(ring.nvars())?;
    let mut engine = Engine::new(ring.field(), order, budget.limits());
    let input: Vec<VPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_vpoly(&engine, g, 0))
        .collect();
    let out = engine.buchberger(input)?;
    Ok(GroebnerBasis {
        order: order.clone(),
        ring: ring.clone(),
        basis: out.basis.iter().map(|v| from_vpoly(ring, v)).collect(),
        stats: out.stats,
        truncated: out.truncated,
    })
}
