//! `Ext^j(S/I, S)` from the dual of a free resolution, their annihilators,
//! and the local depth test built on their supports.

use super::resolution::free_resolution;
use super::syzygy::{module_quotient, syzygies};
use super::FreeModuleMap;
use crate::error::{Error, Result};
use crate::groebner::{intersect, Budget, Ideal};
use crate::poly::{Coeff, MonomialOrder, Polynomial};

/// `Ext^j = ker / image` inside `S^rank`.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub index: usize,
    pub rank: usize,
    /// Generators of the kernel of the outgoing dual differential.
    pub kernel: Vec<Vec<Polynomial>>,
    /// Generators of the image of the incoming dual differential.
    pub image: Vec<Vec<Polynomial>>,
    /// Relations among the kernel generators: `Ext^j = coker(presentation)`.
    pub presentation: FreeModuleMap,
    pub annihilator: Ideal,
}

impl ExtModule {
    pub fn is_zero(&self, budget: &Budget) -> Result<bool> {
        Ok(self
            .annihilator
            .groebner(&MonomialOrder::Grevlex, budget)?
            .is_unit())
    }

    /// Whether the localization at `point` is nonzero: every generator of the
    /// annihilator vanishes there.
    pub fn supported_at(&self, point: &[Coeff]) -> Result<bool> {
        let field = self.annihilator.ring().field();
        for g in self.annihilator.gens() {
            if !field.is_zero(&g.eval(point)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug)]
pub struct ExtFamily {
    pub modules: Vec<ExtModule>,
    pub nvars: usize,
}

impl ExtFamily {
    /// Largest `j` with `Ext^j ≠ 0`, if any.
    pub fn top_nonzero(&self, budget: &Budget) -> Result<Option<usize>> {
        let mut top = None;
        for m in &self.modules {
            if !m.is_zero(budget)? {
                top = Some(m.index);
            }
        }
        Ok(top)
    }
}

fn annihilator(
    ring: &std::sync::Arc<crate::poly::Ring>,
    rank: usize,
    kernel: &[Vec<Polynomial>],
    image: &[Vec<Polynomial>],
    budget: &Budget,
) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for k in kernel {
        let q = Ideal::new(ring, module_quotient(ring, rank, image, k, budget)?)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q, budget)?,
        });
        if acc.as_ref().unwrap().gens().is_empty() {
            break;
        }
    }
    match acc {
        Some(a) => Ok(a),
        None => Ideal::new(ring, vec![Polynomial::one(ring)]),
    }
}

/// All `Ext^j(S/I, S)`, `0 <= j <= pd(S/I)`.
pub fn ext_family(ideal: &Ideal, budget: &Budget) -> Result<ExtFamily> {
    let ring = ideal.ring().clone();
    let res = free_resolution(ideal, false, budget)?;
    let c = res.pd();
    let mut modules = Vec::with_capacity(c + 1);
    for j in 0..=c {
        let rank = res.rank(j);
        // outgoing dual map F_j* -> F_{j+1}*, i.e. d_{j+1}^T
        let kernel: Vec<Vec<Polynomial>> = if j < c {
            let dual = res.maps[j].transpose();
            let syz = syzygies(&dual, &MonomialOrder::Grevlex, budget)?;
            syz.columns()
        } else {
            FreeModuleMap::identity(&ring, rank).columns()
        };
        // incoming dual map F_{j-1}* -> F_j*, i.e. d_j^T
        let image: Vec<Vec<Polynomial>> = if j == 0 {
            Vec::new()
        } else {
            res.maps[j - 1].transpose().columns()
        };
        let mut gens = kernel.clone();
        gens.extend(image.iter().cloned());
        let presentation = if kernel.is_empty() {
            FreeModuleMap::zero(&ring, 0, 0)
        } else {
            let all = FreeModuleMap::from_columns(&ring, rank, &gens)?;
            let syz = syzygies(&all, &MonomialOrder::Grevlex, budget)?;
            let cols: Vec<Vec<Polynomial>> = syz
                .columns()
                .into_iter()
                .map(|col| col[..kernel.len()].to_vec())
                .filter(|col| col.iter().any(|e| !e.is_zero()))
                .collect();
            FreeModuleMap::from_columns(&ring, kernel.len(), &cols)?
        };
        let annihilator = if kernel.is_empty() {
            Ideal::new(&ring, vec![Polynomial::one(&ring)])?
        } else {
            annihilator(&ring, rank, &kernel, &image, budget)?
        };
        modules.push(ExtModule {
            index: j,
            rank,
            kernel,
            image,
            presentation,
            annihilator,
        });
    }
    Ok(ExtFamily {
        modules,
        nvars: ring.nvars(),
    })
}

/// Depth of the local ring of `S/I` at `point`:
/// `m - max { j : point ∈ Supp Ext^j(S/I, S) }`.
pub fn depth_at_point(ideal: &Ideal, point: &[Coeff], budget: &Budget) -> Result<usize> {
    let ring = ideal.ring();
    if point.len() != ring.nvars() {
        return Err(Error::structural("point dimension does not match ring"));
    }
    let field = ring.field();
    if !point.iter().all(|c| field.owns(c)) {
        return Err(Error::structural("point coordinates not in the ring's field"));
    }
    for g in ideal.gens() {
        if !field.is_zero(&g.eval(point)?) {
            return Err(Error::contract("point does not lie on the variety"));
        }
    }
    let ext = ext_family(ideal, budget)?;
    let mut top = None;
    for m in &ext.modules {
        if m.supported_at(point)? {
            top = Some(m.index);
        }
    }
    let top = top.ok_or_else(|| Error::structural("no Ext module is supported at a point of V(I)"))?;
    Ok(ring.nvars() - top)
}
