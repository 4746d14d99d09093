//! Embedded projective varieties, their secant varieties, singular loci,
//! tangent cones and local invariants.

mod construct;
mod fixture;
mod local;
mod secant;
mod singular;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Coeff, Field, Polynomial, Ring};

pub use construct::{elliptic_sextic, implicitize, plane_curve_embed, rational_normal_curve, veronese};
pub use fixture::{read_fixture, write_fixture, Fixture};
pub use local::{chart_ideal, depth_at, multiplicity_at, tangent_cone};
pub use secant::{secant_join, secant_parametric};
pub use singular::{jacobian_minors, projectively_empty, same_radical, singular_locus, SingularLocus};

/// Discrete data carried alongside a variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyMeta {
    /// Intrinsic dimension.
    pub n: usize,
    /// Self-intersection `L^n` of the embedding line bundle.
    #[serde(rename = "Ln")]
    pub ln: i64,
    pub genus: Option<u32>,
}

impl VarietyMeta {
    pub fn meta_line(&self) -> Vec<(String, String)> {
        vec![
            ("n".into(), self.n.to_string()),
            ("Ln".into(), self.ln.to_string()),
            (
                "genus".into(),
                self.genus.map_or("none".to_string(), |g| g.to_string()),
            ),
        ]
    }

    pub fn from_meta_line(meta: &[(String, String)]) -> Result<Self> {
        let get = |k: &str| {
            meta.iter()
                .find(|(key, _)| key == k)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| Error::parse(1, format!("meta line lacks `{k}`")))
        };
        let bad = |k: &str| Error::parse(1, format!("bad meta value for `{k}`"));
        let n = get("n")?.parse().map_err(|_| bad("n"))?;
        let ln = get("Ln")?.parse().map_err(|_| bad("Ln"))?;
        let genus = match get("genus")? {
            "none" => None,
            g => Some(g.parse().map_err(|_| bad("genus"))?),
        };
        Ok(VarietyMeta { n, ln, genus })
    }
}

/// `X ⊂ P^N` given on a chart by coordinate polynomials `γ_0..γ_N` in the
/// parameters.
#[derive(Clone, Debug)]
pub struct ParametrizedVariety {
    params: Arc<Ring>,
    coords: Vec<Polynomial>,
    pub meta: VarietyMeta,
}

impl ParametrizedVariety {
    pub fn new(params: &Arc<Ring>, coords: Vec<Polynomial>, meta: VarietyMeta) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::structural("need at least two coordinates"));
        }
        if coords.iter().any(|c| c.ring() != params) {
            return Err(Error::structural("coordinates must live in the parameter ring"));
        }
        if meta.n > params.nvars() {
            return Err(Error::contract("more intrinsic dimensions than parameters"));
        }
        // the image is a point iff all coordinates are proportional
        let first = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::contract("all coordinates vanish"))?;
        let lead = &first.leading_term().unwrap().1;
        let mut proportional = true;
        for c in &coords {
            // c = λ·first  iff  lc(first)·c = lc(c)·first
            let lc = c.leading_term().map_or(params.field().zero(), |t| t.1.clone());
            if c.scale(lead) != first.scale(&lc) {
                proportional = false;
                break;
            }
        }
        if proportional {
            return Err(Error::contract("parametrization image is a point"));
        }
        Ok(ParametrizedVariety {
            params: params.clone(),
            coords,
            meta,
        })
    }

    pub fn params(&self) -> &Arc<Ring> {
        &self.params
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    /// `N` in `X ⊂ P^N`.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> Field {
        self.params.field()
    }

    pub fn change_field(&self, field: Field) -> Result<Self> {
        let ring = self.params.with_field(field);
        let coords = self
            .coords
            .iter()
            .map(|c| c.change_field(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(ParametrizedVariety {
            params: ring,
            coords,
            meta: self.meta.clone(),
        })
    }

    /// Coordinate ring `k[x0..xN]` of the ambient space.
    pub fn ambient_ring(&self) -> Result<Arc<Ring>> {
        Ring::indexed(self.field(), "x", self.coords.len())
    }
}

/// A projective variety given by its homogeneous ideal.
#[derive(Clone, Debug)]
pub struct EmbeddedVariety {
    pub ideal: Ideal,
    pub provenance: Option<ParametrizedVariety>,
    pub meta: VarietyMeta,
}

impl EmbeddedVariety {
    pub fn new(ideal: Ideal, provenance: Option<ParametrizedVariety>, meta: VarietyMeta) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::contract("embedded variety needs a homogeneous ideal"));
        }
        if let Some(p) = &provenance {
            if p.coords().len() != ideal.ring().nvars() {
                return Err(Error::structural("parametrization has the wrong number of coordinates"));
            }
            for g in ideal.gens() {
                if !g.substitute(p.coords(), p.params())?.is_zero() {
                    return Err(Error::contract(format!(
                        "generator {g} does not vanish on the parametrization"
                    )));
                }
            }
        }
        Ok(EmbeddedVariety {
            ideal,
            provenance,
            meta,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ring().nvars() - 1
    }

    pub fn change_field(&self, field: Field) -> Result<Self> {
        let provenance = match &self.provenance {
            Some(p) => Some(p.change_field(field)?),
            None => None,
        };
        EmbeddedVariety::new(self.ideal.change_field(field)?, provenance, self.meta.clone())
    }
}

/// A point of `P^N` in homogeneous coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PointOnVariety {
    coords: Vec<Coeff>,
    chart: usize,
}

impl PointOnVariety {
    /// The chart is the first nonzero coordinate.
    pub fn new(field: Field, coords: Vec<Coeff>) -> Result<Self> {
        if coords.iter().any(|c| !field.owns(c)) {
            return Err(Error::structural("coordinate outside the field"));
        }
        let chart = coords
            .iter()
            .position(|c| !field.is_zero(c))
            .ok_or_else(|| Error::contract("all coordinates are zero"))?;
        Ok(PointOnVariety { coords, chart })
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Result<Self> {
        PointOnVariety::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Parses `1,0,0` or `1/2,3,0`.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| field.parse_coeff(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        PointOnVariety::new(field, coords)
    }

    pub fn coords(&self) -> &[Coeff] {
        &self.coords
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    /// Affine coordinates in the chart, omitting the chart coordinate.
    pub fn affine(&self, field: Field) -> Vec<Coeff> {
        let inv = field.inv(&self.coords[self.chart]).expect("chart coordinate is nonzero");
        self.coords
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != self.chart)
            .map(|(_, c)| field.mul(c, &inv))
            .collect()
    }

    pub fn lies_on(&self, ideal: &Ideal) -> Result<bool> {
        if self.coords.len() != ideal.ring().nvars() {
            return Err(Error::structural("point has the wrong number of coordinates"));
        }
        let field = ideal.ring().field();
        for g in ideal.gens() {
            if !field.is_zero(&g.eval(&self.coords)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn check_on(&self, ideal: &Ideal) -> Result<()> {
        if self.lies_on(ideal)? {
            Ok(())
        } else {
            Err(Error::contract("point does not lie on the variety"))
        }
    }
}
