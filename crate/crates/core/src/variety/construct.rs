use std::sync::Arc;

use super::{EmbeddedVariety, ParametrizedVariety, VarietyMeta};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, saturation, Budget, Ideal};
use crate::poly::{parse_poly, Field, Monomial, MonomialOrder, Polynomial, Ring};

/// `C_d ⊂ P^d`: `γ_i = t^i`.
pub fn rational_normal_curve(d: usize, field: Field) -> Result<ParametrizedVariety> {
    if d < 2 {
        return Err(Error::contract("rational normal curve needs d >= 2"));
    }
    let r = Ring::new(field, &["t"])?;
    let t = Polynomial::var(&r, 0);
    let coords = (0..=d as u32).map(|i| t.pow(i)).collect();
    ParametrizedVariety::new(
        &r,
        coords,
        VarietyMeta {
            n: 1,
            ln: d as i64,
            genus: Some(0),
        },
    )
}

/// Degree-`k` monomials in two variables, by degree then descending power of the first.
fn plane_monomials(k: u32, nvars: usize, a: usize, b: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e in 0..=k {
        for i in (0..=e).rev() {
            let mut exps = vec![0u16; nvars];
            exps[a] = i as u16;
            exps[b] = (e - i) as u16;
            out.push(Monomial::new(&exps).unwrap());
        }
    }
    out
}

/// `v_k(P^2)` on the chart `(1, u, v)`: all monomials `u^a v^b` with `a + b <= k`.
pub fn veronese(k: u32, field: Field) -> Result<ParametrizedVariety> {
    if k < 1 {
        return Err(Error::contract("veronese needs k >= 1"));
    }
    let r = Ring::new(field, &["u", "v"])?;
    let coords = plane_monomials(k, 2, 0, 1)
        .into_iter()
        .map(|m| Polynomial::monomial(&r, m, field.one()))
        .collect();
    ParametrizedVariety::new(
        &r,
        coords,
        VarietyMeta {
            n: 2,
            ln: (k * k) as i64,
            genus: None,
        },
    )
}

/// Homogenizes an affine ideal on the chart `x_chart = 1` into `ambient`,
/// then saturates by `x_chart`.
pub(crate) fn close_chart(j: &Ideal, ambient: &Arc<Ring>, chart: usize, budget: &Budget) -> Result<Ideal> {
    let gb = j.groebner(&MonomialOrder::Grevlex, &budget.uncapped())?;
    let gens = gb
        .basis
        .iter()
        .map(|g| g.embed_by_name(ambient)?.homogenize(chart))
        .collect::<Result<Vec<_>>>()?;
    let hom = Ideal::new(ambient, gens)?;
    saturation(&hom, &Polynomial::var(ambient, chart), budget)
}

fn nonzero_constant(p: &Polynomial) -> Option<crate::poly::Coeff> {
    if p.is_constant() && !p.is_zero() {
        Some(p.terms()[0].1.clone())
    } else {
        None
    }
}

/// Homogeneous ideal of the closure of the image of `P`.
///
/// With `γ_0` a nonzero constant this eliminates the parameters from the
/// graph `x_i - γ_i/γ_0` on the chart `x_0 = 1`, homogenizes and saturates by
/// `x_0`. Otherwise it eliminates from the cone graph `x_i - λ γ_i`.
pub fn implicitize(p: &ParametrizedVariety, budget: &Budget) -> Result<EmbeddedVariety> {
    let ambient = p.ambient_ring()?;
    let field = p.field();
    let m = p.params().nvars();
    let pnames: Vec<&str> = p.params().names().iter().map(|s| s.as_str()).collect();
    let ideal = if let Some(c) = nonzero_constant(&p.coords()[0]) {
        let inv = field.inv(&c).unwrap();
        let chart_names: Vec<&str> = ambient.names()[1..].iter().map(|s| s.as_str()).collect();
        let graph = Ring::new(field, &[pnames.as_slice(), chart_names.as_slice()].concat())?;
        let to_graph: Vec<usize> = (0..m).collect();
        let mut gens = Vec::new();
        for (i, g) in p.coords().iter().enumerate().skip(1) {
            let x = Polynomial::var(&graph, m + i - 1);
            gens.push(x.sub(&g.remap(&graph, &to_graph)?.scale(&inv))?);
        }
        let j = eliminate(&Ideal::new(&graph, gens)?, &to_graph, budget)?;
        close_chart(&j, &ambient, 0, budget)?
    } else {
        let lam = p.params().fresh_name("lambda");
        let xnames: Vec<&str> = ambient.names().iter().map(|s| s.as_str()).collect();
        let graph = Ring::new(field, &[pnames.as_slice(), &[lam.as_str()], xnames.as_slice()].concat())?;
        let to_graph: Vec<usize> = (0..m).collect();
        let l = Polynomial::var(&graph, m);
        let mut gens = Vec::new();
        for (i, g) in p.coords().iter().enumerate() {
            let x = Polynomial::var(&graph, m + 1 + i);
            gens.push(x.sub(&l.mul(&g.remap(&graph, &to_graph)?)?)?);
        }
        let j = eliminate(&Ideal::new(&graph, gens)?, &(0..=m).collect::<Vec<_>>(), budget)?;
        let gens = j
            .gens()
            .iter()
            .map(|g| g.embed_by_name(&ambient))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ambient, gens)?
    };
    EmbeddedVariety::new(ideal, Some(p.clone()), p.meta.clone())
}

/// Image of the plane curve `V(f)` under the degree-`k` Veronese map, with
/// coordinates `x0..xM` ordered as in [`veronese`].
pub fn plane_curve_embed(f: &Polynomial, k: u32, budget: &Budget) -> Result<EmbeddedVariety> {
    let plane = f.ring();
    if plane.nvars() != 3 || !f.is_homogeneous() || f.is_constant() {
        return Err(Error::contract("plane curve must be a nonconstant form in three variables"));
    }
    if k < 1 {
        return Err(Error::contract("embedding degree must be positive"));
    }
    let e = f.total_degree().unwrap();
    // degree-k forms in (a, b, c), ordered like the Veronese chart with c = 1
    let mut forms = Vec::new();
    for m in plane_monomials(k, 3, 0, 1) {
        let d = m.degree();
        let mut exps = m.exps().to_vec();
        exps[2] = (k - d) as u16;
        forms.push(Monomial::new(&exps)?);
    }
    let ambient = Ring::indexed(plane.field(), "x", forms.len())?;
    let pnames: Vec<&str> = plane.names().iter().map(|s| s.as_str()).collect();
    let xnames: Vec<&str> = ambient.names().iter().map(|s| s.as_str()).collect();
    let graph = Ring::new(plane.field(), &[pnames.as_slice(), xnames.as_slice()].concat())?;
    let mut gens = vec![f.remap(&graph, &[0, 1, 2])?];
    for (i, m) in forms.iter().enumerate() {
        let x = Polynomial::var(&graph, 3 + i);
        let mm = Polynomial::monomial(&graph, m.remap(graph.nvars(), &[0, 1, 2]), plane.field().one());
        gens.push(x.sub(&mm)?);
    }
    let j = eliminate(&Ideal::new(&graph, gens)?, &[0, 1, 2], budget)?;
    let gens = j
        .gens()
        .iter()
        .map(|g| g.embed_by_name(&ambient))
        .collect::<Result<Vec<_>>>()?;
    let genus = (e - 1) * (e - 2) / 2;
    EmbeddedVariety::new(
        Ideal::new(&ambient, gens)?,
        None,
        VarietyMeta {
            n: 1,
            ln: (e * k) as i64,
            genus: Some(genus),
        },
    )
}

/// The plane cubic `y^2 z = x^3 - x z^2` re-embedded by conics: an elliptic
/// normal sextic in `P^5`.
pub fn elliptic_sextic(field: Field, budget: &Budget) -> Result<EmbeddedVariety> {
    let plane = Ring::new(field, &["x", "y", "z"])?;
    let cubic = parse_poly(&plane, "y^2*z - x^3 + x*z^2")?;
    plane_curve_embed(&cubic, 2, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::dim_degree;

    fn strings(v: &EmbeddedVariety) -> Vec<String> {
        let gb = v.ideal.groebner(&MonomialOrder::Grevlex, &Budget::unlimited()).unwrap();
        gb.basis.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn conic() {
        let c = implicitize(&rational_normal_curve(2, Field::Rational).unwrap(), &Budget::unlimited()).unwrap();
        assert_eq!(strings(&c), vec!["x1^2 - x0*x2"]);
    }

    #[test]
    fn twisted_cubic() {
        let c = implicitize(&rational_normal_curve(3, Field::Rational).unwrap(), &Budget::unlimited()).unwrap();
        let h = dim_degree(&c.ideal, &Budget::unlimited()).unwrap();
        assert_eq!((h.projective_dim, h.degree), (1, 3));
        assert_eq!(c.ideal.groebner(&MonomialOrder::Grevlex, &Budget::unlimited()).unwrap().basis.len(), 3);
    }

    #[test]
    fn veronese_surface() {
        let p = veronese(2, Field::Rational).unwrap();
        assert_eq!(p.ambient_dim(), 5);
        assert_eq!(p.meta.ln, 4);
        let v = implicitize(&p, &Budget::unlimited()).unwrap();
        let h = dim_degree(&v.ideal, &Budget::unlimited()).unwrap();
        assert_eq!((h.projective_dim, h.degree), (2, 4));
        assert_eq!(v.ideal.gens().len(), 6);
    }

    #[test]
    fn veronese_plane() {
        let p = veronese(1, Field::Rational).unwrap();
        let v = implicitize(&p, &Budget::unlimited()).unwrap();
        assert!(v.ideal.gens().is_empty());
    }

    #[test]
    fn cone_route_matches_chart_route() {
        // (s^2, s t, t^2) has no constant coordinate
        let r = Ring::new(Field::Rational, &["s", "t"]).unwrap();
        let coords = ["s^2", "s*t", "t^2"].iter().map(|c| parse_poly(&r, c).unwrap()).collect();
        let meta = VarietyMeta { n: 1, ln: 2, genus: Some(0) };
        let p = ParametrizedVariety::new(&r, coords, meta).unwrap();
        let c = implicitize(&p, &Budget::unlimited()).unwrap();
        assert_eq!(strings(&c), vec!["x1^2 - x0*x2"]);
    }

    #[test]
    fn point_image_rejected() {
        let r = Ring::new(Field::Rational, &["t"]).unwrap();
        let coords = vec![parse_poly(&r, "t").unwrap(), parse_poly(&r, "2*t").unwrap()];
        let meta = VarietyMeta { n: 1, ln: 1, genus: Some(0) };
        assert!(ParametrizedVariety::new(&r, coords, meta).is_err());
    }

    #[test]
    fn sextic() {
        let e = elliptic_sextic(Field::prime(32003).unwrap(), &Budget::unlimited()).unwrap();
        let h = dim_degree(&e.ideal, &Budget::unlimited()).unwrap();
        assert_eq!((h.projective_dim, h.degree), (1, 6));
        assert_eq!(e.meta, VarietyMeta { n: 1, ln: 6, genus: Some(1) });
    }
}
