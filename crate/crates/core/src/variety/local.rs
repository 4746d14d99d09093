use super::{EmbeddedVariety, PointOnVariety};
use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::hilbert::dim_degree;
use crate::modres::depth_at_point;
use crate::poly::{Coeff, MonomialOrder, Ring};

/// Dehomogenization at `x_chart = 1`, in the ring without `x_chart`.
pub fn chart_ideal(ideal: &Ideal, chart: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    let names: Vec<&str> = ring
        .names()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != chart)
        .map(|(_, s)| s.as_str())
        .collect();
    let affine = Ring::new(ring.field(), &names)?;
    let map: Vec<usize> = (0..ring.nvars()).map(|i| if i > chart { i - 1 } else { i.min(names.len() - 1) }).collect();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.dehomogenize(chart).remap(&affine, &map))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&affine, gens)
}

/// Ideal of initial forms of `I` at `point`, homogeneous in the variables of `I`.
///
/// After translating the point to the origin the generators are homogenized
/// with `t`; a basis in an order where higher powers of `t` lead, dehomogenized,
/// is a standard basis for the local degree order, whose lowest forms
/// generate the tangent cone.
pub fn tangent_cone(ideal: &Ideal, point: &[Coeff], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::structural("point has the wrong number of coordinates"));
    }
    let field = ring.field();
    for g in ideal.gens() {
        if !field.is_zero(&g.eval(point)?) {
            return Err(Error::contract("point does not lie on the variety"));
        }
    }
    let t = ring.fresh_name("t");
    let ext = ring.extend(&[] as &[&str], &[t.as_str()])?;
    let to_ext: Vec<usize> = (0..n).collect();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.translate(point)?.remap(&ext, &to_ext)?.homogenize(n))
        .collect::<Result<Vec<_>>>()?;
    let mut weights = vec![1u32; n + 1];
    weights[n] = 2;
    let gb = Ideal::new(&ext, gens)?.groebner(&MonomialOrder::WeightGrevlex(weights), &budget.uncapped())?;
    let back: Vec<usize> = (0..=n).map(|i| i.min(n - 1)).collect();
    let forms = gb
        .basis
        .iter()
        .map(|g| Ok(g.dehomogenize(n).remap(ring, &back)?.lowest_form()))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, forms)
}

/// Samuel multiplicity of `X` at `pt`: the degree of the tangent cone in the
/// affine chart of `pt`.
pub fn multiplicity_at(x: &EmbeddedVariety, pt: &PointOnVariety, budget: &Budget) -> Result<u64> {
    pt.check_on(&x.ideal)?;
    let field = x.ring().field();
    let affine = chart_ideal(&x.ideal, pt.chart())?;
    let cone = tangent_cone(&affine, &pt.affine(field), budget)?;
    Ok(dim_degree(&cone, budget)?.degree)
}

/// Depth of the local ring of `X` at `pt`, computed in the affine chart of `pt`.
pub fn depth_at(x: &EmbeddedVariety, pt: &PointOnVariety, budget: &Budget) -> Result<usize> {
    pt.check_on(&x.ideal)?;
    let field = x.ring().field();
    let affine = chart_ideal(&x.ideal, pt.chart())?;
    depth_at_point(&affine, &pt.affine(field), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Polynomial};

    fn cone_of(gens: &[&str]) -> Vec<String> {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, gens).unwrap();
        let z = vec![Field::Rational.zero(); 2];
        let c = tangent_cone(&i, &z, &Budget::unlimited()).unwrap();
        let gb = c.groebner(&MonomialOrder::Grevlex, &Budget::unlimited()).unwrap();
        gb.basis.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn cusp_node_smooth() {
        assert_eq!(cone_of(&["y^2 - x^3"]), vec!["y^2"]);
        assert_eq!(cone_of(&["y^2 - x^2 - x^3"]), vec!["x^2 - y^2"]);
        assert_eq!(cone_of(&["y - x^2"]), vec!["y"]);
    }

    #[test]
    fn translated_point() {
        let r = Ring::new(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["(y-1)^2 - (x-2)^3"]).unwrap();
        let f = Field::Rational;
        let c = tangent_cone(&i, &[f.from_i64(2), f.from_i64(1)], &Budget::unlimited()).unwrap();
        assert_eq!(c.gens(), &[Polynomial::var(&r, 1).pow(2)]);
        assert!(tangent_cone(&i, &[f.zero(), f.zero()], &Budget::unlimited()).is_err());
    }

    #[test]
    fn chart_drops_variable() {
        let r = Ring::new(Field::Rational, &["x0", "x1", "x2"]).unwrap();
        let i = Ideal::parse(&r, &["x0*x2 - x1^2"]).unwrap();
        let a = chart_ideal(&i, 0).unwrap();
        assert_eq!(a.ring().names(), &["x1", "x2"]);
        assert_eq!(a.gens()[0].to_string(), "-x1^2 + x2");
    }
}
