use super::construct::close_chart;
use super::{EmbeddedVariety, ParametrizedVariety};
use crate::error::Result;
use crate::groebner::{eliminate, Budget, Ideal};
use crate::poly::{Polynomial, Ring};

/// Secant variety as the join of the affine cone with itself.
///
/// The cone of the join is `{y + z}`; substituting `z = x - y` gives
/// `I_X(y) + I_X(x - y)`, from which `y` is eliminated.
pub fn secant_join(x: &EmbeddedVariety, budget: &Budget) -> Result<EmbeddedVariety> {
    let ring = x.ring();
    let n = ring.nvars();
    let ynames: Vec<String> = ring.names().iter().map(|v| ring.fresh_name(&format!("y_{v}"))).collect();
    let join = ring.extend(&ynames, &[] as &[String])?;
    let y: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&join, i)).collect();
    let diff: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::var(&join, n + i).sub(&y[i]))
        .collect::<Result<_>>()?;
    let mut gens = Vec::new();
    for g in x.ideal.gens() {
        gens.push(g.substitute(&y, &join)?);
        gens.push(g.substitute(&diff, &join)?);
    }
    let elim = eliminate(&Ideal::new(&join, gens)?, &(0..n).collect::<Vec<_>>(), budget)?;
    let gens = elim
        .gens()
        .iter()
        .map(|g| g.embed_by_name(ring))
        .collect::<Result<Vec<_>>>()?;
    EmbeddedVariety::new(Ideal::new(ring, gens)?, None, x.meta.clone())
}

/// Secant variety from the two-point parametrization
/// `(1 - s) γ(u) + s γ(v)` on the chart `x_0 = 1`, or `a γ(u) + b γ(v)` on
/// the cone when `γ_0` is not constant.
pub fn secant_parametric(p: &ParametrizedVariety, budget: &Budget) -> Result<EmbeddedVariety> {
    let ambient = p.ambient_ring()?;
    let field = p.field();
    let m = p.params().nvars();
    let names = p.params().names();
    let mut pnames: Vec<String> = names.iter().map(|v| format!("{v}_u")).collect();
    pnames.extend(names.iter().map(|v| format!("{v}_v")));
    let gamma0 = &p.coords()[0];
    let chart = gamma0.is_constant() && !gamma0.is_zero();
    let (extra, xstart): (Vec<String>, usize) = if chart {
        (vec!["sec_s".into()], 1)
    } else {
        (vec!["sec_a".into(), "sec_b".into()], 0)
    };
    let mut all = pnames.clone();
    all.extend(extra.iter().cloned());
    all.extend(ambient.names()[xstart..].iter().cloned());
    let graph = Ring::new(field, &all)?;
    let to_u: Vec<usize> = (0..m).collect();
    let to_v: Vec<usize> = (m..2 * m).collect();
    let k = 2 * m + extra.len();
    let (wu, wv) = if chart {
        let s = Polynomial::var(&graph, 2 * m);
        let c = field.inv(&gamma0.terms()[0].1).unwrap();
        let one = Polynomial::one(&graph);
        (one.sub(&s)?.scale(&c), s.scale(&c))
    } else {
        (Polynomial::var(&graph, 2 * m), Polynomial::var(&graph, 2 * m + 1))
    };
    let mut gens = Vec::new();
    for (i, g) in p.coords().iter().enumerate().skip(xstart) {
        let x = Polynomial::var(&graph, k + i - xstart);
        let pt = wu
            .mul(&g.remap(&graph, &to_u)?)?
            .add(&wv.mul(&g.remap(&graph, &to_v)?)?)?;
        gens.push(x.sub(&pt)?);
    }
    let j = eliminate(&Ideal::new(&graph, gens)?, &(0..k).collect::<Vec<_>>(), budget)?;
    let ideal = if chart {
        close_chart(&j, &ambient, 0, budget)?
    } else {
        let gens = j
            .gens()
            .iter()
            .map(|g| g.embed_by_name(&ambient))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ambient, gens)?
    };
    EmbeddedVariety::new(ideal, None, p.meta.clone())
}
