use serde_json::{json, Value};

use super::{predict, VarietyDescriptor};
use crate::error::Result;
use crate::groebner::{write_ideal_text, Budget};
use crate::hilbert::dim_degree;
use crate::modres::graded_depth;
use crate::poly::MonomialOrder;
use crate::report::Report;
use crate::variety::{depth_at, multiplicity_at, secant_join, singular_locus, EmbeddedVariety, PointOnVariety};

/// Runs `f`; budget exhaustion becomes a skipped item, any other error a failure.
fn run(report: &mut Report, name: &str, predicted: Option<Value>, f: impl FnOnce() -> Result<Value>) -> Option<Value> {
    match f() {
        Ok(v) => {
            report.check(name, predicted, Some(v.clone()), None);
            Some(v)
        }
        Err(e) if e.is_budget() => {
            report.skip(name, predicted, format!("budget exhausted: {e}"));
            None
        }
        Err(e) => {
            report.fail(name, predicted, e.to_string());
            None
        }
    }
}

/// Reconciles the oracle's prediction for `d` with computations on the
/// fixture `x` and a point `pt` of it.
pub fn verify(d: &VarietyDescriptor, x: &EmbeddedVariety, pt: &PointOnVariety, budget: &Budget) -> Result<Report> {
    let v = predict(d)?;
    let field = x.ring().field();
    let desc = serde_json::to_string(d)?;
    let text = write_ideal_text(&x.ideal, &x.meta.meta_line());
    let point: Vec<String> = pt.coords().iter().map(|c| field.format_coeff(c)).collect();
    let point = point.join(",");
    let mut report = Report::new(vec!["verify".into()], &[&desc, &text, &point]);
    let n = d.n();
    let expected = 2 * n + 1;

    run(&mut report, "dim_X", Some(json!(n)), || Ok(json!(dim_degree(&x.ideal, budget)?.projective_dim)));
    run(&mut report, "degree_X", Some(json!(d.ln()?)), || Ok(json!(dim_degree(&x.ideal, budget)?.degree)));
    let on = pt.lies_on(&x.ideal)?;
    report.check("point_on_X", Some(json!(true)), Some(json!(on)), None);

    const DOWNSTREAM: [&str; 7] = [
        "secant_dim",
        "deficiency",
        "singular_only_along_X",
        "acm",
        "depth_at_x",
        "cm_at_x",
        "multiplicity_at_x",
    ];
    // invariants of the secant are only meaningful for the X the descriptor names
    if report.has_failure() {
        for name in DOWNSTREAM {
            report.skip(name, None, "X does not match the descriptor");
        }
        return Ok(report);
    }
    let sigma = match secant_join(x, budget) {
        Ok(s) => Some(s),
        Err(e) if e.is_budget() => {
            report.skip("secant", None, format!("budget exhausted: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    if let Ok(gb) = x.ideal.groebner(&MonomialOrder::Grevlex, budget) {
        report.stats.absorb(&gb.stats);
    }
    let tva = v.three_very_ample.value;
    let Some(sigma) = sigma else {
        for name in DOWNSTREAM {
            report.skip(name, None, "secant not computed");
        }
        return Ok(report);
    };
    let hs = run(&mut report, "secant_dim", tva.then(|| json!(expected)), || {
        Ok(json!(dim_degree(&sigma.ideal, budget)?.projective_dim))
    });
    if let Ok(gb) = sigma.ideal.groebner(&MonomialOrder::Grevlex, budget) {
        report.stats.absorb(&gb.stats);
    }
    let sdim = hs.as_ref().and_then(|v| v.as_i64());
    match sdim {
        Some(s) => report.check(
            "deficiency",
            Some(json!(v.deficient_warning.value)),
            Some(json!(s < expected as i64)),
            Some("warning = L not known to be 3-very ample; computed = dim < 2n+1".into()),
        ),
        None => report.skip("deficiency", Some(json!(v.deficient_warning.value)), "secant dimension not computed"),
    }

    run(&mut report, "singular_only_along_X", tva.then(|| json!(true)), || {
        let sl = singular_locus(&sigma.ideal, None, budget)?;
        // V(Jac) ⊆ X  iff  I_X ⊆ √Jac
        let mut inside = true;
        let gb = sl.ideal.groebner(&MonomialOrder::Grevlex, budget)?;
        for g in x.ideal.gens() {
            if !gb.contains(g)? && !crate::groebner::radical_membership(g, &sl.ideal, budget)? {
                inside = false;
                break;
            }
        }
        Ok(json!(inside))
    });

    let acm_pred = match d {
        VarietyDescriptor::Curve { .. } if v.assumption_satisfied.value => Some(json!(true)),
        _ => None,
    };
    run(&mut report, "acm", acm_pred, || {
        let h = dim_degree(&sigma.ideal, budget)?;
        Ok(json!(graded_depth(&sigma.ideal, budget)? == h.krull_dim))
    });

    if !on {
        for name in ["depth_at_x", "cm_at_x", "multiplicity_at_x"] {
            report.fail(name, None, "point is not on X");
        }
        return Ok(report);
    }
    let depth = run(&mut report, "depth_at_x", v.depth_at_x_points.value.map(|d| json!(d)), || {
        Ok(json!(depth_at(&sigma, pt, budget)?))
    });
    match (depth.and_then(|d| d.as_i64()), sdim) {
        (Some(dep), Some(s)) => report.check("cm_at_x", v.cm.value.map(|c| json!(c)), Some(json!(dep == s)), None),
        _ => report.skip("cm_at_x", v.cm.value.map(|c| json!(c)), "depth or dimension not computed"),
    }
    run(&mut report, "multiplicity_at_x", Some(json!(v.multiplicity.value)), || {
        Ok(json!(multiplicity_at(&sigma, pt, budget)?))
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;
    use crate::report::Status;
    use crate::variety::{implicitize, rational_normal_curve};

    #[test]
    fn quartic_all_pass() {
        let f = Field::prime(32003).unwrap();
        let b = Budget::unlimited();
        let x = implicitize(&rational_normal_curve(4, f).unwrap(), &b).unwrap();
        let pt = PointOnVariety::from_i64(f, &[1, 0, 0, 0, 0]).unwrap();
        let r = verify(&VarietyDescriptor::Curve { g: 0, deg_l: 4 }, &x, &pt, &b).unwrap();
        for i in &r.items {
            assert_eq!(i.status, Status::Pass, "{}", r.to_text());
        }
        assert_eq!(r.item("multiplicity_at_x").unwrap().computed, Some(json!(2)));
    }
}
