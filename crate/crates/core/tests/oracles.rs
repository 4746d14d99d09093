mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use secantlab::groebner::Budget;
use secantlab::hilbert::dim_degree;
use secantlab::oracle::{binomial, hypersurface_cohomology, predict, Tri, VarietyDescriptor};
use secantlab::poly::{Coeff, Field};
use secantlab::variety::{
    elliptic_sextic, implicitize, multiplicity_at, rational_normal_curve, secant_join, veronese, ParametrizedVariety,
    PointOnVariety,
};

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize) -> Vec<Coeff> {
    (0..n).map(|_| fp().from_i64(rng.gen_range(1..P as i64))).collect()
}

fn image(p: &ParametrizedVariety, params: &[Coeff]) -> Vec<Coeff> {
    p.coords().iter().map(|c| c.eval(params).unwrap()).collect()
}

/// Every generator of the implicit ideal vanishes at 30 random image points.
fn check_vanishing(p: &ParametrizedVariety, seed: u64) {
    let x = implicitize(p, &Budget::unlimited()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..30 {
        let t = random_coeffs(&mut rng, p.params().nvars());
        let pt = image(p, &t);
        for g in x.ideal.gens() {
            assert!(fp().is_zero(&g.eval(&pt).unwrap()), "{g} at {t:?}");
        }
    }
}

#[test]
fn implicitized_curves_vanish_on_parametrization() {
    for d in 2..=6 {
        check_vanishing(&rational_normal_curve(d, fp()).unwrap(), d as u64);
    }
}

#[test]
fn implicitized_veronese_vanishes_on_parametrization() {
    check_vanishing(&veronese(2, fp()).unwrap(), 7);
    check_vanishing(&veronese(3, fp()).unwrap(), 8);
}

#[test]
fn implicit_degree_matches_count() {
    // deg C_d = d; deg v_k(P^2) = k^2
    let b = Budget::unlimited();
    for d in 2..=6 {
        let h = dim_degree(&implicitize(&rational_normal_curve(d, fp()).unwrap(), &b).unwrap().ideal, &b).unwrap();
        assert_eq!((h.projective_dim, h.degree), (1, d as u64));
    }
    for k in 2..=3 {
        let h = dim_degree(&implicitize(&veronese(k, fp()).unwrap(), &b).unwrap().ideal, &b).unwrap();
        assert_eq!((h.projective_dim, h.degree), (2, (k * k) as u64));
    }
}

#[test]
fn secant_equations_vanish_on_random_secant_points() {
    let b = Budget::unlimited();
    let p = rational_normal_curve(5, fp()).unwrap();
    let s = secant_join(&implicitize(&p, &b).unwrap(), &b).unwrap();
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let u = image(&p, &random_coeffs(&mut rng, 1));
        let v = image(&p, &random_coeffs(&mut rng, 1));
        let [a, c] = [random_coeffs(&mut rng, 1).remove(0), random_coeffs(&mut rng, 1).remove(0)];
        let pt: Vec<Coeff> = u.iter().zip(&v).map(|(x, y)| f.add(&f.mul(&a, x), &f.mul(&c, y))).collect();
        for g in s.ideal.gens() {
            assert!(f.is_zero(&g.eval(&pt).unwrap()));
        }
    }
}

#[test]
fn multiplicity_one_at_random_smooth_points() {
    let b = Budget::unlimited();
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = rational_normal_curve(4, f).unwrap();
    let x = implicitize(&p, &b).unwrap();
    let s = secant_join(&x, &b).unwrap();
    for _ in 0..5 {
        let pt = image(&p, &random_coeffs(&mut rng, 1));
        let pt = PointOnVariety::new(f, pt).unwrap();
        assert_eq!(multiplicity_at(&x, &pt, &b).unwrap(), 1);
        // the secant is smooth off the curve
        let u = image(&p, &random_coeffs(&mut rng, 1));
        let v = image(&p, &random_coeffs(&mut rng, 1));
        let q: Vec<Coeff> = u.iter().zip(&v).map(|(a, c)| f.add(a, c)).collect();
        let q = PointOnVariety::new(f, q).unwrap();
        assert_eq!(multiplicity_at(&s, &q, &b).unwrap(), 1);
    }
}

#[test]
fn elliptic_sextic_invariants() {
    let b = Budget::unlimited();
    let e = elliptic_sextic(fp(), &b).unwrap();
    let h = dim_degree(&e.ideal, &b).unwrap();
    assert_eq!((h.projective_dim, h.degree), (1, 6));
    // projectively normal genus-1 sextic: H(d) = 6d = deg * d + 1 - g for d >= 1
    for d in 1..=4u32 {
        assert_eq!(hilbert_by_linear_algebra(&e.ideal, d), 6 * d as usize);
        assert_eq!(h.hilbert_function(d), (6 * d).into());
    }
}

/// `dim_k S_m` for `S = k[x_0..x_{r}]`, by enumeration.
fn count_monomials(vars: usize, m: i64) -> u64 {
    if m < 0 {
        0
    } else {
        monomials_of_degree(vars, m as u32).len() as u64
    }
}

#[test]
fn hypersurface_cohomology_by_monomial_count() {
    // Serre duality on P^{n+1}: h^n(X, O(k)) = h^0(O(d - k - n - 2)), and
    // h^n(O_X) = h^0(O(d - n - 2)); n+2 homogeneous variables
    for n in 1..=3u32 {
        for d in 1..=12u32 {
            for k in 0..=10u32 {
                let (h, hk) = hypersurface_cohomology(n, d, k).unwrap();
                let vars = n as usize + 2;
                assert_eq!(hk, count_monomials(vars, d as i64 - k as i64 - n as i64 - 2), "n={n} d={d} k={k}");
                assert_eq!(h[n as usize], count_monomials(vars, d as i64 - n as i64 - 2));
                assert!(h[1..n as usize].iter().all(|&x| x == 0));
            }
        }
    }
}

#[test]
fn multiplicity_formula_table() {
    // L^n - 2^n
    let cases = [
        (VarietyDescriptor::Curve { g: 0, deg_l: 4 }, 2),
        (VarietyDescriptor::Curve { g: 0, deg_l: 5 }, 3),
        (VarietyDescriptor::Curve { g: 1, deg_l: 6 }, 4),
        (VarietyDescriptor::Veronese { n: 2, k: 3 }, 5),
        (VarietyDescriptor::Hypersurface { n: 1, d: 10, k: 7 }, 68),
        (VarietyDescriptor::Hypersurface { n: 2, d: 12, k: 8 }, 764),
    ];
    for (d, m) in cases {
        assert_eq!(predict(&d).unwrap().multiplicity.value, m, "{d:?}");
    }
}

#[test]
fn non_du_bois_family() {
    // even d >= 2(n+4), k = (d+4)/2: normal, h^n(X, L) = C(d-k-1, n+1) != 0, not Du Bois
    for n in 1..=3u32 {
        let mut d = 2 * (n + 4);
        while d <= 2 * (n + 4) + 6 {
            let k = (d + 4) / 2;
            let desc = VarietyDescriptor::Hypersurface { n, d, k };
            let v = predict(&desc).unwrap();
            let expected = binomial(d as i64 - k as i64 - 1, n as i64 + 1).unwrap();
            assert!(expected > 0);
            assert_eq!(desc.top_cohomology_of_l().unwrap(), Some(expected));
            assert_eq!(v.normal.value, Tri::Yes, "{desc:?}");
            assert_eq!(v.du_bois.value, Tri::No, "{desc:?}");
            assert_eq!(v.rational.value, Tri::No);
            assert!(v.is_consistent());
            d += 2;
        }
    }
}

#[test]
fn rational_field_pipeline_agrees_with_fp() {
    let b = Budget::unlimited();
    let q = implicitize(&rational_normal_curve(4, Field::Rational).unwrap(), &b).unwrap();
    let sq = secant_join(&q, &b).unwrap();
    let hq = dim_degree(&sq.ideal, &b).unwrap();
    let sp = sq.change_field(fp()).unwrap();
    let hp = dim_degree(&sp.ideal, &b).unwrap();
    assert_eq!(hq.numerator, hp.numerator);
    assert_eq!((hq.projective_dim, hq.degree), (3, 3));
}

#[test]
fn depth_off_the_curve_is_full() {
    // smooth points of Sigma(C_4) off C_4: local depth equals dim = 3
    let b = Budget::unlimited();
    let f = fp();
    let p = rational_normal_curve(4, f).unwrap();
    let s = secant_join(&implicitize(&p, &b).unwrap(), &b).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3 {
        let u = image(&p, &random_coeffs(&mut rng, 1));
        let v = image(&p, &random_coeffs(&mut rng, 1));
        let q: Vec<Coeff> = u.iter().zip(&v).map(|(a, c)| f.add(a, c)).collect();
        let q = PointOnVariety::new(f, q).unwrap();
        assert_eq!(secantlab::variety::depth_at(&s, &q, &b).unwrap(), 3);
    }
}
