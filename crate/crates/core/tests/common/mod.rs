//! Strategies, independent oracles and property bodies shared by the
//! property suites and the acceptance target.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use secantlab::groebner::{Budget, Ideal};
use secantlab::hilbert::dim_degree;
use secantlab::modres::free_resolution;
use secantlab::poly::{Coeff, Field, Monomial, MonomialOrder, Polynomial, Ring};
use secantlab::variety::{implicitize, rational_normal_curve, secant_join, secant_parametric};

pub const P: u32 = 32003;

pub fn fp() -> Field {
    Field::prime(P).unwrap()
}

pub fn ring(field: Field, n: usize) -> Arc<Ring> {
    Ring::indexed(field, "x", n).unwrap()
}

pub fn orders(n: usize) -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::Grevlex,
        MonomialOrder::BlockElim(n / 2),
        MonomialOrder::WeightGrevlex((1..=n as u32).map(|i| 1 + i % 3).collect()),
    ]
}

pub fn monomial(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(&e).unwrap())
}

/// Exponent vectors of a given total degree.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u16>> {
    fn go(n: usize, d: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == n - 1 {
            cur.push(d as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e as u16);
            go(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Integer coefficients in `[-5, 5]`, so the same data makes sense over QQ and F_p.
pub fn small_poly(r: &Arc<Ring>, terms: Vec<(Vec<u16>, i64)>) -> Polynomial {
    let f = r.field();
    Polynomial::from_terms(
        r,
        terms
            .into_iter()
            .map(|(e, c)| (Monomial::new(&e).unwrap(), f.from_i64(c)))
            .collect(),
    )
}

fn coefficient() -> impl Strategy<Value = i64> {
    prop_oneof![-5i64..=-1, 1i64..=5]
}

/// Raw term lists for a polynomial in `n` variables, degree at most `d`.
pub fn terms(n: usize, d: u16, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=d, n), coefficient()).prop_filter("degree", move |(e, _)| {
            e.iter().map(|&x| x as u32).sum::<u32>() <= d as u32
        }),
        1..=max_terms,
    )
}

/// Raw term lists for a form of degree exactly `d`.
pub fn form_terms(n: usize, d: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    let mons = monomials_of_degree(n, d);
    prop::collection::vec((prop::sample::select(mons), coefficient()), 1..=max_terms)
}

/// Generator term lists for a small ideal in `n` variables.
pub fn ideal_terms(n: usize) -> impl Strategy<Value = Vec<Vec<(Vec<u16>, i64)>>> {
    prop::collection::vec(terms(n, 3, 3), 1..=3)
}

/// Homogeneous generators of degrees 1..=3.
pub fn homogeneous_ideal_terms(n: usize) -> impl Strategy<Value = Vec<Vec<(Vec<u16>, i64)>>> {
    prop::collection::vec((1u32..=3).prop_flat_map(move |d| form_terms(n, d, 3)), 1..=3)
}

pub fn build_ideal(r: &Arc<Ring>, gens: Vec<Vec<(Vec<u16>, i64)>>) -> Option<Ideal> {
    let gens: Vec<Polynomial> = gens
        .into_iter()
        .map(|t| small_poly(r, t))
        .filter(|g| !g.is_zero())
        .collect();
    (!gens.is_empty()).then(|| Ideal::new(r, gens).unwrap())
}

fn p_value(c: &Coeff) -> u64 {
    match c {
        Coeff::P(v) => *v as u64,
        Coeff::Q(_) => panic!("expected an F_p coefficient"),
    }
}

/// Rank of a dense matrix over F_p by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `dim_k (S/I)_d` from the span of `m * g` with `deg m + deg g = d`,
/// for homogeneous generators over F_p. No Gröbner basis involved.
pub fn hilbert_by_linear_algebra(ideal: &Ideal, d: u32) -> usize {
    let n = ideal.ring().nvars();
    let basis = monomials_of_degree(n, d);
    let index: std::collections::HashMap<Vec<u16>, usize> =
        basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.gens() {
        let dg = g.total_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - dg) {
            let mut row = vec![0u64; basis.len()];
            for (mon, c) in g.terms() {
                let e: Vec<u16> = mon.exps().iter().zip(&m).map(|(a, b)| a + b).collect();
                row[index[&e]] = p_value(c);
            }
            rows.push(row);
        }
    }
    basis.len() - rank_mod_p(rows, P as u64)
}

// ---- property bodies ----

pub fn order_axioms(ord: &MonomialOrder, a: &Monomial, b: &Monomial, c: &Monomial) -> Result<(), TestCaseError> {
    let one = Monomial::one(a.nvars());
    prop_assert_eq!(ord.cmp(a, b), ord.cmp(b, a).reverse());
    prop_assert_eq!(ord.cmp(a, a), Ordering::Equal);
    prop_assert_eq!(ord.cmp(a, b) == Ordering::Equal, a == b);
    prop_assert_ne!(ord.cmp(a, &one), Ordering::Less, "1 is the least monomial");
    if ord.cmp(a, b) == Ordering::Less {
        prop_assert_eq!(ord.cmp(&a.mul(c), &b.mul(c)), Ordering::Less, "multiplicative");
        if ord.cmp(b, c) == Ordering::Less {
            prop_assert_eq!(ord.cmp(a, c), Ordering::Less, "transitive");
        }
    }
    Ok(())
}

fn divides_some_term(leads: &[Monomial], f: &Polynomial) -> bool {
    f.terms().iter().any(|(m, _)| leads.iter().any(|l| l.divides(m)))
}

pub fn gb_idempotent(ideal: &Ideal, ord: &MonomialOrder) -> Result<(), TestCaseError> {
    let b = Budget::unlimited();
    let gb = ideal.groebner(ord, &b).unwrap();
    for g in ideal.gens() {
        prop_assert!(gb.contains(g).unwrap(), "generator {} not in its own ideal", g);
    }
    // reduced: no term of g_i is divisible by the leading monomial of another g_j
    let leads = gb.leading_monomials();
    for (i, g) in gb.basis.iter().enumerate() {
        let others: Vec<Monomial> = leads.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, l)| l.clone()).collect();
        prop_assert!(!divides_some_term(&others, g), "basis is not reduced");
    }
    let again = Ideal::new(ideal.ring(), gb.basis.clone()).unwrap().groebner(ord, &b).unwrap();
    prop_assert_eq!(&again.basis, &gb.basis);
    Ok(())
}

pub fn membership_sound(
    ideal: &Ideal,
    cofactors: &[Polynomial],
    other: &Polynomial,
) -> Result<(), TestCaseError> {
    let b = Budget::unlimited();
    let gb = ideal.groebner(&MonomialOrder::Grevlex, &b).unwrap();
    let mut f = Polynomial::zero(ideal.ring());
    for (h, g) in cofactors.iter().zip(ideal.gens()) {
        f = f.add(&h.mul(g).unwrap()).unwrap();
    }
    prop_assert!(gb.contains(&f).unwrap());
    prop_assert!(gb.contains(&f.add(other).unwrap()).unwrap() == gb.contains(other).unwrap());
    let r = gb.normal_form(other).unwrap();
    prop_assert!(gb.contains(&other.sub(&r).unwrap()).unwrap());
    prop_assert!(!divides_some_term(&gb.leading_monomials(), &r));
    Ok(())
}

/// `d_i d_{i+1} = 0` and the alternating Betti sum equals the Hilbert numerator.
pub fn resolution_exact(ideal: &Ideal) -> Result<(), TestCaseError> {
    let b = Budget::unlimited();
    if ideal.groebner(&MonomialOrder::Grevlex, &b).unwrap().is_unit() {
        return Ok(());
    }
    let res = free_resolution(ideal, true, &b).unwrap();
    prop_assert!(res.is_complex().unwrap());
    prop_assert!(res.pd() <= ideal.ring().nvars(), "Hilbert syzygy bound");
    let h = dim_degree(ideal, &b).unwrap();
    let mut k = vec![0i64; h.numerator.len().max(1)];
    for [i, j, beta] in res.betti().triples() {
        let j = j as usize;
        if k.len() <= j {
            k.resize(j + 1, 0);
        }
        k[j] += if i % 2 == 0 { beta } else { -beta };
    }
    while k.len() > 1 && k.last() == Some(&0) {
        k.pop();
    }
    let mut num = h.numerator.clone();
    while num.len() > 1 && num.last() == Some(&0) {
        num.pop();
    }
    prop_assert_eq!(k, num);
    Ok(())
}

pub fn hilbert_window(ideal: &Ideal) -> Result<(), TestCaseError> {
    let b = Budget::unlimited();
    if ideal.groebner(&MonomialOrder::Grevlex, &b).unwrap().is_unit() {
        return Ok(());
    }
    let h = dim_degree(ideal, &b).unwrap();
    for d in 0..=6u32 {
        let expect = hilbert_by_linear_algebra(ideal, d);
        prop_assert_eq!(h.hilbert_function(d), expect.into(), "degree {}", d);
    }
    Ok(())
}

/// The QQ reduced basis, read modulo p, is the F_p reduced basis.
pub fn fp_qq_agree(gens: Vec<Vec<(Vec<u16>, i64)>>, n: usize, ord: &MonomialOrder) -> Result<(), TestCaseError> {
    // a timeout fails the case rather than skipping it
    let b = Budget::with_timeout(std::time::Duration::from_secs(60));
    let rq = ring(Field::Rational, n);
    let rp = ring(fp(), n);
    let (Some(iq), Some(ip)) = (build_ideal(&rq, gens.clone()), build_ideal(&rp, gens)) else {
        return Ok(());
    };
    prop_assume!(iq.gens().len() == ip.gens().len());
    let gq = iq.groebner(ord, &b).unwrap();
    let gp = ip.groebner(ord, &b).unwrap();
    let reduced = Ideal::new(&rq, gq.basis.clone()).unwrap().change_field(fp()).unwrap();
    let show = |v: &[Polynomial]| {
        let mut s: Vec<String> = v.iter().map(|g| g.to_string()).collect();
        s.sort();
        s
    };
    prop_assert_eq!(show(reduced.gens()), show(&gp.basis));
    Ok(())
}

/// The join construction and the two-point parametrization give the same ideal.
pub fn join_matches_parametric(d: usize) -> bool {
    let b = Budget::unlimited();
    let p = rational_normal_curve(d, fp()).unwrap();
    let x = implicitize(&p, &b).unwrap();
    let join = secant_join(&x, &b).unwrap();
    let par = secant_parametric(&p, &b).unwrap();
    join.ideal.same_ideal(&par.ideal, &b).unwrap()
}

pub fn polys(r: &Arc<Ring>, ts: Vec<Vec<(Vec<u16>, i64)>>) -> Vec<Polynomial> {
    ts.into_iter().map(|t| small_poly(r, t)).collect()
}
