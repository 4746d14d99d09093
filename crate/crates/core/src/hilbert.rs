//! Hilbert series, Hilbert polynomial, dimension and degree of `S/I` for
//! homogeneous `I`, read off the initial ideal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::poly::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Coefficients of `K(t)` in `HS(t) = K(t) / (1-t)^nvars`, lowest degree first.
    pub numerator: Vec<i64>,
    /// Reduced numerator `Q(t)` with `HS(t) = Q(t) / (1-t)^krull_dim`.
    pub reduced_numerator: Vec<i64>,
    /// Hilbert polynomial coefficients, constant term first, as `p/q` strings.
    pub hilbert_polynomial: Vec<String>,
    pub krull_dim: usize,
    /// `krull_dim - 1`; `-1` for an ideal of finite colength.
    pub projective_dim: i64,
    pub degree: u64,
    pub nvars: usize,
}

impl HilbertData {
    pub fn codim(&self) -> usize {
        self.nvars - self.krull_dim
    }

    /// `dim_k (S/I)_d` from the series.
    pub fn hilbert_function(&self, d: u32) -> BigInt {
        series_coefficient(&self.reduced_numerator, self.krull_dim, d)
    }

    /// Hilbert polynomial evaluated at `d`.
    pub fn hilbert_polynomial_at(&self, d: i64) -> BigRational {
        let coeffs = polynomial_coefficients(&self.reduced_numerator, self.krull_dim);
        let x = BigRational::from_integer(BigInt::from(d));
        coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.projective_dim,
            "krull_dim": self.krull_dim,
            "degree": self.degree,
            "hilbert_numerator": self.numerator,
        })
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let p = x.checked_mul(*y).ok_or_else(overflow)?;
            out[i + j] = out[i + j].checked_add(p).ok_or_else(overflow)?;
        }
    }
    trim(&mut out);
    Ok(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = *x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].checked_add(*y).ok_or_else(overflow)?;
    }
    trim(&mut out);
    Ok(out)
}

fn overflow() -> Error {
    Error::structural("Hilbert numerator coefficient overflow")
}

fn trim(p: &mut Vec<i64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    trim(&mut v);
    v
}

/// Minimal generators of the monomial ideal.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>) -> Result<Vec<i64>> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    if gens.iter().any(|m| m.is_one()) {
        return Ok(vec![0]);
    }
    // pairwise coprime generators form a regular sequence
    let mut seen = 0u64;
    let mut coprime = true;
    for m in &gens {
        if seen & m.support() != 0 {
            coprime = false;
            break;
        }
        seen |= m.support();
    }
    if coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            acc = poly_mul(&acc, &one_minus_t_pow(m.degree()))?;
        }
        return Ok(acc);
    }
    // pivot on the variable shared by the most non-pure-power generators
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for m in gens.iter().filter(|m| m.support().count_ones() > 1) {
        for (i, c) in counts.iter_mut().enumerate() {
            if m.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let (var, _) = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i)))
        .unwrap();
    let pivot = Monomial::var(n, var);
    // N(M) = N(M + (x)) + t * N(M : x)
    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| if m.exp(var) > 0 { m.with_exp(var, m.exp(var) - 1) } else { m.clone() })
        .collect();
    let a = numerator_rec(plus)?;
    let b = numerator_rec(colon)?;
    let mut shifted = vec![0i64];
    shifted.extend(b);
    poly_add(&a, &shifted)
}

/// Numerator `K(t)` of the Hilbert series of `S/(leads)` over `(1-t)^nvars`.
pub fn hilbert_series_monomial(leads: &[Monomial]) -> Result<Vec<i64>> {
    if let Some(m) = leads.first() {
        let n = m.nvars();
        if leads.iter().any(|x| x.nvars() != n) {
            return Err(Error::structural("monomials from different rings"));
        }
    }
    numerator_rec(leads.to_vec())
}

/// Divides out `(1-t)` as often as possible; returns the quotient and the count.
fn strip_one_minus_t(mut p: Vec<i64>, max: usize) -> (Vec<i64>, usize) {
    let mut k = 0;
    while k < max && p.iter().sum::<i64>() == 0 && p.iter().any(|c| *c != 0) {
        // synthetic division by (1 - t): q_i = sum_{j<=i} p_j
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = 0i64;
        for c in &p[..p.len() - 1] {
            acc += c;
            q.push(acc);
        }
        p = q;
        trim(&mut p);
        k += 1;
    }
    (p, k)
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn series_coefficient(q: &[i64], dim: usize, d: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, c) in q.iter().enumerate() {
        if i as u32 > d {
            break;
        }
        let k = d as i64 - i as i64;
        let b = if dim == 0 {
            if k == 0 { BigInt::one() } else { BigInt::zero() }
        } else {
            binom(k + dim as i64 - 1, dim as i64 - 1)
        };
        acc += BigInt::from(*c) * b;
    }
    acc
}

/// Coefficients of `sum_i q_i * binom(d - i + D - 1, D - 1)` as a polynomial in `d`.
fn polynomial_coefficients(q: &[i64], dim: usize) -> Vec<BigRational> {
    if dim == 0 {
        return vec![BigRational::zero()];
    }
    let mut fact = BigInt::one();
    for k in 1..dim {
        fact *= BigInt::from(k);
    }
    let mut total = vec![BigRational::zero(); dim];
    for (i, c) in q.iter().enumerate() {
        // prod_{k=1}^{D-1} (d - i + k)
        let mut p = vec![BigRational::one()];
        for k in 1..dim {
            let a = BigRational::from_integer(BigInt::from(k as i64 - i as i64));
            let mut next = vec![BigRational::zero(); p.len() + 1];
            for (j, x) in p.iter().enumerate() {
                next[j] += x * &a;
                next[j + 1] += x;
            }
            p = next;
        }
        let scale = BigRational::new(BigInt::from(*c), fact.clone());
        for (j, x) in p.into_iter().enumerate() {
            total[j] += x * &scale;
        }
    }
    total
}

fn format_q(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Hilbert data of `S/in(I)` from given leading monomials in `nvars` variables.
pub fn hilbert_from_leads(leads: &[Monomial], nvars: usize) -> Result<HilbertData> {
    let numerator = hilbert_series_monomial(leads)?;
    if numerator == [0] {
        return Err(Error::contract("Hilbert data of the unit ideal"));
    }
    let (reduced, k) = strip_one_minus_t(numerator.clone(), nvars);
    let krull_dim = nvars - k;
    let degree: i64 = reduced.iter().sum();
    if degree <= 0 {
        return Err(Error::structural("nonpositive degree from Hilbert series"));
    }
    let hp = polynomial_coefficients(&reduced, krull_dim);
    Ok(HilbertData {
        numerator,
        reduced_numerator: reduced,
        hilbert_polynomial: hp.iter().map(format_q).collect(),
        krull_dim,
        projective_dim: krull_dim as i64 - 1,
        degree: degree as u64,
        nvars,
    })
}

/// Dimension and degree of the projective scheme `V(I)` via a grevlex basis.
pub fn dim_degree(ideal: &Ideal, budget: &Budget) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::contract("dim_degree needs a homogeneous ideal"));
    }
    dim_degree_in(ideal, &MonomialOrder::Grevlex, budget)
}

/// As [`dim_degree`] with a caller-chosen degree-compatible order.
pub fn dim_degree_in(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::contract("dim_degree needs a homogeneous ideal"));
    }
    if !order.is_degree_compatible() {
        return Err(Error::contract("Hilbert data needs a degree-compatible order"));
    }
    let gb = ideal.groebner(order, budget)?;
    if gb.truncated {
        return Err(Error::contract("truncated Gröbner basis cannot give Hilbert data"));
    }
    hilbert_from_leads(&gb.leading_monomials(), ideal.ring().nvars())
}

/// Leading coefficient check used by callers normalizing degrees: `(D-1)!` times
/// the top Hilbert-polynomial coefficient.
pub fn normalized_leading(data: &HilbertData) -> Option<u64> {
    if data.krull_dim == 0 {
        return None;
    }
    let coeffs = polynomial_coefficients(&data.reduced_numerator, data.krull_dim);
    let mut fact = BigInt::one();
    for k in 1..data.krull_dim {
        fact *= BigInt::from(k);
    }
    let lead = coeffs.last()? * BigRational::from_integer(fact);
    if lead.is_integer() && lead.is_positive() {
        lead.to_integer().to_u64()
    } else {
        None
    }
}
