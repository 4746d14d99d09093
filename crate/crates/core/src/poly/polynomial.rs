use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{Coeff, Field, Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Variable names plus coefficient field. Polynomials compare rings by value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new<S: AsRef<str>>(field: Field, names: &[S]) -> Result<Arc<Ring>> {
        if names.len() > super::monomial::MAX_VARS {
            return Err(Error::structural("too many variables"));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::structural(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::structural(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(Ring { names, field }))
    }

    /// Ring with variables `prefix0 .. prefix{n-1}`.
    pub fn indexed(field: Field, prefix: &str, n: usize) -> Result<Arc<Ring>> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(field, &names)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            names: self.names.clone(),
            field,
        })
    }

    /// A new ring whose variables are `front ++ self.names ++ back`.
    pub fn extend<S: AsRef<str>>(&self, front: &[S], back: &[S]) -> Result<Arc<Ring>> {
        let mut names: Vec<String> = front.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(self.names.iter().cloned());
        names.extend(back.iter().map(|s| s.as_ref().to_string()));
        Ring::new(self.field, &names)
    }

    /// A name not already used by the ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse polynomial. Terms are kept strictly descending in grevlex, the
/// ambient storage order, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coeff)>,
}

pub(crate) fn storage_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(a, b)
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        let n = ring.nvars();
        Self::from_terms(ring, vec![(Monomial::one(n), c)])
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        let n = ring.nvars();
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(n, i), ring.field().one())],
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| storage_cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if field.is_zero(lc) {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts that `terms` already satisfy the storage invariants.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| storage_cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading term in the storage (grevlex) order.
    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Leading term with respect to an arbitrary order.
    pub fn leading_term_in(&self, ord: &MonomialOrder) -> Option<&(Monomial, Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if !Arc::ptr_eq(&self.ring, &other.ring) && self.ring != other.ring {
            return Err(Error::structural("polynomials live in different rings"));
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match storage_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> =
            acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| storage_cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Scales so the leading (storage-order) coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Monic with respect to the leading term of `ord`.
    pub fn monic_in(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term_in(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                (m.with_exp(var, e - 1), field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.ring.nvars() {
            return Err(Error::structural("point dimension does not match ring"));
        }
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u32));
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`; the images all live in `target`.
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<Ring>) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::structural("substitution needs one image per variable"));
        }
        if target.field() != self.field() {
            return Err(Error::structural("substitution changes the field"));
        }
        for img in images {
            if img.ring() != target {
                return Err(Error::structural("substitution images in wrong ring"));
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul_unchecked(&powers[i][e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    pub fn remap(&self, target: &Arc<Ring>, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.ring.nvars() || map.iter().any(|&j| j >= target.nvars()) {
            return Err(Error::structural("bad variable map"));
        }
        if target.field() != self.field() {
            return Err(Error::structural("remap changes the field"));
        }
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(n, map), c.clone()))
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Embeds into a ring whose variables are a superset, matching by name.
    pub fn embed_by_name(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::structural(format!("variable `{n}` missing from target ring")))
            })
            .collect::<Result<_>>()?;
        self.remap(target, &map)
    }

    /// Reduces rational coefficients into a prime field (or reinterprets an
    /// already-modular polynomial in the same field).
    pub fn change_field(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.names() != self.ring.names() {
            return Err(Error::structural("change_field requires identical variables"));
        }
        let tf = target.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let c = match (c, tf) {
                    (Coeff::Q(q), _) => tf.from_rational(q)?,
                    (Coeff::P(v), Field::Prime(p)) if self.field() == Field::Prime(p) => Coeff::P(*v),
                    _ => return Err(Error::structural("cannot lift modular coefficients")),
                };
                Ok((m.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Homogenizes with respect to variable `var`, which must not occur in the polynomial.
    pub fn homogenize(&self, var: usize) -> Result<Polynomial> {
        if self.terms.iter().any(|(m, _)| m.exp(var) > 0) {
            return Err(Error::contract("homogenizing variable already occurs"));
        }
        let d = match self.total_degree() {
            None => return Ok(self.clone()),
            Some(d) => d,
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(var, (d - m.degree()) as u16), c.clone()))
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Sets variable `var` to 1.
    pub fn dehomogenize(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(var, 0), c.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// The homogeneous component of lowest degree.
    pub fn lowest_form(&self) -> Polynomial {
        let d = match self.terms.iter().map(|(m, _)| m.degree()).min() {
            None => return self.clone(),
            Some(d) => d,
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .cloned()
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// Replaces `x_i` by `x_i + shift_i` (translation of a point to the origin
    /// uses the negated coordinates).
    pub fn translate(&self, shift: &[Coeff]) -> Result<Polynomial> {
        if shift.len() != self.ring.nvars() {
            return Err(Error::structural("translation vector has wrong length"));
        }
        let field = self.field();
        let images: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|i| {
                let x = Polynomial::var(&self.ring, i);
                if field.is_zero(&shift[i]) {
                    x
                } else {
                    x.merge(&Polynomial::constant(&self.ring, shift[i].clone()), false)
                }
            })
            .collect();
        self.substitute(&images, &self.ring)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.terms.first()?.clone();
        let field = self.field();
        let inv = field.inv(&dc)?;
        let mut rest = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let q = dm.quotient_of(&m)?;
            let k = field.mul(&c, &inv);
            rest = rest.merge(&d.mul_monomial(&q, &k), true);
            quot.push((q, k));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
