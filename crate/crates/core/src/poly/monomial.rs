use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 64;

type Exps = SmallVec<[u16; 16]>;

/// Exponent vector with cached total degree and a support bitmask used to
/// reject divisibility tests early.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
    support: u64,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::structural(format!(
                "{} variables exceeds the limit of {MAX_VARS}",
                exps.len()
            )));
        }
        Ok(Self::from_exps(exps.iter().copied().collect()))
    }

    fn from_exps(exps: Exps) -> Self {
        let mut degree = 0u32;
        let mut support = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            degree += e as u32;
            if e > 0 {
                support |= 1 << i;
            }
        }
        Monomial {
            exps,
            degree,
            support,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
            support: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps: Exps = SmallVec::from_elem(0, nvars);
        exps[i] = 1;
        Monomial {
            exps,
            degree: 1,
            support: 1 << i,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
            support: self.support | other.support,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.support & !other.support != 0 {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Some(Self::from_exps(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Self::from_exps(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        Self::from_exps(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Self::from_exps(exps)
    }

    /// Exponent vector with `extra` zero slots appended or with variables
    /// re-indexed through `map` (old index -> new index) into `nvars` slots.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] += e;
            }
        }
        Self::from_exps(exps)
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Self::from_exps(exps)
    }

    pub(crate) fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(e, w)| *e as u64 * *w as u64)
            .sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_degree_and_division() {
        let a = Monomial::new(&[2, 1, 0]).unwrap();
        let b = Monomial::new(&[3, 1, 4]).unwrap();
        assert_eq!(a.degree(), 3);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap().exps(), &[1, 0, 4]);
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
    }

    #[test]
    fn too_many_variables() {
        assert!(Monomial::new(&[0; 65]).is_err());
        assert!(Monomial::new(&[0; 64]).is_ok());
    }
}
