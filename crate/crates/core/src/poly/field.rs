//! Coefficient fields: the rationals and prime fields `Z/p` for odd `p < 2^31`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime used for modular computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// Second prime used to re-certify modular verdicts.
pub const CHECK_PRIME: u32 = 65521;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// Raw coefficient storage. Which variant is meaningful is decided by the
/// owning ring's [`Field`]; rationals are boxed to keep the modular case small.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(Box<BigRational>),
    P(u32),
}

pub fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p >= 1 << 31 || !is_odd_prime(p) {
            return Err(Error::structural(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn default_prime() -> Field {
        Field::Prime(DEFAULT_PRIME)
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Box::new(BigRational::zero())),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Box::new(BigRational::one())),
            Field::Prime(_) => Coeff::P(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Box::new(BigRational::from_integer(BigInt::from(v)))),
            Field::Prime(p) => Coeff::P(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Box::new(BigRational::from_integer(v.clone()))),
            Field::Prime(p) => Coeff::P(bigint_mod(v, *p)),
        }
    }

    /// Maps a rational into this field. Fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Q(Box::new(q.clone()))),
            Field::Prime(p) => {
                let num = bigint_mod(q.numer(), *p);
                let den = bigint_mod(q.denom(), *p);
                if den == 0 {
                    return Err(Error::structural(format!(
                        "denominator of {q} vanishes modulo {p}"
                    )));
                }
                Ok(Coeff::P(mul_mod(num, inv_mod(den, *p), *p)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(q) => q.is_one(),
            Coeff::P(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                let s = *x as u64 + *y as u64;
                Coeff::P((s % *p as u64) as u32)
            }
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(Box::new(&**x + &**y)),
            _ => mismatch(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => {
                let s = *x as u64 + *p as u64 - *y as u64;
                Coeff::P((s % *p as u64) as u32)
            }
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(Box::new(&**x - &**y)),
            _ => mismatch(),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Prime(p), Coeff::P(x)) => Coeff::P(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(Box::new(-&**x)),
            _ => mismatch(),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => Coeff::P(mul_mod(*x, *y, *p)),
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(Box::new(&**x * &**y)),
            _ => mismatch(),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Coeff::P(x)) => Some(Coeff::P(inv_mod(*x, *p))),
            (Field::Rational, Coeff::Q(x)) => Some(Coeff::Q(Box::new(x.recip()))),
            _ => mismatch(),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn pow(&self, a: &Coeff, mut e: u32) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Whether a coefficient is stored in the representation this field expects.
    pub fn owns(&self, a: &Coeff) -> bool {
        match (self, a) {
            (Field::Rational, Coeff::Q(_)) => true,
            (Field::Prime(p), Coeff::P(v)) => v < p,
            _ => false,
        }
    }

    pub fn parse_coeff(&self, s: &str) -> Result<Coeff> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }

    pub fn format_coeff(&self, a: &Coeff) -> String {
        match a {
            Coeff::Q(q) => format_rational(q),
            Coeff::P(v) => v.to_string(),
        }
    }

    /// Textual tag used by the ideal file header: `QQ` or `Fp <p>`.
    pub fn header_tag(&self) -> String {
        match self {
            Field::Rational => "QQ".to_string(),
            Field::Prime(p) => format!("Fp {p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `qq`, `QQ`, `fp:<p>` and `Fp <p>`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("qq") {
            return Ok(Field::Rational);
        }
        let rest = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("Fp "))
            .or_else(|| t.strip_prefix("fp "))
            .or_else(|| t.strip_prefix("Fp:"))
            .ok_or_else(|| Error::structural(format!("unknown field `{s}`")))?;
        let p: u32 = rest
            .trim()
            .parse()
            .map_err(|_| Error::structural(format!("bad prime in field `{s}`")))?;
        Field::prime(p)
    }
}

fn mismatch() -> ! {
    panic!("coefficient representation does not match its field")
}

fn bigint_mod(v: &BigInt, p: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits in u32")
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::structural(format!("bad rational literal `{s}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A field element carrying its field tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: Coeff,
}

impl FieldElement {
    pub fn new(field: Field, value: Coeff) -> Result<Self> {
        if !field.owns(&value) {
            return Err(Error::structural("coefficient does not belong to field"));
        }
        Ok(FieldElement { field, value })
    }

    pub fn from_i64(field: Field, v: i64) -> Self {
        FieldElement {
            field,
            value: field.from_i64(v),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        FieldElement {
            field: Field::Rational,
            value: Coeff::Q(Box::new(q)),
        }
    }

    pub fn parse(field: Field, s: &str) -> Result<Self> {
        Ok(FieldElement {
            field,
            value: field.parse_coeff(s)?,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn value(&self) -> &Coeff {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::structural(format!(
                "field mismatch: {} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElement {
            field: self.field,
            value: self.field.add(&self.value, &other.value),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElement {
            field: self.field,
            value: self.field.sub(&self.value, &other.value),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElement {
            field: self.field,
            value: self.field.mul(&self.value, &other.value),
        })
    }

    pub fn inv(&self) -> Option<Self> {
        self.field.inv(&self.value).map(|value| FieldElement {
            field: self.field,
            value,
        })
    }

    /// Sign of a rational value; prime-field residues report their residue class only.
    pub fn is_negative(&self) -> bool {
        matches!(&self.value, Coeff::Q(q) if q.is_negative())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_coeff(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(65521).is_ok());
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(32001).is_err());
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let a = FieldElement::parse(Field::Rational, "6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        let b = FieldElement::parse(Field::Rational, "3/2").unwrap();
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn modular_inverse_and_half() {
        let f = Field::Prime(32003);
        let half = f.parse_coeff("1/2").unwrap();
        assert_eq!(f.mul(&half, &f.from_i64(2)), f.one());
        assert_eq!(f.from_i64(-1), Coeff::P(32002));
        assert!(f.parse_coeff("1/32003").is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("qq".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("fp:32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert_eq!("Fp 7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("fp:9".parse::<Field>().is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldElement::from_i64(Field::Rational, 1);
        let b = FieldElement::from_i64(Field::Prime(7), 1);
        assert!(a.add(&b).is_err());
    }
}
