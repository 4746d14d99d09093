use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders supported by the engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the rest.
    /// Eliminates the first block.
    BlockElim(usize),
    /// Weighted degree first (positive integer weights), ties broken by grevlex.
    WeightGrevlex(Vec<u32>),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

// Equal-degree tie break: the monomial with the smaller exponent in the last
// differing variable is larger.
#[inline]
fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::structural(format!(
                "cannot compare monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        if let MonomialOrder::WeightGrevlex(w) = self {
            if w.len() != a.nvars() {
                return Err(Error::structural("weight vector length mismatch"));
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison used on hot paths; operands must share a ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(a.exps(), b.exps())),
            MonomialOrder::BlockElim(k) => {
                let k = (*k).min(a.nvars());
                grevlex(&a.exps()[..k], &b.exps()[..k])
                    .then_with(|| grevlex(&a.exps()[k..], &b.exps()[k..]))
            }
            MonomialOrder::WeightGrevlex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| revlex_tail(a.exps(), b.exps())),
        }
    }

    /// True when the order refines total degree.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            MonomialOrder::Grevlex => true,
            MonomialOrder::WeightGrevlex(w) => w.iter().all(|&x| x == w[0]),
            _ => false,
        }
    }

    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::BlockElim(k) if *k > nvars => Err(Error::structural(format!(
                "elimination block of {k} variables in a ring with {nvars}"
            ))),
            MonomialOrder::WeightGrevlex(w) if w.len() != nvars || w.contains(&0) => Err(
                Error::structural("weights must be positive, one per variable"),
            ),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::BlockElim(k) => write!(f, "elim:{k}"),
            MonomialOrder::WeightGrevlex(w) => {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "weight:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "lex" => return Ok(MonomialOrder::Lex),
            "grevlex" => return Ok(MonomialOrder::Grevlex),
            _ => {}
        }
        if let Some(k) = t.strip_prefix("elim:") {
            let k = k
                .parse()
                .map_err(|_| Error::structural(format!("bad elimination block `{s}`")))?;
            return Ok(MonomialOrder::BlockElim(k));
        }
        if let Some(w) = t.strip_prefix("weight:") {
            let w = w
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::structural(format!("bad weight vector `{s}`")))?;
            return Ok(MonomialOrder::WeightGrevlex(w));
        }
        Err(Error::structural(format!("unknown monomial order `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn grevlex_tie_break() {
        // x^2 > xy in (x, y)
        assert_eq!(
            MonomialOrder::Grevlex.compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        // xz < y^2 in grevlex (x, y, z)
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn block_elimination_dominance() {
        assert_eq!(
            MonomialOrder::BlockElim(1).compare(&m(&[1, 0]), &m(&[0, 9])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn mismatched_counts() {
        assert!(MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["lex", "grevlex", "elim:3", "weight:2,1,1"] {
            assert_eq!(s.parse::<MonomialOrder>().unwrap().to_string(), s);
        }
    }
}
