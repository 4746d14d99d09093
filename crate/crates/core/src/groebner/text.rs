//! Ideal text format:
//!
//! ```text
//! # comment
//! meta n=1 Ln=4 genus=0        (optional, variety fixtures only)
//! ring QQ x0 x1 x2
//! x0*x2 - x1^2
//! ```
//!
//! The field is `QQ` or `Fp <p>`; each following line holds one generator.

use std::fmt::Write as _;

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{parse_poly, Field, Ring};

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ideal: Ideal,
    /// `key=value` pairs from a `meta` line, in file order.
    pub meta: Vec<(String, String)>,
}

impl IdealFile {
    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

pub fn parse_ideal_text(text: &str) -> Result<IdealFile> {
    let mut ring = None;
    let mut meta = Vec::new();
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("meta ") {
            if ring.is_some() {
                return Err(Error::parse(lineno, "meta line must precede the ring header"));
            }
            for kv in rest.split_whitespace() {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::parse(lineno, format!("bad meta entry `{kv}`")))?;
                meta.push((k.to_string(), v.to_string()));
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("ring ") {
            if ring.is_some() {
                return Err(Error::parse(lineno, "duplicate ring header"));
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            let (field, vars) = match toks.first() {
                Some(&"QQ") => (Field::Rational, &toks[1..]),
                Some(&"Fp") => {
                    let p: u32 = toks
                        .get(1)
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::parse(lineno, "expected prime after Fp"))?;
                    (
                        Field::prime(p).map_err(|e| Error::parse(lineno, e.to_string()))?,
                        &toks[2..],
                    )
                }
                _ => return Err(Error::parse(lineno, "expected field QQ or Fp <p>")),
            };
            if vars.is_empty() {
                return Err(Error::parse(lineno, "ring needs at least one variable"));
            }
            ring = Some(Ring::new(field, vars).map_err(|e| Error::parse(lineno, e.to_string()))?);
            continue;
        }
        let r = ring
            .as_ref()
            .ok_or_else(|| Error::parse(lineno, "generator before ring header"))?;
        let p = parse_poly(r, line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(lineno, msg),
            other => Error::parse(lineno, other.to_string()),
        })?;
        gens.push(p);
    }
    let ring = ring.ok_or_else(|| Error::parse(0, "missing ring header"))?;
    Ok(IdealFile {
        ideal: Ideal::new(&ring, gens)?,
        meta,
    })
}

pub fn write_ideal_text(ideal: &Ideal, meta: &[(String, String)]) -> String {
    let mut out = String::new();
    if !meta.is_empty() {
        let kv: Vec<String> = meta.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "meta {}", kv.join(" ")).unwrap();
    }
    let ring = ideal.ring();
    writeln!(out, "ring {} {}", ring.field().header_tag(), ring.names().join(" ")).unwrap();
    for g in ideal.gens() {
        writeln!(out, "{g}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "# conic\nmeta n=1 Ln=2 genus=0\nring Fp 32003 x0 x1 x2\nx0*x2 - x1^2  # the conic\n";
        let f = parse_ideal_text(text).unwrap();
        assert_eq!(f.meta_value("Ln"), Some("2"));
        assert_eq!(f.ideal.ring().field(), Field::Prime(32003));
        let out = write_ideal_text(&f.ideal, &f.meta);
        assert_eq!(out, "meta n=1 Ln=2 genus=0\nring Fp 32003 x0 x1 x2\n-x1^2 + x0*x2\n".replace("-x1^2 + x0*x2", &f.ideal.gens()[0].to_string()));
        let again = parse_ideal_text(&out).unwrap();
        assert_eq!(again.ideal.gens(), f.ideal.gens());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_ideal_text("ring QQ x y\nx + \n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_ideal_text("x + y\n").is_err());
        assert!(parse_ideal_text("ring Fp 9 x\n").is_err());
        assert!(parse_ideal_text("ring RR x\n").is_err());
    }
}
