//! Predicted singularity invariants of secant varieties from discrete data:
//! genus and degree for curves, degree and twist for hypersurfaces, or an
//! explicit cohomology vector.

use serde::{Deserialize, Serialize};

mod verify;

pub use verify::verify;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VarietyDescriptor {
    /// Smooth curve of genus `g` embedded by a line bundle of degree `degL`.
    Curve {
        g: u32,
        #[serde(rename = "degL")]
        deg_l: u32,
    },
    /// Smooth hypersurface of degree `d` in `P^{n+1}`, embedded by `O(k)`.
    Hypersurface { n: u32, d: u32, k: u32 },
    /// `P^n` embedded by `O(k)`.
    Veronese {
        #[serde(default = "two")]
        n: u32,
        k: u32,
    },
    /// Explicit data; the positivity hypothesis is asserted by the caller.
    Custom {
        n: u32,
        /// `h^i(O_X)` for `i = 0..=n`.
        h: Vec<u64>,
        #[serde(rename = "Ln")]
        ln: i64,
        assumption: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        three_very_ample: Option<bool>,
    },
}

fn two() -> u32 {
    2
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<u64> {
    if k < 0 || n < k {
        return Ok(0);
    }
    let k = k.min(n - k) as u128;
    let mut r: u128 = 1;
    for i in 0..k {
        r = r
            .checked_mul(n as u128 - i)
            .ok_or_else(|| Error::contract("binomial overflow"))?
            / (i + 1);
    }
    u64::try_from(r).map_err(|_| Error::contract("binomial overflow"))
}

/// `h^i(O_X)` for `i = 0..=n`, and `h^n(X, O_X(k))`, for a smooth degree-`d`
/// hypersurface `X ⊂ P^{n+1}`.
pub fn hypersurface_cohomology(n: u32, d: u32, k: u32) -> Result<(Vec<u64>, u64)> {
    if n < 1 || d < 1 {
        return Err(Error::contract("hypersurface needs n >= 1 and d >= 1"));
    }
    let mut h = vec![0u64; n as usize + 1];
    h[0] = 1;
    h[n as usize] += binomial(d as i64 - 1, n as i64 + 1)?;
    // H^n(X, O(k)) = H^{n+1}(P^{n+1}, O(k-d)), dual to H^0(O(d-k-n-2))
    let top = d as i64 - k as i64 - 1;
    let hk = if top >= n as i64 + 1 { binomial(top, n as i64 + 1)? } else { 0 };
    Ok((h, hk))
}

impl VarietyDescriptor {
    pub fn n(&self) -> u32 {
        match self {
            VarietyDescriptor::Curve { .. } => 1,
            VarietyDescriptor::Hypersurface { n, .. }
            | VarietyDescriptor::Veronese { n, .. }
            | VarietyDescriptor::Custom { n, .. } => *n,
        }
    }

    /// `h^i(O_X)`, `i = 0..=n`.
    pub fn h_vector(&self) -> Result<Vec<u64>> {
        Ok(match self {
            VarietyDescriptor::Curve { g, .. } => vec![1, *g as u64],
            VarietyDescriptor::Hypersurface { n, d, k } => hypersurface_cohomology(*n, *d, *k)?.0,
            VarietyDescriptor::Veronese { n, .. } => {
                let mut h = vec![0; *n as usize + 1];
                h[0] = 1;
                h
            }
            VarietyDescriptor::Custom { h, .. } => h.clone(),
        })
    }

    /// Self-intersection `L^n`.
    pub fn ln(&self) -> Result<i64> {
        let checked = |v: Option<i64>| v.ok_or_else(|| Error::contract("L^n overflow"));
        match self {
            VarietyDescriptor::Curve { deg_l, .. } => Ok(*deg_l as i64),
            VarietyDescriptor::Hypersurface { n, d, k } => {
                checked((*k as i64).checked_pow(*n).and_then(|p| p.checked_mul(*d as i64)))
            }
            VarietyDescriptor::Veronese { n, k } => checked((*k as i64).checked_pow(*n)),
            VarietyDescriptor::Custom { ln, .. } => Ok(*ln),
        }
    }

    /// `h^n(X, L)`, where it is determined by the descriptor.
    pub fn top_cohomology_of_l(&self) -> Result<Option<u64>> {
        Ok(match self {
            // nonspecial above 2g-2, undetermined below
            VarietyDescriptor::Curve { g, deg_l } => (*deg_l as i64 > 2 * *g as i64 - 2).then_some(0),
            VarietyDescriptor::Hypersurface { n, d, k } => Some(hypersurface_cohomology(*n, *d, *k)?.1),
            VarietyDescriptor::Veronese { .. } => Some(0),
            VarietyDescriptor::Custom { .. } => None,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n < 1 {
            return Err(Error::contract("dimension must be positive"));
        }
        match self {
            VarietyDescriptor::Curve { deg_l, .. } if *deg_l < 1 => {
                return Err(Error::contract("degL must be positive"))
            }
            VarietyDescriptor::Hypersurface { d, k, .. } if *d < 1 || *k < 1 => {
                return Err(Error::contract("hypersurface needs d >= 1 and k >= 1"))
            }
            VarietyDescriptor::Veronese { k, .. } if *k < 1 => return Err(Error::contract("k must be positive")),
            VarietyDescriptor::Custom { h, ln, .. } => {
                if h.len() != n as usize + 1 {
                    return Err(Error::contract("h must list h^0..h^n"));
                }
                if h[0] != 1 {
                    return Err(Error::contract("h^0(O_X) must be 1"));
                }
                if *ln < 1 {
                    return Err(Error::contract("L^n must be positive"));
                }
            }
            _ => {}
        }
        let (ok, _) = check_assumption(self)?;
        if ok && multiplicity_of(self)? < 1 {
            return Err(Error::contract("L^n - 2^n < 1 for a descriptor satisfying the assumption"));
        }
        Ok(())
    }
}

fn multiplicity_of(d: &VarietyDescriptor) -> Result<i64> {
    let n = d.n();
    let two_n = 2i64.checked_pow(n).ok_or_else(|| Error::contract("2^n overflow"))?;
    Ok(d.ln()? - two_n)
}

/// Whether `L` satisfies the positivity hypothesis, with the derivation.
pub fn check_assumption(d: &VarietyDescriptor) -> Result<(bool, String)> {
    Ok(match d {
        VarietyDescriptor::Curve { g, deg_l } => {
            let need = 2 * g + 3;
            let ok = *deg_l >= need;
            (ok, format!("curve: deg L = {deg_l} {} 2g+3 = {need}", if ok { ">=" } else { "<" }))
        }
        VarietyDescriptor::Hypersurface { n: 1, d, k } => {
            // a plane curve: genus (d-1)(d-2)/2 and deg L = d k
            let g = (*d as i64 - 1) * (*d as i64 - 2) / 2;
            let deg = *d as i64 * *k as i64;
            let need = 2 * g + 3;
            let ok = deg >= need;
            (
                ok,
                format!(
                    "plane curve of degree {d}: g = {g}, deg L = d k = {deg} {} 2g+3 = {need}; \
                     the twist form requires k >= d+1 = {}, {}",
                    if ok { ">=" } else { "<" },
                    d + 1,
                    if *k > *d { "satisfied" } else { "not satisfied" }
                ),
            )
        }
        VarietyDescriptor::Hypersurface { n, d, k } => {
            let ok = *k >= d + n;
            (
                ok,
                format!(
                    "omega_X = O({}), L = O({k}) = omega_X (x) O(1)^{} (x) O({}); B nef iff k >= d+n = {}: {}",
                    *d as i64 - *n as i64 - 2,
                    2 * (n + 1),
                    *k as i64 - *d as i64 - *n as i64,
                    d + n,
                    if ok { "holds" } else { "fails" }
                ),
            )
        }
        VarietyDescriptor::Veronese { n, k } => {
            let ok = *k > *n;
            (
                ok,
                format!(
                    "P^{n}: omega = O({}), L = O({k}) = omega (x) O(1)^{} (x) O({}); B nef iff k >= n+1 = {}: {}",
                    -(*n as i64) - 1,
                    2 * (n + 1),
                    *k as i64 - *n as i64 - 1,
                    n + 1,
                    if ok { "holds" } else { "fails" }
                ),
            )
        }
        VarietyDescriptor::Custom { assumption, .. } => (*assumption, "asserted by the descriptor".to_string()),
    })
}

fn three_very_ample(d: &VarietyDescriptor) -> Result<(bool, String)> {
    Ok(match d {
        VarietyDescriptor::Curve { g, deg_l } => {
            let ok = *deg_l >= 2 * g + 3;
            (ok, format!("deg L >= 2g+3 makes L 3-very ample: {}", if ok { "yes" } else { "not established" }))
        }
        VarietyDescriptor::Hypersurface { k, .. } | VarietyDescriptor::Veronese { k, .. } => {
            let ok = *k >= 3;
            (ok, format!("O(k) is 3-very ample for k >= 3: k = {k}"))
        }
        VarietyDescriptor::Custom {
            assumption,
            three_very_ample,
            ..
        } => {
            let ok = three_very_ample.unwrap_or(*assumption);
            (ok, "asserted by the descriptor".to_string())
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

/// A predicted value with the statement it rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cited<T> {
    pub value: T,
    pub citation: String,
}

fn cite<T>(value: T, citation: impl Into<String>) -> Cited<T> {
    Cited {
        value,
        citation: citation.into(),
    }
}

const C_ASSUMPTION: &str = "positivity hypothesis: deg L >= 2g+3 for curves; L = omega_X (x) A^(2(n+1)) (x) B, A very ample, B nef, for n >= 2";
const C_DU_BOIS: &str = "under the positivity hypothesis the secant variety has Du Bois singularities";
const C_NORMAL: &str = "under the positivity hypothesis the secant variety is normal";
const C_NORMAL_HYP: &str = "smooth hypersurface, L = O_X(k), k >= 3: secant variety normal provided k >= (d+3)/2";
const C_NOT_DB: &str = "for L 3-very ample and seminormal secant: Du Bois iff R^i t_* O(-Phi) = 0 for i > 0; H^n(X, L) != 0 forces R^n t_* O(-Phi) != 0";
const C_DEPTH: &str = "depth_x = n+2+max{i <= n-1 : H^j(X, O_X) = 0 for 1 <= j <= i}, max of the empty set taken as 0";
const C_CM: &str = "Cohen-Macaulay iff depth_x equals dim = 2n+1 at every point of X";
const C_RATIONAL: &str = "rational singularities iff H^i(X, O_X) = 0 for all 1 <= i <= n";
const C_MULT: &str = "Samuel multiplicity at a point of X is L^n - 2^n (L 3-very ample)";
const C_DEFICIENT: &str = "3-very ampleness not established; the secant may be deficient, e.g. dim Sigma(P^2, O(2)) < 5";
const C_UNKNOWN: &str = "no criterion applies without the positivity hypothesis";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub assumption_satisfied: Cited<bool>,
    pub assumption_reason: String,
    pub normal: Cited<Tri>,
    pub du_bois: Cited<Tri>,
    /// `None` when the depth is not determined.
    pub cm: Cited<Option<bool>>,
    pub depth_at_x_points: Cited<Option<u32>>,
    pub rational: Cited<Tri>,
    pub multiplicity: Cited<i64>,
    pub three_very_ample: Cited<bool>,
    pub deficient_warning: Cited<bool>,
    /// Expected secant dimension `2n+1`.
    pub expected_secant_dim: u32,
}

impl Verdict {
    /// Rational implies Cohen-Macaulay and Du Bois.
    pub fn is_consistent(&self) -> bool {
        self.rational.value != Tri::Yes || (self.cm.value == Some(true) && self.du_bois.value == Tri::Yes)
    }
}

/// `n + 2 + max{i <= n-1 : h^1 = ... = h^i = 0}`.
pub fn predicted_depth(n: u32, h: &[u64]) -> u32 {
    let mut max = 0;
    for i in 1..n {
        if h[i as usize] == 0 {
            max = i;
        } else {
            break;
        }
    }
    n + 2 + max
}

pub fn predict(d: &VarietyDescriptor) -> Result<Verdict> {
    d.validate()?;
    let n = d.n();
    let h = d.h_vector()?;
    let (ok, reason) = check_assumption(d)?;
    let (tva, tva_reason) = three_very_ample(d)?;
    let mult = multiplicity_of(d)?;
    let mult_cite = if tva {
        C_MULT.to_string()
    } else {
        format!("{C_MULT}; 3-very ampleness presumed, not established")
    };

    let (normal, du_bois, cm, depth, rational);
    if ok {
        let dep = predicted_depth(n, &h);
        let rat = h[1..].iter().all(|&x| x == 0);
        normal = cite(Tri::Yes, C_NORMAL);
        du_bois = cite(Tri::Yes, C_DU_BOIS);
        depth = cite(Some(dep), C_DEPTH);
        cm = cite(Some(dep == 2 * n + 1), C_CM);
        rational = cite(Tri::from_bool(rat), C_RATIONAL);
    } else {
        let hyp_normal = match d {
            VarietyDescriptor::Hypersurface { d: deg, k, .. } => *k >= 3 && 2 * *k >= deg + 3,
            _ => false,
        };
        if hyp_normal {
            normal = cite(Tri::Yes, C_NORMAL_HYP);
            let hk = d.top_cohomology_of_l()?.unwrap_or(0);
            du_bois = if hk != 0 {
                cite(Tri::No, format!("{C_NOT_DB}; h^n(X, L) = {hk}"))
            } else {
                cite(Tri::Unknown, C_UNKNOWN)
            };
        } else {
            normal = cite(Tri::Unknown, C_UNKNOWN);
            du_bois = cite(Tri::Unknown, C_UNKNOWN);
        }
        depth = cite(None, C_UNKNOWN);
        cm = cite(None, C_UNKNOWN);
        // rational implies Du Bois
        rational = if du_bois.value == Tri::No {
            cite(Tri::No, format!("not Du Bois, hence not rational; {C_NOT_DB}"))
        } else {
            cite(Tri::Unknown, C_UNKNOWN)
        };
    }
    let v = Verdict {
        assumption_satisfied: cite(ok, C_ASSUMPTION),
        assumption_reason: reason,
        normal,
        du_bois,
        cm,
        depth_at_x_points: depth,
        rational,
        multiplicity: cite(mult, mult_cite),
        three_very_ample: cite(tva, tva_reason),
        deficient_warning: cite(!tva, if tva { "3-very ample".to_string() } else { C_DEFICIENT.to_string() }),
        expected_secant_dim: 2 * n + 1,
    };
    debug_assert!(v.is_consistent());
    Ok(v)
}
