//! Exact commutative algebra for studying secant varieties of embedded
//! projective varieties.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod modres;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod variety;

pub use error::{Error, Result};
