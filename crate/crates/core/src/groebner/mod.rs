//! Gröbner bases and the ideal operations built on them: elimination,
//! membership, radical membership, saturation and quotients.

pub(crate) mod engine;
mod ideal;
mod ops;
mod text;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::poly::Field;

pub use ideal::{GroebnerBasis, Ideal};
pub use ops::{
    eliminate, ideal_membership, ideal_quotient, intersect, radical_membership, saturation,
};
pub use text::{parse_ideal_text, write_ideal_text, IdealFile};

/// Counters gathered during one Buchberger run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GbStats {
    pub spairs_processed: u64,
    pub zero_reductions: u64,
    pub max_degree: u32,
    pub basis_size: usize,
    pub wall_time_secs: f64,
    pub field: Field,
}

impl Default for GbStats {
    fn default() -> Self {
        GbStats {
            spairs_processed: 0,
            zero_reductions: 0,
            max_degree: 0,
            basis_size: 0,
            wall_time_secs: 0.0,
            field: Field::Rational,
        }
    }
}

impl GbStats {
    /// Folds another run into an aggregate.
    pub fn absorb(&mut self, other: &GbStats) {
        self.spairs_processed += other.spairs_processed;
        self.zero_reductions += other.zero_reductions;
        self.max_degree = self.max_degree.max(other.max_degree);
        self.basis_size = self.basis_size.max(other.basis_size);
        self.wall_time_secs += other.wall_time_secs;
        self.field = other.field;
    }
}

/// Resource limits threaded through every Gröbner computation.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub degree_cap: Option<u32>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget {
            degree_cap: None,
            deadline: Some(Instant::now() + timeout),
        }
    }

    pub fn degree_cap(mut self, cap: Option<u32>) -> Self {
        self.degree_cap = cap;
        self
    }

    pub(crate) fn limits(&self) -> engine::Limits {
        engine::Limits {
            degree_cap: self.degree_cap,
            deadline: self.deadline,
        }
    }

    /// The same deadline without a degree cap, for sub-computations whose
    /// correctness needs a complete basis.
    pub(crate) fn uncapped(&self) -> Budget {
        Budget {
            degree_cap: None,
            deadline: self.deadline,
        }
    }
}
