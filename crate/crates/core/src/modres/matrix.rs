use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// A map `S^cols -> S^rows`, stored as a `rows x cols` matrix. Column `j` is
/// the image of the `j`-th basis vector of the source.
#[derive(Clone, PartialEq)]
pub struct FreeModuleMap {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial>>,
    /// Degrees of the source basis (graded case).
    pub source_degrees: Option<Vec<i64>>,
    /// Degrees of the target basis (graded case).
    pub target_degrees: Option<Vec<i64>>,
}

impl FreeModuleMap {
    pub fn new(ring: &Arc<Ring>, rows: usize, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::structural("row count mismatch"));
        }
        let cols = entries.first().map_or(0, |r| r.len());
        for row in &entries {
            if row.len() != cols {
                return Err(Error::structural("ragged matrix"));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::structural("matrix entry in a different ring"));
                }
            }
        }
        Ok(FreeModuleMap {
            ring: ring.clone(),
            rows,
            cols,
            entries,
            source_degrees: None,
            target_degrees: None,
        })
    }

    /// Map whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(ring: &Arc<Ring>, rows: usize, columns: &[Vec<Polynomial>]) -> Result<Self> {
        let mut entries = vec![Vec::with_capacity(columns.len()); rows];
        for col in columns {
            if col.len() != rows {
                return Err(Error::structural("column length mismatch"));
            }
            for (r, e) in col.iter().enumerate() {
                entries[r].push(e.clone());
            }
        }
        let mut m = FreeModuleMap::new(ring, rows, entries)?;
        m.cols = columns.len();
        Ok(m)
    }

    /// The `1 x n` map given by a list of ideal generators.
    pub fn row(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Self> {
        FreeModuleMap::new(ring, 1, vec![gens.to_vec()])
    }

    pub fn zero(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        FreeModuleMap {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(ring); cols]; rows],
            source_degrees: None,
            target_degrees: None,
        }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = FreeModuleMap::zero(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = Polynomial::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> FreeModuleMap {
        let entries = (0..self.cols).map(|c| self.column(c)).collect();
        FreeModuleMap {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
            source_degrees: self.target_degrees.as_ref().map(|d| d.iter().map(|x| -x).collect()),
            target_degrees: self.source_degrees.as_ref().map(|d| d.iter().map(|x| -x).collect()),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeModuleMap) -> Result<FreeModuleMap> {
        if self.cols != other.rows {
            return Err(Error::structural(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![vec![Polynomial::zero(&self.ring); other.cols]; self.rows];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = &self.entries[i][k];
                    let b = &other.entries[k][j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                *slot = acc;
            }
        }
        let mut m = FreeModuleMap::new(&self.ring, self.rows, entries)?;
        m.cols = other.cols;
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_zero()))
    }

    /// Position of some nonzero constant entry.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if !e.is_zero() && e.is_constant() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_homogeneous())
    }

    pub(crate) fn remove_column(&mut self, c: usize) {
        for row in &mut self.entries {
            row.remove(c);
        }
        self.cols -= 1;
        if let Some(d) = &mut self.source_degrees {
            d.remove(c);
        }
    }

    pub(crate) fn drop_zero_columns(&mut self) {
        for c in (0..self.cols).rev() {
            if self.entries.iter().all(|row| row[c].is_zero()) {
                self.remove_column(c);
            }
        }
    }

    /// Splits off the unit entry at `(r, c)`: returns the map with row `r`
    /// and column `c` removed after clearing the rest of column `c`'s
    /// contribution, i.e. `B' = B - B[:,c] B[r,:] / B[r][c]`.
    pub(crate) fn split_unit(&self, r: usize, c: usize) -> Result<FreeModuleMap> {
        let field = self.ring.field();
        let u = self.entries[r][c].terms()[0].1.clone();
        let inv = field.inv(&u).ok_or_else(|| Error::structural("zero pivot"))?;
        let mut entries = Vec::with_capacity(self.rows - 1);
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            let factor = self.entries[i][c].scale(&inv);
            for j in 0..self.cols {
                if j == c {
                    continue;
                }
                let e = if factor.is_zero() || self.entries[r][j].is_zero() {
                    self.entries[i][j].clone()
                } else {
                    self.entries[i][j].sub(&factor.mul(&self.entries[r][j])?)?
                };
                row.push(e);
            }
            entries.push(row);
        }
        let mut m = FreeModuleMap::new(&self.ring, self.rows - 1, entries)?;
        m.cols = self.cols - 1;
        m.source_degrees = self.source_degrees.as_ref().map(|d| {
            d.iter()
                .enumerate()
                .filter(|(j, _)| *j != c)
                .map(|(_, x)| *x)
                .collect()
        });
        m.target_degrees = self.target_degrees.as_ref().map(|d| {
            d.iter()
                .enumerate()
                .filter(|(i, _)| *i != r)
                .map(|(_, x)| *x)
                .collect()
        });
        Ok(m)
    }
}

impl fmt::Debug for FreeModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FreeModuleMap {}x{}", self.rows, self.cols)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
