use std::fmt;

use crate::ring::{Polynomial, Rational};

/// A rectangular array of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl SymbolicMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SymbolicMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            entries.extend(row);
        }
        SymbolicMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    /// Horizontal concatenation; all parts must have the same row count.
    pub fn hconcat(parts: &[SymbolicMatrix]) -> SymbolicMatrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = SymbolicMatrix::zeros(rows, cols);
        let mut offset = 0;
        for part in parts {
            assert_eq!(part.rows, rows, "row counts differ");
            for r in 0..rows {
                for c in 0..part.cols {
                    out.set(r, offset + c, part.get(r, c).clone());
                }
            }
            offset += part.cols;
        }
        out
    }

    /// Applies `f` to every entry.
    pub fn map<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> SymbolicMatrix {
        SymbolicMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymbolicMatrix {
        self.map(|p| p.scale(c))
    }
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
