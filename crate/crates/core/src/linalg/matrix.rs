use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::MonomialIndex;
use crate::error::{Error, Result};
use crate::ring::{Polynomial, Rational};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from explicit rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        RationalMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.row_vectors()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Drops rows that are entirely zero.
    pub fn without_zero_rows(&self) -> RationalMatrix {
        let rows: Vec<Vec<Rational>> = self
            .row_vectors()
            .filter(|r| r.iter().any(|v| !v.is_zero()))
            .map(<[Rational]>::to_vec)
            .collect();
        Self::from_rows(self.cols, rows)
    }

    /// Index of the first nonzero entry of each nonzero row.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.row_vectors()
            .filter_map(|r| r.iter().position(|v| !v.is_zero()))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_vectors() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row `r` holds the coefficients of `polys[r]` against `index`.
pub fn coeff_matrix(polys: &[Polynomial], index: &MonomialIndex) -> Result<RationalMatrix> {
    let mut m = RationalMatrix::zeros(polys.len(), index.len());
    for (r, p) in polys.iter().enumerate() {
        for (mono, c) in p.terms() {
            let col = index
                .position(mono)
                .ok_or_else(|| Error::MonomialOutsideIndex(mono.to_string()))?;
            m.set(r, col, c.clone());
        }
    }
    Ok(m)
}

/// Reduced row echelon form by Gauss-Jordan elimination. Pivots are taken
/// as the first nonzero entry in column order; zero rows end up at the bottom.
pub fn row_reduce(m: &RationalMatrix) -> RationalMatrix {
    let mut a = m.clone();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let Some(found) = (pivot_row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(pivot_row, found);
        let inv = a.get(pivot_row, col).recip();
        for c in col..a.cols {
            let v = a.get(pivot_row, c) * &inv;
            a.set(pivot_row, c, v);
        }
        for r in 0..a.rows {
            if r == pivot_row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let delta = a.get(pivot_row, c) * &factor;
                if delta.is_zero() {
                    continue;
                }
                let v = a.get(r, c) - delta;
                a.set(r, c, v);
            }
        }
        pivot_row += 1;
    }
    a
}

/// Rank by fraction-free (Bareiss) elimination on the integer-cleared matrix.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .row_vectors()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    let rows = a.len();
    let cols = m.cols();
    let mut prev = BigInt::one();
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(found) = (k..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(k, found);
        for r in k + 1..rows {
            for c in col + 1..cols {
                let v = (&a[k][col] * &a[r][c] - &a[r][col] * &a[k][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[k][col].clone();
        k += 1;
    }
    k
}

/// Basis of `{v : M v = 0}`, one vector per free column of the echelon form.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let reduced = row_reduce(m);
    let pivots = reduced.pivot_columns();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|c| !is_pivot[*c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(r, free).clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::zeros(2, 2)), 0);
        assert_eq!(rank(&RationalMatrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&RationalMatrix::zeros(0, 4)), 0);
    }

    #[test]
    fn rank_with_fractions_and_skipped_columns() {
        let half = Rational::new(1.into(), 2.into());
        let m = RationalMatrix::from_rows(
            3,
            vec![
                vec![Rational::zero(), half.clone(), Rational::one()],
                vec![
                    Rational::zero(),
                    Rational::one(),
                    Rational::from_integer(2.into()),
                ],
                vec![Rational::zero(), Rational::zero(), half],
            ],
        );
        assert_eq!(rank(&m), 2);
        assert_eq!(row_reduce(&m).without_zero_rows().rows(), 2);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], -k[0][1].clone());
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
    }

    #[test]
    fn rref_is_unique_and_idempotent() {
        let m = RationalMatrix::from_i64(&[&[0, 2, 4, 1], &[1, 1, 1, 1], &[1, 3, 5, 2]]);
        let r = row_reduce(&m);
        assert_eq!(row_reduce(&r), r);
        assert_eq!(
            r,
            RationalMatrix::from_rows(
                4,
                vec![
                    vec![
                        Rational::one(),
                        Rational::zero(),
                        Rational::from_integer((-1).into()),
                        Rational::new(1.into(), 2.into())
                    ],
                    vec![
                        Rational::zero(),
                        Rational::one(),
                        Rational::from_integer(2.into()),
                        Rational::new(1.into(), 2.into())
                    ],
                    vec![Rational::zero(); 4],
                ]
            )
        );
    }

    #[test]
    fn coeff_matrix_examples() {
        let idx = MonomialIndex::from_polynomials(&[parse("x1_0 + x1_1").unwrap()]);
        let m = coeff_matrix(&[parse("x1_0 + 2*x1_1").unwrap()], &idx).unwrap();
        assert_eq!(m, RationalMatrix::from_i64(&[&[1, 2]]));
        let empty = coeff_matrix(&[], &idx).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 2));

        let idx = MonomialIndex::homogeneous(1, 2, 2);
        let polys = [
            parse("x1_0*x1_2 - x1_1^2").unwrap(),
            parse("x1_1^2").unwrap(),
        ];
        let m = coeff_matrix(&polys, &idx).unwrap();
        assert_eq!(
            m,
            RationalMatrix::from_i64(&[&[0, 0, 1, -1, 0, 0], &[0, 0, 0, 1, 0, 0]])
        );
        assert!(matches!(
            coeff_matrix(&[parse("x1_5").unwrap()], &idx),
            Err(Error::MonomialOutsideIndex(_))
        ));
    }
}
