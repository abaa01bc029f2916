use num_traits::Zero;

use super::sparse::{rref_sparse, SparseRow};
use super::{rank, MonomialIndex, RationalMatrix};
use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Rational};

/// A finite-dimensional space of polynomials, stored as the reduced row
/// echelon basis of its coefficient vectors over a fixed monomial index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    index: MonomialIndex,
    basis: RationalMatrix,
}

fn to_sparse(p: &Polynomial, index: &MonomialIndex) -> Result<SparseRow> {
    p.terms()
        .map(|(m, c)| {
            index
                .position(m)
                .map(|col| (col, c.clone()))
                .ok_or_else(|| Error::MonomialOutsideIndex(m.to_string()))
        })
        .collect()
}

impl Span {
    pub fn zero(index: MonomialIndex) -> Self {
        let cols = index.len();
        Span {
            index,
            basis: RationalMatrix::zeros(0, cols),
        }
    }

    /// The span of `polys` inside `index`.
    pub fn from_polynomials(polys: &[Polynomial], index: MonomialIndex) -> Result<Self> {
        let rows = polys
            .iter()
            .map(|p| to_sparse(p, &index))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_sparse_rows(&rows, index))
    }

    /// The span of `polys` over the index of their own monomials.
    pub fn of(polys: &[Polynomial]) -> Self {
        let index = MonomialIndex::from_polynomials(polys);
        Self::from_polynomials(polys, index).expect("index covers every monomial")
    }

    pub(crate) fn from_sparse_rows(rows: &[SparseRow], index: MonomialIndex) -> Self {
        let reduced = rref_sparse(rows, index.len());
        let cols = index.len();
        let dense = reduced
            .into_iter()
            .map(|row| {
                let mut v = vec![Rational::zero(); cols];
                for (c, x) in row {
                    v[c] = x;
                }
                v
            })
            .collect();
        Span {
            basis: RationalMatrix::from_rows(cols, dense),
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn index(&self) -> &MonomialIndex {
        &self.index
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    /// Basis elements as polynomials, in pivot order.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.basis
            .row_vectors()
            .map(|row| {
                Polynomial::from_terms(
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (self.index.get(i).clone(), c.clone())),
                )
            })
            .collect()
    }

    /// Whether `p` lies in the span; monomials outside the index mean it does not.
    pub fn contains(&self, p: &Polynomial) -> bool {
        let Ok(row) = to_sparse(p, &self.index) else {
            return false;
        };
        let mut v = vec![Rational::zero(); self.index.len()];
        for (c, x) in row {
            v[c] = x;
        }
        for basis_row in self.basis.row_vectors() {
            let pivot = basis_row
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero row");
            if v[pivot].is_zero() {
                continue;
            }
            let f = v[pivot].clone();
            for (c, b) in basis_row.iter().enumerate().skip(pivot) {
                if !b.is_zero() {
                    v[c] -= b * &f;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    /// Dimension after adjoining `extra`, computed by fraction-free rank.
    pub fn rank_with(&self, extra: &[Polynomial]) -> Result<usize> {
        let mut rows: Vec<Vec<Rational>> = self.basis.row_vectors().map(<[_]>::to_vec).collect();
        for p in extra {
            let mut v = vec![Rational::zero(); self.index.len()];
            for (c, x) in to_sparse(p, &self.index)? {
                v[c] = x;
            }
            rows.push(v);
        }
        Ok(rank(&RationalMatrix::from_rows(self.index.len(), rows)))
    }

    /// The same space expressed over another index.
    pub fn reindexed(&self, index: MonomialIndex) -> Result<Span> {
        Span::from_polynomials(&self.polynomials(), index)
    }

    /// The subspace of elements supported only on monomials satisfying `inside`.
    pub fn intersect_support<F: Fn(&Monomial) -> bool>(&self, inside: F) -> Span {
        // Reduce with every outside column ahead of every inside column; rows
        // whose pivot lands inside have no outside entries left.
        let cols = self.index.len();
        let mut order: Vec<usize> = (0..cols).filter(|&c| !inside(self.index.get(c))).collect();
        let boundary = order.len();
        order.extend((0..cols).filter(|&c| inside(self.index.get(c))));
        let mut new_pos = vec![0; cols];
        for (k, &c) in order.iter().enumerate() {
            new_pos[c] = k;
        }
        let permuted: Vec<SparseRow> = self
            .basis
            .row_vectors()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (new_pos[c], x.clone()))
                    .collect()
            })
            .collect();
        let kept: Vec<SparseRow> = rref_sparse(&permuted, cols)
            .into_iter()
            .filter(|row| row[0].0 >= boundary)
            .map(|row| row.into_iter().map(|(k, x)| (order[k], x)).collect())
            .collect();
        Span::from_sparse_rows(&kept, self.index.clone())
    }
}

/// Equality of spans over the same index, by comparing echelon bases.
pub fn span_equal(a: &Span, b: &Span) -> Result<bool> {
    if a.index != b.index {
        return Err(Error::IndexMismatch);
    }
    Ok(a.basis == b.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn span_equality_examples() {
        let idx = MonomialIndex::homogeneous(1, 1, 1);
        let a = Span::from_polynomials(&[p("x1_0"), p("x1_1")], idx.clone()).unwrap();
        let b = Span::from_polynomials(&[p("x1_0 + x1_1"), p("x1_1")], idx.clone()).unwrap();
        assert!(span_equal(&a, &b).unwrap());
        let c = Span::from_polynomials(&[p("x1_0")], idx.clone()).unwrap();
        let d = Span::from_polynomials(&[p("x1_1")], idx.clone()).unwrap();
        assert!(!span_equal(&c, &d).unwrap());
        let empty = Span::from_polynomials(&[], idx.clone()).unwrap();
        let zeros = Span::from_polynomials(&[Polynomial::zero(), Polynomial::zero()], idx).unwrap();
        assert!(span_equal(&empty, &zeros).unwrap());
        assert_eq!(zeros.dim(), 0);
    }

    #[test]
    fn mismatched_indices_are_rejected() {
        let a = Span::of(&[p("x1_0")]);
        let b = Span::of(&[p("x1_1")]);
        assert_eq!(span_equal(&a, &b), Err(Error::IndexMismatch));
    }

    #[test]
    fn membership_and_rank() {
        let s = Span::of(&[p("x1_0 + x1_1"), p("x1_1 - x1_2")]);
        assert!(s.contains(&p("x1_0 + x1_2")));
        assert!(!s.contains(&p("x1_0")));
        assert!(!s.contains(&p("x1_5")));
        assert_eq!(s.rank_with(&[p("x1_0 + 2*x1_1 - x1_2")]).unwrap(), 2);
        assert_eq!(s.rank_with(&[p("x1_0")]).unwrap(), 3);
    }

    #[test]
    fn support_intersection() {
        // span{x + x'', x' - x''} meets k[x, x'] in span{x + x'}
        let s = Span::of(&[p("x1_0 + x1_2"), p("x1_1 - x1_2")]);
        let low = s.intersect_support(|m| m.max_order().is_none_or(|o| o <= 1));
        assert_eq!(low.dim(), 1);
        assert!(low.contains(&p("x1_0 + x1_1")));
    }
}
