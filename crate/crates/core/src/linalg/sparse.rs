use rayon::prelude::*;

use super::matrix::{kernel_basis, row_reduce, RationalMatrix};
use crate::ring::Rational;
use num_traits::Zero;

/// A sparse row: `(column, value)` pairs with distinct columns.
pub type SparseRow = Vec<(usize, Rational)>;

/// A connected block of a sparse system: rows that share columns, and the
/// columns they touch. Columns no row touches form blocks without rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits the system into blocks with pairwise disjoint column sets.
pub fn blocks(rows: &[SparseRow], ncols: usize) -> Vec<Block> {
    let mut parent: Vec<usize> = (0..ncols).collect();
    for row in rows {
        let mut cols = row.iter().filter(|(_, v)| !v.is_zero()).map(|(c, _)| *c);
        if let Some(first) = cols.next() {
            for c in cols {
                let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut slot = vec![usize::MAX; ncols];
    let mut out: Vec<Block> = Vec::new();
    for c in 0..ncols {
        let root = find(&mut parent, c);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Block {
                rows: Vec::new(),
                cols: Vec::new(),
            });
        }
        out[slot[root]].cols.push(c);
    }
    for (r, row) in rows.iter().enumerate() {
        if let Some((c, _)) = row.iter().find(|(_, v)| !v.is_zero()) {
            let root = find(&mut parent, *c);
            out[slot[root]].rows.push(r);
        }
    }
    out
}

fn dense_block(rows: &[SparseRow], block: &Block) -> RationalMatrix {
    let local: std::collections::HashMap<usize, usize> = block
        .cols
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, i))
        .collect();
    let mut m = RationalMatrix::zeros(block.rows.len(), block.cols.len());
    for (i, &r) in block.rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            if !v.is_zero() {
                let at = local[c];
                let sum = m.get(i, at) + v;
                m.set(i, at, sum);
            }
        }
    }
    m
}

/// Kernel of a sparse system, assembled block by block.
pub fn kernel_basis_sparse(rows: &[SparseRow], ncols: usize) -> Vec<SparseRow> {
    let parts: Vec<Vec<SparseRow>> = blocks(rows, ncols)
        .par_iter()
        .map(|block| {
            let dense = dense_block(rows, block);
            kernel_basis(&dense)
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (block.cols[i], x))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut out: Vec<SparseRow> = parts.into_iter().flatten().collect();
    out.sort_by_key(|v| v.iter().map(|(c, _)| *c).min());
    out
}

/// Nonzero rows of the reduced row echelon form of a sparse system, in
/// pivot order. Equal to the global RREF because blocks share no columns.
pub fn rref_sparse(rows: &[SparseRow], ncols: usize) -> Vec<SparseRow> {
    let parts: Vec<Vec<SparseRow>> = blocks(rows, ncols)
        .par_iter()
        .filter(|b| !b.rows.is_empty())
        .map(|block| {
            let reduced = row_reduce(&dense_block(rows, block));
            reduced
                .row_vectors()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (block.cols[i], x.clone()))
                        .collect::<SparseRow>()
                })
                .filter(|r| !r.is_empty())
                .collect()
        })
        .collect();
    let mut out: Vec<SparseRow> = parts.into_iter().flatten().collect();
    out.sort_by_key(|r| r[0].0);
    out
}
