use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;

use super::{StructuredMatrixSpec, SymbolicMatrix};
use crate::error::{Error, Result};
use crate::linalg::{MonomialIndex, Span};
use crate::ring::Polynomial;

/// Row and column sets of a square submatrix, both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorSelector {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSelector {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        MinorSelector { rows, cols }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn validate(&self, m: &SymbolicMatrix) -> Result<()> {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if self.rows.len() != self.cols.len() {
            return Err(Error::InvalidSelector(
                "row and column counts differ".into(),
            ));
        }
        if !increasing(&self.rows) || !increasing(&self.cols) {
            return Err(Error::InvalidSelector(
                "indices must be strictly increasing".into(),
            ));
        }
        if self.rows.last().is_some_and(|&r| r >= m.rows())
            || self.cols.last().is_some_and(|&c| c >= m.cols())
        {
            return Err(Error::InvalidSelector("index outside the matrix".into()));
        }
        Ok(())
    }
}

const MAX_DIM: usize = 128;

/// Cofactor expansion along the first selected row, memoized on
/// `(row subset, column subset)` so that minors sharing submatrices reuse work.
pub struct MinorEngine<'a> {
    matrix: &'a SymbolicMatrix,
    cache: HashMap<(u128, u128), Polynomial>,
}

impl<'a> MinorEngine<'a> {
    pub fn new(matrix: &'a SymbolicMatrix) -> Result<Self> {
        if matrix.rows() > MAX_DIM || matrix.cols() > MAX_DIM {
            return Err(Error::MatrixTooLarge {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(MinorEngine {
            matrix,
            cache: HashMap::new(),
        })
    }

    pub fn minor(&mut self, sel: &MinorSelector) -> Result<Polynomial> {
        sel.validate(self.matrix)?;
        let rows = sel.rows.iter().fold(0u128, |acc, r| acc | 1 << r);
        let cols = sel.cols.iter().fold(0u128, |acc, c| acc | 1 << c);
        Ok(self.det(rows, cols))
    }

    fn det(&mut self, rows: u128, cols: u128) -> Polynomial {
        if rows == 0 {
            return Polynomial::one();
        }
        if let Some(hit) = self.cache.get(&(rows, cols)) {
            return hit.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest_rows = rows & !(1u128 << r);
        let mut out = Polynomial::zero();
        let mut remaining = cols;
        let mut position = 0;
        while remaining != 0 {
            let c = remaining.trailing_zeros() as usize;
            remaining &= !(1u128 << c);
            let entry = self.matrix.get(r, c);
            if !entry.is_zero() {
                let sub = self.det(rest_rows, cols & !(1u128 << c));
                if !sub.is_zero() {
                    let term = entry * &sub;
                    out = if position % 2 == 0 {
                        out + term
                    } else {
                        out - term
                    };
                }
            }
            position += 1;
        }
        self.cache.insert((rows, cols), out.clone());
        out
    }
}

/// Determinant of a square symbolic matrix.
pub fn determinant(m: &SymbolicMatrix) -> Result<Polynomial> {
    if m.rows() != m.cols() {
        return Err(Error::InvalidSelector(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let all: Vec<usize> = (0..m.rows()).collect();
    MinorEngine::new(m)?.minor(&MinorSelector::new(all.clone(), all))
}

/// Determinant of the submatrix picked by `sel`; the empty selector gives 1.
pub fn minor(m: &SymbolicMatrix, sel: &MinorSelector) -> Result<Polynomial> {
    MinorEngine::new(m)?.minor(sel)
}

/// `det (f_j^(i))_{i,j}`; the empty list gives 1.
pub fn wronskian(fs: &[Polynomial]) -> Polynomial {
    let size = fs.len();
    let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(size);
    let mut current: Vec<Polynomial> = fs.to_vec();
    for _ in 0..size {
        let next = current.iter().map(Polynomial::derive).collect();
        rows.push(std::mem::replace(&mut current, next));
    }
    if size == 0 {
        return Polynomial::one();
    }
    determinant(&SymbolicMatrix::from_rows(rows)).expect("square by construction")
}

/// All minors of the given sizes, ordered by size and then
/// lexicographically by `(rows, cols)`. Zero minors are included.
pub fn enumerate_minors(
    m: &SymbolicMatrix,
    sizes: &BTreeSet<usize>,
) -> Result<Vec<(MinorSelector, Polynomial)>> {
    let mut engine = MinorEngine::new(m)?;
    let mut out = Vec::new();
    for &size in sizes {
        if size > m.rows() || size > m.cols() {
            continue;
        }
        for rows in (0..m.rows()).combinations(size) {
            for cols in (0..m.cols()).combinations(size) {
                let sel = MinorSelector::new(rows.clone(), cols);
                let value = engine.minor(&sel)?;
                out.push((sel, value));
            }
        }
    }
    Ok(out)
}

/// Spans of homogeneous polynomials, one per degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedSpan {
    pieces: BTreeMap<u32, Span>,
}

impl GradedSpan {
    /// Groups homogeneous polynomials by degree; zero polynomials are skipped.
    pub fn from_homogeneous(polys: &[Polynomial]) -> Result<Self> {
        let mut grouped: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
        for p in polys {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(p.to_string()));
            }
            grouped
                .entry(p.degree().expect("nonzero"))
                .or_default()
                .push(p.clone());
        }
        let pieces = grouped
            .into_iter()
            .map(|(d, ps)| (d, Span::of(&ps)))
            .collect();
        Ok(GradedSpan { pieces })
    }

    pub fn piece(&self, degree: u32) -> Option<&Span> {
        self.pieces.get(&degree)
    }

    pub fn pieces(&self) -> &BTreeMap<u32, Span> {
        &self.pieces
    }

    pub fn dims(&self) -> BTreeMap<u32, usize> {
        self.pieces.iter().map(|(d, s)| (*d, s.dim())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(Span::dim).sum()
    }

    /// The degree piece over `index`, or the zero space if the degree is absent.
    pub fn piece_over(&self, degree: u32, index: MonomialIndex) -> Result<Span> {
        match self.pieces.get(&degree) {
            Some(s) => s.reindexed(index),
            None => Ok(Span::zero(index)),
        }
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.pieces.values().flat_map(Span::polynomials).collect()
    }
}

/// Spans of all minors of the given sizes, graded by degree. The size-0
/// minor contributes the constants. `degrees`, if given, keeps only those
/// degrees. Errors if some minor is not homogeneous.
pub fn minor_span(
    m: &SymbolicMatrix,
    sizes: &BTreeSet<usize>,
    degrees: Option<&BTreeSet<u32>>,
) -> Result<GradedSpan> {
    let minors: Vec<Polynomial> = enumerate_minors(m, sizes)?
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| match (degrees, p.degree()) {
            (Some(keep), Some(d)) => keep.contains(&d),
            _ => true,
        })
        .collect();
    GradedSpan::from_homogeneous(&minors)
}

/// Span of minors without grading, for matrices whose minors mix degrees.
pub fn span_of_minors(m: &SymbolicMatrix, sizes: &BTreeSet<usize>) -> Result<Span> {
    let minors: Vec<Polynomial> = enumerate_minors(m, sizes)?
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    Ok(Span::of(&minors))
}

/// The `d x d` maximal minors of the `d`-row Hankel matrix (equivalently the
/// Wronskians of `d` distinct variables) whose weight is at most `max_weight`.
pub fn hankel_wronskians(n: u32, d: u32, max_weight: u32) -> Result<Vec<Polynomial>> {
    if d == 0 {
        return Ok(vec![Polynomial::one()]);
    }
    let base = d * (d - 1) / 2;
    if max_weight < base {
        return Ok(Vec::new());
    }
    let budget = max_weight - base;
    let matrix = StructuredMatrixSpec::Hankel { n, h: d, k: budget }.build();
    let mut engine = MinorEngine::new(&matrix)?;
    let rows: Vec<usize> = (0..d as usize).collect();
    let offset = |col: usize| col as u32 / n;
    let mut out = Vec::new();
    for cols in (0..matrix.cols()).combinations(d as usize) {
        if cols.iter().map(|&c| offset(c)).sum::<u32>() > budget {
            continue;
        }
        let value = engine.minor(&MinorSelector::new(rows.clone(), cols))?;
        if !value.is_zero() {
            out.push(value);
        }
    }
    Ok(out)
}
