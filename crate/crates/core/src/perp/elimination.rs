use std::collections::BTreeSet;

use serde::Serialize;

use super::kernel::{perp_piece, PerpQuery};
use crate::error::Result;
use crate::hankel::{minor_span, GradedSpan, StructuredMatrixSpec};
use crate::linalg::{span_equal, MonomialIndex, Span};
use crate::ring::Polynomial;

/// `(I_n^arc ∩ k[x^(<=h)])^perp` as the span of all minors of `T_{n,h}`.
pub fn truncated_perp_basis(n: u32, h: u32) -> Result<GradedSpan> {
    let t = StructuredMatrixSpec::Triangular { n, h }.build();
    let sizes: BTreeSet<usize> = (0..=(h as usize + 1)).collect();
    minor_span(&t, &sizes, None)
}

/// Restrictions `P|_{x^(s)=0, s>h}` of the degree-`d` perp elements of order at most `H`.
pub fn restriction_span(n: u32, h: u32, d: u32, max_order: u32) -> Result<Span> {
    // Elements of weight above d*h restrict to zero in degree d.
    let piece = perp_piece(PerpQuery::new(n, d, max_order)?, Some(d * h))?;
    let restricted: Vec<Polynomial> = piece
        .polynomials()
        .iter()
        .map(|b| b.restrict_above(h))
        .collect();
    Span::from_polynomials(&restricted, MonomialIndex::homogeneous(n, d, h))
}

/// Raises the order bound from `h + d` until two consecutive restriction
/// spans agree and the bound reaches `d*h`, returning the span and the bound
/// that was used.
pub fn stabilized_restriction(n: u32, h: u32, d: u32) -> Result<(Span, u32)> {
    let mut order = h + d;
    let mut previous = restriction_span(n, h, d, order)?;
    loop {
        let current = restriction_span(n, h, d, order + 1)?;
        debug_assert!(current.dim() >= previous.dim());
        if span_equal(&previous, &current)? && order >= d * h {
            return Ok((previous, order));
        }
        previous = current;
        order += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeComparison {
    pub degree: u32,
    pub restriction_dim: usize,
    pub minor_dim: usize,
    pub order_used: u32,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOutcome {
    pub n: u32,
    pub h: u32,
    pub degrees: Vec<DegreeComparison>,
    pub total_dim: usize,
    /// First restriction element missing from the minor span, or vice versa.
    pub witness: Option<String>,
}

impl EliminationOutcome {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.equal)
    }
}

/// Compares the restricted perp with the `T_{n,h}` minor span in every degree `0..=h+1`.
pub fn elimination_outcome(n: u32, h: u32) -> Result<EliminationOutcome> {
    let minors = truncated_perp_basis(n, h)?;
    let mut degrees = Vec::new();
    let mut witness = None;
    for d in 0..=h + 1 {
        let index = MonomialIndex::homogeneous(n, d, h);
        let (restricted, order_used) = stabilized_restriction(n, h, d)?;
        let from_minors = minors.piece_over(d, index)?;
        let equal = span_equal(&restricted, &from_minors)?;
        if !equal && witness.is_none() {
            witness = restricted
                .polynomials()
                .into_iter()
                .find(|p| !from_minors.contains(p))
                .or_else(|| {
                    from_minors
                        .polynomials()
                        .into_iter()
                        .find(|p| !restricted.contains(p))
                })
                .map(|p| p.to_string());
        }
        degrees.push(DegreeComparison {
            degree: d,
            restriction_dim: restricted.dim(),
            minor_dim: from_minors.dim(),
            order_used,
            equal,
        });
    }
    Ok(EliminationOutcome {
        n,
        h,
        total_dim: minors.total_dim(),
        degrees,
        witness,
    })
}

pub fn check_elimination(n: u32, h: u32) -> Result<bool> {
    Ok(elimination_outcome(n, h)?.passed())
}
