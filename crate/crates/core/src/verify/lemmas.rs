use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::hankel::{minor_span, span_of_minors, StructuredMatrixSpec};
use crate::perp::truncated_perp_basis;
use crate::ring::{factorial, Polynomial, Variable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub h: u32,
    pub dim: usize,
    pub closed_form: u128,
    pub matches: bool,
}

/// Coefficients of `(n+1)/(1-(n+1)t)` up to `t^h_max`, by long division.
pub fn closed_form_coefficients(n: u32, h_max: u32) -> Vec<u128> {
    let ratio = n as u128 + 1;
    let mut out: Vec<u128> = Vec::with_capacity(h_max as usize + 1);
    for h in 0..=h_max as usize {
        let numerator = if h == 0 { ratio } else { 0 };
        let carried = if h == 0 { 0 } else { ratio * out[h - 1] };
        out.push(numerator + carried);
    }
    out
}

/// Total dimension of the truncated inverse system for `h = 0..=h_max`,
/// against the series coefficients.
pub fn series(n: u32, h_max: u32) -> Result<Vec<SeriesRow>> {
    let expected = closed_form_coefficients(n, h_max);
    (0..=h_max)
        .map(|h| {
            let dim = truncated_perp_basis(n, h)?.total_dim();
            let closed_form = expected[h as usize];
            Ok(SeriesRow {
                h,
                dim,
                closed_form,
                matches: dim as u128 == closed_form,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaChain {
    pub n: u32,
    pub h: u32,
    /// Dimension of the span of all minors of `T_{n,h}`.
    pub dim_t: usize,
    /// Dimension of the span of all minors of `S_{n,h}`.
    pub dim_s: usize,
    /// Dimension of the span of maximal minors of `S_{n+1,h}` at `x_{n+1} = 1`.
    pub dim_s1: usize,
    pub closed_form: u128,
    /// Whether `x^(i) -> x^(h-i)/(h-i)!` sends every `T` basis element into the `S` span.
    pub t_maps_into_s: bool,
    pub equal: bool,
}

/// The `T -> S -> S1` dimension chain, each dimension from its own enumeration.
pub fn dims_lemma_chain(n: u32, h: u32) -> Result<LemmaChain> {
    let all_sizes: BTreeSet<usize> = (0..=h as usize + 1).collect();
    let t = minor_span(
        &StructuredMatrixSpec::Triangular { n, h }.build(),
        &all_sizes,
        None,
    )?;
    let s = minor_span(
        &StructuredMatrixSpec::Scaled { n, h }.build(),
        &all_sizes,
        None,
    )?;
    let s1 = span_of_minors(
        &StructuredMatrixSpec::ScaledAugmentedAtOne { n, h }.build(),
        &BTreeSet::from([h as usize + 1]),
    )?;

    let reflect = |p: &Polynomial| {
        p.substitute(|v| match v {
            Variable::Diff { family, order } if order <= h => {
                Some(Polynomial::x(family, h - order).scale(&factorial(h - order).recip()))
            }
            _ => None,
        })
    };
    let t_maps_into_s = t.pieces().iter().all(|(d, piece)| {
        piece.polynomials().iter().all(|b| {
            let image = reflect(b);
            s.piece(*d).is_some_and(|target| target.contains(&image))
        })
    });

    let closed_form = (n as u128 + 1).pow(h + 1);
    let (dim_t, dim_s, dim_s1) = (t.total_dim(), s.total_dim(), s1.dim());
    let equal = [dim_t, dim_s, dim_s1]
        .iter()
        .all(|&d| d as u128 == closed_form)
        && t_maps_into_s;
    Ok(LemmaChain {
        n,
        h,
        dim_t,
        dim_s,
        dim_s1,
        closed_form,
        t_maps_into_s,
        equal,
    })
}
