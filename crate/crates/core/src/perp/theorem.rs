use serde::Serialize;

use super::kernel::{perp_graded_basis, PerpQuery};
use crate::error::Result;
use crate::hankel::hankel_wronskians;
use crate::linalg::{span_equal, Span};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremMainOutcome {
    pub n: u32,
    pub degree: u32,
    pub order: u32,
    pub kernel_dim: usize,
    pub wronskian_dim: usize,
    pub wronskians_enumerated: usize,
    pub equal: bool,
}

/// Span of the degree-`d` Wronskians intersected with `k[x^(<=J)]`.
///
/// Wronskians are weight homogeneous and every monomial of `k[x^(<=J)]_d`
/// has weight at most `dJ`, so Wronskians of larger weight cannot contribute.
pub fn wronskian_side(n: u32, d: u32, order: u32) -> Result<(Span, usize)> {
    let wronskians = hankel_wronskians(n, d, d * order)?;
    let count = wronskians.len();
    let low = Span::of(&wronskians).intersect_support(|m| m.max_order().is_none_or(|o| o <= order));
    Ok((low.reindexed(PerpQuery::new(n, d, order)?.index())?, count))
}

/// Kernel side versus Wronskian side of the degree-`d`, order-`J` piece.
pub fn theorem_main_outcome(n: u32, d: u32, order: u32) -> Result<TheoremMainOutcome> {
    let kernel = perp_graded_basis(PerpQuery::new(n, d, order)?)?;
    let (wronskian, count) = wronskian_side(n, d, order)?;
    Ok(TheoremMainOutcome {
        n,
        degree: d,
        order,
        kernel_dim: kernel.dim(),
        wronskian_dim: wronskian.dim(),
        wronskians_enumerated: count,
        equal: span_equal(&kernel, &wronskian)?,
    })
}

pub fn check_theorem_main(n: u32, d: u32, order: u32) -> Result<bool> {
    Ok(theorem_main_outcome(n, d, order)?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_matches_wronskians_examples() {
        assert!(check_theorem_main(1, 2, 3).unwrap());
        let linear = theorem_main_outcome(1, 1, 2).unwrap();
        assert!(linear.equal);
        assert_eq!(linear.kernel_dim, 3);
        assert!(check_theorem_main(2, 2, 2).unwrap());
    }
}
