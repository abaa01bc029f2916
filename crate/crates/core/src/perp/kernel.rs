use std::collections::HashMap;

use crate::arcgen::{arc_generator, generator_keys};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis_sparse, MonomialIndex, Span, SparseRow};
use crate::pairing::monomial_pairing;
use crate::ring::{Monomial, Polynomial};

/// The ambient space `k[x^(<=H)]_d` for `n` families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PerpQuery {
    pub n: u32,
    pub degree: u32,
    pub max_order: u32,
}

impl PerpQuery {
    pub fn new(n: u32, degree: u32, max_order: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        Ok(PerpQuery {
            n,
            degree,
            max_order,
        })
    }

    pub fn index(&self) -> MonomialIndex {
        MonomialIndex::homogeneous(self.n, self.degree, self.max_order)
    }
}

/// `(I_n^arc)^perp ∩ k[x^(<=H)]_d`, the kernel of `P -> (g • P)_g` over all
/// arc generators `g` with `l <= 2H`.
pub fn perp_graded_basis(q: PerpQuery) -> Result<Span> {
    perp_piece(q, None)
}

/// As [`perp_graded_basis`], restricted to monomials of weight at most
/// `max_weight`. Pairing with a generator of weight `l` lowers weight by
/// exactly `l`, so each weight is an independent block and capping drops
/// whole blocks.
pub fn perp_piece(q: PerpQuery, max_weight: Option<u32>) -> Result<Span> {
    if q.n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let index = MonomialIndex::homogeneous_capped(q.n, q.degree, q.max_order, max_weight);
    // Generator terms with an order above H pair to zero against this space.
    let generators: Vec<Polynomial> = generator_keys(q.n, 2 * q.max_order)
        .into_iter()
        .map(|k| arc_generator(q.n, k).map(|g| g.restrict_above(q.max_order)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();

    let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    for (col, m) in index.monomials().iter().enumerate() {
        for (gi, g) in generators.iter().enumerate() {
            for (gm, gc) in g.terms() {
                if let Some((c, rest)) = monomial_pairing(gm, m) {
                    let r = *row_of.entry((gi, rest)).or_insert_with(|| {
                        rows.push(Vec::new());
                        rows.len() - 1
                    });
                    rows[r].push((col, c * gc));
                }
            }
        }
    }
    let kernel = kernel_basis_sparse(&rows, index.len());
    Ok(Span::from_sparse_rows(&kernel, index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::span_equal;
    use crate::pairing::annihilates;
    use crate::ring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    fn span(q: PerpQuery, polys: &[&str]) -> Span {
        let polys: Vec<Polynomial> = polys.iter().map(|s| p(s)).collect();
        Span::from_polynomials(&polys, q.index()).unwrap()
    }

    #[test]
    fn worked_example_degrees() {
        let q = PerpQuery::new(1, 1, 2).unwrap();
        assert!(span_equal(
            &perp_graded_basis(q).unwrap(),
            &span(q, &["x1_0", "x1_1", "x1_2"])
        )
        .unwrap());
        let q = PerpQuery::new(1, 2, 2).unwrap();
        let got = perp_graded_basis(q).unwrap();
        assert!(span_equal(&got, &span(q, &["x1_0*x1_2 - x1_1^2"])).unwrap());
        let q = PerpQuery::new(1, 2, 0).unwrap();
        assert_eq!(perp_graded_basis(q).unwrap().dim(), 0);
        let q = PerpQuery::new(1, 0, 3).unwrap();
        assert_eq!(
            perp_graded_basis(q).unwrap().polynomials(),
            vec![Polynomial::one()]
        );
    }

    #[test]
    fn kernel_elements_are_annihilated() {
        let q = PerpQuery::new(2, 3, 3).unwrap();
        let basis = perp_graded_basis(q).unwrap();
        assert!(basis.dim() > 0);
        let gens = crate::arcgen::arc_generators_up_to(2, 6);
        for b in basis.polynomials() {
            assert!(gens.iter().all(|g| annihilates(g, &b)), "{b}");
        }
    }

    #[test]
    fn weight_cap_keeps_whole_blocks() {
        let q = PerpQuery::new(1, 2, 4).unwrap();
        let full = perp_graded_basis(q).unwrap();
        let capped = perp_piece(q, Some(3)).unwrap();
        let low: Vec<Polynomial> = full
            .polynomials()
            .into_iter()
            .filter(|b| b.terms().all(|(m, _)| m.weight() <= 3))
            .collect();
        assert_eq!(capped.dim(), low.len());
        assert!(low.iter().all(|b| capped.contains(b)));
    }

    #[test]
    fn rejects_zero_families() {
        assert!(PerpQuery::new(0, 1, 1).is_err());
    }
}
