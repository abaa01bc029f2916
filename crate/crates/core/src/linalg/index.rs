use std::collections::HashMap;

use crate::ring::{Monomial, Polynomial, Variable};

/// An ordered list of monomials used as matrix columns.
///
/// Columns are always in descending graded lexicographic order.
#[derive(Clone, Debug, Default)]
pub struct MonomialIndex {
    monomials: Vec<Monomial>,
    positions: HashMap<Monomial, usize>,
}

impl PartialEq for MonomialIndex {
    fn eq(&self, other: &Self) -> bool {
        self.monomials == other.monomials
    }
}

impl Eq for MonomialIndex {}

impl MonomialIndex {
    pub fn new<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        let mut monomials: Vec<Monomial> = monomials.into_iter().collect();
        monomials.sort_by(|a, b| b.cmp(a));
        monomials.dedup();
        let positions = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialIndex {
            monomials,
            positions,
        }
    }

    /// Every monomial occurring in `polys`.
    pub fn from_polynomials<'a, I: IntoIterator<Item = &'a Polynomial>>(polys: I) -> Self {
        Self::new(
            polys
                .into_iter()
                .flat_map(|p| p.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>()),
        )
    }

    /// All monomials of degree `degree` in `x_i^(j)` for `i <= n`, `j <= max_order`.
    pub fn homogeneous(n: u32, degree: u32, max_order: u32) -> Self {
        Self::homogeneous_capped(n, degree, max_order, None)
    }

    /// As [`MonomialIndex::homogeneous`], keeping only monomials of weight at most `max_weight`.
    pub fn homogeneous_capped(
        n: u32,
        degree: u32,
        max_order: u32,
        max_weight: Option<u32>,
    ) -> Self {
        let vars: Vec<Variable> = (1..=n)
            .flat_map(|i| (0..=max_order).map(move |j| Variable::x(i, j)))
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        fn rec(
            vars: &[Variable],
            start: usize,
            left: u32,
            weight: u32,
            cap: Option<u32>,
            stack: &mut Vec<usize>,
            out: &mut Vec<Monomial>,
        ) {
            if left == 0 {
                out.push(Monomial::from_powers(stack.iter().map(|&k| (vars[k], 1))));
                return;
            }
            for k in start..vars.len() {
                let w = weight + vars[k].order().unwrap_or(0);
                if cap.is_some_and(|c| w > c) {
                    continue;
                }
                stack.push(k);
                rec(vars, k, left - 1, w, cap, stack, out);
                stack.pop();
            }
        }
        if n > 0 || degree == 0 {
            rec(&vars, 0, degree, 0, max_weight, &mut stack, &mut out);
        }
        Self::new(out)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, column: usize) -> &Monomial {
        &self.monomials[column]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.positions.get(m).copied()
    }
}
