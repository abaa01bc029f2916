use std::collections::BTreeSet;

use arcinv::arcgen::{arc_generator, arc_generators_up_to, generator_keys};
use arcinv::hankel::{enumerate_minors, hankel_wronskians, wronskian, StructuredMatrixSpec};
use arcinv::linalg::{
    kernel_basis, rank, row_reduce, span_equal, MonomialIndex, RationalMatrix, Span,
};
use arcinv::pairing::{
    annihilates, apply_d, apply_pairing, d2_annihilated, d2_coefficient, OperatorTruncation,
};
use arcinv::perp::{perp_graded_basis, restriction_span, truncated_perp_basis, PerpQuery};
use arcinv::ring::{frac, parse, Monomial, Polynomial, Variable};
use itertools::Itertools;
use num_traits::Zero;
use proptest::prelude::*;

fn poly(
    n: u32,
    max_order: u32,
    max_terms: usize,
    max_degree: usize,
) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (
            -4i64..=4,
            1i64..=3,
            prop::collection::vec((1..=n, 0..=max_order), 0..=max_degree),
        ),
        0..=max_terms,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(p, q, vars)| {
            (
                Monomial::from_powers(vars.into_iter().map(|(f, o)| (Variable::x(f, o), 1))),
                frac(p, q),
            )
        }))
    })
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    poly(2, 3, 4, 3)
}

fn int_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, c), r).prop_map(move |rows| {
            RationalMatrix::from_rows(
                c,
                rows.into_iter()
                    .map(|row| row.into_iter().map(|x| frac(x, 1)).collect())
                    .collect(),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn leibniz_rule(a in small_poly(), b in small_poly()) {
        prop_assert_eq!((&a * &b).derive(), &(&a.derive() * &b) + &(&a * &b.derive()));
    }

    #[test]
    fn parse_inverts_display(a in small_poly()) {
        prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn pairing_is_bilinear(f in small_poly(), g in small_poly(), p in small_poly(), q in small_poly(), k in -3i64..=3) {
        let c = frac(k, 2);
        prop_assert_eq!(apply_pairing(&(&f + &g.scale(&c)), &p), &apply_pairing(&f, &p) + &apply_pairing(&g, &p).scale(&c));
        prop_assert_eq!(apply_pairing(&f, &(&p + &q.scale(&c))), &apply_pairing(&f, &p) + &apply_pairing(&f, &q).scale(&c));
    }

    #[test]
    fn pairing_composition(f in poly(2, 2, 3, 2), g in poly(2, 2, 3, 2), p in poly(2, 2, 5, 4)) {
        prop_assert_eq!(apply_pairing(&(&f * &g), &p), apply_pairing(&f, &apply_pairing(&g, &p)));
    }

    #[test]
    fn d2_coefficient_extraction(p in poly(2, 2, 4, 3), i in 1u32..=2, j in 1u32..=2, ell in 0u32..=4) {
        let (i, j) = (i.min(j), i.max(j));
        let trunc = OperatorTruncation::for_polynomial(&p);
        let d2 = apply_d(&apply_d(&p, trunc).unwrap(), trunc).unwrap();
        let g = arc_generator(2, arcinv::arcgen::ArcGeneratorKey::new(i, j, ell)).unwrap();
        let c = if i == j { 1 } else { 2 };
        prop_assert_eq!(d2_coefficient(&d2, i, j, ell), apply_pairing(&g, &p).scale(&frac(c, 1)));
    }

    #[test]
    fn d2_matches_generator_annihilation(seed in poly(2, 2, 4, 3), k in 0usize..4) {
        // Mix random polynomials with perp elements so both outcomes occur.
        let basis = perp_graded_basis(PerpQuery::new(2, 2, 2).unwrap()).unwrap().polynomials();
        let p = if k == 0 {
            seed
        } else {
            basis.iter().take(k * 3).fold(Polynomial::zero(), |acc, b| acc + b.clone())
        };
        let h = p.max_order().unwrap_or(0);
        let by_generators = arc_generators_up_to(2, 2 * h).iter().all(|g| annihilates(g, &p));
        prop_assert_eq!(d2_annihilated(&p), by_generators);
    }

    #[test]
    fn wronskian_alternates(a in poly(2, 2, 2, 1), b in poly(2, 2, 2, 1), c in poly(2, 2, 2, 1)) {
        let w = wronskian(&[a.clone(), b.clone(), c.clone()]);
        prop_assert_eq!(wronskian(&[b.clone(), a.clone(), c.clone()]), -w.clone());
        prop_assert_eq!(wronskian(&[a.clone(), c.clone(), b.clone()]), -w);
        prop_assert!(wronskian(&[a.clone(), b, a]).is_zero());
    }

    #[test]
    fn rank_nullity(m in int_matrix()) {
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent(m in int_matrix()) {
        let once = row_reduce(&m);
        prop_assert_eq!(row_reduce(&once), once.clone());
        prop_assert_eq!(once.without_zero_rows().rows(), rank(&m));
    }

    #[test]
    fn span_equality_is_an_equivalence(polys in prop::collection::vec(poly(1, 2, 3, 2), 1..4), k in 1i64..=3) {
        let index = MonomialIndex::from_polynomials(&polys);
        let a = Span::from_polynomials(&polys, index.clone()).unwrap();
        let mut mixed: Vec<Polynomial> = polys.iter().rev().map(|p| p.scale(&frac(k, 1))).collect();
        let sum = polys.iter().fold(Polynomial::zero(), |acc, p| acc + p.clone());
        mixed.push(sum);
        let b = Span::from_polynomials(&mixed, index.clone()).unwrap();
        let c = Span::from_polynomials(&polys.iter().cloned().chain(mixed.iter().cloned()).collect::<Vec<_>>(), index).unwrap();
        prop_assert!(span_equal(&a, &a).unwrap());
        prop_assert_eq!(span_equal(&a, &b).unwrap(), span_equal(&b, &a).unwrap());
        prop_assert!(span_equal(&a, &b).unwrap() && span_equal(&b, &c).unwrap() && span_equal(&a, &c).unwrap());
    }
}

#[test]
fn hankel_minor_derivatives_stay_in_the_wider_span() {
    for n in 1..=2u32 {
        for h in 1..=2u32 {
            for k in 0..=2u32 {
                let m = StructuredMatrixSpec::Hankel { n, h, k }.build();
                let wider = StructuredMatrixSpec::Hankel { n, h, k: k + 1 }.build();
                for size in 1..=h as usize {
                    let sizes = BTreeSet::from([size]);
                    let target: Vec<Polynomial> = enumerate_minors(&wider, &sizes)
                        .unwrap()
                        .into_iter()
                        .map(|(_, p)| p)
                        .collect();
                    let span = Span::of(&target);
                    for (_, w) in enumerate_minors(&m, &sizes).unwrap() {
                        let before = span.dim();
                        let after = Span::of(&[target.clone(), vec![w.derive()]].concat()).dim();
                        assert_eq!(before, after, "n={n} h={h} k={k} W={w}");
                    }
                }
            }
        }
    }
}

#[test]
fn wronskians_of_variables_are_maximal_hankel_minors() {
    for n in 1..=2u32 {
        for d in 1..=3u32 {
            for big_k in 0..=3u32 {
                let vars: Vec<Polynomial> = (0..=big_k)
                    .flat_map(|j| (1..=n).map(move |i| Polynomial::x(i, j)))
                    .collect();
                let by_derivation: Vec<Polynomial> = vars
                    .iter()
                    .cloned()
                    .combinations(d as usize)
                    .map(|s| wronskian(&s))
                    .collect();
                let m = StructuredMatrixSpec::Hankel { n, h: d, k: big_k }.build();
                let by_minors: Vec<Polynomial> =
                    enumerate_minors(&m, &BTreeSet::from([d as usize]))
                        .unwrap()
                        .into_iter()
                        .map(|(_, p)| p)
                        .collect();
                let index =
                    MonomialIndex::from_polynomials(by_derivation.iter().chain(by_minors.iter()));
                let a = Span::from_polynomials(&by_derivation, index.clone()).unwrap();
                let b = Span::from_polynomials(&by_minors, index).unwrap();
                assert!(span_equal(&a, &b).unwrap(), "n={n} d={d} K={big_k}");
            }
        }
    }
}

#[test]
fn perp_equals_wronskian_span() {
    for n in 1..=2u32 {
        for d in 1..=3u32 {
            for order in 0..=4u32 {
                if n == 2 && d == 3 && order == 4 {
                    continue;
                }
                let kernel = perp_graded_basis(PerpQuery::new(n, d, order).unwrap()).unwrap();
                let wr = hankel_wronskians(n, d, d * order).unwrap();
                let low =
                    Span::of(&wr).intersect_support(|m| m.max_order().is_none_or(|o| o <= order));
                let low = low.reindexed(kernel.index().clone()).unwrap();
                assert!(span_equal(&kernel, &low).unwrap(), "n={n} d={d} H={order}");
            }
        }
    }
}

#[test]
fn truncated_totals_match_closed_form() {
    for n in 1..=3u32 {
        for h in 0..=3u32 {
            let total = truncated_perp_basis(n, h).unwrap().total_dim() as u128;
            assert_eq!(total, (n as u128 + 1).pow(h + 1), "n={n} h={h}");
        }
    }
}

#[test]
fn restriction_grows_with_order() {
    for (n, h, d) in [(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 2, 3)] {
        let mut previous: Option<Span> = None;
        for order in h + d..=d * h + 1 {
            let current = restriction_span(n, h, d, order).unwrap();
            if let Some(prev) = &previous {
                assert!(current.dim() >= prev.dim());
                assert!(prev.polynomials().iter().all(|p| current.contains(p)));
            }
            previous = Some(current);
        }
    }
}

#[test]
fn generator_keys_are_complete() {
    for n in 1..=3u32 {
        for ell in 0..=4u32 {
            let keys = generator_keys(n, ell);
            assert_eq!(keys.len() as u32, (ell + 1) * n * (n + 1) / 2);
        }
    }
}
