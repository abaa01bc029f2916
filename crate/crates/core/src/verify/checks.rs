use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::lemmas::{dims_lemma_chain, series};
use super::registry::{Check, CheckContext};
use super::report::CheckResult;
use crate::arcgen::arc_generators_up_to;
use crate::error::Result;
use crate::hankel::{enumerate_minors, StructuredMatrixSpec};
use crate::pairing::{annihilates, d2_annihilated};
use crate::perp::{
    diff_homogeneity_check, elimination_outcome, exp_substitution_check, linearity_check,
    perp_graded_basis, theorem_main_outcome, PerpQuery,
};
use crate::ring::{Polynomial, Rational};

pub fn builtin_checks() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(HankelAnnihilation),
        Box::new(D2Annihilation),
        Box::new(Linearity),
        Box::new(ExpVanishing),
        Box::new(WronskianSpan),
        Box::new(Elimination),
        Box::new(TriangularToScaled),
        Box::new(ScaledAugmentation),
        Box::new(DiffHomogeneity),
        Box::new(Series),
        Box::new(RandomCombinations),
    ]
}

fn hankel_bounds(ctx: &CheckContext) -> (u32, u32) {
    let extra = if ctx.deep { 2 } else { 1 };
    (ctx.h + extra, ctx.h + extra)
}

fn perp_order(ctx: &CheckContext) -> u32 {
    if ctx.deep {
        ctx.h + 2
    } else {
        ctx.h + 1
    }
}

fn max_degree(ctx: &CheckContext) -> u32 {
    if ctx.deep {
        ctx.h + 2
    } else {
        (ctx.h + 1).min(3)
    }
}

/// Nonzero minors of the Hankel matrix used by the annihilation checks.
fn hankel_minors(ctx: &CheckContext) -> Result<Vec<Polynomial>> {
    let (rows, k) = hankel_bounds(ctx);
    let m = StructuredMatrixSpec::Hankel {
        n: ctx.n,
        h: rows,
        k,
    }
    .build();
    let sizes: BTreeSet<usize> = (1..=rows as usize).collect();
    Ok(enumerate_minors(&m, &sizes)?
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| !p.is_zero())
        .collect())
}

struct HankelAnnihilation;

impl Check for HankelAnnihilation {
    fn name(&self) -> &'static str {
        "hankel-annihilation"
    }

    fn description(&self) -> &'static str {
        "every Hankel minor is annihilated by every arc generator of bounded order"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let (rows, k) = hankel_bounds(ctx);
        let mut result = CheckResult::new(self.name(), ctx)
            .param("rows", rows)
            .param("k", k);
        let minors = hankel_minors(ctx)?;
        let gens = arc_generators_up_to(ctx.n, 2 * (rows + k));
        let failures: Vec<&Polynomial> = minors
            .par_iter()
            .filter(|w| !gens.iter().all(|g| annihilates(g, w)))
            .collect();
        for w in failures {
            result.fail_with(Some(w));
        }
        result.dim("minors", minors.len() as u128);
        result.dim("generators", gens.len() as u128);
        Ok(result)
    }
}

struct D2Annihilation;

impl Check for D2Annihilation {
    fn name(&self) -> &'static str {
        "d2-annihilation"
    }

    fn description(&self) -> &'static str {
        "D^2 kills every Hankel minor"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let (rows, k) = hankel_bounds(ctx);
        let mut result = CheckResult::new(self.name(), ctx)
            .param("rows", rows)
            .param("k", k);
        let minors = hankel_minors(ctx)?;
        let failures: Vec<&Polynomial> = minors.par_iter().filter(|w| !d2_annihilated(w)).collect();
        for w in failures {
            result.fail_with(Some(w));
        }
        result.dim("minors", minors.len() as u128);
        Ok(result)
    }
}

struct Linearity;

impl Check for Linearity {
    fn name(&self) -> &'static str {
        "linearity"
    }

    fn description(&self) -> &'static str {
        "perp elements are linear under exponential perturbation, with D(P) as the linear term"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let order = perp_order(ctx);
        let top = max_degree(ctx);
        let mut result = CheckResult::new(self.name(), ctx)
            .param("order", order)
            .param("max_degree", top);
        for d in 0..=top {
            let basis = perp_graded_basis(PerpQuery::new(ctx.n, d, order)?)?.polynomials();
            let failures: Vec<&Polynomial> =
                basis.par_iter().filter(|p| !linearity_check(p)).collect();
            for p in failures {
                result.fail_with(Some(p));
            }
            result.dim(format!("degree_{d}"), basis.len() as u128);
        }
        let control = Polynomial::x(1, 0).pow(2);
        if linearity_check(&control) {
            result.fail_with(Some(&control));
        }
        Ok(result)
    }
}

struct ExpVanishing;

impl Check for ExpVanishing {
    fn name(&self) -> &'static str {
        "exp-vanishing"
    }

    fn description(&self) -> &'static str {
        "degree d+1 perp elements vanish on sums of d exponentials"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let order = perp_order(ctx);
        let top = max_degree(ctx);
        let mut result = CheckResult::new(self.name(), ctx)
            .param("order", order)
            .param("max_degree", top);
        for d in 1..top {
            let basis = perp_graded_basis(PerpQuery::new(ctx.n, d + 1, order)?)?.polynomials();
            let checked: Vec<(Polynomial, bool)> = basis
                .par_iter()
                .map(|p| Ok((p.clone(), exp_substitution_check(p, d)?)))
                .collect::<Result<_>>()?;
            for (p, ok) in &checked {
                if !ok {
                    result.fail_with(Some(p));
                }
            }
            result.dim(format!("degree_{}", d + 1), basis.len() as u128);
        }
        let control = Polynomial::x(1, 0).pow(2);
        if exp_substitution_check(&control, 1)? {
            result.fail_with(Some(&control));
        }
        Ok(result)
    }
}

struct WronskianSpan;

impl Check for WronskianSpan {
    fn name(&self) -> &'static str {
        "wronskian-span"
    }

    fn description(&self) -> &'static str {
        "kernel pieces equal the Wronskian spans in bounded order"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let top = max_degree(ctx);
        let orders = if ctx.deep {
            ctx.h + 2
        } else {
            (ctx.h + 1).min(3)
        };
        let mut result = CheckResult::new(self.name(), ctx)
            .param("max_degree", top)
            .param("max_order", orders);
        let pairs: Vec<(u32, u32)> = (1..=top)
            .flat_map(|d| (1..=orders).map(move |j| (d, j)))
            .collect();
        let outcomes = pairs
            .par_iter()
            .map(|&(d, j)| theorem_main_outcome(ctx.n, d, j))
            .collect::<Result<Vec<_>>>()?;
        for o in &outcomes {
            result.dim(format!("d{}_J{}", o.degree, o.order), o.kernel_dim as u128);
            if !o.equal {
                result.fail_with(None);
            }
        }
        let sample = perp_graded_basis(PerpQuery::new(ctx.n, 2, 2)?)?;
        result.show_basis(&sample.polynomials());
        Ok(result)
    }
}

struct Elimination;

impl Check for Elimination {
    fn name(&self) -> &'static str {
        "elimination"
    }

    fn description(&self) -> &'static str {
        "restrictions of the perp equal the span of minors of T_{n,h} in every degree"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let mut result = CheckResult::new(self.name(), ctx);
        let outcome = elimination_outcome(ctx.n, ctx.h)?;
        for d in &outcome.degrees {
            result.dim(format!("degree_{}", d.degree), d.restriction_dim as u128);
            result.dim(format!("order_used_{}", d.degree), d.order_used);
        }
        result.dim("total", outcome.total_dim as u128);
        if !outcome.passed() {
            result.pass = false;
            result.witness = outcome.witness.clone();
        }
        let t = crate::perp::truncated_perp_basis(ctx.n, ctx.h)?;
        if let Some(top) = t.piece(ctx.h + 1) {
            result.show_basis(&top.polynomials());
        }
        Ok(result)
    }
}

struct TriangularToScaled;

impl Check for TriangularToScaled {
    fn name(&self) -> &'static str {
        "t-to-s"
    }

    fn description(&self) -> &'static str {
        "minor spans of T_{n,h} and S_{n,h} have equal dimension and x^(i) -> x^(h-i)/(h-i)! maps one into the other"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let mut result = CheckResult::new(self.name(), ctx);
        let chain = dims_lemma_chain(ctx.n, ctx.h)?;
        result.dim("dim_t", chain.dim_t as u128);
        result.dim("dim_s", chain.dim_s as u128);
        if chain.dim_t != chain.dim_s || !chain.t_maps_into_s {
            result.fail_with(None);
        }
        Ok(result)
    }
}

struct ScaledAugmentation;

impl Check for ScaledAugmentation {
    fn name(&self) -> &'static str {
        "s-augmentation"
    }

    fn description(&self) -> &'static str {
        "minors of S_{n,h} and maximal minors of S_{n+1,h} at x_{n+1}=1 span spaces of dimension (n+1)^(h+1)"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let mut result = CheckResult::new(self.name(), ctx);
        let chain = dims_lemma_chain(ctx.n, ctx.h)?;
        result.dim("dim_s", chain.dim_s as u128);
        result.dim("dim_s1", chain.dim_s1 as u128);
        result.dim("closed_form", chain.closed_form);
        if !chain.equal {
            result.fail_with(None);
        }
        Ok(result)
    }
}

struct DiffHomogeneity;

impl Check for DiffHomogeneity {
    fn name(&self) -> &'static str {
        "diff-homogeneity"
    }

    fn description(&self) -> &'static str {
        "maximal minors of S_{n+1,h} satisfy P(y x) = y^(h+1) P(x)"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let mut result = CheckResult::new(self.name(), ctx);
        let m = StructuredMatrixSpec::Scaled {
            n: ctx.n + 1,
            h: ctx.h,
        }
        .build();
        let minors: Vec<Polynomial> = enumerate_minors(&m, &BTreeSet::from([ctx.h as usize + 1]))?
            .into_iter()
            .map(|(_, p)| p)
            .filter(|p| !p.is_zero())
            .collect();
        let failures: Vec<&Polynomial> = minors
            .par_iter()
            .filter(|p| !diff_homogeneity_check(p, ctx.h + 1))
            .collect();
        for p in failures {
            result.fail_with(Some(p));
        }
        result.dim("maximal_minors", minors.len() as u128);
        Ok(result)
    }
}

struct Series;

impl Check for Series {
    fn name(&self) -> &'static str {
        "series"
    }

    fn description(&self) -> &'static str {
        "truncated dimensions match the coefficients of (n+1)/(1-(n+1)t)"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        let mut result = CheckResult::new(self.name(), ctx);
        for row in series(ctx.n, ctx.h)? {
            result.dim(format!("h{}", row.h), row.dim as u128);
            if !row.matches {
                result.fail_with(None);
            }
        }
        Ok(result)
    }
}

struct RandomCombinations;

impl Check for RandomCombinations {
    fn name(&self) -> &'static str {
        "random-combinations"
    }

    fn description(&self) -> &'static str {
        "random combinations of kernel elements stay in the perp; adding an outside monomial leaves it"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult> {
        const SAMPLES: usize = 8;
        let order = perp_order(ctx);
        let top = max_degree(ctx);
        let mut result = CheckResult::new(self.name(), ctx)
            .param("order", order)
            .param("samples", SAMPLES as u32);
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
        let gens = arc_generators_up_to(ctx.n, 2 * order);
        let in_perp = |p: &Polynomial| gens.iter().all(|g| annihilates(g, p));
        for d in 1..=top {
            let span = perp_graded_basis(PerpQuery::new(ctx.n, d, order)?)?;
            let basis = span.polynomials();
            let outside: Vec<_> = span
                .index()
                .monomials()
                .iter()
                .filter(|m| {
                    !span.contains(&Polynomial::term(
                        Rational::from_integer(1.into()),
                        (*m).clone(),
                    ))
                })
                .cloned()
                .collect();
            for _ in 0..SAMPLES {
                let mut p = Polynomial::zero();
                for b in &basis {
                    let c: i64 = rng.gen_range(-3..=3);
                    p = p + b.scale(&Rational::from_integer(c.into()));
                }
                if !in_perp(&p) || !d2_annihilated(&p) {
                    result.fail_with(Some(&p));
                }
                if let Some(m) = outside.choose(&mut rng) {
                    let bumped =
                        &p + &Polynomial::term(Rational::from_integer(1.into()), m.clone());
                    if span.contains(&bumped) || in_perp(&bumped) {
                        result.fail_with(Some(&bumped));
                    }
                }
            }
            result.dim(format!("degree_{d}"), basis.len() as u128);
        }
        Ok(result)
    }
}
