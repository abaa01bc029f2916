//! The apolarity pairing `f • P` and the operator `D = sum_j sum_i alpha_j xi^i d/dx_j^(i)`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Rational, Variable};

/// Falling factorial `a (a-1) ... (a-b+1)`.
fn falling(a: u32, b: u32) -> Rational {
    let mut acc = Rational::one();
    for k in 0..b {
        acc *= Rational::from_integer((a - k).into());
    }
    acc
}

/// `x^beta • x^alpha` for differential monomials: `alpha!/(alpha-beta)! x^(alpha-beta)`
/// when `beta <= alpha`, zero otherwise.
pub fn monomial_pairing(beta: &Monomial, alpha: &Monomial) -> Option<(Rational, Monomial)> {
    let rest = alpha.div(beta)?;
    let mut c = Rational::one();
    for &(v, b) in beta.powers() {
        c *= falling(alpha.exponent(v), b);
    }
    Some((c, rest))
}

/// `f • P`: substitutes `d/dx_i^(j)` for every differential variable of `f`
/// and applies the resulting operator to `P`. Auxiliary symbols are
/// constants on both sides.
pub fn apply_pairing(f: &Polynomial, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (fm, fc) in f.terms() {
        let (beta, f_aux) = fm.split_differential();
        for (pm, pc) in p.terms() {
            let (alpha, p_aux) = pm.split_differential();
            if let Some((c, rest)) = monomial_pairing(&beta, &alpha) {
                let m = rest.mul(&p_aux).mul(&f_aux);
                out.add_term(m, c * fc * pc);
            }
        }
    }
    out
}

/// Whether `f • P = 0`.
pub fn annihilates(f: &Polynomial, p: &Polynomial) -> bool {
    apply_pairing(f, p).is_zero()
}

/// Truncation of `D` to orders `i <= max_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorTruncation {
    pub max_order: u32,
}

impl OperatorTruncation {
    pub fn new(max_order: u32) -> Self {
        OperatorTruncation { max_order }
    }

    /// The smallest exact truncation for `p`.
    pub fn for_polynomial(p: &Polynomial) -> Self {
        OperatorTruncation {
            max_order: p.max_order().unwrap_or(0),
        }
    }
}

/// A concrete instance of `D`, identified by which `xi_m` and `alpha_{m,j}`
/// symbols it uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DOperator {
    pub set: u32,
}

impl Default for DOperator {
    fn default() -> Self {
        DOperator { set: 1 }
    }
}

impl DOperator {
    pub fn xi(&self) -> Variable {
        Variable::Xi(self.set)
    }

    pub fn alpha(&self, family: u32) -> Variable {
        Variable::Alpha {
            set: self.set,
            family,
        }
    }

    /// `sum_j sum_{i <= H} alpha_j xi^i dP/dx_j^(i)`.
    pub fn apply(&self, p: &Polynomial, trunc: OperatorTruncation) -> Result<Polynomial> {
        let mut vars: Vec<Variable> = p
            .terms()
            .flat_map(|(m, _)| m.powers().iter().map(|(v, _)| *v))
            .filter(Variable::is_differential)
            .collect();
        vars.sort();
        vars.dedup();
        let mut out = Polynomial::zero();
        for v in vars {
            let Variable::Diff { family, order } = v else {
                unreachable!()
            };
            if order > trunc.max_order {
                return Err(Error::OrderOverflow {
                    variable: v,
                    max_order: trunc.max_order,
                });
            }
            let weight = Monomial::from_powers([(self.alpha(family), 1), (self.xi(), order)]);
            out = out + p.partial(v).mul_monomial(&weight, &Rational::one());
        }
        Ok(out)
    }
}

/// `D(P)` with the default symbols `xi1`, `al1_j`.
pub fn apply_d(p: &Polynomial, trunc: OperatorTruncation) -> Result<Polynomial> {
    DOperator::default().apply(p, trunc)
}

/// Whether `D(D(P))` vanishes identically in `x`, `xi`, `alpha`.
pub fn d2_annihilated(p: &Polynomial) -> bool {
    let trunc = OperatorTruncation::for_polynomial(p);
    let once = apply_d(p, trunc).expect("truncation covers P");
    apply_d(&once, trunc)
        .expect("D does not raise orders")
        .is_zero()
}

/// Coefficient of `alpha_i alpha_j xi^l` in a polynomial in `xi1`, `al1_*` and `x`.
pub fn d2_coefficient(q: &Polynomial, i: u32, j: u32, l: u32) -> Polynomial {
    let d = DOperator::default();
    let target = Monomial::from_powers([(d.alpha(i), 1), (d.alpha(j), 1), (d.xi(), l)]);
    let mut out = Polynomial::zero();
    for (m, c) in q.terms() {
        let (diff, aux) = m.split_differential();
        if aux == target {
            out.add_term(diff, c.clone());
        }
    }
    out
}
