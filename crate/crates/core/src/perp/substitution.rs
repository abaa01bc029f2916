use crate::error::{Error, Result};
use crate::pairing::{apply_d, DOperator, OperatorTruncation};
use crate::ring::{binomial, Monomial, Polynomial, Rational, Variable};

/// Substitutes `x_i^(j) -> sum_{m<=d} alpha_{m,i} xi_m^j E_m` into a
/// homogeneous `P` of degree `d+1` and tests whether the result vanishes.
pub fn exp_substitution_check(p: &Polynomial, d: u32) -> Result<bool> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous(p.to_string()));
    }
    if let Some(found) = p.degree() {
        if found != d + 1 {
            return Err(Error::DegreeMismatch {
                expected: d + 1,
                found,
            });
        }
    }
    let image = p.substitute(|v| match v {
        Variable::Diff { family, order } => Some(Polynomial::from_terms((1..=d).map(|m| {
            let op = DOperator { set: m };
            (
                Monomial::from_powers([
                    (op.alpha(family), 1),
                    (op.xi(), order),
                    (Variable::Exp(m), 1),
                ]),
                Rational::from_integer(1.into()),
            )
        }))),
        _ => None,
    });
    Ok(image.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearityOutcome {
    /// Degree of `P(x + alpha E)` in `E`.
    pub degree_in_exp: u32,
    /// Whether the coefficient of `E` equals `D(P)`.
    pub first_order_is_d: bool,
}

/// Expands `P(x + alpha e^{xi t})` with `E = e^{xi t}` and `E' = xi E`.
pub fn linearity_outcome(p: &Polynomial) -> LinearityOutcome {
    let op = DOperator::default();
    let e = Variable::Exp(op.set);
    let image = p.substitute(|v| match v {
        Variable::Diff { family, order } => Some(
            Polynomial::var(v)
                + Polynomial::term(
                    Rational::from_integer(1.into()),
                    Monomial::from_powers([(op.alpha(family), 1), (op.xi(), order), (e, 1)]),
                ),
        ),
        _ => None,
    });
    let by_power = image.coefficients_in(e);
    let trunc = OperatorTruncation::for_polynomial(p);
    let first = by_power.get(&1).cloned().unwrap_or_default();
    LinearityOutcome {
        degree_in_exp: by_power.keys().next_back().copied().unwrap_or(0),
        first_order_is_d: apply_d(p, trunc).is_ok_and(|dp| dp == first),
    }
}

/// True iff `P(x + alpha E)` has degree at most one in `E` and its linear
/// coefficient is `D(P)`.
pub fn linearity_check(p: &Polynomial) -> bool {
    let outcome = linearity_outcome(p);
    outcome.degree_in_exp <= 1 && outcome.first_order_is_d
}

/// Whether `P(y x) = y^d P(x)` under `x_i^(j) -> sum_k C(j,k) y^(k) x_i^(j-k)`.
pub fn diff_homogeneity_check(p: &Polynomial, d: u32) -> bool {
    let image = p.substitute(|v| match v {
        Variable::Diff { family, order } => Some(Polynomial::from_terms((0..=order).map(|k| {
            (
                Monomial::from_powers([(Variable::Y(k), 1), (Variable::x(family, order - k), 1)]),
                binomial(order, k),
            )
        }))),
        _ => None,
    });
    image == Polynomial::var(Variable::Y(0)).pow(d) * p.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{enumerate_minors, wronskian, StructuredMatrixSpec};
    use crate::ring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn exp_examples() {
        assert!(exp_substitution_check(&p("x1_0*x1_2 - x1_1^2"), 1).unwrap());
        assert!(!exp_substitution_check(&p("x1_0^2"), 1).unwrap());
        let w = wronskian(&[p("x1_0"), p("x1_1"), p("x1_2")]);
        assert!(exp_substitution_check(&w, 2).unwrap());
        assert!(exp_substitution_check(&p("x1_0"), 1).is_err());
        assert!(exp_substitution_check(&p("x1_0 + x1_1^2"), 1).is_err());
    }

    #[test]
    fn linearity_examples() {
        assert!(linearity_check(&p("x1_0*x1_2 - x1_1^2")));
        assert!(!linearity_check(&p("x1_0^2")));
        assert_eq!(linearity_outcome(&p("x1_0^2")).degree_in_exp, 2);
        assert!(linearity_outcome(&p("x1_0^2")).first_order_is_d);
        assert!(linearity_check(&p("x1_1")));
    }

    #[test]
    fn homogeneity_examples() {
        assert!(diff_homogeneity_check(&p("x1_0"), 1));
        assert!(!diff_homogeneity_check(&p("x1_1"), 1));
        let s = StructuredMatrixSpec::Scaled { n: 2, h: 1 }.build();
        let sizes = std::collections::BTreeSet::from([2]);
        for (_, minor) in enumerate_minors(&s, &sizes).unwrap() {
            assert!(diff_homogeneity_check(&minor, 2), "{minor}");
        }
        assert!(diff_homogeneity_check(&p("x1_1*x2_0 - x1_0*x2_1"), 2));
    }
}
