use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{DerivationRule, Monomial, Rational, Variable};

/// A sparse polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    /// `x_family^(order)`.
    pub fn x(family: u32, order: u32) -> Self {
        Self::var(Variable::x(family, order))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading monomial in the graded lexicographic order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Highest derivative order over all differential variables present.
    pub fn max_order(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_order).max()
    }

    /// True when every variable occurring is differential.
    pub fn is_differential_only(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.powers().iter().all(|(v, _)| v.is_differential()))
    }

    /// Total exponent of `v` in the highest-degree term containing it.
    pub fn degree_in(&self, v: Variable) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `v` (auxiliaries included).
    pub fn partial(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.remove_one(v) {
                out.add_term(rest, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// The derivation, extended to products by the Leibniz rule.
    pub fn derive(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for &(v, _) in m.powers() {
                let (e, rest) = m.remove_one(v).expect("variable present");
                let coeff = c * Rational::from_integer(e.into());
                match v.derivation_rule() {
                    DerivationRule::Zero => {}
                    DerivationRule::Shift(next) => {
                        out.add_term(rest.mul(&Monomial::var(next)), coeff);
                    }
                    DerivationRule::Scaled(factor) => {
                        let grown = rest.mul(&Monomial::from_powers([(v, 1), (factor, 1)]));
                        out.add_term(grown, coeff);
                    }
                }
            }
        }
        out
    }

    /// `k`-th derivative.
    pub fn derive_n(&self, k: u32) -> Polynomial {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derive();
        }
        p
    }

    /// Sets every differential variable of order above `h` to zero.
    pub fn restrict_above(&self, h: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.max_order().is_none_or(|o| o <= h))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Ring homomorphism sending each variable `v` to `image(v)`, or to itself
    /// when `image` returns `None`.
    pub fn substitute<F>(&self, image: F) -> Polynomial
    where
        F: Fn(Variable) -> Option<Polynomial>,
    {
        let mut powers: HashMap<(Variable, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.powers() {
                let factor = match image(v) {
                    None => Polynomial::term(Rational::one(), Monomial::pow(v, e)),
                    Some(img) => powers.entry((v, e)).or_insert_with(|| img.pow(e)).clone(),
                };
                acc = &acc * &factor;
                if acc.is_zero() {
                    break;
                }
            }
            out = out + acc;
        }
        out
    }

    /// Groups terms by the exponent of `v`: `self = sum_k coeff_k * v^k`.
    pub fn coefficients_in(&self, v: Variable) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.div(&Monomial::pow(v, e)).expect("divides");
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, parse, rat};

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x1_0 + x1_1") + p("-x1_0"), p("x1_1"));
        assert_eq!(Polynomial::zero() + p("x1_1^2"), p("x1_1^2"));
        let sum = p("x1_0^2") + p("2*x1_0*x1_2 + x1_1^2");
        assert_eq!(sum.to_string(), "x1_0^2 + 2*x1_0*x1_2 + x1_1^2");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x1_0") * p("x1_1"), p("x1_0*x1_1"));
        assert_eq!(p("x1_0 + x1_1") * p("x1_0 - x1_1"), p("x1_0^2 - x1_1^2"));
        assert_eq!(Polynomial::one() * p("3*x2_4 - 1"), p("3*x2_4 - 1"));
    }

    #[test]
    fn derive_examples() {
        assert_eq!(p("x1_0").derive(), p("x1_1"));
        assert_eq!(p("x1_0*x1_2").derive(), p("x1_1*x1_2 + x1_0*x1_3"));
        assert_eq!(p("x1_0*x1_2 - x1_1^2").derive(), p("x1_0*x1_3 - x1_1*x1_2"));
    }

    #[test]
    fn derive_auxiliaries() {
        assert_eq!(p("E1").derive(), p("xi1*E1"));
        assert_eq!(p("y_0^2").derive(), p("2*y_0*y_1"));
        assert!(p("xi2*al1_3").derive().is_zero());
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(p("x1_0*x1_2 - x1_1^2").restrict_above(1), p("-x1_1^2"));
        assert_eq!(p("x1_1").restrict_above(3), p("x1_1"));
        assert!(p("x1_3").restrict_above(2).is_zero());
    }

    #[test]
    fn display_signs_and_fractions() {
        assert_eq!(p("3/2*x2_1").to_string(), "3/2*x2_1");
        assert_eq!(p("-x1_1^2 + 1").to_string(), "-x1_1^2 + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(frac(-1, 3)).to_string(), "-1/3");
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let q = p("x1_0*x1_1 + 2");
        let image = q.substitute(|v| match v {
            Variable::Diff { order: 0, .. } => Some(p("y_0 + 1")),
            _ => None,
        });
        assert_eq!(image, p("y_0*x1_1 + x1_1 + 2"));
        assert_eq!(q.coefficients_in(Variable::x(1, 1))[&1], p("x1_0"));
        assert_eq!(q.scale(&rat(0)), Polynomial::zero());
    }
}
