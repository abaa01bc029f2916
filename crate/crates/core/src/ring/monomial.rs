use std::cmp::Ordering;
use std::fmt;

use super::Variable;

/// A power product, stored as `(variable, exponent)` pairs sorted by
/// variable with no zero exponents.
///
/// Monomials are ordered graded-lexicographically: total degree first, then
/// the monomial with the larger exponent on the first differing variable is
/// the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Variable, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Variable) -> Self {
        Self::pow(v, 1)
    }

    pub fn pow(v: Variable, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Monomial {
            powers: vec![(v, e)],
            degree: e,
        }
    }

    /// Builds a monomial from arbitrary (possibly repeated, unsorted) powers.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut raw: Vec<(Variable, u32)> = powers.into_iter().filter(|(_, e)| *e > 0).collect();
        raw.sort_by_key(|(v, _)| *v);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(raw.len());
        for (v, e) in raw {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|(_, e)| e).sum();
        Monomial {
            powers: merged,
            degree,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.powers
            .binary_search_by_key(&v, |(w, _)| *w)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    /// Sum of derivative orders over differential variables, with multiplicity.
    pub fn weight(&self) -> u32 {
        self.powers
            .iter()
            .filter_map(|(v, e)| v.order().map(|o| o * e))
            .sum()
    }

    /// Highest derivative order among the differential variables.
    pub fn max_order(&self) -> Option<u32> {
        self.powers.iter().filter_map(|(v, _)| v.order()).max()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, ea) = self.powers[i];
            let (b, eb) = other.powers[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.powers[i..]);
        out.extend_from_slice(&other.powers[j..]);
        Monomial {
            powers: out,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                let f = other.powers[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial {
            powers: out,
            degree: self.degree - other.degree,
        })
    }

    /// Splits into the differential part and the auxiliary part.
    pub fn split_differential(&self) -> (Monomial, Monomial) {
        let (diff, aux): (Vec<_>, Vec<_>) =
            self.powers.iter().partition(|(v, _)| v.is_differential());
        (Monomial::from_sorted(diff), Monomial::from_sorted(aux))
    }

    /// Removes one copy of `v`, returning the exponent it had.
    pub(crate) fn remove_one(&self, v: Variable) -> Option<(u32, Monomial)> {
        let idx = self.powers.binary_search_by_key(&v, |(w, _)| *w).ok()?;
        let e = self.powers[idx].1;
        let mut powers = self.powers.clone();
        if e == 1 {
            powers.remove(idx);
        } else {
            powers[idx].1 -= 1;
        }
        Some((
            e,
            Monomial {
                powers,
                degree: self.degree - 1,
            },
        ))
    }

    fn from_sorted(powers: Vec<(Variable, u32)>) -> Monomial {
        let degree = powers.iter().map(|(_, e)| e).sum();
        Monomial { powers, degree }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.powers.iter().zip(other.powers.iter()) {
                if a.0 != b.0 {
                    // the side holding the smaller variable has the larger exponent there
                    return if a.0 < b.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(o: u32) -> Variable {
        Variable::x(1, o)
    }

    #[test]
    fn grlex_matches_index_layout() {
        // x^2 > x x' > x x'' > x'^2 within degree two
        let a = Monomial::pow(x(0), 2);
        let b = Monomial::from_powers([(x(0), 1), (x(1), 1)]);
        let c = Monomial::from_powers([(x(0), 1), (x(2), 1)]);
        let d = Monomial::pow(x(1), 2);
        assert!(a > b && b > c && c > d);
        assert!(Monomial::var(x(5)) < d);
    }

    #[test]
    fn divide_and_multiply() {
        let m = Monomial::from_powers([(x(0), 2), (x(1), 1)]);
        let q = m.div(&Monomial::var(x(0))).unwrap();
        assert_eq!(q, Monomial::from_powers([(x(0), 1), (x(1), 1)]));
        assert_eq!(q.mul(&Monomial::var(x(0))), m);
        assert!(m.div(&Monomial::var(x(2))).is_none());
        assert_eq!(m.weight(), 1);
        assert_eq!(m.max_order(), Some(1));
    }
}
