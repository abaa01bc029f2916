use std::fmt;

/// A ring variable.
///
/// The derived ordering places all differential variables first (family
/// major, then order ascending) and the auxiliary symbols after them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    /// `x_family^(order)`; families are 1-based.
    Diff { family: u32, order: u32 },
    /// `xi_m`, a constant.
    Xi(u32),
    /// `alpha_{set, family}`, a constant.
    Alpha { set: u32, family: u32 },
    /// `E_m`, standing for `exp(xi_m t)`.
    Exp(u32),
    /// `y^(k)`, a second differential indeterminate.
    Y(u32),
}

/// How the derivation acts on a single variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivationRule {
    Zero,
    /// `v' = next`.
    Shift(Variable),
    /// `v' = factor * v`.
    Scaled(Variable),
}

impl Variable {
    pub fn x(family: u32, order: u32) -> Self {
        Variable::Diff { family, order }
    }

    pub fn is_differential(&self) -> bool {
        matches!(self, Variable::Diff { .. })
    }

    /// Derivative order for differential variables.
    pub fn order(&self) -> Option<u32> {
        match self {
            Variable::Diff { order, .. } => Some(*order),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<u32> {
        match self {
            Variable::Diff { family, .. } => Some(*family),
            _ => None,
        }
    }

    pub fn derivation_rule(&self) -> DerivationRule {
        match *self {
            Variable::Diff { family, order } => DerivationRule::Shift(Variable::Diff {
                family,
                order: order + 1,
            }),
            Variable::Y(k) => DerivationRule::Shift(Variable::Y(k + 1)),
            Variable::Exp(m) => DerivationRule::Scaled(Variable::Xi(m)),
            Variable::Xi(_) | Variable::Alpha { .. } => DerivationRule::Zero,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Diff { family, order } => write!(f, "x{family}_{order}"),
            Variable::Xi(m) => write!(f, "xi{m}"),
            Variable::Alpha { set, family } => write!(f, "al{set}_{family}"),
            Variable::Exp(m) => write!(f, "E{m}"),
            Variable::Y(k) => write!(f, "y_{k}"),
        }
    }
}
