use crate::error::{Error, Result};
use crate::ring::{factorial, Polynomial};

use super::SymbolicMatrix;

/// A fully parameterized structured matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuredMatrixSpec {
    /// `h` rows, `n(k+1)` columns; column `c*n + (j-1)` of row `r` holds `x_j^(r+c)`.
    Hankel { n: u32, h: u32, k: u32 },
    /// `T_{n,h}`: per family an upper triangular block of order `h+1` with
    /// `x^(h-i)` on the `i`-th superdiagonal.
    Triangular { n: u32, h: u32 },
    /// `S_{n,h}`: per family an upper triangular block with `x^(i)/i!` on the
    /// `i`-th superdiagonal.
    Scaled { n: u32, h: u32 },
    /// `S_{n+1,h}` with `x_{n+1}` set to 1 and its derivatives to 0, so the
    /// last block is the identity.
    ScaledAugmentedAtOne { n: u32, h: u32 },
}

fn triangular_block(h: u32, entry: impl Fn(u32) -> Polynomial) -> SymbolicMatrix {
    let size = (h + 1) as usize;
    let mut m = SymbolicMatrix::zeros(size, size);
    for r in 0..size {
        for c in r..size {
            m.set(r, c, entry((c - r) as u32));
        }
    }
    m
}

impl StructuredMatrixSpec {
    pub fn n(&self) -> u32 {
        match *self {
            StructuredMatrixSpec::Hankel { n, .. }
            | StructuredMatrixSpec::Triangular { n, .. }
            | StructuredMatrixSpec::Scaled { n, .. }
            | StructuredMatrixSpec::ScaledAugmentedAtOne { n, .. } => n,
        }
    }

    pub fn build(&self) -> SymbolicMatrix {
        match *self {
            StructuredMatrixSpec::Hankel { n, h, k } => {
                let mut m = SymbolicMatrix::zeros(h as usize, (n * (k + 1)) as usize);
                for r in 0..h {
                    for c in 0..=k {
                        for j in 1..=n {
                            let col = (c * n + j - 1) as usize;
                            m.set(r as usize, col, Polynomial::x(j, r + c));
                        }
                    }
                }
                m
            }
            StructuredMatrixSpec::Triangular { n, h } => SymbolicMatrix::hconcat(
                &(1..=n)
                    .map(|j| triangular_block(h, |i| Polynomial::x(j, h - i)))
                    .collect::<Vec<_>>(),
            ),
            StructuredMatrixSpec::Scaled { n, h } => SymbolicMatrix::hconcat(
                &(1..=n)
                    .map(|j| triangular_block(h, |i| scaled_entry(j, i)))
                    .collect::<Vec<_>>(),
            ),
            StructuredMatrixSpec::ScaledAugmentedAtOne { n, h } => {
                let mut parts: Vec<SymbolicMatrix> = (1..=n)
                    .map(|j| triangular_block(h, |i| scaled_entry(j, i)))
                    .collect();
                parts.push(SymbolicMatrix::identity((h + 1) as usize));
                SymbolicMatrix::hconcat(&parts)
            }
        }
    }
}

fn scaled_entry(family: u32, i: u32) -> Polynomial {
    Polynomial::x(family, i).scale(&factorial(i).recip())
}

/// Parameters accepted by a family constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: u32,
    pub h: u32,
    pub k: Option<u32>,
}

/// A named family of structured matrices.
pub trait MatrixFamily: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn spec(&self, params: FamilyParams) -> Result<StructuredMatrixSpec>;

    fn build(&self, params: FamilyParams) -> Result<SymbolicMatrix> {
        Ok(self.spec(params)?.build())
    }
}

fn positive_n(params: FamilyParams) -> Result<u32> {
    if params.n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    Ok(params.n)
}

struct HankelFamily;
struct TriangularFamily;
struct ScaledFamily;
struct AugmentedFamily;

impl MatrixFamily for HankelFamily {
    fn name(&self) -> &'static str {
        "H"
    }

    fn description(&self) -> &'static str {
        "block Hankel matrix, h rows and offsets 0..=k (k defaults to h)"
    }

    fn spec(&self, params: FamilyParams) -> Result<StructuredMatrixSpec> {
        Ok(StructuredMatrixSpec::Hankel {
            n: positive_n(params)?,
            h: params.h,
            k: params.k.unwrap_or(params.h),
        })
    }
}

impl MatrixFamily for TriangularFamily {
    fn name(&self) -> &'static str {
        "T"
    }

    fn description(&self) -> &'static str {
        "upper triangular blocks with x^(h-i) on the i-th superdiagonal"
    }

    fn spec(&self, params: FamilyParams) -> Result<StructuredMatrixSpec> {
        Ok(StructuredMatrixSpec::Triangular {
            n: positive_n(params)?,
            h: params.h,
        })
    }
}

impl MatrixFamily for ScaledFamily {
    fn name(&self) -> &'static str {
        "S"
    }

    fn description(&self) -> &'static str {
        "upper triangular blocks with x^(i)/i! on the i-th superdiagonal"
    }

    fn spec(&self, params: FamilyParams) -> Result<StructuredMatrixSpec> {
        Ok(StructuredMatrixSpec::Scaled {
            n: positive_n(params)?,
            h: params.h,
        })
    }
}

impl MatrixFamily for AugmentedFamily {
    fn name(&self) -> &'static str {
        "S1"
    }

    fn description(&self) -> &'static str {
        "S for n+1 families with the last family specialized to 1"
    }

    fn spec(&self, params: FamilyParams) -> Result<StructuredMatrixSpec> {
        Ok(StructuredMatrixSpec::ScaledAugmentedAtOne {
            n: positive_n(params)?,
            h: params.h,
        })
    }
}

/// Matrix families selectable by name.
pub struct FamilyRegistry {
    families: Vec<Box<dyn MatrixFamily>>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry {
            families: Vec::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(HankelFamily));
        registry.register(Box::new(TriangularFamily));
        registry.register(Box::new(ScaledFamily));
        registry.register(Box::new(AugmentedFamily));
        registry
    }

    /// Adds a family, replacing any previous one with the same name.
    pub fn register(&mut self, family: Box<dyn MatrixFamily>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MatrixFamily> {
        self.families
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse;

    fn rows(m: &SymbolicMatrix) -> Vec<Vec<String>> {
        (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
            .collect()
    }

    #[test]
    fn triangular_example() {
        let m = StructuredMatrixSpec::Triangular { n: 1, h: 1 }.build();
        assert_eq!(rows(&m), [["x1_1", "x1_0"], ["0", "x1_1"]]);
    }

    #[test]
    fn hankel_example() {
        let m = StructuredMatrixSpec::Hankel { n: 1, h: 2, k: 2 }.build();
        assert_eq!(
            rows(&m),
            [["x1_0", "x1_1", "x1_2"], ["x1_1", "x1_2", "x1_3"]]
        );
        let m = StructuredMatrixSpec::Hankel { n: 2, h: 1, k: 1 }.build();
        assert_eq!(rows(&m), [["x1_0", "x2_0", "x1_1", "x2_1"]]);
    }

    #[test]
    fn scaled_example() {
        let m = StructuredMatrixSpec::Scaled { n: 1, h: 2 }.build();
        assert_eq!(m.get(0, 2), &parse("1/2*x1_2").unwrap());
        assert_eq!(
            rows(&m),
            [
                ["x1_0", "x1_1", "1/2*x1_2"],
                ["0", "x1_0", "x1_1"],
                ["0", "0", "x1_0"]
            ]
        );
    }

    #[test]
    fn augmented_has_identity_tail() {
        let m = StructuredMatrixSpec::ScaledAugmentedAtOne { n: 1, h: 1 }.build();
        assert_eq!(
            rows(&m),
            [["x1_0", "x1_1", "1", "0"], ["0", "x1_0", "0", "1"]]
        );
    }

    #[test]
    fn registry_lookup() {
        let registry = FamilyRegistry::builtin();
        assert_eq!(registry.names(), ["H", "T", "S", "S1"]);
        let params = FamilyParams {
            n: 2,
            h: 1,
            k: None,
        };
        assert_eq!(
            registry.get("T").unwrap().spec(params).unwrap(),
            StructuredMatrixSpec::Triangular { n: 2, h: 1 }
        );
        assert!(matches!(registry.get("Q"), Err(Error::UnknownFamily(_))));
        assert!(registry
            .get("H")
            .unwrap()
            .build(FamilyParams {
                n: 0,
                h: 1,
                k: None
            })
            .is_err());
    }
}
