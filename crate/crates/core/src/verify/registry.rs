use crate::error::{Error, Result};

use super::report::CheckResult;

/// Parameters shared by every check in one verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckContext {
    pub n: u32,
    pub h: u32,
    /// Enlarges degree and order sweeps.
    pub deep: bool,
    /// Seed for randomized sampling.
    pub seed: u64,
}

/// One named verification.
pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn run(&self, ctx: &CheckContext) -> Result<CheckResult>;
}

/// Checks selectable by name, kept in registration order.
pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut registry = Self::empty();
        for check in super::checks::builtin_checks() {
            registry.register(check);
        }
        registry
    }

    /// Adds a check, replacing any previous one with the same name.
    pub fn register(&mut self, check: Box<dyn Check>) {
        if let Some(slot) = self.checks.iter_mut().find(|c| c.name() == check.name()) {
            *slot = check;
        } else {
            self.checks.push(check);
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn Check> {
        self.checks
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::UnknownCheck(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn all(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.iter().map(|c| c.as_ref())
    }

    /// The named checks in registry order; all checks when `names` is empty.
    pub fn select(&self, names: &[String]) -> Result<Vec<&dyn Check>> {
        if names.is_empty() {
            return Ok(self.all().collect());
        }
        for name in names {
            self.get(name)?;
        }
        Ok(self
            .all()
            .filter(|c| names.iter().any(|n| n == c.name()))
            .collect())
    }
}
