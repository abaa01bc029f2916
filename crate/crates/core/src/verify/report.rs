use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::lemmas::closed_form_coefficients;
use super::registry::{CheckContext, CheckRegistry};
use crate::error::Result;
use crate::perp::truncated_perp_basis;
use crate::ring::Polynomial;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: BTreeMap<String, u32>,
    pub pass: bool,
    pub dimensions: BTreeMap<String, u128>,
    /// Smallest polynomial that violated the check, if any.
    pub witness: Option<String>,
    /// A few basis elements the check established.
    pub witness_basis: Vec<String>,
}

impl CheckResult {
    pub fn new(name: &str, ctx: &CheckContext) -> Self {
        CheckResult {
            name: name.to_string(),
            instance: BTreeMap::from([("n".to_string(), ctx.n), ("h".to_string(), ctx.h)]),
            pass: true,
            dimensions: BTreeMap::new(),
            witness: None,
            witness_basis: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: u32) -> Self {
        self.instance.insert(key.to_string(), value);
        self
    }

    pub fn dim(&mut self, key: impl Into<String>, value: impl Into<u128>) {
        self.dimensions.insert(key.into(), value.into());
    }

    /// Marks the check failed, keeping the smallest witness seen so far.
    pub fn fail_with(&mut self, witness: Option<&Polynomial>) {
        self.pass = false;
        if let Some(p) = witness {
            let text = p.to_string();
            let smaller = match &self.witness {
                None => true,
                Some(current) => (text.len(), &text) < (current.len(), current),
            };
            if smaller {
                self.witness = Some(text);
            }
        }
    }

    pub fn show_basis(&mut self, polys: &[Polynomial]) {
        const SHOWN: usize = 8;
        self.witness_basis = polys.iter().take(SHOWN).map(ToString::to_string).collect();
    }
}

/// The full verification report. Serializes deterministically unless
/// timings were requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub tool: String,
    pub version: String,
    pub n: u32,
    pub h: u32,
    pub deep: bool,
    pub seed: u64,
    pub passed: bool,
    /// Graded dimensions of the truncated inverse system.
    pub graded_dims: BTreeMap<u32, usize>,
    pub total_dim: usize,
    pub closed_form: u128,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// Plain-text rendering of the JSON content.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}  n={} h={} deep={} seed={}",
            self.tool, self.version, self.n, self.h, self.deep, self.seed
        );
        let dims: Vec<String> = self
            .graded_dims
            .iter()
            .map(|(d, k)| format!("{d}:{k}"))
            .collect();
        let _ = writeln!(
            out,
            "graded dims [{}]  total {}  closed form {}",
            dims.join(" "),
            self.total_dim,
            self.closed_form
        );
        for check in &self.checks {
            let status = if check.pass { "PASS" } else { "FAIL" };
            let dims: Vec<String> = check
                .dimensions
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(out, "{status}  {:<22} {}", check.name, dims.join(" "));
            if let Some(w) = &check.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
            if let Some(ms) = self.timings_ms.as_ref().and_then(|t| t.get(&check.name)) {
                let _ = writeln!(out, "      {ms} ms");
            }
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed {
                "all checks passed"
            } else {
                "FAILED"
            }
        );
        out
    }
}

/// Runs the selected checks (all when `names` is empty) in parallel and
/// assembles the report in registry order.
pub fn verify_with(
    registry: &CheckRegistry,
    ctx: CheckContext,
    names: &[String],
    timings: bool,
) -> Result<VerificationReport> {
    let selected = registry.select(names)?;
    let outcomes: Vec<(CheckResult, u128)> = selected
        .par_iter()
        .map(|check| {
            let start = Instant::now();
            let result = check.run(&ctx)?;
            Ok((result, start.elapsed().as_millis()))
        })
        .collect::<Result<Vec<_>>>()?;

    let truncated = truncated_perp_basis(ctx.n, ctx.h)?;
    let closed_form = closed_form_coefficients(ctx.n, ctx.h)[ctx.h as usize];
    let passed = outcomes.iter().all(|(r, _)| r.pass);
    let timings_ms = timings.then(|| {
        outcomes
            .iter()
            .map(|(r, ms)| (r.name.clone(), *ms))
            .collect()
    });
    Ok(VerificationReport {
        tool: "arcinv".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        n: ctx.n,
        h: ctx.h,
        deep: ctx.deep,
        seed: ctx.seed,
        passed,
        graded_dims: truncated.dims(),
        total_dim: truncated.total_dim(),
        closed_form,
        checks: outcomes.into_iter().map(|(r, _)| r).collect(),
        timings_ms,
    })
}

/// Every built-in check at `(n, h)` with seed 0 and no timings.
pub fn verify_all(n: u32, h: u32, deep: bool) -> Result<VerificationReport> {
    let ctx = CheckContext {
        n,
        h,
        deep,
        seed: 0,
    };
    verify_with(&CheckRegistry::builtin(), ctx, &[], false)
}
