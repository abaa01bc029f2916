use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use arcinv::arcgen::{arc_generator, generator_keys};
use arcinv::hankel::{enumerate_minors, minor_span, span_of_minors, FamilyParams, FamilyRegistry};
use arcinv::pairing::apply_pairing;
use arcinv::perp::{perp_graded_basis, PerpQuery};
use arcinv::ring::parse;
use arcinv::verify::{dims_lemma_chain, series, verify_with, CheckContext, CheckRegistry};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "arcinv",
    version,
    about = "Inverse systems of arc ideals of double points"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for parallel checks.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List arc generators of the double point ideal.
    Gens {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_order: u32,
    },
    /// Apply the apolarity pairing f • P.
    Pair {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Basis of the degree-d perp piece in orders at most H.
    Perp {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        order: u32,
    },
    /// Minors of a structured matrix and their span dimensions.
    Minors {
        #[arg(long, default_value = "H")]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Truncated dimensions against the closed-form series.
    Series {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h_max: u32,
    },
    /// Run the verification battery.
    Verify {
        #[arg(long, required_unless_present = "list")]
        n: Option<u32>,
        #[arg(long, required_unless_present = "list")]
        h: Option<u32>,
        #[arg(long)]
        deep: bool,
        /// Run only the named checks.
        #[arg(long, num_args = 1..)]
        only: Vec<String>,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Dimensions of the T, S and augmented S minor spans.
    DimsChain {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: u32,
    },
}

/// Rendered output plus whether every check it reports passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn to_json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Gens { n, max_order } => {
            let mut rows = Vec::new();
            for key in generator_keys(*n, *max_order) {
                let g = arc_generator(*n, key)?;
                rows.push((key.i, key.j, key.ell, g.to_string()));
            }
            if cli.json {
                let list: Vec<_> = rows
                    .iter()
                    .map(|(i, j, l, g)| json!({"i": i, "j": j, "ell": l, "generator": g}))
                    .collect();
                return Ok(Output::ok(to_json(&list)?));
            }
            let text = rows
                .iter()
                .map(|(i, j, l, g)| format!("g[{i},{j},{l}] = {g}\n"))
                .collect();
            Ok(Output::ok(text))
        }
        Command::Pair { f, p } => {
            let f = parse(f).context("parsing f")?;
            let p = parse(p).context("parsing P")?;
            let result = apply_pairing(&f, &p).to_string();
            if cli.json {
                return Ok(Output::ok(to_json(&json!({ "result": result }))?));
            }
            Ok(Output::ok(result + "\n"))
        }
        Command::Perp { n, degree, order } => {
            let span = perp_graded_basis(PerpQuery::new(*n, *degree, *order)?)?;
            let basis: Vec<String> = span.polynomials().iter().map(ToString::to_string).collect();
            if cli.json {
                let report = json!({
                    "n": n, "degree": degree, "order": order,
                    "ambient_dim": span.index().len(), "dim": basis.len(), "basis": basis,
                });
                return Ok(Output::ok(to_json(&report)?));
            }
            let mut text = format!("dim {} (ambient {})\n", basis.len(), span.index().len());
            for b in &basis {
                text.push_str(b);
                text.push('\n');
            }
            Ok(Output::ok(text))
        }
        Command::Minors {
            family,
            n,
            h,
            k,
            max_size,
        } => {
            let registry = FamilyRegistry::builtin();
            let fam = registry.get(family)?;
            let m = fam.build(FamilyParams {
                n: *n,
                h: *h,
                k: *k,
            })?;
            let top = m.rows().min(m.cols());
            let sizes: BTreeSet<usize> = (0..=max_size.unwrap_or(top).min(top)).collect();
            let minors = enumerate_minors(&m, &sizes)?;
            let nonzero: Vec<_> = minors.iter().filter(|(_, p)| !p.is_zero()).collect();
            let dims: BTreeMap<u32, usize> = match minor_span(&m, &sizes, None) {
                Ok(graded) => graded.dims(),
                Err(_) => BTreeMap::new(),
            };
            let total = span_of_minors(&m, &sizes)?.dim();
            if cli.json {
                let list: Vec<_> = nonzero
                    .iter()
                    .map(|(s, p)| json!({"rows": s.rows, "cols": s.cols, "minor": p.to_string()}))
                    .collect();
                let report = json!({
                    "family": fam.name(), "n": n, "h": h, "k": k,
                    "rows": m.rows(), "cols": m.cols(), "minors": list,
                    "degree_dims": dims, "total_dim": total,
                });
                return Ok(Output::ok(to_json(&report)?));
            }
            let mut text = format!("{} {}x{}\n{m}", fam.name(), m.rows(), m.cols());
            for (s, p) in &nonzero {
                text.push_str(&format!("{:?} {:?}: {p}\n", s.rows, s.cols));
            }
            for (d, k) in &dims {
                text.push_str(&format!("degree {d}: dim {k}\n"));
            }
            text.push_str(&format!("total dim {total}\n"));
            Ok(Output::ok(text))
        }
        Command::Series { n, h_max } => {
            let rows = series(*n, *h_max)?;
            let passed = rows.iter().all(|r| r.matches);
            let text = if cli.json {
                to_json(&rows)?
            } else {
                rows.iter()
                    .map(|r| {
                        let mark = if r.matches { "ok" } else { "MISMATCH" };
                        format!(
                            "h={} dim={} closed_form={} {mark}\n",
                            r.h, r.dim, r.closed_form
                        )
                    })
                    .collect()
            };
            Ok(Output { text, passed })
        }
        Command::Verify {
            n,
            h,
            deep,
            only,
            timings,
            list,
        } => {
            let registry = CheckRegistry::builtin();
            if *list {
                let text = registry
                    .all()
                    .map(|c| format!("{:<22} {}\n", c.name(), c.description()))
                    .collect();
                return Ok(Output::ok(text));
            }
            let (n, h) = n.zip(*h).context("--n and --h are required")?;
            let ctx = CheckContext {
                n,
                h,
                deep: *deep,
                seed: cli.seed,
            };
            let report = verify_with(&registry, ctx, only, *timings)?;
            let text = if cli.json {
                report.to_json() + "\n"
            } else {
                report.render_text()
            };
            Ok(Output {
                text,
                passed: report.passed,
            })
        }
        Command::DimsChain { n, h } => {
            let chain = dims_lemma_chain(*n, *h)?;
            let text = if cli.json {
                to_json(&chain)?
            } else {
                format!(
                    "dim T={} dim S={} dim S1={} closed form={} T->S={} equal={}\n",
                    chain.dim_t,
                    chain.dim_s,
                    chain.dim_s1,
                    chain.closed_form,
                    chain.t_maps_into_s,
                    chain.equal
                )
            };
            Ok(Output {
                text,
                passed: chain.equal,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("warning: could not set thread count: {e}");
        }
    }
    let output = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => {
            fs::write(path, &output.text).with_context(|| format!("writing {}", path.display()))
        }
        None => std::io::stdout()
            .write_all(output.text.as_bytes())
            .map_err(Into::into),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
