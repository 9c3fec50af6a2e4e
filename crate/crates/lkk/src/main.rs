//! `lkk`: exact graded Bowen-Franks invariants of weighted graphs.
//!
//! Exit codes: 0 = success / verdict reached, 2 = malformed input,
//! 3 = a property the theory guarantees failed (always a bug),
//! 4 = unknown classification verdict under --strict.

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};
use lkk::format::{load_graph, matrix_to_rows, parse_matrix_text, to_canonical_json, Config, GraphFile};
use lkk::report::*;
use lkk::sweep::run_sweep;
use lkk_core::bf;
use lkk_core::classify::{classify_pair, ClassifyOptions, IsoVerdict};
use lkk_core::cover::{colimit_bf_oracle, covering_graph};
use lkk_core::enumerate::{Check, CheckConfig, CorpusSpec};
use lkk_core::fp_module::invariant_battery;
use lkk_core::int_mat::snf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lkk", version, about = "Graded Bowen-Franks invariants of weighted graphs")]
struct Cli {
    /// JSON config file overriding the built-in defaults.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file; violations are reported as data.
    Validate { graph: String },
    /// Full invariant battery of BF_gr plus the ungraded group.
    Invariants { graph: String },
    /// Module report of the graded Bowen-Franks module.
    Bfgr {
        graph: String,
        /// Report the dual module coker(Iᵗ − A_ω) instead.
        #[arg(long)]
        dual: bool,
        /// Include the pointed-class section (on by default for the graded
        /// module over Z).
        #[arg(long)]
        pointed: bool,
        /// Also report the sequence terms with Z/m coefficients.
        #[arg(long = "mod", value_name = "m")]
        modulus: Option<i64>,
    },
    /// Emit a covering-graph window as a graph file.
    Cover {
        graph: String,
        /// Degree window radius; required for weight group Z, forbidden
        /// for finite groups.
        #[arg(long)]
        radius: Option<i64>,
    },
    /// Cross-validate BF_gr against the covering-tower colimit.
    ColimitCheck {
        graph: String,
        #[arg(long)]
        stages: Option<i64>,
    },
    /// Graded/ungraded consistency at n = 0 (quotient and kernel of 1−σ).
    Vdb {
        graph: String,
        /// Truncation degree cap for the kernel computation.
        #[arg(long, default_value_t = 12)]
        truncation_cap: i64,
    },
    /// Decide BF_gr(E) ≅ BF_gr(F), with certificates where possible.
    Classify {
        left: String,
        right: String,
        #[arg(long)]
        degree_bound: Option<i64>,
        #[arg(long)]
        coeff_bound: Option<u64>,
        /// Also check whether the certificate maps [1]_E to [1]_F.
        #[arg(long)]
        pointed: bool,
        /// Exit 4 when the verdict is unknown.
        #[arg(long)]
        strict: bool,
    },
    /// Smith normal form of an integer matrix in the text format.
    Snf { matrix: String },
    /// Sweep an exhaustive small-graph corpus through the check battery.
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_multiplicity: u64,
        /// Worker count; 0 = automatic. Reports are byte-identical for any
        /// value.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// "all" or a comma-separated subset of
        /// purity,nonvanishing,class-map,vdb,colimit,battery.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Also write the report to this path.
        #[arg(long)]
        report: Option<String>,
        #[arg(long)]
        exclude_sinks: bool,
        /// Deduplicate up to simultaneous vertex permutation.
        #[arg(long)]
        canonical_only: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: serde::Serialize>(value: &T) {
    print!("{}", to_canonical_json(value));
}

fn run(cli: Cli) -> Result<u8> {
    let config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Validate { graph } => {
            let text = std::fs::read_to_string(&graph)?;
            let file = GraphFile::parse(&text)?;
            let violations = match file.to_graph() {
                Err(v) => v,
                Ok(g) => g.validate(),
            };
            let code = if violations.is_empty() { 0 } else { 2 };
            emit(&ValidateReport { violations });
            Ok(code)
        }
        Command::Invariants { graph } => {
            let g = load_graph(&graph)?;
            let bfg = bf::bf_graded(&g).map_err(|e| anyhow!("{e}"))?;
            let battery = invariant_battery(&bfg.module, config.prime_bound_default)
                .map_err(|e| anyhow!("{e}"))?;
            let ungraded = bf::bf_ungraded(&g).map_err(|e| anyhow!("{e}"))?;
            let nonvanishing = bf::nonvanishing_check(&g).map_err(|e| anyhow!("{e}"))?;
            emit(&InvariantsReport {
                battery: BatteryReport::new(&battery),
                ungraded_bowen_franks: AbelianReport::new(&ungraded),
                nonvanishing_witness: match &nonvanishing.verdict {
                    lkk_core::fp_module::ZeroVerdict::No { witness } => Some(witness.clone()),
                    _ => None,
                },
                pointed: PointReport::new(&bfg),
            });
            // the theory predicts BF_gr ≠ 0 for every finite graph
            Ok(if nonvanishing.nonzero { 0 } else { 3 })
        }
        Command::Bfgr { graph, dual, pointed: _, modulus } => {
            let g = load_graph(&graph)?;
            let cyclic = g.group().is_infinite_cyclic();
            let mut report = if dual {
                let d = bf::bf_dual(&g).map_err(|e| anyhow!("{e}"))?;
                let battery = cyclic
                    .then(|| invariant_battery(&d.module, config.prime_bound_default))
                    .transpose()
                    .map_err(|e| anyhow!("{e}"))?;
                ModuleReport::new(&d.module, battery.as_ref())
            } else {
                let bfg = bf::bf_graded(&g).map_err(|e| anyhow!("{e}"))?;
                let battery = cyclic
                    .then(|| invariant_battery(&bfg.module, config.prime_bound_default))
                    .transpose()
                    .map_err(|e| anyhow!("{e}"))?;
                let mut r = ModuleReport::new(&bfg.module, battery.as_ref());
                r.pointed = PointReport::new(&bfg);
                r
            };
            if let Some(m) = modulus {
                let terms = bf::sequence_terms(&g, m).map_err(|e| anyhow!("{e}"))?;
                report.coefficients_mod = Some(SequenceReport::new(&terms));
            }
            emit(&report);
            Ok(0)
        }
        Command::Cover { graph, radius } => {
            let g = load_graph(&graph)?;
            let covering = covering_graph(&g, radius).map_err(|e| anyhow!("{e}"))?;
            emit(&GraphFile::from_graph(&covering));
            Ok(0)
        }
        Command::ColimitCheck { graph, stages } => {
            let g = load_graph(&graph)?;
            let stages = stages.unwrap_or(config.truncation_radius_default);
            if stages < 2 {
                bail!("--stages must be at least 2");
            }
            let report = colimit_bf_oracle(&g, stages).map_err(|e| anyhow!("{e}"))?;
            let consistent = report.consistent();
            emit(&ColimitJson::new(&report));
            Ok(if consistent { 0 } else { 3 })
        }
        Command::Vdb { graph, truncation_cap } => {
            let g = load_graph(&graph)?;
            let report = bf::vdb_check(&g, truncation_cap).map_err(|e| anyhow!("{e}"))?;
            let passed = report.passed();
            emit(&VdbJson::new(&report));
            Ok(if passed { 0 } else { 3 })
        }
        Command::Classify { left, right, degree_bound, coeff_bound, pointed, strict } => {
            let e = load_graph(&left)?;
            let f = load_graph(&right)?;
            let options = ClassifyOptions {
                degree_bound: degree_bound.unwrap_or(config.degree_bound_default),
                coeff_bound: coeff_bound.unwrap_or(config.coeff_bound_default),
                prime_bound: config.prime_bound_default,
                check_pointed: pointed,
            };
            if options.degree_bound <= 0 || options.coeff_bound == 0 {
                bail!("bounds must be positive");
            }
            let verdict = classify_pair(&e, &f, options).map_err(|err| anyhow!("{err}"))?;
            let x = bf::bf_relations(&e);
            let y = bf::bf_relations(&f);
            emit(&ClassifyJson::new(&verdict, &x, &y, options.degree_bound, options.coeff_bound));
            match verdict {
                IsoVerdict::Unknown { .. } if strict => Ok(4),
                _ => Ok(0),
            }
        }
        Command::Snf { matrix } => {
            let text = std::fs::read_to_string(&matrix)?;
            let a = parse_matrix_text(&text)?;
            let s = snf(&a);
            let identity_checked = (&(&s.u * &a) * &s.v) == s.d;
            emit(&SnfJson {
                d: matrix_to_rows(&s.d),
                u: matrix_to_rows(&s.u),
                v: matrix_to_rows(&s.v),
                rank: s.rank(),
                invariant_factors: s.torsion_factors().iter().map(|t| t.to_string()).collect(),
                identity_checked,
            });
            // a failed re-multiplication is an internal bug, never bad input
            Ok(if identity_checked { 0 } else { 3 })
        }
        Command::Enumerate {
            max_vertices,
            max_multiplicity,
            jobs,
            checks,
            report,
            exclude_sinks,
            canonical_only,
        } => {
            let checks = parse_checks(&checks)?;
            let spec = CorpusSpec {
                max_vertices,
                max_edge_multiplicity: max_multiplicity,
                include_sinks: !exclude_sinks,
                canonical_only,
            };
            let check_config = CheckConfig {
                truncation_radius: config.truncation_radius_default,
                prime_bound: config.prime_bound_default,
                ..CheckConfig::default()
            };
            let jobs = if jobs == 0 { config.jobs } else { jobs };
            let sweep = run_sweep(&spec, &checks, &check_config, jobs)?;
            let rendered = to_canonical_json(&sweep);
            if let Some(path) = report {
                std::fs::write(&path, &rendered)?;
            }
            print!("{rendered}");
            Ok(if sweep.failures.is_empty() { 0 } else { 3 })
        }
    }
}

fn parse_checks(spec: &str) -> Result<Vec<Check>> {
    if spec == "all" {
        return Ok(Check::all());
    }
    spec.split(',')
        .map(|name| {
            Check::parse(name.trim()).ok_or_else(|| anyhow!("unknown check {name:?}"))
        })
        .collect()
}
