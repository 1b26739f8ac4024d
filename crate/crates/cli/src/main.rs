mod cache;
mod compute;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use plethyra::relations::{
    scan_conjecture, verify_coeff_relation_thm2, verify_coeff_relation_thm3, verify_coeff_relations_thm2,
    verify_coeff_relations_thm3, verify_inequality, Conjecture, Evaluator, Grid, Relation, RelationReport, Route,
    Status, ROW_INSERT_ID, TOP_ROW_ID,
};
use plethyra::{Partition, SchurVector};
use serde_json::{json, Value};

use cache::{Cache, CacheEntry};
use compute::Method;
use config::{FileConfig, OutputFormat, Overrides, RunConfig};
use error::{CliError, EXIT_ERROR, EXIT_OK, EXIT_REFUTED};

/// Exact plethysm coefficients, Foulkes module decompositions and relation checks.
#[derive(Debug, Parser)]
#[command(name = "plethyra", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, env = "PLETHYRA_FORMAT", value_enum)]
    format: Option<OutputFormat>,
    /// Largest degree mn any engine will accept.
    #[arg(long, global = true, env = "PLETHYRA_DEGREE_CAP")]
    degree_cap: Option<u32>,
    /// Largest number of terms visited per homomorphism evaluation.
    #[arg(long, global = true, env = "PLETHYRA_ENUM_BUDGET")]
    enum_budget: Option<u128>,
    /// Worker threads for grids, scans and rank computations.
    #[arg(long, global = true, env = "PLETHYRA_WORKERS")]
    workers: Option<usize>,
    /// Directory holding cached expansions.
    #[arg(long, global = true, env = "PLETHYRA_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// TOML config file; defaults to the per-user plethyra/config.toml if present.
    #[arg(long, global = true, env = "PLETHYRA_CONFIG")]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Schur expansion of s_nu ∘ s_mu.
    Plethysm {
        #[arg(long, allow_hyphen_values = true)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "powersum")]
        method: Method,
        /// Neither read nor write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Decomposition of a (twisted) Foulkes module into Specht modules.
    Decompose {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// foulkes, signed or twisted:<nu>.
        #[arg(long, default_value = "foulkes")]
        variant: String,
        #[arg(long, value_enum, default_value = "powersum")]
        method: Method,
        #[arg(long)]
        no_cache: bool,
    },
    /// Check a relation between plethysm coefficients over a grid.
    Verify {
        /// Relation id, e.g. thm1, brion, dent, coeff-thm2.
        relation: String,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// Extra parameter: a for thm2/thm3/coeff-thm3, k for ikenmeyer.
        #[arg(long, alias = "k")]
        a: Option<u32>,
        /// Single shape for the coefficient relations.
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long, default_value = "symfunc")]
        route: Route,
    },
    /// Exhaustive scan of one of the open conjectures (7.1, 7.2, 7.3).
    Scan {
        conjecture: Conjecture,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Inspect or maintain the expansion cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    List,
    /// Recompute every entry with a different method and compare.
    Verify,
    Clear,
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }

    fn report(r: &RelationReport, format: OutputFormat) -> Self {
        let code = if r.status() == Status::Refuted { EXIT_REFUTED } else { EXIT_OK };
        Outcome {
            text: output::report(r, format),
            code,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("PLETHYRA_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let g = cli.global;
    let file = FileConfig::discover(g.config.as_deref())?;
    let overrides = Overrides {
        degree_cap: g.degree_cap,
        enum_budget: g.enum_budget,
        workers: g.workers,
        cache_dir: g.cache_dir,
        format: g.format,
    };
    let cfg = RunConfig::resolve(overrides, file)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.worker_count)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    pool.install(|| dispatch(cli.command, &cfg))
}

fn dispatch(command: Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let format = cfg.output_format;
    match command {
        Command::Plethysm {
            nu,
            mu,
            method,
            no_cache,
        } => {
            let v = cached_plethysm(&nu, &mu, method, cfg, !no_cache)?;
            Ok(Outcome::ok(output::schur(&v, format)))
        }
        Command::Decompose {
            m,
            n,
            variant,
            method,
            no_cache,
        } => {
            let nu = variant_outer(&variant, n)?;
            if method == Method::Rank && !(compute::is_row(&nu) || compute::is_column(&nu)) {
                return Err(CliError::Usage(format!(
                    "the rank method only handles the foulkes and signed variants, not {variant}"
                )));
            }
            let v = cached_plethysm(&nu, &Partition::row(m), method, cfg, !no_cache)?;
            Ok(Outcome::ok(output::schur(&v, format)))
        }
        Command::Verify {
            relation,
            max_degree,
            m,
            n,
            a,
            lambda,
            route,
        } => {
            let report = verify(&relation, max_degree, m, n, a, lambda, route, cfg)?;
            Ok(Outcome::report(&report, format))
        }
        Command::Scan { conjecture, max_degree } => {
            let ev = Evaluator::new(Route::Symfunc, cfg.limits());
            let report = scan_conjecture(conjecture, max_degree, &ev)?;
            Ok(Outcome::report(&report, format))
        }
        Command::Cache { action } => cache_command(action, cfg),
    }
}

fn variant_outer(variant: &str, n: u32) -> Result<Partition, CliError> {
    let nu = match variant {
        "foulkes" => Partition::row(n),
        "signed" => Partition::column(n),
        other => match other.strip_prefix("twisted:") {
            Some(shape) => shape.parse::<Partition>()?,
            None => {
                return Err(CliError::Usage(format!(
                    "unknown variant {other}; expected foulkes, signed or twisted:<nu>"
                )))
            }
        },
    };
    if nu.size() != n {
        return Err(CliError::Usage(format!("twisting partition {nu} is not a partition of {n}")));
    }
    Ok(nu)
}

fn cached_plethysm(
    nu: &Partition,
    mu: &Partition,
    method: Method,
    cfg: &RunConfig,
    use_cache: bool,
) -> Result<SchurVector, CliError> {
    let limits = cfg.limits();
    let degree = nu.size() * mu.size();
    if degree > limits.degree_cap {
        return Err(plethyra::Error::SizeLimitExceeded {
            what: "plethysm degree",
            needed: degree as u128,
            limit: limits.degree_cap as u128,
        }
        .into());
    }
    let cache = Cache::new(&cfg.cache_dir);
    if use_cache {
        if let Some(v) = cache.get(nu, mu) {
            return Ok(v);
        }
    }
    let v = compute::plethysm(nu, mu, method, &limits)?;
    if use_cache {
        // the cache is advisory; a failed write only costs a recomputation later
        if let Err(e) = cache.put(&CacheEntry::new(nu, mu, &v, method)) {
            log::warn!("could not write cache entry: {e}");
        }
    }
    Ok(v)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    relation: &str,
    max_degree: u32,
    m: Option<u32>,
    n: Option<u32>,
    a: Option<u32>,
    lambda: Option<Partition>,
    route: Route,
    cfg: &RunConfig,
) -> Result<RelationReport, CliError> {
    let limits = cfg.limits();
    let coeff = relation == ROW_INSERT_ID || relation == TOP_ROW_ID;
    if !coeff {
        let relation: Relation = relation.parse()?;
        let grid = Grid {
            max_degree,
            m,
            n,
            extra: a,
        };
        return Ok(verify_inequality(relation, &grid, &Evaluator::new(route, limits))?);
    }
    if let Some(lambda) = lambda {
        let (m, n) = match (m, n) {
            (Some(m), Some(n)) => (m, n),
            _ => return Err(CliError::Usage("--lambda needs --m and --n".into())),
        };
        return Ok(if relation == ROW_INSERT_ID {
            verify_coeff_relation_thm2(&lambda, m, n, &limits)?
        } else {
            verify_coeff_relation_thm3(&lambda, m, n, a.unwrap_or(2), &limits)?
        });
    }
    if max_degree > limits.degree_cap {
        return Err(plethyra::Error::SizeLimitExceeded {
            what: "grid degree",
            needed: max_degree as u128,
            limit: limits.degree_cap as u128,
        }
        .into());
    }
    Ok(if relation == ROW_INSERT_ID {
        verify_coeff_relations_thm2(max_degree, &limits)?
    } else {
        verify_coeff_relations_thm3(max_degree, &limits)?
    })
}

fn file_name(path: &std::path::Path) -> String {
    path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default()
}

fn cache_command(action: CacheAction, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let cache = Cache::new(&cfg.cache_dir);
    let format = cfg.output_format;
    match action {
        CacheAction::List => {
            let listed = cache.list()?;
            let text = match format {
                OutputFormat::Json => {
                    let items: Vec<Value> = listed
                        .iter()
                        .map(|l| match &l.entry {
                            Ok(e) => json!({
                                "file": file_name(&l.path),
                                "nu": e.nu,
                                "mu": e.mu,
                                "method": e.method.as_str(),
                                "engine_version": e.engine_version,
                            }),
                            Err(why) => json!({"file": file_name(&l.path), "error": why}),
                        })
                        .collect();
                    Value::Array(items).to_string()
                }
                OutputFormat::Table => {
                    let rows: Vec<(String, String)> = listed
                        .iter()
                        .map(|l| {
                            let what = match &l.entry {
                                Ok(e) => format!("nu={} mu={} {}", e.nu, e.mu, e.method.as_str()),
                                Err(_) => "corrupt".into(),
                            };
                            (file_name(&l.path), what)
                        })
                        .collect();
                    output::table(&["file", "entry"], &rows)
                }
            };
            Ok(Outcome::ok(text))
        }
        CacheAction::Verify => verify_cache(&cache, cfg),
        CacheAction::Clear => {
            let removed = cache.clear()?;
            Ok(Outcome::ok(output::generic(&json!({ "removed": removed }), format)))
        }
    }
}

/// Recomputes each readable entry with a method other than the one that
/// produced it. Any disagreement is a refutation.
fn verify_cache(cache: &Cache, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let limits = cfg.limits();
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut corrupt = Vec::new();
    let mut mismatches = Vec::new();
    for listed in cache.list()? {
        let name = file_name(&listed.path);
        let entry = match listed.entry {
            Ok(e) => e,
            Err(why) => {
                log::warn!("corrupt cache entry {name}: {why}");
                corrupt.push(Value::String(name));
                continue;
            }
        };
        let parsed = entry.key().and_then(|(nu, mu)| Ok((nu, mu, entry.schur()?)));
        let (nu, mu, stored) = match parsed {
            Ok(x) => x,
            Err(why) => {
                log::warn!("corrupt cache entry {name}: {why}");
                corrupt.push(Value::String(name));
                continue;
            }
        };
        let other = Method::ALL
            .into_iter()
            .find(|m| *m != entry.method && m.applies_to(&nu, &mu, &limits));
        let Some(other) = other else {
            skipped += 1;
            continue;
        };
        match compute::plethysm(&nu, &mu, other, &limits) {
            Ok(fresh) => {
                checked += 1;
                if fresh != stored {
                    mismatches.push(json!({
                        "file": name,
                        "nu": entry.nu,
                        "mu": entry.mu,
                        "stored_method": entry.method.as_str(),
                        "recheck_method": other.as_str(),
                        "stored": stored.to_json(),
                        "recomputed": fresh.to_json(),
                    }));
                }
            }
            Err(plethyra::Error::SizeLimitExceeded { .. }) => skipped += 1,
            Err(e) => return Err(e.into()),
        }
    }
    let status = if !mismatches.is_empty() {
        Status::Refuted
    } else if checked > 0 {
        Status::Verified
    } else {
        Status::Skipped
    };
    let value = json!({
        "checked": checked,
        "skipped": skipped,
        "corrupt": corrupt,
        "mismatches": mismatches,
        "status": status.as_str(),
    });
    let code = if status == Status::Refuted { EXIT_REFUTED } else { EXIT_OK };
    Ok(Outcome {
        text: output::generic(&value, cfg.output_format),
        code,
    })
}
