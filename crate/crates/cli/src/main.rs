//! `vdw`: generate van der Waerden complexes, print Betti tables, analyse
//! single complexes and sweep the classification over `(n, k)`.

mod analysis;
mod cache;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use vdw_core::classify::{classify_cell, sweep_cells, ClassificationReport, VerifySummary};
use vdw_core::random::random_complex;
use vdw_core::resolution::DEFAULT_SWEEP_LIMIT;
use vdw_core::{
    hochster_betti_with, io, is_chordal, is_flag, is_quasi_forest, make_vdw, FieldSpec, Graph,
    HochsterConfig, SimplicialComplex, VdwParams, ARTIFACT_VERSION,
};

use crate::cache::{Cache, CacheKey};

const EXIT_DISAGREEMENT: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_INPUT: u8 = 3;

/// Seed for the random-complex property sweep when `--seed` is not given.
const DEFAULT_SEED: u64 = 20_250_305;

#[derive(Parser)]
#[command(name = "vdw", version = ARTIFACT_VERSION, about = "Van der Waerden complexes and their Stanley-Reisner rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the facet file of vdW(n, k).
    Gen {
        n: usize,
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graded Betti table of the Stanley-Reisner ring.
    Betti {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        compute: ComputeOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All predicates, certificates and the resolution summary, as JSON.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        compute: ComputeOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare computed predicates with the closed forms for 0 < k < n <= N.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        compute: ComputeOpts,
        /// Result cache directory.
        #[arg(long, env = "VDW_CACHE_DIR")]
        cache: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
        /// Where to write the report JSON (stdout when omitted).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also test the quasi-forest characterisation on this many seeded
        /// random complexes (at most 7 vertices and 8 facets).
        #[arg(long, default_value_t = 0)]
        random_complexes: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the 1-skeleton as a graph file.
    Skeleton {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chordality of a graph file, with certificate.
    Chordal {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Use vdW(N, K).
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    vdw: Option<Vec<usize>>,
    /// Read a facet file.
    #[arg(long)]
    facets: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<(SimplicialComplex, Option<VdwParams>)> {
        match (&self.vdw, &self.facets) {
            (Some(nk), _) => {
                let params = VdwParams::new(nk[0], nk[1])?;
                Ok((make_vdw(params), Some(params)))
            }
            (None, Some(path)) => {
                let c =
                    io::read_facets(path).with_context(|| format!("reading {}", path.display()))?;
                Ok((c, None))
            }
            (None, None) => Err(anyhow!("give --vdw N K or --facets PATH")),
        }
    }
}

#[derive(Args)]
struct ComputeOpts {
    /// Coefficient field: Q, GF2 or GFp:<p>.
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    field: FieldSpec,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest n accepted by the 2^n subset sweep.
    #[arg(long, default_value_t = DEFAULT_SWEEP_LIMIT)]
    sweep_limit: usize,
}

impl ComputeOpts {
    fn config(&self) -> HochsterConfig {
        HochsterConfig {
            sweep_limit: self.sweep_limit,
            ..HochsterConfig::default()
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.jobs {
            builder = builder.num_threads(j.max(1));
        }
        Ok(builder.build()?)
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: vdw_core::Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    let resource = err.chain().any(|e| {
        matches!(
            e.downcast_ref::<vdw_core::Error>(),
            Some(vdw_core::Error::ResourceLimit { .. })
        )
    });
    if resource {
        EXIT_RESOURCE
    } else {
        EXIT_INPUT
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { n, k, out } => {
            let c = make_vdw(VdwParams::new(n, k)?);
            let text = io::write_facets(&c);
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    println!("{} facets", c.facets().len());
                }
                None => {
                    print!("{text}");
                    eprintln!("{} facets", c.facets().len());
                }
            }
            Ok(0)
        }
        Command::Betti {
            source,
            compute,
            format,
            out,
        } => {
            let (c, _) = source.load()?;
            let table = compute
                .pool()?
                .install(|| hochster_betti_with(&c, compute.field, &compute.config()))?;
            let rendered = match format {
                Format::Text => table.render_text(),
                Format::Json => table.to_json() + "\n",
                Format::Csv => table.render_csv(),
            };
            emit(out.as_deref(), &rendered)?;
            Ok(0)
        }
        Command::Analyze {
            source,
            compute,
            out,
        } => {
            let (c, params) = source.load()?;
            let result = compute
                .pool()?
                .install(|| analysis::analyze(&c, params, compute.field, &compute.config()))?;
            emit(
                out.as_deref(),
                &(serde_json::to_string_pretty(&result)? + "\n"),
            )?;
            Ok(0)
        }
        Command::Verify {
            n_max,
            compute,
            cache,
            no_cache,
            report,
            random_complexes,
            seed,
        } => {
            let cache = match (&cache, no_cache) {
                (Some(dir), false) => Some(Cache::open(dir)?),
                _ => None,
            };
            verify(
                n_max,
                &compute,
                cache.as_ref(),
                report.as_deref(),
                random_complexes,
                seed,
            )
        }
        Command::Skeleton { source, out } => {
            let (c, _) = source.load()?;
            emit(out.as_deref(), &c.one_skeleton().to_text())?;
            Ok(0)
        }
        Command::Chordal { graph } => {
            let text = std::fs::read_to_string(&graph)
                .with_context(|| format!("reading {}", graph.display()))?;
            let g = Graph::parse_text(&text)?;
            println!("{}", serde_json::to_string_pretty(&is_chordal(&g))?);
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct RandomSweep {
    seed: u64,
    count: usize,
    /// Facet lists where quasi-forest and flag-plus-chordal disagree.
    counterexamples: Vec<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    version: &'static str,
    reports: Vec<ClassificationReport>,
    summary: VerifySummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    random_complexes: Option<RandomSweep>,
}

fn verify(
    n_max: usize,
    compute: &ComputeOpts,
    cache: Option<&Cache>,
    report_path: Option<&Path>,
    random_count: usize,
    seed: u64,
) -> Result<u8> {
    let config = compute.config();
    if n_max > config.sweep_limit {
        return Err(vdw_core::Error::ResourceLimit {
            n: n_max,
            limit: config.sweep_limit,
        }
        .into());
    }
    let field = compute.field;
    let reports = compute.pool()?.install(|| {
        sweep_cells(n_max)
            .par_iter()
            .map(|&params| {
                let key = CacheKey::new(params, field);
                let cell = match cache.and_then(|c| c.get(&key)) {
                    Some(hit) => hit,
                    None => {
                        let fresh = classify_cell(params, field, &config)?;
                        if let Some(c) = cache {
                            c.put(&key, &fresh)?;
                        }
                        fresh
                    }
                };
                Ok(ClassificationReport::new(params, field, &cell))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let summary = VerifySummary::from_reports(field, &reports);

    let random = (random_count > 0).then(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let counterexamples = (0..random_count)
            .map(|_| random_complex(&mut rng, 7, 8))
            .filter(|c| {
                is_quasi_forest(c) != (is_flag(c) && is_chordal(&c.one_skeleton()).is_chordal())
            })
            .map(|c| io::write_facets(&c))
            .collect();
        RandomSweep {
            seed,
            count: random_count,
            counterexamples,
        }
    });

    let passed = summary.passed() && random.as_ref().is_none_or(|r| r.counterexamples.is_empty());
    for (n, k, key) in &summary.failures {
        eprintln!("disagreement: n={n} k={k} {key}");
    }
    eprintln!(
        "{} cells, {} agree over {}",
        summary.cells, summary.agreements, summary.field
    );
    let doc = VerifyReport {
        version: ARTIFACT_VERSION,
        reports,
        summary,
        random_complexes: random,
    };
    emit(report_path, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    Ok(if passed { 0 } else { EXIT_DISAGREEMENT })
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
