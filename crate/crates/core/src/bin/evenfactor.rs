use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use evenfactor::graph6::{load_graphs, parse_corpus, CorpusEntry};
use evenfactor::harness::{self, CertifyConfig, ExtremalTableConfig, OracleCommandConfig, RunReport, ScanSource};
use evenfactor::lemmas::{LemmaGrid, LemmaId};
use evenfactor::theorem::{OracleMode, TheoremId};

#[derive(Parser)]
#[command(name = "evenfactor", version, about = "Spectral even-factor conditions: thresholds, verdicts and exact checks")]
struct Cli {
    /// Write the JSON report here.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write report rows as CSV here.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Spectral comparison slack.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tolerance: f64,
    /// Backtracking node cap for the even-factor oracle.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    oracle_cap: u64,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Theorem::One)]
    theorem: Theorem,
    /// Diagnostics only: evaluate thresholds at this δ instead of the
    /// graph's minimum degree. Verdicts are then not theorem verdicts.
    #[arg(long, global = true)]
    delta_override: Option<usize>,
    /// Record wall-clock time in the report (reports then differ between runs).
    #[arg(long, global = true)]
    timing: bool,
    /// Suppress the table on standard output.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<Theorem> for TheoremId {
    fn from(t: Theorem) -> Self {
        match t {
            Theorem::One => TheoremId::T1,
            Theorem::Two => TheoremId::T2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Never,
    Borderline,
    Always,
}

#[derive(Subcommand)]
enum Command {
    /// n, m, δ, ρ_Q, Wiener index and ρ_D per graph6 line.
    Spectra {
        /// graph6 files; standard input when absent or "-".
        files: Vec<PathBuf>,
    },
    /// Theorem verdict per graph6 line.
    Certify {
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Borderline)]
        oracle: Oracle,
    },
    /// Verdict counts over a corpus file or seeded random graphs of one order.
    Scan {
        #[arg(long)]
        n: usize,
        /// graph6 corpus; the seeded sampler is used when absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        sample_size: usize,
        #[arg(long, default_value_t = 0.25)]
        p_min: f64,
        #[arg(long, default_value_t = 0.95)]
        p_max: f64,
    },
    /// Lemma checks on parameter grids and random graphs.
    Lemmas {
        /// Restrict to these checks (repeatable).
        #[arg(long, value_parser = lemma_label)]
        only: Vec<LemmaId>,
        #[arg(long, default_value_t = 2)]
        delta_min: usize,
        #[arg(long, default_value_t = 6)]
        delta_max: usize,
        #[arg(long, default_value_t = 60)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        join_max_n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// graph6 corpora for the Wiener bound (repeatable).
        #[arg(long)]
        corpus: Vec<PathBuf>,
    },
    /// Threshold and even-factor table for the extremal graphs.
    Extremal {
        #[arg(long, default_value_t = 2)]
        delta_min: usize,
        #[arg(long, default_value_t = 4)]
        delta_max: usize,
        /// Defaults to the smallest even order admitted for each δ.
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// Direct even-factor search per graph6 line.
    Oracle { files: Vec<PathBuf> },
}

fn lemma_label(s: &str) -> Result<LemmaId, String> {
    LemmaId::from_label(s).ok_or_else(|| {
        let known: Vec<_> = LemmaId::ALL.iter().map(|l| l.label()).collect();
        format!("unknown check {s:?}; expected one of {}", known.join(", "))
    })
}

fn read_inputs(files: &[PathBuf]) -> Result<Vec<CorpusEntry>, String> {
    let stdin_only = [PathBuf::from("-")];
    let files = if files.is_empty() { &stdin_only[..] } else { files };
    let mut text = String::new();
    for f in files {
        let chunk = if f.as_os_str() == "-" {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map(|_| buf)
        } else {
            std::fs::read_to_string(f)
        };
        text.push_str(&chunk.map_err(|e| format!("{}: {e}", f.display()))?);
        if !text.is_empty() && !text.ends_with('\n') {
            text.push('\n');
        }
    }
    Ok(parse_corpus(&text))
}

fn run(cli: &Cli) -> Result<RunReport, String> {
    let mut certify_cfg = CertifyConfig::new(cli.theorem.into());
    certify_cfg.verdict.eps = cli.tolerance;
    certify_cfg.verdict.oracle_cap = cli.oracle_cap;
    certify_cfg.verdict.delta_override = cli.delta_override;
    Ok(match &cli.command {
        Command::Spectra { files } => harness::spectra(&read_inputs(files)?, cli.tolerance),
        Command::Certify { files, oracle } => {
            certify_cfg.verdict.oracle = match oracle {
                Oracle::Never => OracleMode::Never,
                Oracle::Borderline => OracleMode::Borderline,
                Oracle::Always => OracleMode::Always,
            };
            harness::certify(&read_inputs(files)?, &certify_cfg)
        }
        Command::Scan { n, corpus, sample_size, p_min, p_max } => {
            if *n > 62 {
                return Err(format!("scan supports n ≤ 62, got {n}"));
            }
            if !(0.0..=1.0).contains(p_min) || !(0.0..=1.0).contains(p_max) || p_min > p_max {
                return Err(format!("invalid probability range [{p_min}, {p_max}]"));
            }
            let source = match corpus {
                Some(path) => ScanSource::Corpus(read_inputs(std::slice::from_ref(path))?),
                None => ScanSource::Sampler { sample_size: *sample_size, seed: cli.seed, p_range: (*p_min, *p_max) },
            };
            harness::scan(*n, source, &certify_cfg)
        }
        Command::Lemmas { only, delta_min, delta_max, max_n, join_max_n, samples, corpus } => {
            let mut graphs = Vec::new();
            for path in corpus {
                graphs.extend(load_graphs(path).map_err(|e| format!("{}: {e}", path.display()))?);
            }
            let grid = LemmaGrid {
                lemmas: if only.is_empty() { LemmaId::ALL.to_vec() } else { only.clone() },
                deltas: *delta_min..=*delta_max,
                max_n: *max_n,
                join_max_n: *join_max_n,
                random_samples: *samples,
                seed: cli.seed,
                corpus: graphs,
                ..LemmaGrid::default()
            };
            harness::lemmas(&grid)
        }
        Command::Extremal { delta_min, delta_max, n_min, n_max } => {
            if *delta_min < 2 {
                return Err("extremal graphs need δ ≥ 2".into());
            }
            harness::extremal(&ExtremalTableConfig {
                deltas: *delta_min..=*delta_max,
                n_min: *n_min,
                n_max: *n_max,
                oracle_cap: cli.oracle_cap,
                tolerance: cli.tolerance,
            })
        }
        Command::Oracle { files } => harness::oracle(
            &read_inputs(files)?,
            &OracleCommandConfig { node_cap: cli.oracle_cap, ..OracleCommandConfig::default() },
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.timing {
        report.timing_seconds = Some(start.elapsed().as_secs_f64());
    }
    let written = cli
        .json
        .as_ref()
        .map(|p| report.write_json(p))
        .transpose()
        .and_then(|_| cli.csv.as_ref().map(|p| report.write_csv(p)).transpose());
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if !cli.quiet {
        print!("{}", report.to_table());
    }
    if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
