use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::AtomicBool;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use interval_kn::bounds::{certified_upper_bound, certify, lower_bound, reference_formulas, upper_bound};
use interval_kn::coloring::{shift_vector, verify_interval, EdgeColoring, ShiftVector};
use interval_kn::constructions::{construct_composite, Method};
use interval_kn::equivalence::{coloring_to_factorization, factorization_to_coloring, LabeledFactorization};
use interval_kn::io::{CertificateDocument, ColoringDocument, Document, FactorizationDocument, Metadata};
use interval_kn::search::{realize_shift, sigma_search_with, Realization, SearchBudget, SigmaOptions};
use interval_kn::table::{bounds_table, render_bounds_table, render_m_table};

#[derive(Parser)]
#[command(name = "interval-kn", version, about = "Interval edge-colorings of K_2n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a coloring or labeled factorization and verify it.
    Construct(ConstructArgs),
    /// Check a coloring or factorization document.
    Verify { file: PathBuf },
    /// Print the shift vector of a document.
    Shift { file: PathBuf },
    /// Turn a coloring into a labeled factorization or back.
    Convert {
        file: PathBuf,
        #[arg(long)]
        to: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate bounds on W(K_2n).
    Bound(BoundArgs),
    /// Print the bounds table, or the m(k, r) table.
    Table {
        #[arg(long, default_value_t = 18)]
        max_n: usize,
        #[arg(long)]
        m_table: bool,
    },
    /// Budgeted searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Coloring,
    Factorization,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructMethod {
    ThreeFive,
    Composite,
    Pn,
    RoundRobin,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    method: ConstructMethod,
    #[arg(long)]
    n: Option<usize>,
    /// Left factor for composite: a document path or `method:N`.
    #[arg(long)]
    left: Option<String>,
    /// Right factor for composite: a document path or `method:N`.
    #[arg(long)]
    right: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "coloring")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Lower,
    Upper,
    CertifiedUpper,
    Reference,
}

#[derive(Args)]
struct BoundArgs {
    kind: BoundKind,
    #[arg(long)]
    n: usize,
    /// For certified-upper: exhaust this total instead of searching for the first empty one.
    #[arg(long)]
    total: Option<u32>,
    /// For certified-upper: write the certificate document here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    nodes: Option<u64>,
    #[arg(long)]
    seconds: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Defaults to INTERVAL_KN_THREADS, else 1.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum SearchKind {
    /// Maximum number of splitted matchings, σ_n.
    Sigma {
        #[arg(long)]
        n: usize,
        /// Turn off every pruning and enumerate all factorizations.
        #[arg(long)]
        no_pruning: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A coloring with a given shift vector.
    Realize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        shift: ShiftVector,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

const INCONCLUSIVE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct(args) => construct(args),
        Command::Verify { file } => verify(&file),
        Command::Shift { file } => {
            let c = load_coloring(&file)?;
            println!("{}", shift_vector(&c)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { file, to, output } => {
            let c = load_coloring(&file)?;
            let f = coloring_to_factorization(&c)?;
            emit(&c, &f, None, to, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound(args) => bound(args),
        Command::Table { max_n, m_table } => {
            if m_table {
                print!("{}", render_m_table(4, 7));
            } else {
                if max_n == 0 {
                    return Err(Failure("--max-n must be at least 1".into()));
                }
                print!("{}", render_bounds_table(&bounds_table(max_n)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { kind } => search(kind),
    }
}

fn read(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Document::from_json(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// A document's coloring; factorizations are converted.
fn load_coloring(path: &Path) -> Result<EdgeColoring, Failure> {
    match read(path)? {
        Document::Coloring(d) => Ok(d.to_coloring()?),
        Document::Factorization(d) => Ok(factorization_to_coloring(&d.to_factorization()?)),
        Document::Certificate(_) => Err(Failure(format!("{}: a certificate holds no coloring", path.display()))),
    }
}

fn load_factor(spec: &str) -> Result<LabeledFactorization, Failure> {
    if let Some((method, n)) = spec.split_once(':') {
        if let Ok(method) = method.parse::<Method>() {
            let n: usize = n.parse().map_err(|_| Failure(format!("{spec}: bad size")))?;
            return Ok(method.build(n)?);
        }
    }
    let path = Path::new(spec);
    match read(path)? {
        Document::Factorization(d) => Ok(d.to_factorization()?),
        Document::Coloring(d) => {
            let c = d.to_coloring()?;
            Ok(coloring_to_factorization(&c)?)
        }
        Document::Certificate(_) => Err(Failure(format!("{spec}: a certificate holds no factorization"))),
    }
}

/// Verifies `c` and writes it (or `f`) to `output` or stdout.
fn emit(c: &EdgeColoring, f: &LabeledFactorization, method: Option<&str>, format: Format, output: Option<&Path>) -> Result<(), Failure> {
    let report = verify_interval(c);
    if let Some(v) = report.failure {
        return Err(Failure(format!("refusing to write an invalid coloring: {v}")));
    }
    let text = match format {
        Format::Coloring => {
            let meta = Metadata {
                method: method.map(str::to_string),
                shift_vector: Some(shift_vector(c)?.into_vec()),
            };
            ColoringDocument::from_coloring(c, Some(meta)).to_json()
        }
        Format::Factorization => FactorizationDocument::from_factorization(f).to_json(),
    };
    write_out(&text, output)
}

fn write_out(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(args: ConstructArgs) -> Outcome {
    let need_n = || args.n.ok_or_else(|| Failure("--n is required for this method".into()));
    let (f, name) = match args.method {
        ConstructMethod::ThreeFive => (Method::ThreeFive.build(need_n()?)?, "three-five".to_string()),
        ConstructMethod::Pn => (Method::Pn.build(need_n()?)?, "pn".to_string()),
        ConstructMethod::RoundRobin => (Method::RoundRobin.build(need_n()?)?, "round-robin".to_string()),
        ConstructMethod::Composite => {
            let (Some(l), Some(r)) = (&args.left, &args.right) else {
                return Err(Failure("composite needs --left and --right".into()));
            };
            let f = construct_composite(&load_factor(l)?, &load_factor(r)?)?;
            (f, format!("composite({l}, {r})"))
        }
    };
    let c = factorization_to_coloring(&f);
    emit(&c, &f, Some(&name), args.format, args.output.as_deref())?;
    if let Some(p) = &args.output {
        eprintln!("wrote {}: K_{} interval {}-coloring", p.display(), 2 * c.n(), c.t());
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(path: &Path) -> Outcome {
    let c = load_coloring(path)?;
    let report = verify_interval(&c);
    match report.failure {
        None => {
            println!("valid interval {}-coloring of K_{}, shift vector ({})", c.t(), 2 * c.n(), shift_vector(&c)?);
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            println!("invalid: {v}");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn bound(args: BoundArgs) -> Outcome {
    let n = args.n;
    if n == 0 {
        return Err(Failure("--n must be at least 1".into()));
    }
    match args.kind {
        BoundKind::Lower => println!("{}", lower_bound(n)),
        BoundKind::Upper => println!("{}", upper_bound(n)),
        BoundKind::CertifiedUpper => {
            let cert = match args.total {
                Some(t) => certify(n, t),
                None => certified_upper_bound(n),
            };
            match cert.claimed_bound {
                Some(b) => println!(
                    "n={n} total={}: no feasible shift vector among {} examined; W(K_{}) <= {b}",
                    cert.total,
                    cert.examined,
                    2 * n
                ),
                None => println!(
                    "n={n} total={}: {} feasible shift vectors, first ({}); no bound",
                    cert.total,
                    cert.survivors.len(),
                    cert.survivors[0]
                ),
            }
            if let Some(p) = &args.output {
                write_out(&CertificateDocument::from_certificate(&cert).to_json(), Some(p))?;
            }
        }
        BoundKind::Reference => {
            let r = reference_formulas(n);
            let lower = lower_bound(n);
            let flag = |v: u32| {
                if v < lower {
                    format!("  (disproved: W(K_{}) >= {lower})", 2 * n)
                } else {
                    String::new()
                }
            };
            println!("lower_bound      {lower}");
            println!("log_bound        {}", r.log_bound);
            println!("vertex_bound     {}", r.vertex_bound);
            println!("three_n_bound    {}", r.three_n_bound);
            println!("odd_part_bound   {}", r.odd_part_bound);
            println!("conjecture_pq    {}{}", r.conjecture_pq, flag(r.conjecture_pq));
            println!("conjecture_log   {}{}", r.conjecture_log, flag(r.conjecture_log));
            if let Some((m, k, w)) = r.composite {
                println!("composite        {w}  (m={m}, k={k})");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn budget(args: &BudgetArgs, cancel: Arc<AtomicBool>) -> SearchBudget {
    SearchBudget {
        node_limit: args.nodes,
        time_limit: args.seconds.map(Duration::from_secs),
        seed: args.seed,
        workers: args.threads,
        cancel: Some(cancel),
        progress: None,
        progress_every: None,
    }
}

fn interrupt_flag() -> Arc<AtomicBool> {
    let flag = Arc::new(AtomicBool::new(false));
    let f = flag.clone();
    // a second handler cannot be installed; the search then just runs on
    let _ = ctrlc::set_handler(move || f.store(true, std::sync::atomic::Ordering::Relaxed));
    flag
}

fn search(kind: SearchKind) -> Outcome {
    let cancel = interrupt_flag();
    match kind {
        SearchKind::Sigma { n, no_pruning, budget: b, output } => {
            let opts = if no_pruning { SigmaOptions::exhaustive() } else { SigmaOptions::default() };
            let r = sigma_search_with(n, &budget(&b, cancel), opts)?;
            println!(
                "n={n} sigma={} {} W(K_{}) {} {} ({} nodes)",
                r.sigma,
                if r.exhaustive { "optimal" } else { "best-found" },
                2 * n,
                if r.exhaustive { "=" } else { ">=" },
                2 * n - 1 + r.sigma,
                r.nodes
            );
            if let Some(p) = &output {
                let c = factorization_to_coloring(&r.witness);
                emit(&c, &r.witness, Some("sigma-search"), Format::Factorization, Some(p))?;
            }
            Ok(if r.exhaustive { ExitCode::SUCCESS } else { ExitCode::from(INCONCLUSIVE) })
        }
        SearchKind::Realize { n, shift, budget: b, output } => match realize_shift(n, &shift, &budget(&b, cancel))? {
            Realization::Found(c) => {
                println!("found interval {}-coloring of K_{} with shift vector ({shift})", c.t(), 2 * n);
                if let Some(p) = &output {
                    let f = coloring_to_factorization(&c)?;
                    emit(&c, &f, Some("realize-shift"), Format::Coloring, Some(p))?;
                }
                Ok(ExitCode::SUCCESS)
            }
            Realization::Infeasible { nodes } => {
                println!("no interval coloring of K_{} has shift vector ({shift}); {nodes} nodes", 2 * n);
                Ok(ExitCode::FAILURE)
            }
            Realization::NotFound { nodes } => {
                println!("not found within budget ({nodes} nodes); inconclusive");
                Ok(ExitCode::from(INCONCLUSIVE))
            }
        },
    }
}
