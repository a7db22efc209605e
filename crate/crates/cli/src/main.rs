//! Command-line front end: load graph or benzenoid inputs, dispatch a
//! computation method, emit machine-readable reports, and run the
//! verification and benchmark suites.
//!
//! Exit codes: 0 success, 1 usage or I/O or computation failure, 2 domain
//! rejection (input is not a partial cube / not a tree).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperwiener::benzenoid::{
    edge_hyper_wiener_benzenoid, parse_benzenoid, random_catacondensed, write_benzenoid,
    Benzenoid,
};
use hyperwiener::cut::{edge_hyper_wiener_cut, tree_edge_hyper_wiener};
use hyperwiener::error::Error;
use hyperwiener::graph::{
    edge_distance_hat, generate_family, parse_edgelist, random_tree, write_edgelist,
    DistanceMatrix, Family, Graph,
};
use hyperwiener::oracle::{edge_indices_naive_capped, DEFAULT_NAIVE_CAP};
use hyperwiener::polyacene::{closed_formulas, generate_polyacene};
use hyperwiener::theta::{certify_partial_cube, theta_classes, Certification};
use hyperwiener::{IndexReport, Rejection};

#[derive(Parser)]
#[command(name = "hyperwiener", version, about = "Edge-Wiener and edge-hyper-Wiener indices of partial cubes via the cut method")]
struct Cli {
    /// Worker threads for the parallel sections (default: HYPERWIENER_THREADS
    /// or all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the indices of one input file and print a report.
    Compute(ComputeArgs),
    /// Generate input files for the test families.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Run a cross-method verification suite.
    Verify(VerifyArgs),
    /// Compare method wall times on linear polyacenes; emits CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edgelist,
    Benzenoid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Benzenoid pipeline for benzenoid files, tree fast path for trees,
    /// generic cut method otherwise.
    Auto,
    Naive,
    Cut,
    Benzenoid,
    Tree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndicesArg {
    All,
    EdgeWiener,
    EdgeHyperWiener,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file path.
    #[arg(long)]
    input: PathBuf,
    /// Input file format.
    #[arg(long)]
    format: InputFormat,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Which index lines to include in text output (full reports are always
    /// emitted for json and csv).
    #[arg(long, value_enum, default_value_t = IndicesArg::All)]
    indices: IndicesArg,
    /// Edge-count guard for the naive method.
    #[arg(long, default_value_t = DEFAULT_NAIVE_CAP)]
    naive_cap: usize,
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Linear polyacene L_h as a benzenoid coordinate file.
    Polyacene {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random catacondensed benzenoid coordinate file.
    RandomBenzenoid {
        #[arg(long)]
        hexes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Labeled graph family as an edge-list file.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Path,
    EvenCycle,
    Hypercube,
    Star,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::EvenCycle => Family::EvenCycle,
            FamilyArg::Hypercube => Family::Hypercube,
            FamilyArg::Star => Family::Star,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Largest polyacene checked by the polyacene suite.
    #[arg(long, default_value_t = 20)]
    max_h: u64,
    /// Hexagon count for the benzenoid suite.
    #[arg(long, default_value_t = 10)]
    hexes: usize,
    /// Random samples (trees or benzenoids).
    #[arg(long, default_value_t = 50)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Polyacene,
    PartialCubes,
    Benzenoid,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated polyacene sizes.
    #[arg(long, default_value = "25,50,100,200", value_delimiter = ',')]
    h: Vec<u64>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let threads = cli.threads.or_else(|| {
        std::env::var("HYPERWIENER_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: could not configure {t} threads: {e}");
            return ExitCode::from(1);
        }
    }

    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Generate(args) => cmd_generate(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotPartialCube(_) | Error::NotATree => 2,
        _ => 1,
    }
}

enum Input {
    Graph(Graph),
    Benzenoid(Benzenoid),
}

impl Input {
    fn graph(&self) -> &Graph {
        match self {
            Input::Graph(g) => g,
            Input::Benzenoid(b) => b.graph(),
        }
    }
}

fn load_input(args: &ComputeArgs) -> Result<Input, Error> {
    let text = std::fs::read_to_string(&args.input)?;
    match args.format {
        InputFormat::Edgelist => Ok(Input::Graph(parse_edgelist(&text)?)),
        InputFormat::Benzenoid => Ok(Input::Benzenoid(parse_benzenoid(&text)?)),
    }
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), Error> {
    let input = load_input(args)?;
    let report = match args.method {
        MethodArg::Naive => edge_indices_naive_capped(input.graph(), args.naive_cap)?,
        MethodArg::Cut => edge_hyper_wiener_cut(input.graph())?,
        MethodArg::Tree => tree_edge_hyper_wiener(input.graph())?,
        MethodArg::Benzenoid => match &input {
            Input::Benzenoid(b) => edge_hyper_wiener_benzenoid(b)?,
            Input::Graph(_) => {
                return Err(Error::InvalidParameter(
                    "--method benzenoid requires --format benzenoid input".into(),
                ))
            }
        },
        MethodArg::Auto => match &input {
            Input::Benzenoid(b) => edge_hyper_wiener_benzenoid(b)?,
            Input::Graph(g) if g.is_tree() => tree_edge_hyper_wiener(g)?,
            Input::Graph(g) => edge_hyper_wiener_cut(g)?,
        },
    };
    print!("{}", render_report(&report, args.output, args.indices));
    Ok(())
}

fn render_report(r: &IndexReport, format: OutputFormat, indices: IndicesArg) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(r).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s =
                String::from("m,edge_wiener,edge_wiener_hat,ww_star,edge_hyper_wiener,method,elapsed_ms\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{:.3}",
                r.m,
                r.edge_wiener,
                r.edge_wiener_hat,
                r.ww_star,
                r.edge_hyper_wiener,
                r.method,
                r.elapsed.as_secs_f64() * 1e3
            );
            s
        }
        OutputFormat::Text => {
            let mut s = format!("m: {}\n", r.m);
            if indices != IndicesArg::EdgeHyperWiener {
                let _ = writeln!(s, "edge_wiener: {}", r.edge_wiener);
                let _ = writeln!(s, "edge_wiener_hat: {}", r.edge_wiener_hat);
            }
            if indices != IndicesArg::EdgeWiener {
                let _ = writeln!(s, "ww_star: {}", r.ww_star);
                let _ = writeln!(s, "edge_hyper_wiener: {}", r.edge_hyper_wiener);
            }
            let _ = writeln!(s, "method: {}", r.method);
            let _ = writeln!(s, "elapsed_ms: {:.3}", r.elapsed.as_secs_f64() * 1e3);
            s
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(Error::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_generate(cmd: &GenerateCmd) -> Result<(), Error> {
    match cmd {
        GenerateCmd::Polyacene { h, out } => {
            let b = generate_polyacene(*h)?;
            emit(out, &write_benzenoid(b.hexes()))
        }
        GenerateCmd::RandomBenzenoid { hexes, seed, out } => {
            let b = random_catacondensed(*hexes, *seed)?;
            emit(out, &write_benzenoid(b.hexes()))
        }
        GenerateCmd::Family { kind, n, out } => {
            let g = generate_family((*kind).into(), *n)?;
            emit(out, &write_edgelist(&g))
        }
    }
}

/// First failing comparison of a verification suite, serialized as JSON.
fn counterexample(case: &str, expected: &str, actual: &str) -> Error {
    let payload = serde_json::json!({
        "counterexample": case,
        "expected": expected,
        "actual": actual,
    });
    println!("{payload}");
    Error::Internal(format!("verification failed on {case}"))
}

fn check_reports_equal(case: &str, reference: &IndexReport, candidate: &IndexReport) -> Result<(), Error> {
    if reference.values() != candidate.values() {
        return Err(counterexample(
            case,
            &format!("{:?} via {}", reference.values(), reference.method),
            &format!("{:?} via {}", candidate.values(), candidate.method),
        ));
    }
    Ok(())
}

/// BFS-vs-cut-structure distance check on up to `samples` random edge pairs.
fn separation_check(case: &str, g: &Graph, samples: u64, seed: u64) -> Result<(), Error> {
    use rand::{Rng, SeedableRng};
    let cert = match certify_partial_cube(g)? {
        Certification::Certified(c) => c,
        Certification::Rejected(r) => return Err(Error::NotPartialCube(r)),
    };
    let dm = DistanceMatrix::compute(g)?;
    let m = g.edge_count();
    if m < 2 {
        return Ok(());
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let e = rng.random_range(0..m);
        let f = rng.random_range(0..m);
        let by_bfs = edge_distance_hat(g, e, f, &dm)?;
        let by_cuts = cert.sides.separating_classes(e, f);
        if by_bfs != by_cuts {
            return Err(counterexample(
                &format!("{case}: d-hat of edge pair ({e}, {f})"),
                &by_bfs.to_string(),
                &by_cuts.to_string(),
            ));
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Error> {
    match args.suite {
        SuiteArg::Polyacene => verify_polyacene(args),
        SuiteArg::PartialCubes => verify_partial_cubes(args),
        SuiteArg::Benzenoid => verify_benzenoid(args),
    }
}

fn verify_polyacene(args: &VerifyArgs) -> Result<(), Error> {
    for h in 1..=args.max_h {
        let b = generate_polyacene(h as usize)?;
        let formulas = closed_formulas(h)?;
        let alg = edge_hyper_wiener_benzenoid(&b)?;
        let expected = (formulas.m, formulas.w_e, formulas.ww_star, formulas.ww_e);
        let actual = (alg.m, alg.edge_wiener, alg.ww_star, alg.edge_hyper_wiener);
        if expected != actual {
            return Err(counterexample(
                &format!("polyacene h={h}"),
                &format!("{expected:?}"),
                &format!("{actual:?}"),
            ));
        }
        if h <= 6 {
            let naive = edge_indices_naive_capped(b.graph(), DEFAULT_NAIVE_CAP)?;
            check_reports_equal(&format!("polyacene h={h} naive"), &naive, &alg)?;
        }
        println!("polyacene h={h}: ok (W_e={}, WW_e={})", alg.edge_wiener, alg.edge_hyper_wiener);
    }
    println!("polyacene suite: pass (h = 1..={})", args.max_h);
    Ok(())
}

fn verify_partial_cubes(args: &VerifyArgs) -> Result<(), Error> {
    // Fixed recognition cases.
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    match certify_partial_cube(&c5)? {
        Certification::Rejected(Rejection::NotBipartite { .. }) => {}
        other => {
            return Err(counterexample(
                "C5 recognition",
                "rejected: odd cycle",
                &format!("{other:?}"),
            ))
        }
    }
    let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])?;
    match certify_partial_cube(&k23)? {
        Certification::Rejected(Rejection::ClassNotCut { .. }) => {}
        other => {
            return Err(counterexample(
                "K23 recognition",
                "rejected: class not a cut",
                &format!("{other:?}"),
            ))
        }
    }
    println!("recognition: C5 and K23 rejected with named reasons");

    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for i in 0..args.samples {
        let n = 2 + ((args.seed ^ i).wrapping_mul(0x9e3779b97f4a7c15) % 59) as usize;
        corpus.push((format!("tree n={n} #{i}"), random_tree(n, args.seed + i)?));
    }
    for k in (4..=40).step_by(2) {
        corpus.push((format!("C{k}"), generate_family(Family::EvenCycle, k)?));
    }
    for dim in 1..=6 {
        corpus.push((format!("Q{dim}"), generate_family(Family::Hypercube, dim)?));
    }

    for (name, g) in &corpus {
        let naive = edge_indices_naive_capped(g, DEFAULT_NAIVE_CAP)?;
        let cut = edge_hyper_wiener_cut(g)?;
        check_reports_equal(name, &naive, &cut)?;
        if g.is_tree() {
            let tree = tree_edge_hyper_wiener(g)?;
            check_reports_equal(&format!("{name} (tree path)"), &naive, &tree)?;
        }
        separation_check(name, g, 1000, args.seed)?;
    }
    println!(
        "partial-cubes suite: pass ({} graphs, methods agree, distance identity holds)",
        corpus.len()
    );
    Ok(())
}

fn verify_benzenoid(args: &VerifyArgs) -> Result<(), Error> {
    for i in 0..args.samples {
        let b = random_catacondensed(args.hexes, args.seed + i)?;
        let name = format!("benzenoid {} hexes #{i}", args.hexes);
        let alg = edge_hyper_wiener_benzenoid(&b)?;
        let cut = edge_hyper_wiener_cut(b.graph())?;
        check_reports_equal(&name, &alg, &cut)?;
        let naive = edge_indices_naive_capped(b.graph(), DEFAULT_NAIVE_CAP)?;
        check_reports_equal(&format!("{name} naive"), &naive, &alg)?;
        // Elementary cuts must be the Θ*-classes.
        let tc = theta_classes(b.graph())?;
        if tc.classes() != b.cuts() {
            return Err(counterexample(
                &format!("{name} cut/theta coincidence"),
                &format!("{:?}", b.cuts()),
                &format!("{:?}", tc.classes()),
            ));
        }
        separation_check(&name, b.graph(), 1000, args.seed + i)?;
    }
    println!(
        "benzenoid suite: pass ({} samples of {} hexes)",
        args.samples, args.hexes
    );
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<(), Error> {
    let mut csv =
        String::from("h,m,edge_wiener,edge_hyper_wiener,naive_ms,cut_ms,benzenoid_ms\n");
    for &h in &args.h {
        let b = generate_polyacene(h as usize)?;
        let g = b.graph();

        let t0 = Instant::now();
        let naive = edge_indices_naive_capped(g, usize::MAX)?;
        let naive_ms = t0.elapsed().as_secs_f64() * 1e3;

        let t0 = Instant::now();
        let cut = edge_hyper_wiener_cut(g)?;
        let cut_ms = t0.elapsed().as_secs_f64() * 1e3;

        let t0 = Instant::now();
        let alg = edge_hyper_wiener_benzenoid(&b)?;
        let alg_ms = t0.elapsed().as_secs_f64() * 1e3;

        check_reports_equal(&format!("bench h={h} cut"), &naive, &cut)?;
        check_reports_equal(&format!("bench h={h} benzenoid"), &naive, &alg)?;

        let _ = writeln!(
            csv,
            "{},{},{},{},{:.3},{:.3},{:.3}",
            h, alg.m, alg.edge_wiener, alg.edge_hyper_wiener, naive_ms, cut_ms, alg_ms
        );
    }
    emit(&args.out, &csv)
}
