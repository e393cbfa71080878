use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use twcol::bounds::{self, VerifyOpts};
use twcol::generators;
use twcol::graph::{self, Graph};
use twcol::order;
use twcol::reach::{self, ParamKind};
use twcol::trigraph;
use twcol::{Budget, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "twcol",
    version,
    about = "Twin-width witnesses, derived vertex orders, and generalized coloring numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family instance and write it as a graph file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Derive a vertex order from a contraction witness (or a cotree)
    Order(OrderArgs),
    /// Coloring parameters per radius, for a fixed order or minimized
    Params(ParamsArgs),
    /// Check the closed-form bounds, on one instance or an exhaustive sweep
    Verify(VerifyArgs),
    /// Exact twin-width with a witness, for small graphs
    Tww(TwwArgs),
    /// Girth of a graph
    Girth {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Biclique number: the largest s with a K_{s,s} subgraph
    Bomega {
        #[arg(long)]
        graph: PathBuf,
        /// Search budget in branch nodes (overrides TWW_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct GenOut {
    /// Output graph file
    #[arg(long)]
    out: PathBuf,
    /// Also compute and print the girth
    #[arg(long)]
    girth: bool,
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete graph on n vertices, each edge subdivided k times
    SubdividedClique {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Full edge-indexed lift of a base graph (one coordinate per edge)
    ThetaLift {
        /// Base graph: a name like k4, c5, p3, k3,3, petersen, or a file path
        #[arg(long)]
        base: String,
        /// Cap on the number of vertices of the lift
        #[arg(long, default_value_t = generators::THETA_LIFT_GUARD)]
        guard: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Tower of seeded random 2-lifts over a base graph
    TwoLiftTower {
        #[arg(long)]
        base: String,
        #[arg(long)]
        levels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the unlift contraction witness for the top graph
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[command(flatten)]
        out: GenOut,
    },
    /// Lexicographic product of a base graph with a clique on s vertices
    LexClique {
        #[arg(long)]
        base: String,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Seeded random cograph on n vertices
    Cograph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Complete graph on n vertices
    Complete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Contraction witness file (required unless --cograph)
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Smallness threshold; computed as the biclique number when omitted
    #[arg(long)]
    s: Option<usize>,
    /// Use the cotree order instead of a witness (cographs only)
    #[arg(long)]
    cograph: bool,
    /// Order each connected component separately and concatenate
    #[arg(long)]
    per_component: bool,
    /// Output order file
    #[arg(long)]
    out: PathBuf,
    /// Radii to report, e.g. 2 or 1..4 (inclusive)
    #[arg(long, default_value = "1..4")]
    r: String,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ParamsArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Order file; required unless --exact
    #[arg(long)]
    order: Option<PathBuf>,
    #[arg(long, default_value = "1..4")]
    r: String,
    /// Minimize over all orders instead of evaluating a fixed one
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the per-vertex profile here (per-order mode only); with
    /// several radii, each gets a .r<K> suffix before the extension
    #[arg(long)]
    out: Option<PathBuf>,
    /// Vertex limit for --exact
    #[arg(long, default_value_t = reach::EXACT_PARAM_LIMIT)]
    limit: usize,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all_connected")]
    graph: Option<PathBuf>,
    #[arg(long, required_unless_present = "all_connected")]
    witness: Option<PathBuf>,
    /// Sweep all connected graphs up to --max-n (up to isomorphism),
    /// with exact witnesses
    #[arg(long)]
    all_connected: bool,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value = "1..3")]
    r: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Report file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Vertex limit below which parameters are minimized exactly
    #[arg(long, default_value_t = 9)]
    exact_limit: usize,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct TwwArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    witness_out: Option<PathBuf>,
    /// Vertex limit for the exact search
    #[arg(long, default_value_t = trigraph::EXACT_TWW_LIMIT)]
    limit: usize,
    #[arg(long)]
    budget: Option<u64>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { kind } => cmd_gen(kind)?,
        Command::Order(args) => cmd_order(args)?,
        Command::Params(args) => cmd_params(args)?,
        Command::Verify(args) => return cmd_verify(args),
        Command::Tww(args) => cmd_tww(args)?,
        Command::Girth { graph } => {
            let g = load_graph(&graph)?;
            println!("girth {}", g.girth());
        }
        Command::Bomega { graph, budget } => {
            let g = load_graph(&graph)?;
            let mut b = Budget::new("bomega", budget_limit(budget));
            println!("bomega {}", g.bomega(&mut b)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Flag value, else the TWW_BUDGET environment variable, else the default.
fn budget_limit(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var("TWW_BUDGET").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_BUDGET)
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let loaded = graph::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(loaded.graph)
}

fn load_base(spec: &str) -> Result<Graph> {
    if Path::new(spec).exists() {
        load_graph(Path::new(spec))
    } else {
        Ok(generators::named_graph(spec)?)
    }
}

/// Inclusive radius range: `3` or `1..4`.
fn parse_radii(text: &str) -> Result<RangeInclusive<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().context("radius must be an integer");
    let range = match text.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi.trim_start_matches('='))?,
        None => parse(text)?..=parse(text)?,
    };
    if range.is_empty() || *range.start() == 0 {
        bail!("radius range `{text}` must be nonempty and positive");
    }
    Ok(range)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn cmd_gen(kind: GenKind) -> Result<()> {
    let (g, out, witness) = match kind {
        GenKind::SubdividedClique { n, k, out } => {
            if n < 2 {
                bail!("need at least 2 branch vertices");
            }
            (generators::subdivided_clique(n, k), out, None)
        }
        GenKind::ThetaLift { base, guard, out } => {
            let base = load_base(&base)?;
            (generators::theta_lift(&base, guard)?, out, None)
        }
        GenKind::TwoLiftTower { base, levels, seed, witness_out, out } => {
            let base = load_base(&base)?;
            let tower = generators::LiftTower::random(base, levels, seed);
            let witness = witness_out.map(|path| (path, generators::undo_lift_witness(&tower)));
            (tower.top().clone(), out, witness)
        }
        GenKind::LexClique { base, s, out } => {
            if s == 0 {
                bail!("the clique factor needs at least one vertex");
            }
            let base = load_base(&base)?;
            (generators::lex_product_clique(&base, s), out, None)
        }
        GenKind::Cograph { n, seed, out } => {
            if n == 0 {
                bail!("need at least one vertex");
            }
            (generators::random_cograph(n, seed), out, None)
        }
        GenKind::Complete { n, out } => (Graph::complete(n), out, None),
    };
    write_file(&out.out, &graph::write_graph(&g))?;
    if let Some((path, seq)) = &witness {
        write_file(path, &trigraph::write_witness(seq))?;
        println!("witness width {}", seq.width()?);
    }
    if out.girth {
        println!("n {} m {} girth {}", g.n(), g.m(), g.girth());
    } else {
        println!("n {} m {}", g.n(), g.m());
    }
    Ok(())
}

fn cmd_order(args: OrderArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let radii = parse_radii(&args.r)?;
    let mut budget = Budget::new("order", budget_limit(args.budget));

    let ord = if args.cograph {
        order::cograph_order(&g)?
    } else {
        let witness_path = match &args.witness {
            Some(p) => p,
            None => bail!("--witness is required unless --cograph is given"),
        };
        let text = fs::read_to_string(witness_path)
            .with_context(|| format!("reading {}", witness_path.display()))?;
        let seq = trigraph::parse_witness(&g, &text)?;
        println!("witness width {}", seq.width()?);
        if args.per_component {
            order::nice_order_components(&seq, args.s, &mut budget)?
        } else {
            let s = match args.s {
                Some(s) => s,
                None => g.bomega(&mut budget)?.max(1),
            };
            order::nice_order(&seq, s)?
        }
    };
    write_file(&args.out, &order::write_order(&ord))?;

    println!("r,wcol,scol,adm");
    for r in radii {
        let p = reach::profile(&g, &ord, r, &mut budget)?;
        println!("{r},{},{},{}", p.wcol, p.scol, p.adm);
    }
    Ok(())
}

fn with_radius_suffix(path: &Path, r: usize) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("profile");
    let ext = path.extension().and_then(|s| s.to_str());
    let name = match ext {
        Some(ext) => format!("{stem}.r{r}.{ext}"),
        None => format!("{stem}.r{r}"),
    };
    path.with_file_name(name)
}

fn cmd_params(args: ParamsArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let radii = parse_radii(&args.r)?;
    let mut budget = Budget::new("params", budget_limit(args.budget));

    if args.exact {
        println!("r,wcol,scol,adm");
        for r in radii {
            let (w, _) = reach::exact_param(&g, ParamKind::Wcol, r, args.limit, &mut budget)?;
            let (s, _) = reach::exact_param(&g, ParamKind::Scol, r, args.limit, &mut budget)?;
            let (a, _) = reach::exact_param(&g, ParamKind::Adm, r, args.limit, &mut budget)?;
            println!("{r},{w},{s},{a}");
        }
        return Ok(());
    }

    let order_path = match &args.order {
        Some(p) => p,
        None => bail!("--order is required unless --exact is given"),
    };
    let text = fs::read_to_string(order_path)
        .with_context(|| format!("reading {}", order_path.display()))?;
    let ord = order::parse_order(g.n(), &text)?;

    let multiple = radii.clone().count() > 1;
    println!("r,wcol,scol,adm");
    for r in radii {
        let p = reach::profile(&g, &ord, r, &mut budget)?;
        println!("{r},{},{},{}", p.wcol, p.scol, p.adm);
        if let Some(out) = &args.out {
            let path = if multiple { with_radius_suffix(out, r) } else { out.clone() };
            let contents = match args.format {
                Format::Csv => reach::profile_csv(&p),
                Format::Json => reach::profile_json(&p),
            };
            write_file(&path, &contents)?;
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let radii = parse_radii(&args.r)?;
    let r_max = *radii.end();
    let opts = VerifyOpts { exact_limit: args.exact_limit, budget_limit: budget_limit(args.budget) };

    let reports = if args.all_connected {
        if args.max_n > 7 {
            bail!("the exhaustive sweep is sized for --max-n <= 7");
        }
        let mut reports = Vec::new();
        for n in 2..=args.max_n {
            for (i, g) in twcol::enumerate::graphs_upto_iso(n, true).iter().enumerate() {
                let mut b = Budget::new("tww", opts.budget_limit);
                let (_, seq) = trigraph::exact_tww(g, n, &mut b)?;
                let id = format!("n{n}_{i}");
                reports.push(bounds::verify_instance(g, &seq, &id, r_max, &opts)?);
            }
        }
        reports
    } else {
        let graph_path = args.graph.as_ref().expect("clap enforces the pair");
        let witness_path = args.witness.as_ref().expect("clap enforces the pair");
        let g = load_graph(graph_path)?;
        let text = fs::read_to_string(witness_path)
            .with_context(|| format!("reading {}", witness_path.display()))?;
        let seq = trigraph::parse_witness(&g, &text)?;
        let id = graph_path.file_stem().and_then(|s| s.to_str()).unwrap_or("instance").to_string();
        vec![bounds::verify_instance(&g, &seq, &id, r_max, &opts)?]
    };

    let rendered = match args.format {
        Format::Json => bounds::report_json(&reports),
        Format::Csv => bounds::report_csv(&reports),
    };
    match &args.out {
        Some(path) => write_file(path, &rendered)?,
        None => println!("{rendered}"),
    }

    let violations: usize = reports
        .iter()
        .flat_map(|rep| rep.rows.iter())
        .flat_map(|row| row.checks.iter())
        .filter(|c| c.verdict == bounds::Verdict::Violated)
        .count();
    eprintln!("{} instances, {} violated checks", reports.len(), violations);
    Ok(if violations == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_tww(args: TwwArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let mut budget = Budget::new("tww", budget_limit(args.budget));
    let (d, seq) = trigraph::exact_tww(&g, args.limit, &mut budget)?;
    println!("tww {d}");
    if let Some(path) = &args.witness_out {
        write_file(path, &trigraph::write_witness(&seq))?;
    }
    Ok(())
}
