//! Command-line front end. Exit status: 0 success, 1 a check failed,
//! 2 malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use jetgroups::check::{self, CheckConfig, Status, Suite};
use jetgroups::io::{self, load_algebra, read_json, to_text};
use jetgroups::partitions::{self, Composition, MAX_ENUMERATION};
use jetgroups::tangent::{self, MAX_TANGENT_ORDER};
use jetgroups::{cocycle, jet, Algebra, Element, Error, Jet, Permutation, Rational, Result, Scalar, Side, Tangent};

const MAX_JET_ORDER: usize = 20;

#[derive(Parser)]
#[command(name = "jetgroups", version, about = "Exact group laws on jet and higher tangent groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Anti-lexicographically ordered partitions
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Products and inverses in J^k G
    #[command(subcommand)]
    Jet(JetCmd),
    /// Products, inverses and the permutation action in T^k G
    #[command(subcommand)]
    Tangent(TangentCmd),
    /// The cocycles of the extension g -> J^k G -> J^{k-1} G
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Run verification suites
    Check(CheckArgs),
}

#[derive(Subcommand)]
enum PartitionsCmd {
    /// List P_n, or the members with the given block sizes
    List {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Number of partitions with the given block sizes
    Count {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Args)]
struct ElementOpts {
    /// Built-in algebra name or algebra file
    #[arg(long)]
    algebra: String,
    /// Expected order; elements of another order are rejected
    #[arg(long)]
    k: Option<usize>,
    /// Trivialization assumed for files without a "side" field
    #[arg(long)]
    side: Option<Side>,
}

#[derive(Subcommand)]
enum JetCmd {
    /// Product of two jet element files
    Mul {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
        b: PathBuf,
    },
    /// Inverse of a jet element file
    Inv {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
    },
    /// Product of (e, x at component i) and (e, y at component j)
    Pure {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        /// Coefficients of x, comma separated
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Coefficients of y, comma separated
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Subcommand)]
enum TangentCmd {
    /// Product of two tangent element files
    Mul {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
        b: PathBuf,
    },
    /// Inverse of a tangent element file
    Inv {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
    },
    /// Apply a permutation given by its images, e.g. 2,1,3
    Permute {
        #[command(flatten)]
        opts: ElementOpts,
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
        a: PathBuf,
    },
    /// Jet element file to its symmetric tangent element
    Embed {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
    },
    /// Symmetric tangent element file to its jet element
    Project {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
    },
    /// Factor into pure elements
    Factor {
        #[command(flatten)]
        opts: ElementOpts,
        a: PathBuf,
    },
}

#[derive(Subcommand)]
enum CocycleCmd {
    /// c_k(A, B) for jet files of order k - 1
    Group {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        k: usize,
        a: PathBuf,
        b: PathBuf,
    },
    /// sigma_k(A, B) for jet algebra files {"xi", "x"} of order k - 1
    Algebra {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        k: usize,
        a: PathBuf,
        b: PathBuf,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// all, group-axioms, oracle, cocycles or partitions
    suite: Suite,
    /// Built-in algebra name or algebra file; all built-ins when omitted
    #[arg(long)]
    algebra: Option<String>,
    /// Highest order to exercise
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

enum Outcome {
    Output(String),
    Checks(String, bool),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Output(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Checks(text, ok)) => {
            print!("{text}");
            if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// The cap, lowered by `JETGROUPS_MAX_K` when that is smaller.
fn order_cap(default: usize) -> Result<usize> {
    match std::env::var("JETGROUPS_MAX_K") {
        Ok(v) => {
            let cap: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("JETGROUPS_MAX_K must be an integer, got {v:?}")))?;
            Ok(cap.min(default))
        }
        Err(_) => Ok(default),
    }
}

fn check_order(k: usize, default: usize) -> Result<()> {
    let cap = order_cap(default)?;
    if k > cap {
        return Err(Error::Input(format!("order {k} exceeds the limit {cap}")));
    }
    Ok(())
}

/// Reads an element file, filling in `--side` where the file has none.
fn read_element(path: &Path, side: Option<Side>) -> Result<Value> {
    let mut v = read_json(path)?;
    if let (Some(side), Some(obj)) = (side, v.as_object_mut()) {
        obj.entry("side").or_insert_with(|| json!(side.to_string()));
    }
    Ok(v)
}

fn expect_k(found: usize, want: Option<usize>) -> Result<()> {
    match want {
        Some(k) if k != found => Err(Error::Input(format!("expected order {k}, file has order {found}"))),
        _ => Ok(()),
    }
}

fn load_jet(alg: &Algebra, path: &Path, opts: &ElementOpts) -> Result<Jet> {
    let j = io::jet_from_json(alg, &read_element(path, opts.side)?)?;
    expect_k(j.k(), opts.k)?;
    check_order(j.k(), MAX_JET_ORDER)?;
    if opts.side.is_some_and(|s| s != j.side) {
        return Err(Error::Input(format!("{} is in the {} trivialization", path.display(), j.side)));
    }
    Ok(j)
}

fn load_tangent(alg: &Algebra, path: &Path, opts: &ElementOpts) -> Result<Tangent> {
    let v = read_element(path, opts.side)?;
    if let Some(k) = v.get("k").and_then(Value::as_u64) {
        check_order(k as usize, MAX_TANGENT_ORDER)?;
    }
    let a = io::tangent_from_json(alg, &v)?;
    expect_k(a.k(), opts.k)?;
    if opts.side.is_some_and(|s| s != a.side) {
        return Err(Error::Input(format!("{} is in the {} trivialization", path.display(), a.side)));
    }
    Ok(a)
}

fn parse_element(alg: &Algebra, text: &str) -> Result<Element> {
    let coeffs = text
        .split(',')
        .map(|t| Rational::parse(t.trim()).ok_or_else(|| Error::Input(format!("bad rational {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    let x = jetgroups::AlgebraElement(coeffs);
    alg.check_element(&x)?;
    Ok(x)
}

fn count_json(n: &num_bigint::BigInt) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn run(cmd: Command) -> Result<Outcome> {
    let out = match cmd {
        Command::Partitions(PartitionsCmd::List { n, sizes }) => {
            if n > MAX_ENUMERATION {
                return Err(Error::Input(format!("n = {n} exceeds the enumeration limit {MAX_ENUMERATION}")));
            }
            let list = match sizes {
                Some(s) => partitions::partitions_with_sizes(n, &Composition::new(s)?)?,
                None => partitions::enumerate_partitions(n)?,
            };
            json!(list.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        }
        Command::Partitions(PartitionsCmd::Count { sizes }) => {
            let c = Composition::new(sizes)?;
            json!({ "sizes": c.parts(), "count": count_json(&partitions::count_with_sizes(&c)) })
        }
        Command::Jet(cmd) => run_jet(cmd)?,
        Command::Tangent(cmd) => run_tangent(cmd)?,
        Command::Cocycle(cmd) => run_cocycle(cmd)?,
        Command::Check(args) => return run_check(args),
    };
    Ok(Outcome::Output(to_text(&out)))
}

fn run_jet(cmd: JetCmd) -> Result<Value> {
    Ok(match cmd {
        JetCmd::Mul { opts, a, b } => {
            let alg = load_algebra(&opts.algebra)?;
            let (a, b) = (load_jet(&alg, &a, &opts)?, load_jet(&alg, &b, &opts)?);
            io::jet_to_json(&jet::multiply(&alg, &a, &b)?)
        }
        JetCmd::Inv { opts, a } => {
            let alg = load_algebra(&opts.algebra)?;
            io::jet_to_json(&jet::inverse(&alg, &load_jet(&alg, &a, &opts)?)?)
        }
        JetCmd::Pure { algebra, i, j, k, x, y } => {
            check_order(k, MAX_JET_ORDER)?;
            let alg = load_algebra(&algebra)?;
            let (x, y) = (parse_element(&alg, &x)?, parse_element(&alg, &y)?);
            io::jet_to_json(&jet::pure_product(&alg, i, &x, j, &y, k)?)
        }
    })
}

fn run_tangent(cmd: TangentCmd) -> Result<Value> {
    Ok(match cmd {
        TangentCmd::Mul { opts, a, b } => {
            let alg = load_algebra(&opts.algebra)?;
            let (a, b) = (load_tangent(&alg, &a, &opts)?, load_tangent(&alg, &b, &opts)?);
            io::tangent_to_json(&tangent::multiply(&alg, &a, &b)?)
        }
        TangentCmd::Inv { opts, a } => {
            let alg = load_algebra(&opts.algebra)?;
            io::tangent_to_json(&tangent::inverse(&alg, &load_tangent(&alg, &a, &opts)?)?)
        }
        TangentCmd::Permute { opts, perm, a } => {
            let alg = load_algebra(&opts.algebra)?;
            let a = load_tangent(&alg, &a, &opts)?;
            io::tangent_to_json(&tangent::permute(&Permutation::new(perm)?, &a)?)
        }
        TangentCmd::Embed { opts, a } => {
            let alg = load_algebra(&opts.algebra)?;
            let j = load_jet(&alg, &a, &opts)?;
            check_order(j.k(), MAX_TANGENT_ORDER)?;
            io::tangent_to_json(&tangent::embed_jet(&j)?)
        }
        TangentCmd::Project { opts, a } => {
            let alg = load_algebra(&opts.algebra)?;
            io::jet_to_json(&tangent::project_jet(&load_tangent(&alg, &a, &opts)?)?)
        }
        TangentCmd::Factor { opts, a } => {
            let alg = load_algebra(&opts.algebra)?;
            let factors = tangent::factor_pure(&alg, &load_tangent(&alg, &a, &opts)?)?;
            Value::Array(factors.iter().map(io::tangent_to_json).collect())
        }
    })
}

fn run_cocycle(cmd: CocycleCmd) -> Result<Value> {
    Ok(match cmd {
        CocycleCmd::Group { algebra, k, a, b } => {
            check_order(k, MAX_JET_ORDER)?;
            let alg: Algebra = load_algebra(&algebra)?;
            let a = io::jet_from_json(&alg, &read_json(&a)?)?;
            let b = io::jet_from_json(&alg, &read_json(&b)?)?;
            io::element_to_json(&cocycle::group_cocycle(&alg, k, &a, &b)?)
        }
        CocycleCmd::Algebra { algebra, k, a, b } => {
            check_order(k, MAX_JET_ORDER)?;
            let alg: Algebra = load_algebra(&algebra)?;
            let a = io::jet_algebra_from_json(&alg, &read_json(&a)?)?;
            let b = io::jet_algebra_from_json(&alg, &read_json(&b)?)?;
            io::element_to_json(&cocycle::algebra_cocycle(&alg, k, &a, &b)?)
        }
    })
}

fn run_check(args: CheckArgs) -> Result<Outcome> {
    if let Some(k) = args.k {
        check_order(k, MAX_JET_ORDER)?;
    }
    let max_k = Some(order_cap(MAX_JET_ORDER)?);
    let algebras: Vec<Algebra> = match &args.algebra {
        Some(a) => vec![load_algebra(a)?],
        None => check::DEFAULT_ALGEBRAS.iter().map(|n| load_algebra(n)).collect::<Result<_>>()?,
    };
    let cfg = CheckConfig { algebras, k: args.k, max_k, trials: args.trials, seed: args.seed };
    let reports = check::run(args.suite, &cfg);
    let mut text = String::new();
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    for r in &reports {
        text.push_str(&format!("{r}\n"));
    }
    let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
    text.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped\n"));
    Ok(Outcome::Checks(text, fail == 0))
}
