mod repfile;

/// Writes to stdout, exiting quietly once the reader has gone away.
macro_rules! say_raw {
    ($($t:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! say {
    ($($t:tt)*) => {{
        say_raw!($($t)*);
        say_raw!("\n");
    }};
}

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use wpl_core::algebras::{self, Order};
use wpl_core::arquiver::{self, Format};
use wpl_core::checks::{self, REGISTRY};
use wpl_core::grothendieck::K0Lattice;
use wpl_core::homspaces;
use wpl_core::ladder::{self, validate};
use wpl_core::lgroup::{self, LElt, WeightTriple};
use wpl_core::IntMatrix;

/// Exact computations for the weighted projective line of type (2,3,p).
#[derive(Parser)]
#[command(name = "wpl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in the grading group L(p1,p2,p3).
    Lgroup {
        #[command(subcommand)]
        op: LgroupOp,
    },
    /// Regenerated tables.
    Table {
        #[command(subcommand)]
        which: TableOp,
    },
    /// Grothendieck group of coh X.
    K0 {
        #[command(subcommand)]
        op: K0Op,
    },
    /// Coxeter polynomial and order of a finite dimensional algebra.
    Cox {
        /// nakayama:N,L | poset-rect:2,K | poset-bprime:K | canonical:P
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        poly: bool,
        #[arg(long)]
        order: bool,
    },
    /// Window of the Auslander-Reiten quiver of vect X.
    Quiver {
        #[arg(long)]
        p: usize,
        /// Inclusive slice range A..B.
        #[arg(long, default_value = "0..5")]
        slices: String,
        #[arg(long)]
        delete_fading: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: QuiverFormat,
    },
    /// Graded invariant subspaces stored as JSON files.
    Rep {
        #[command(subcommand)]
        op: RepOp,
    },
    /// Runs registered checks; names may be given or `all`.
    Check {
        names: Vec<String>,
        #[arg(long)]
        only: Vec<String>,
        /// P or A..B (inclusive).
        #[arg(long, default_value = "2..9")]
        p: String,
        /// Print the registry instead of running it.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct Weights {
    /// Weight p of the triple (2,3,p).
    #[arg(long, conflicts_with = "weights")]
    p: Option<i64>,
    /// An arbitrary triple p1,p2,p3.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Subcommand)]
enum LgroupOp {
    /// Normal form of n1 x1 + n2 x2 + n3 x3 + m c.
    Normalize {
        #[command(flatten)]
        w: Weights,
        #[arg(long, allow_hyphen_values = true)]
        elt: String,
    },
    Add {
        #[command(flatten)]
        w: Weights,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Persistence pattern along the omega-orbit.
    Pattern {
        #[command(flatten)]
        w: Weights,
        #[arg(long, allow_hyphen_values = true)]
        elt: String,
    },
    /// Free rank and torsion of L.
    Structure {
        #[command(flatten)]
        w: Weights,
    },
    /// Coset representatives of L/Zv.
    Quotient {
        #[command(flatten)]
        w: Weights,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
}

#[derive(Subcommand)]
enum TableOp {
    PersistentSummands {
        #[arg(long)]
        p: i64,
    },
    Ade {
        #[arg(long, default_value = "2..9")]
        p: String,
    },
}

#[derive(Subcommand)]
enum K0Op {
    /// Class of the line bundle O(x) in the canonical basis.
    Class {
        #[arg(long)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        elt: String,
    },
}

#[derive(Subcommand)]
enum RepOp {
    Validate {
        file: PathBuf,
    },
    Hom {
        x: PathBuf,
        y: PathBuf,
    },
    StableHom {
        x: PathBuf,
        y: PathBuf,
    },
    Decompose {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    Syzygy {
        file: PathBuf,
    },
    Cosyzygy {
        file: PathBuf,
    },
    /// Rectangle tilting object; prints its summands and stable Hom matrix.
    Tilting {
        #[arg(long)]
        p: usize,
        /// Write each summand as T<i>.json into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Ascii,
}

/// Bad input from the command line; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || usage(format!("expected N or A..B, got {s:?}"));
    let r = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            n..=n
        }
    };
    if r.is_empty() {
        return Err(bad());
    }
    Ok(r)
}

fn p_range(s: &str) -> Result<RangeInclusive<usize>> {
    let r = parse_range(s)?;
    if *r.start() < 2 {
        return Err(usage("p must be at least 2"));
    }
    Ok(*r.start() as usize..=*r.end() as usize)
}

impl Weights {
    fn triple(&self) -> Result<WeightTriple> {
        let w = match (&self.p, &self.weights) {
            (Some(p), None) => WeightTriple::two_three(*p),
            (None, Some(s)) => {
                let v: Vec<i64> = s
                    .split(',')
                    .map(|t| t.trim().parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| usage(format!("bad weights {s:?}")))?;
                match v[..] {
                    [a, b, c] => WeightTriple::new(a, b, c),
                    _ => return Err(usage("expected three weights")),
                }
            }
            _ => return Err(usage("give --p or --weights")),
        };
        w.map_err(|e| usage(e.to_string()))
    }
}

fn elt(w: WeightTriple, s: &str) -> Result<LElt> {
    LElt::parse(w, s).map_err(|e| usage(e.to_string()))
}

fn seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("WPL_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("WPL_SEED is not an integer: {v:?}"))),
        Err(_) => Ok(1),
    }
}

fn lgroup(op: LgroupOp) -> Result<u8> {
    match op {
        LgroupOp::Normalize { w, elt: s } => {
            let x = elt(w.triple()?, &s)?;
            say!("{x}\t{}", x.expr());
        }
        LgroupOp::Add { w, a, b } => {
            let w = w.triple()?;
            let x = elt(w, &a)? + elt(w, &b)?;
            say!("{x}\t{}", x.expr());
        }
        LgroupOp::Pattern { w, elt: s } => {
            let x = elt(w.triple()?, &s)?;
            let t = x.tau_pattern().map_err(|e| usage(e.to_string()))?;
            let rot = t.rotation_of_base().map_or("none".to_string(), |k| k.to_string());
            say!("{t}\trotation {rot}\t{:?}", x.bar_class()?);
        }
        LgroupOp::Structure { w } => {
            let s = lgroup::structure(w.triple()?);
            say!("free rank {}\ttorsion {:?}", s.free_rank, s.torsion);
        }
        LgroupOp::Quotient { w, v } => {
            let v = elt(w.triple()?, &v)?;
            for x in lgroup::quotient(v).map_err(|e| usage(e.to_string()))? {
                say!("{x}\t{}", x.expr());
            }
        }
    }
    Ok(0)
}

fn table(which: TableOp) -> Result<u8> {
    match which {
        TableOp::PersistentSummands { p } => say_raw!("{}", homspaces::format_table1(p).map_err(|e| usage(e.to_string()))?),
        TableOp::Ade { p } => say_raw!("{}", algebras::ade_table(p_range(&p)?)?),
    }
    Ok(0)
}

fn k0(op: K0Op) -> Result<u8> {
    let K0Op::Class { p, elt: s } = op;
    let k = K0Lattice::new(p).map_err(|e| usage(e.to_string()))?;
    let v = k.class_of(elt(k.weights(), &s)?);
    let basis: Vec<String> = k.basis().iter().map(|b| b.expr()).collect();
    say!("basis\t{}", basis.join(" "));
    say!("class\t{}", v.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
    say!("rank\t{}", k.rank_of(&v));
    say!("degree\t{}", k.deg_of(&v));
    Ok(0)
}

fn cartan(spec: &str) -> Result<IntMatrix> {
    let bad = || {
        usage(format!(
            "unknown algebra {spec:?}; use nakayama:N,L, poset-rect:2,K, poset-bprime:K or canonical:P"
        ))
    };
    let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    match (kind, &nums[..]) {
        ("nakayama", &[n, l]) if n >= 1 && l >= 1 => Ok(algebras::cartan_nakayama(n, l)),
        ("poset-rect", &[2, k]) if k >= 1 => Ok(algebras::cartan_poset(&algebras::rectangle_poset(k + 1))),
        ("poset-bprime", &[k]) if k >= 1 => Ok(algebras::cartan_poset(&algebras::bprime_poset(k + 1))),
        ("canonical", &[p]) if p >= 2 => algebras::canonical_cartan(p as i64).map_err(|e| usage(e.to_string())),
        _ => Err(bad()),
    }
}

fn cox(spec: &str, poly: bool, order: bool) -> Result<u8> {
    let c = cartan(spec)?;
    let data = algebras::coxeter(&c)?;
    let both = !poly && !order;
    if poly || both {
        say!("coxeter polynomial\t{}", data.coxpoly);
    }
    if order || both {
        match data.order {
            Order::Finite(h) => say!("order\t{h}"),
            Order::Unbounded(b) => say!("order\tnone up to {b}"),
        }
    }
    Ok(0)
}

fn quiver(p: usize, slices: &str, delete_fading: bool, format: QuiverFormat) -> Result<u8> {
    let r = parse_range(slices)?;
    let q = arquiver::build(p, *r.start()..*r.end() + 1).map_err(|e| usage(e.to_string()))?;
    let mut q = arquiver::mark(&q)?;
    if delete_fading {
        q = arquiver::delete_fading(&q);
    }
    let format = match format {
        QuiverFormat::Dot => Format::Dot,
        QuiverFormat::Ascii => Format::Ascii,
    };
    say_raw!("{}", arquiver::emit(&q, format));
    Ok(0)
}

fn rep(op: RepOp) -> Result<u8> {
    match op {
        RepOp::Validate { file } => {
            let x = repfile::read(&file)?;
            let v = validate(&x);
            say!("dims\t{}", repfile::dim_vector(&x));
            for problem in &v.problems {
                say!("FAIL\t{problem}");
            }
            if !v.non_injective.is_empty() {
                say!("INFO\tiota is not injective in degrees {:?}", v.non_injective);
            }
            say!(
                "{}",
                if v.in_nil() {
                    "in nil(p)"
                } else if v.is_valid() {
                    "valid, not in nil(p)"
                } else {
                    "invalid"
                }
            );
            return Ok(u8::from(!v.is_valid()));
        }
        RepOp::Hom { x, y } => say!("{}", ladder::hom(&repfile::read(&x)?, &repfile::read(&y)?).dim()),
        RepOp::StableHom { x, y } => say!("{}", ladder::stable_hom(&repfile::read(&x)?, &repfile::read(&y)?).dim()),
        RepOp::Decompose { file, seed: s } => {
            let d = ladder::decompose(&repfile::read(&file)?, seed(s)?)?;
            for (x, m) in &d.summands {
                say!("{m}\t{}", repfile::dim_vector(x));
            }
        }
        RepOp::Syzygy { file } => say!("{}", repfile::to_json(&ladder::syzygy(&repfile::read(&file)?))),
        RepOp::Cosyzygy { file } => say!("{}", repfile::to_json(&ladder::cosyzygy(&repfile::read(&file)?)?)),
        RepOp::Tilting { p, out } => {
            if p < 2 {
                return Err(usage("p must be at least 2"));
            }
            let summands = ladder::rect_tilting(p)?;
            for (i, t) in summands.iter().enumerate() {
                say!("T{i}\t{}", repfile::dim_vector(t));
                if let Some(dir) = &out {
                    std::fs::create_dir_all(dir)?;
                    std::fs::write(dir.join(format!("T{i}.json")), repfile::to_json(t) + "\n")?;
                }
            }
            for row in ladder::stable_hom_matrix(&summands) {
                say!("{}", row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            }
            let r = ladder::verify_rect_tilting(p)?;
            say_raw!("{r}");
            return Ok(u8::from(!r.passed()));
        }
    }
    Ok(0)
}

fn check(names: Vec<String>, only: Vec<String>, p: &str, list: bool) -> Result<u8> {
    if list {
        for e in REGISTRY {
            say!("{}\t{}", e.name, e.claim);
        }
        return Ok(0);
    }
    let mut wanted: Vec<String> = names.into_iter().chain(only).collect();
    if wanted.is_empty() || wanted.iter().any(|n| n == "all") {
        wanted = REGISTRY.iter().map(|e| e.name.to_string()).collect();
    }
    let entries = wanted
        .iter()
        .map(|n| checks::find(n).ok_or_else(|| usage(format!("unknown check {n:?}; see `wpl check --list`"))))
        .collect::<Result<Vec<_>>>()?;
    let ps = p_range(p)?;
    let mut failed = 0;
    for e in entries {
        say!("## {}: {}", e.name, e.claim);
        for p in ps.clone() {
            let r = checks::run(e, p);
            failed += usize::from(!r.passed());
            say_raw!("{r}");
        }
    }
    say!(
        "{}",
        if failed == 0 {
            "PASS all checks".to_string()
        } else {
            format!("FAIL {failed} reports")
        }
    );
    Ok(u8::from(failed > 0))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Lgroup { op } => lgroup(op),
        Command::Table { which } => table(which),
        Command::K0 { op } => k0(op),
        Command::Cox { algebra, poly, order } => cox(&algebra, poly, order),
        Command::Quiver {
            p,
            slices,
            delete_fading,
            format,
        } => quiver(p, &slices, delete_fading, format),
        Command::Rep { op } => rep(op),
        Command::Check { names, only, p, list } => check(names, only, &p, list),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.is::<Usage>() => {
            eprintln!("wpl: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("wpl: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_are_inclusive() {
        assert_eq!(parse_range("2..9").unwrap(), 2..=9);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert_eq!(parse_range("-2..1").unwrap(), -2..=1);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
        assert!(p_range("1..3").is_err());
    }

    #[test]
    fn algebra_specs() {
        assert_eq!(cartan("nakayama:4,3").unwrap().rows(), 4);
        assert_eq!(cartan("poset-rect:2,3").unwrap().rows(), 6);
        assert_eq!(cartan("poset-bprime:3").unwrap().rows(), 5);
        assert_eq!(cartan("canonical:5").unwrap().rows(), 9);
        assert!(cartan("poset-rect:3,3").is_err());
        assert!(cartan("nope:1").is_err());
    }
}
