//! `qsuper`: R-matrices, superdimensions, link invariants and FFT reports.

mod render;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use qsuper_core::diagrams::{BraidWord, Mode, QuotientKind};
use qsuper_core::fft::{
    brauer_check, default_points, fft_reports, relation_check, FftCell, FftFlavor, FftOptions, Verdict,
};
use qsuper_core::functor::{invariant, make_context, Flavor, DEFAULT_BUDGET};
use qsuper_core::glq::{braiding, natural_space, rmatrix_vv};
use qsuper_core::rootdata::{admissible_orderings, Algebra, RootDatum};
use qsuper_core::scalar::parse_rational;
use qsuper_core::{qint, Error, RatFunc};

#[derive(Parser, Debug)]
#[command(
    name = "qsuper",
    version,
    about = "Exact computations for quantum gl(m|n) and osp(m|2n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print R (or the braiding τR) on V⊗V as sparse triplets.
    Rmatrix {
        #[command(flatten)]
        common: Common,
        /// Print ǧ = τR instead of R.
        #[arg(long)]
        braiding: bool,
    },
    /// Print the quantum superdimension of the natural module.
    Sdim {
        #[command(flatten)]
        common: Common,
        /// Check that every admissible ordering gives the same value.
        #[arg(long)]
        all_orderings: bool,
    },
    /// Framed link invariant of the closure of a braid.
    Invariant {
        #[command(flatten)]
        common: Common,
        /// Braid word such as "s1 s2^-1 s1"; empty for the unknot.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        braid: String,
        /// Number of strands (defaults to the largest generator index + 1).
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Compare the commutant dimension with the span of diagram images.
    Fft {
        #[command(flatten)]
        common: Common,
        /// Number of V factors; a comma list runs several cells.
        #[arg(short, value_delimiter = ',', required = true)]
        r: Vec<usize>,
        /// Number of V* factors (gl only).
        #[arg(short, default_value_t = 0)]
        s: usize,
        /// Specialization points, e.g. "7/5,13/9,23/17".
        #[arg(long, value_delimiter = ',')]
        points: Vec<String>,
        /// Seed for fresh points after a disagreement.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record wall-clock time per cell (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Check that quotient relations vanish under the functor.
    Relations {
        #[command(flatten)]
        common: Common,
        /// hecke, walled or bmw; defaults to hecke for gl and bmw for osp.
        #[arg(long)]
        kind: Option<String>,
        #[arg(short, default_value_t = 3)]
        r: usize,
        #[arg(short, default_value_t = 0)]
        s: usize,
    },
    /// Check the Brauer algebra action on V^{⊗r} for classical osp.
    Brauer {
        #[command(flatten)]
        common: Common,
        #[arg(short, default_value_t = 2)]
        r: usize,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Algebra literal, e.g. `gl 2|1` or `osp 3|2 order=d1,e1`.
    #[arg(value_name = "ALGEBRA")]
    spec: Vec<String>,
    /// Algebra literal, as an alternative to the positional form.
    #[arg(long)]
    algebra: Option<String>,
    /// Ordering of the basis symbols, e.g. `e1,d1,e2`.
    #[arg(long)]
    order: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Largest tensor space dimension to build.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

/// How a command ended, mapped onto the exit codes.
enum Failure {
    Usage(String),
    Verification(Option<String>),
    Budget(String),
}

type Outcome = std::result::Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn classify(e: Error) -> Failure {
    match e {
        Error::BudgetExceeded { .. } | Error::Guard(_) => Failure::Budget(e.to_string()),
        Error::Verification(_) => Failure::Verification(Some(e.to_string())),
        other => usage(other),
    }
}

impl Common {
    fn datum(&self) -> std::result::Result<RootDatum, Failure> {
        let mut text = match (&self.algebra, self.spec.is_empty()) {
            (Some(a), true) => a.clone(),
            (None, false) => self.spec.join(" "),
            (Some(_), false) => return Err(usage("give the algebra either positionally or with --algebra")),
            (None, true) => return Err(usage("missing algebra, e.g. `gl 2|1`")),
        };
        if let Some(order) = &self.order {
            if text.contains("order=") {
                return Err(usage("ordering given twice"));
            }
            text = format!("{text} order={order}");
        }
        text.parse().map_err(usage)
    }

    fn emit<T: Serialize>(&self, value: &T) -> Outcome {
        let value = serde_json::to_value(value).map_err(usage)?;
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).map_err(usage)?);
        } else {
            print!("{}", render::text(&value));
        }
        Ok(())
    }
}

fn ratfunc(v: &RatFunc) -> Value {
    Value::String(v.to_string())
}

fn rmatrix(common: &Common, braided: bool) -> Outcome {
    let datum = common.datum()?;
    if datum.algebra() != Algebra::Gl {
        return Err(usage("rmatrix needs a gl datum"));
    }
    let d = datum.m() + datum.n();
    if d * d > common.budget {
        return Err(classify(Error::BudgetExceeded {
            needed: d * d,
            budget: common.budget,
        }));
    }
    let mat = if braided { braiding(&datum) } else { rmatrix_vv(&datum) }.map_err(classify)?;
    let v = natural_space(&datum);
    let vv = v.tensor(&v);
    if common.json {
        let entries: Vec<Value> = mat.iter().map(|(i, j, x)| json!([i, j, x.to_string()])).collect();
        common.emit(&json!({
            "algebra": datum.to_string(),
            "matrix": if braided { "braiding" } else { "R" },
            "rows": mat.nrows(),
            "cols": mat.ncols(),
            "basis": vv.labels(),
            "entries": entries,
        }))
    } else {
        print!("{}", qsuper_core::superspace::dump::write_dump(&mat, &vv, &vv));
        Ok(())
    }
}

/// `[k]_q = …` when the value is a quantum integer, else the plain string.
fn describe_sdim(v: &RatFunc, bound: i64) -> String {
    (1..=bound)
        .flat_map(|k| [k, -k])
        .find(|&k| qint(k) == *v)
        .map(|k| format!("[{k}]_q = {v}"))
        .unwrap_or_else(|| v.to_string())
}

fn sdim(common: &Common, all: bool) -> Outcome {
    let datum = common.datum()?;
    let value = datum.sdim_q();
    let bound = (datum.m() + datum.odd_dim()) as i64;
    let mut out = json!({
        "algebra": datum.to_string(),
        "sdim": ratfunc(&value),
    });
    let mut consistent = true;
    if all {
        let orderings = admissible_orderings(datum.algebra(), datum.m(), datum.n()).map_err(classify)?;
        consistent = orderings.iter().all(|d| d.sdim_q() == value);
        out["orderings"] = json!(orderings.len());
        out["invariant"] = json!(consistent);
    }
    if common.json {
        common.emit(&out)?;
    } else {
        println!("{}", describe_sdim(&value, bound));
        if all {
            let n = out["orderings"].as_u64().unwrap_or(0);
            if consistent {
                println!("invariant across {n} orderings");
            } else {
                println!("NOT invariant across {n} orderings");
            }
        }
    }
    if consistent {
        Ok(())
    } else {
        Err(Failure::Verification(None))
    }
}

fn link_invariant(common: &Common, braid: &str, strands: Option<usize>) -> Outcome {
    let datum = common.datum()?;
    if datum.algebra() != Algebra::Gl {
        return Err(usage("invariants need a gl datum"));
    }
    let word = BraidWord::parse(braid, strands).map_err(usage)?;
    let ctx = make_context(Flavor::Glq(datum.clone()), Mode::Directed)
        .map_err(classify)?
        .with_budget(common.budget);
    let value = invariant(&word, &ctx).map_err(classify)?;
    if common.json {
        common.emit(&json!({
            "algebra": datum.to_string(),
            "braid": word.to_string(),
            "strands": word.strands(),
            "invariant": ratfunc(&value),
        }))
    } else {
        println!("{value}");
        Ok(())
    }
}

fn flavor_of(datum: &RootDatum) -> FftFlavor {
    match datum.algebra() {
        Algebra::Gl => FftFlavor::Gl,
        Algebra::Osp => FftFlavor::Osp,
    }
}

fn fft(common: &Common, rs: &[usize], s: usize, points: &[String], seed: u64, timing: bool) -> Outcome {
    let datum = common.datum()?;
    if !datum.is_distinguished() {
        return Err(usage("fft reports use the distinguished ordering"));
    }
    let points = if points.is_empty() {
        default_points()
    } else {
        points
            .iter()
            .map(|p| parse_rational(p.trim()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?
    };
    let opts = FftOptions {
        points,
        seed,
        budget: common.budget,
        timing,
    };
    let flavor = flavor_of(&datum);
    let cells: Vec<FftCell> = rs
        .iter()
        .map(|&r| FftCell {
            flavor,
            m: datum.m(),
            n: datum.n(),
            r,
            s,
        })
        .collect();
    let mut reports = Vec::new();
    let mut failure = None;
    for (cell, res) in cells.iter().zip(fft_reports(&cells, &opts)) {
        match res {
            Ok(rep) => reports.push(rep),
            Err(e) => {
                let f = match classify(e) {
                    Failure::Usage(m) => Failure::Usage(format!("cell r={} s={}: {m}", cell.r, cell.s)),
                    Failure::Budget(m) => Failure::Budget(format!("cell r={} s={}: {m}", cell.r, cell.s)),
                    other => other,
                };
                failure.get_or_insert(f);
            }
        }
    }
    match reports.as_slice() {
        [one] if rs.len() == 1 => common.emit(one)?,
        _ => common.emit(&reports)?,
    }
    if let Some(f) = failure {
        return Err(f);
    }
    if reports.iter().all(|r| r.verdict == Verdict::Equal) {
        Ok(())
    } else {
        Err(Failure::Verification(None))
    }
}

fn relations(common: &Common, kind: Option<&str>, r: usize, s: usize) -> Outcome {
    let datum = common.datum()?;
    let kind: QuotientKind = match (kind, datum.algebra()) {
        (Some(k), _) => k.parse().map_err(usage)?,
        (None, Algebra::Gl) => QuotientKind::Hecke,
        (None, Algebra::Osp) => QuotientKind::Bmw,
    };
    let ctx = match datum.algebra() {
        Algebra::Gl => make_context(Flavor::Glq(datum.clone()), Mode::Directed),
        Algebra::Osp => make_context(
            Flavor::OspClassical {
                m: datum.m(),
                n: datum.n(),
            },
            Mode::Nondirected,
        ),
    }
    .map_err(classify)?
    .with_budget(common.budget);
    let report = relation_check(kind, &ctx, r, s).map_err(classify)?;
    common.emit(&report)?;
    if report.all_hold() {
        Ok(())
    } else {
        Err(Failure::Verification(None))
    }
}

fn brauer(common: &Common, r: usize) -> Outcome {
    let datum = common.datum()?;
    if datum.algebra() != Algebra::Osp {
        return Err(usage("brauer needs an osp datum"));
    }
    let report = brauer_check(datum.m(), datum.n(), r, common.budget).map_err(classify)?;
    common.emit(&report)?;
    if report.all_hold() {
        Ok(())
    } else {
        Err(Failure::Verification(None))
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Rmatrix { common, braiding } => rmatrix(common, *braiding),
        Command::Sdim { common, all_orderings } => sdim(common, *all_orderings),
        Command::Invariant { common, braid, strands } => link_invariant(common, braid, *strands),
        Command::Fft {
            common,
            r,
            s,
            points,
            seed,
            timing,
        } => fft(common, r, *s, points, *seed, *timing),
        Command::Relations { common, kind, r, s } => relations(common, kind.as_deref(), *r, *s),
        Command::Brauer { common, r } => brauer(common, *r),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    std::panic::set_hook(Box::new(|_| {}));
    match catch_unwind(AssertUnwindSafe(|| run(&cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Verification(msg))) => {
            if let Some(msg) = msg {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Budget(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(1)
        }
    }
}
