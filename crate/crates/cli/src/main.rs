use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use cde_core::aq::{aq_expect, verify_conjecture};
use cde_core::cde::{expect_x, expect_y, is_cde, scan_with, ScanRecord, YMethod, CSV_HEADER};
use cde_core::exact::{fmt_rational, Rational};
use cde_core::qverify::{
    check_identity, check_integral_formulas, check_sum_lemmas, identity_names, invariant_grid, parse_params, run_grid,
    Check,
};
use cde_core::shapes::{classify, parse_parts, validate, Kind, Partition, StrictPartition};
use cde_core::tableaux::{
    check_uncrowding, count_sbt_shifted, count_sbt_straight, count_syt_formula, enumerate_sbt, enumerate_syt, SbtMethod,
    Uncrowd,
};
use cde_core::Error;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cde", version, about = "Tableau counts, down-degree expectations and identity checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ShapeArg {
    /// Comma-separated parts, e.g. 4,2
    #[arg(long)]
    shape: String,
    /// Use the shifted diagram (parts must be strictly decreasing)
    #[arg(long)]
    shifted: bool,
}

impl ShapeArg {
    fn kind(&self) -> Kind {
        if self.shifted {
            Kind::Shifted
        } else {
            Kind::Straight
        }
    }

    fn parts(&self) -> Result<Vec<u32>, Failure> {
        let p = parse_parts(&self.shape).map_err(Failure::Usage)?;
        validate(&p, self.kind()).map_err(Failure::Usage)?;
        Ok(p)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Syt,
    Sbt,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Formula,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectMethod {
    Formula,
    Interval,
    Sbt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    K2,
    K1,
    Diag,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count standard (syt) or barely set-valued (sbt) tableaux
    Count {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, value_enum, default_value = "syt")]
        what: What,
        #[arg(long, value_enum, default_value = "formula")]
        method: CountMethod,
    },
    /// E(X), E(Y) and the CDE flag
    Expect {
        #[command(flatten)]
        shape: ShapeArg,
        /// How E(Y) is computed
        #[arg(long, value_enum, default_value = "formula")]
        method: ExpectMethod,
    },
    /// Balanced / shifted-balanced / trapezoidal classification
    Classify {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Every shape up to a size, in (size, lex) order
    Scan {
        #[arg(long)]
        max_size: u32,
        #[arg(long)]
        shifted: bool,
        /// Worker threads; 0 picks the default
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// a;q-weighted expectation of a straight shape
    Aq {
        #[arg(long)]
        shape: String,
        /// Compare with the product formula and the conjugate shape
        #[arg(long)]
        check_conjecture: bool,
    },
    /// Exact identity, bijection and integral-formula checks
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("target").required(true).args(["identity", "bijection", "integrals", "grid", "list"])
))]
struct VerifyArgs {
    /// Identity name; see --list
    #[arg(long, requires = "params")]
    identity: Option<String>,
    /// e.g. m=0,n=1 (rationals allowed)
    #[arg(long)]
    params: Option<String>,
    #[arg(long, value_enum, requires = "shape")]
    bijection: Option<Map>,
    /// Integral formulas and the sum lemmas for a strict shape
    #[arg(long, requires = "shape")]
    integrals: bool,
    /// Run the whole built-in parameter grid
    #[arg(long)]
    grid: bool,
    /// Print the identity names
    #[arg(long)]
    list: bool,
    #[arg(long)]
    shape: Option<String>,
}

enum Failure {
    Usage(Error),
    Mismatch,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidShape(_) | Error::Parse { .. } | Error::Domain(_) | Error::Unsupported(_) => Failure::Usage(e),
            other => Failure::Io(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn q(r: &Rational) -> String {
    fmt_rational(r)
}

fn print(v: &Value) {
    println!("{v}");
}

fn strict(s: &str) -> Result<StrictPartition, Failure> {
    StrictPartition::parse(s).map_err(Failure::Usage)
}

fn straight(s: &str) -> Result<Partition, Failure> {
    Partition::parse(s).map_err(Failure::Usage)
}

fn count(shape: &ShapeArg, what: What, method: CountMethod) -> Result<(), Failure> {
    let parts = shape.parts()?;
    let kind = shape.kind();
    let n = match (what, method) {
        (What::Syt, CountMethod::Formula) => count_syt_formula(&parts, kind)?,
        (What::Sbt, CountMethod::Formula) => match kind {
            Kind::Straight => count_sbt_straight(&Partition::new(parts)?),
            Kind::Shifted => count_sbt_shifted(&StrictPartition::new(parts)?, SbtMethod::Product)?,
        },
        (What::Syt, CountMethod::Enumerate) => enumerate_syt(&cde_core::shapes::Diagram::of(&parts, kind)?),
        (What::Sbt, CountMethod::Enumerate) => enumerate_sbt(&cde_core::shapes::Diagram::of(&parts, kind)?).total,
    };
    println!("{n}");
    Ok(())
}

fn expect(shape: &ShapeArg, method: ExpectMethod) -> Result<(), Failure> {
    let parts = shape.parts()?;
    let kind = shape.kind();
    let (ex, ey) = match method {
        ExpectMethod::Formula => {
            let e = is_cde(&parts, kind)?;
            (e.e_x, e.e_y)
        }
        ExpectMethod::Interval => (expect_x(&parts, kind)?, expect_y(&parts, kind, YMethod::Chains)?),
        ExpectMethod::Sbt => (expect_x(&parts, kind)?, expect_y(&parts, kind, YMethod::Sbt)?),
    };
    print(&json!({ "E_X": q(&ex), "E_Y": q(&ey), "cde": ex == ey }));
    Ok(())
}

fn classify_cmd(shape: &ShapeArg) -> Result<(), Failure> {
    let parts = shape.parts()?;
    let c = classify(&parts, shape.kind())?;
    print(&json!({
        "classification": c.label(),
        "predicts_cde": c.predicts_cde(),
        "shape": shape.shape.replace(' ', ""),
        "slope": c.slope.as_ref().map(q),
    }));
    Ok(())
}

fn record_json(r: &ScanRecord) -> Value {
    json!({
        "size": r.size,
        "shape": r.shape(),
        "E_X": q(&r.e_x),
        "E_Y": q(&r.e_y),
        "cde": r.cde,
        "classification": r.classification,
        "conjecture_ok": r.conjecture_ok,
    })
}

fn scan_cmd(max_size: u32, shifted: bool, jobs: usize, out: Option<&str>, format: Format) -> Result<(), Failure> {
    let kind = if shifted { Kind::Shifted } else { Kind::Straight };
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(CSV_HEADER)?;
            let mut err = None;
            scan_with(max_size, kind, jobs, |r| {
                if err.is_none() {
                    err = w.write_record(r.csv_fields()).err();
                }
            })?;
            if let Some(e) = err {
                return Err(e.into());
            }
            w.flush()?;
        }
        Format::Json => {
            let mut w = io::BufWriter::new(sink);
            let mut err = None;
            scan_with(max_size, kind, jobs, |r| {
                if err.is_none() {
                    err = writeln!(w, "{}", record_json(r)).err();
                }
            })?;
            if let Some(e) = err {
                return Err(e.into());
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn aq_cmd(shape: &str, check: bool) -> Result<(), Failure> {
    let lam = straight(shape)?;
    if lam.is_empty() {
        return Err(Failure::Usage(Error::InvalidShape("the a;q expectation needs a nonempty shape".into())));
    }
    if !check {
        let e = aq_expect(&lam)?;
        print(&json!({ "shape": lam.to_string(), "E_aq": e.to_string(), "E_aq_coeffs": e.to_json() }));
        return Ok(());
    }
    let v = verify_conjecture(&lam)?;
    print(&json!({
        "shape": lam.to_string(),
        "balanced": v.balanced,
        "E_aq": v.expect.to_string(),
        "E_aq_coeffs": v.expect.to_json(),
        "product": v.product.to_string(),
        "equal": v.equal,
        "conjugate_equal": v.conjugate_equal,
    }));
    // A mismatch only counts as a failed check where the product is claimed.
    if v.balanced && !v.equal {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn report_checks(checks: &[Check]) -> Result<(), Failure> {
    for c in checks {
        print(&c.to_json());
    }
    if checks.iter().all(|c| c.equal) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    if a.list {
        for n in identity_names() {
            println!("{n}");
        }
        return Ok(());
    }
    if a.grid {
        let grid = invariant_grid();
        let checks = run_grid(&grid).into_iter().collect::<cde_core::Result<Vec<_>>>()?;
        return report_checks(&checks);
    }
    if let Some(name) = &a.identity {
        let params = parse_params(a.params.as_deref().unwrap_or(""))?;
        return report_checks(&[check_identity(name, &params)?]);
    }
    let shape = strict(a.shape.as_deref().unwrap_or(""))?;
    if let Some(map) = a.bijection {
        let want = match map {
            Map::K2 => Uncrowd::Right,
            Map::K1 => Uncrowd::Left,
            Map::Diag => Uncrowd::Diag,
        };
        let mut ok = true;
        for c in check_uncrowding(&shape)?.into_iter().filter(|c| c.map == want) {
            ok &= c.ok();
            print(&json!({
                "map": c.map.name(),
                "param": c.param,
                "domain": c.domain,
                "distinct_images": c.distinct_images,
                "images_in_target": c.images_in_target,
                "target": c.target.to_string(),
                "bijective": c.ok(),
            }));
        }
        return if ok { Ok(()) } else { Err(Failure::Mismatch) };
    }
    let mut checks = check_integral_formulas(&shape, None)?;
    checks.extend(check_sum_lemmas(&shape)?);
    report_checks(&checks)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Count { shape, what, method } => count(shape, *what, *method),
        Cmd::Expect { shape, method } => expect(shape, *method),
        Cmd::Classify { shape } => classify_cmd(shape),
        Cmd::Scan { max_size, shifted, jobs, out, format } => {
            scan_cmd(*max_size, *shifted, *jobs, out.as_deref(), *format)
        }
        Cmd::Aq { shape, check_conjecture } => aq_cmd(shape, *check_conjecture),
        Cmd::Verify(a) => verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
