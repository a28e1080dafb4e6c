//! Command-line front end. `run` takes the argument list and the two output streams so
//! the binary stays a one-liner and tests can drive it in-process.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 precision failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rug::Float;
use serde::Serialize;

use crate::catalog::{run_catalog, Catalog, Filter, IdentityReport, Selector, Tag};
use crate::error::{Error, Result};
use crate::precision::{agreed_digits, sci, PrecisionContext};
use crate::special::{
    barnes_g_log, digamma, digamma_route, hurwitz_zeta_sderiv_route, log_gamma, stieltjes, BarnesRoute,
    DigammaRoute, FunctionValue, LogGammaRoute, StieltjesMethod, ZetaRoute,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

/// Largest `table --first`.
pub const TABLE_MAX: u32 = 25;

#[derive(Debug, Parser)]
#[command(name = "stieltjes", version, about = "Multiprecision Stieltjes constants, Hurwitz zeta and friends, with an identity catalog")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one value and print it with its route and diagnostics.
    Compute(ComputeArgs),
    /// Tabulate γ₀..γ_{first−1} at u = 1 by two routes with their agreed digits.
    Table(TableArgs),
    /// Run identity-catalog entries and report both sides of each.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Target decimal digits.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(6..=200))]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Function {
    /// γₙ(u). Default method: hasse, or coffey above 60 digits when u ≠ 1.
    GammaN,
    /// ψ(u). Default: Bose integral.
    Digamma,
    /// log Γ(u). Default: Binet's second formula.
    LogGamma,
    /// ζ(s,u). Default: Hermite's integral.
    HurwitzZeta,
    /// log G(1+u). Default: Weierstrass product.
    BarnesG,
    /// ∂ᵏζ(s,u)/∂sᵏ with k = --order. Default: differentiated Hermite integral.
    ZetaSderiv,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub what: Function,
    /// Index n of γₙ.
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    /// Shift parameter u (decimal literal).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub u: String,
    /// Zeta argument s (decimal literal); required by hurwitz_zeta and zeta_sderiv.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Derivative order for zeta_sderiv.
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    /// Route name; see each function's default above.
    #[arg(long)]
    pub method: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Number of rows, γ₀ first.
    #[arg(long, default_value_t = 20)]
    pub first: u32,
    /// Primary route; the second route is coffey, or hasse when the primary is coffey.
    #[arg(long, default_value = "hasse")]
    pub method: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("selector").required(true).args(["id", "tag", "all"])))]
pub struct VerifyArgs {
    /// One entry, or every entry of a family such as I-3.10.
    #[arg(long)]
    pub id: Option<String>,
    /// Every entry carrying this tag.
    #[arg(long)]
    pub tag: Option<String>,
    /// The whole catalog; slow entries only with --include-slow.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub include_slow: bool,
    #[command(flatten)]
    pub common: Common,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (common, result) = match &cli.command {
        Command::Compute(a) => (&a.common, compute(a)),
        Command::Table(a) => (&a.common, table(a)),
        Command::Verify(a) => (&a.common, verify(a)),
    };
    match result {
        Ok((text, code)) => match emit(common, &text, out) {
            Ok(()) => code,
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit status for an engine error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Pole(_) | Error::InvalidMethod(_) | Error::UnknownSelector(_) => EXIT_USAGE,
        Error::NonConvergence { .. }
        | Error::Disagreement { .. }
        | Error::PrecisionExhausted { .. }
        | Error::Registry(_) => EXIT_PRECISION,
    }
}

fn emit(common: &Common, text: &str, out: &mut dyn Write) -> std::result::Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn context(common: &Common) -> PrecisionContext {
    PrecisionContext::for_target(common.digits)
}

fn route<T: FromStr<Err = Error>>(method: &Option<String>, default: T) -> Result<T> {
    method.as_deref().map_or(Ok(default), str::parse)
}

#[derive(Serialize)]
struct ComputeRecord {
    function: String,
    params: BTreeMap<String, String>,
    value: String,
    route: String,
    diagnostics: String,
    digits: u32,
}

fn compute(a: &ComputeArgs) -> Result<(String, i32)> {
    let ctx = context(&a.common);
    let u = ctx.parse(&a.u)?;
    let s = |ctx: &PrecisionContext| -> Result<Float> {
        let s = a.s.as_deref().ok_or_else(|| Error::Domain("this function needs --s".into()))?;
        ctx.parse(s)
    };
    let mut params = vec![("u".to_string(), a.u.clone())];
    let fv: FunctionValue = match a.what {
        Function::GammaN => {
            params.insert(0, ("n".into(), a.n.to_string()));
            let default = if a.common.digits > 60 && u != 1 {
                StieltjesMethod::CoffeyIntegral
            } else {
                StieltjesMethod::HasseSum
            };
            stieltjes(a.n, &u, route(&a.method, default)?, &ctx)?
        }
        Function::Digamma => match &a.method {
            None => digamma(&u, &ctx)?,
            Some(m) => digamma_route(&u, m.parse::<DigammaRoute>()?, &ctx)?,
        },
        Function::LogGamma => log_gamma(&u, route(&a.method, LogGammaRoute::Binet2)?, &ctx)?,
        Function::BarnesG => barnes_g_log(&u, route(&a.method, BarnesRoute::Weierstrass)?, &ctx)?,
        Function::HurwitzZeta | Function::ZetaSderiv => {
            let order = if a.what == Function::HurwitzZeta { 0 } else { a.order };
            params.insert(0, ("s".into(), a.s.clone().unwrap_or_default()));
            if a.what == Function::ZetaSderiv {
                params.push(("order".into(), order.to_string()));
            }
            hurwitz_zeta_sderiv_route(order, &s(&ctx)?, &u, route(&a.method, ZetaRoute::AbelPlana)?, &ctx)?
        }
    };
    let function = a.what.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let rec = ComputeRecord {
        function,
        params: params.iter().cloned().collect(),
        value: sci(&fv.value, a.common.digits as usize),
        route: fv.route.to_string(),
        diagnostics: fv.diagnostics.to_string(),
        digits: a.common.digits,
    };
    let text = match a.common.format {
        Format::Text => {
            let args: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut t = format!("{}({}) = {}\nroute: {}\n{}\n", rec.function, args.join(", "), rec.value, rec.route, rec.diagnostics);
            if a.what == Function::BarnesG {
                t.push_str("value is log G(1+u)\n");
            }
            t
        }
        Format::Json => json(&rec),
        Format::Csv => csv_text(&["function", "value", "route", "digits"], [[
            rec.function.clone(),
            rec.value.clone(),
            rec.route.clone(),
            rec.digits.to_string(),
        ]]),
    };
    Ok((text, EXIT_OK))
}

#[derive(Serialize)]
struct TableRow {
    n: u32,
    value: String,
    routes_agreeing_digits: u32,
}

#[derive(Serialize)]
struct Table {
    digits: u32,
    u: String,
    routes: [String; 2],
    rows: Vec<TableRow>,
}

fn table(a: &TableArgs) -> Result<(String, i32)> {
    if a.first == 0 || a.first > TABLE_MAX {
        return Err(Error::Domain(format!("--first must be in 1..={TABLE_MAX}, got {}", a.first)));
    }
    let primary: StieltjesMethod = a.method.parse()?;
    let secondary =
        if primary == StieltjesMethod::CoffeyIntegral { StieltjesMethod::HasseSum } else { StieltjesMethod::CoffeyIntegral };
    let ctx = context(&a.common);
    let u = ctx.real(1);
    let cap = ctx.working_digits();
    let rows = (0..a.first)
        .map(|n| {
            let x = stieltjes(n, &u, primary, &ctx)?.value;
            let y = stieltjes(n, &u, secondary, &ctx)?.value;
            Ok(TableRow { n, value: sci(&x, a.common.digits as usize), routes_agreeing_digits: agreed_digits(&x, &y, cap) })
        })
        .collect::<Result<Vec<_>>>()?;
    let short = rows.iter().find(|r| r.routes_agreeing_digits < a.common.digits).map(|r| r.n);
    let t = Table {
        digits: a.common.digits,
        u: "1".into(),
        routes: [primary.label().to_string(), secondary.label().to_string()],
        rows,
    };
    let mut text = match a.common.format {
        Format::Text => {
            let mut s = format!("Stieltjes constants at u = 1, routes {} and {}\n", t.routes[0], t.routes[1]);
            let _ = writeln!(s, "{:>3}  {:<w$}  agreed", "n", "value", w = a.common.digits as usize + 8);
            for r in &t.rows {
                let _ = writeln!(s, "{:>3}  {:<w$}  {}", r.n, r.value, r.routes_agreeing_digits, w = a.common.digits as usize + 8);
            }
            s
        }
        Format::Json => json(&t),
        Format::Csv => csv_text(
            &["n", "value", "routes_agreeing_digits"],
            t.rows.iter().map(|r| [r.n.to_string(), r.value.clone(), r.routes_agreeing_digits.to_string()]),
        ),
    };
    match short {
        // The table is still printed so the shortfall is visible.
        Some(n) => {
            if a.common.format == Format::Text {
                let _ = writeln!(text, "row n = {n} reached fewer than {} agreed digits", a.common.digits);
            }
            Ok((text, EXIT_PRECISION))
        }
        None => Ok((text, EXIT_OK)),
    }
}

fn verify(a: &VerifyArgs) -> Result<(String, i32)> {
    let selector = match (&a.id, &a.tag) {
        (Some(id), _) => Selector::Id(id.clone()),
        (None, Some(tag)) => Selector::Tag(tag.parse::<Tag>()?),
        (None, None) => Selector::All,
    };
    let filter = Filter { selector, include_slow: a.include_slow };
    let ctx = context(&a.common);
    let report = run_catalog(&Catalog::builtin(), &filter, &ctx)?;
    let text = match a.common.format {
        Format::Text => render_text(&report),
        Format::Json => json(&report),
        Format::Csv => csv_text(
            &["id", "paper_anchor", "lhs", "rhs", "abs_error", "tolerance", "pass", "elapsed_ms"],
            report.entries.iter().map(|e| {
                [
                    e.id.clone(),
                    e.paper_anchor.clone(),
                    e.lhs.clone(),
                    e.rhs.clone(),
                    e.abs_error.clone(),
                    e.tolerance.clone(),
                    e.pass.to_string(),
                    e.elapsed_ms.to_string(),
                ]
            }),
        ),
    };
    Ok((text, if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED }))
}

fn render_text(r: &IdentityReport) -> String {
    let mut s = String::new();
    for e in &r.entries {
        let mark = if e.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{mark} {:<20} |lhs−rhs| = {:<9} tol {:<6} {:>6} ms  [{} vs {}]",
            e.id, e.abs_error, e.tolerance, e.elapsed_ms, e.lhs_route, e.rhs_route
        );
        if !e.pass {
            let _ = writeln!(s, "     lhs = {}\n     rhs = {}", e.lhs, e.rhs);
        }
        if let Some(err) = &e.error {
            let _ = writeln!(s, "     error: {err}");
        }
        if let Some(note) = &e.note {
            let _ = writeln!(s, "     note: {note}");
        }
    }
    let m = &r.summary;
    let _ = writeln!(s, "{} total, {} passed, {} failed, {} skipped", m.total, m.passed, m.failed, m.skipped);
    s
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_text<R, I>(header: &[&str], rows: I) -> String
where
    R: IntoIterator<Item = String>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 fields")
}
