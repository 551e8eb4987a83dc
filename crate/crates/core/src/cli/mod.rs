//! The `rmtori` command line. [`run`] is the whole program; the binary only
//! forwards its arguments and exit code.
//!
//! Exit codes: 0 success, 2 parse error, 3 domain error, 4 failed
//! verification.

mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rug::{Integer, Rational};
use serde_json::{json, Value};

use crate::bej::{fiber_census, BejSpec};
use crate::cf::{pell_check, PeriodicCF, QuadCoeffs};
use crate::error::{Error, Result};
use crate::exact::{parse_integer, parse_rational, rational_text, IntPolynomial, QuadraticSurd};
use crate::surface::{section_verify, CFSection, CMSpec, LegendreSurface};
use crate::verify::{run_suite, SUITES};
use render::{cf_json, int_json, surd_json, table, Csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

const DEFAULT_CM_TABLE: &str = "2,3,7,11,19,43,67,163";

#[derive(Parser, Debug)]
#[command(
    name = "rmtori",
    version,
    about = "Exact periodic continued fractions, matrix words and Pell conics for quadratic irrationals"
)]
struct Cli {
    /// Print one JSON record instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    /// Print CSV (cm-table and bej-scan only)
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Print nothing on success; errors still go to stderr
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a surd "(a+b*sqrt(d))/c" into its periodic continued fraction
    Expand {
        #[arg(allow_hyphen_values = true)]
        surd: String,
    },
    /// Evaluate a continued fraction "[b1,...;a1,...]" to a surd
    Eval {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Matrix word, fixed quadratic (A,B,C) and Pell check of a continued fraction
    Word {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Continued fractions of the CM parameters for a list of D
    CmTable {
        /// Comma-separated square-free D > 1
        #[arg(long = "d", default_value = DEFAULT_CM_TABLE)]
        d: String,
        /// Conductor
        #[arg(long, default_value = "1")]
        f: String,
    },
    /// Integer points of the period variety with entries in [-bound, bound]
    BejScan {
        /// Target quadratic "A,B,C"
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Preperiod length N
        #[arg(short = 'n', long = "n")]
        n: usize,
        /// Period length k
        #[arg(short = 'k', long = "k")]
        k: usize,
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Fiber report of a Legendre surface, optionally against a section
    Surface {
        /// Numerator of alpha(t), coefficients constant first
        #[arg(long, allow_hyphen_values = true, default_value = "-2,1")]
        alpha_num: String,
        /// Denominator of alpha(t), coefficients constant first
        #[arg(long, allow_hyphen_values = true, default_value = "2,1")]
        alpha_den: String,
        /// A fiber parameter "n" or "n/d"; repeatable
        #[arg(long, allow_hyphen_values = true, conflicts_with = "t_range")]
        t: Vec<String>,
        /// Integer range "lo..hi", inclusive; default 3..12
        #[arg(long, allow_hyphen_values = true)]
        t_range: Option<String>,
        /// Section preperiod entry polynomial; repeatable
        #[arg(long, allow_hyphen_values = true, requires = "period")]
        pre: Vec<String>,
        /// Section period entry polynomial; repeatable
        #[arg(long, allow_hyphen_values = true)]
        period: Vec<String>,
    },
    /// Run a self-check suite
    Verify {
        #[arg(default_value = "all", value_parser = suite_names())]
        suite: String,
    },
}

fn suite_names() -> Vec<&'static str> {
    let mut names = vec!["all"];
    names.extend(SUITES);
    names
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Expand { .. } => "expand",
            Command::Eval { .. } => "eval",
            Command::Word { .. } => "word",
            Command::CmTable { .. } => "cm-table",
            Command::BejScan { .. } => "bej-scan",
            Command::Surface { .. } => "surface",
            Command::Verify { .. } => "verify",
        }
    }
}

/// What a command produced, in every output format it supports.
struct Report {
    payload: Value,
    human: String,
    csv: Option<String>,
    failed: bool,
}

impl Report {
    fn new(payload: Value, human: String) -> Self {
        Report {
            payload,
            human,
            csv: None,
            failed: false,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_PARSE
                }
            };
        }
    };
    let command = cli.command.name();
    if cli.csv
        && !matches!(
            cli.command,
            Command::CmTable { .. } | Command::BejScan { .. }
        )
    {
        let _ = writeln!(
            err,
            "error: --csv is only supported by cm-table and bej-scan"
        );
        return EXIT_PARSE;
    }

    match execute(&cli.command) {
        Ok(report) => {
            if !cli.quiet {
                let text = if cli.json {
                    let status = if report.failed { "fail" } else { "ok" };
                    let record =
                        json!({ "command": command, "status": status, "payload": report.payload });
                    format!("{record}\n")
                } else if cli.csv {
                    report.csv.expect("csv checked above")
                } else {
                    report.human
                };
                let _ = out.write_all(text.as_bytes());
            }
            if report.failed {
                EXIT_VERIFY
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if cli.json && !cli.quiet {
                let record = json!({
                    "command": command,
                    "status": "error",
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                });
                let _ = writeln!(out, "{record}");
            }
            exit_code(&e)
        }
    }
}

/// 2 for malformed input, 3 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_DOMAIN,
    }
}

/// The variant name, e.g. `SquareDiscriminant`.
pub fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(|c: char| !c.is_ascii_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Expand { surd } => expand(surd),
        Command::Eval { cf } => eval(cf),
        Command::Word { cf } => word(cf),
        Command::CmTable { d, f } => cm_table(d, f),
        Command::BejScan {
            coeffs,
            n,
            k,
            bound,
        } => bej_scan(coeffs, *n, *k, *bound),
        Command::Surface {
            alpha_num,
            alpha_den,
            t,
            t_range,
            pre,
            period,
        } => surface(alpha_num, alpha_den, t, t_range.as_deref(), pre, period),
        Command::Verify { suite } => verify(suite),
    }
}

fn expand(text: &str) -> Result<Report> {
    let theta: QuadraticSurd = text.parse()?;
    let cf = PeriodicCF::expand(&theta);
    let mut payload = cf_json(&cf);
    payload["theta"] = surd_json(&theta);
    Ok(Report::new(payload, format!("{cf}\n")))
}

fn eval(text: &str) -> Result<Report> {
    let cf: PeriodicCF = text.parse()?;
    let theta = cf.evaluate()?;
    let payload = json!({ "cf": cf_json(&cf), "theta": surd_json(&theta) });
    Ok(Report::new(payload, format!("{theta}\n")))
}

fn word(text: &str) -> Result<Report> {
    let cf: PeriodicCF = text.parse()?;
    let m = cf.matrix_word();
    let coeffs = QuadCoeffs::from_matrix(&m)?;
    let pell = pell_check(&coeffs, &m, cf.k());
    let payload = json!({
        "cf": cf_json(&cf),
        "matrix": [[int_json(m.e11()), int_json(m.e12())], [int_json(m.e21()), int_json(m.e22())]],
        "det": m.det(),
        "coeffs": [int_json(coeffs.a()), int_json(coeffs.b()), int_json(coeffs.c())],
        "pell": pell,
    });
    let human = format!(
        "matrix  {m}\ndet     {}\ncoeffs  {coeffs}\npell    {pell}\n",
        m.det()
    );
    Ok(Report::new(payload, human))
}

fn parse_list(text: &str) -> Result<Vec<Integer>> {
    text.split(',').map(parse_integer).collect()
}

fn cm_table(ds: &str, f: &str) -> Result<Report> {
    let f = parse_integer(f)?;
    let rows = parse_list(ds)?
        .into_iter()
        .map(|d| CMSpec::new(d, f.clone()).map(|spec| spec.row()))
        .collect::<Result<Vec<_>>>()?;

    let header = [
        "D",
        "f",
        "theta",
        "cf",
        "figure2",
        "k",
        "palindrome_ok",
        "picard",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.d.to_string(),
                r.f.to_string(),
                r.theta.to_string(),
                r.cf.to_string(),
                r.cf.overline_text(),
                r.k().to_string(),
                r.palindrome_ok.to_string(),
                r.picard.to_string(),
            ]
        })
        .collect();
    let payload = json!({
        "f": int_json(&f),
        "rows": rows.iter().map(|r| json!({
            "D": int_json(&r.d),
            "theta": surd_json(&r.theta),
            "cf": cf_json(&r.cf),
            "figure2": r.cf.overline_text(),
            "palindrome_ok": r.palindrome_ok,
            "picard": r.picard,
        })).collect::<Vec<_>>(),
    });
    let mut csv = Csv::new(&header);
    for row in &cells {
        csv.row(row);
    }
    Ok(Report {
        payload,
        human: table(&header, &cells),
        csv: Some(csv.finish()),
        failed: false,
    })
}

fn bej_scan(coeffs: &str, n: usize, k: usize, bound: u32) -> Result<Report> {
    let parts = parse_list(coeffs)?;
    let [a, b, c]: [Integer; 3] = parts
        .try_into()
        .map_err(|_| Error::Parse(format!("expected coefficients A,B,C, got {coeffs:?}")))?;
    let spec = BejSpec::new(QuadCoeffs::new(a, b, c)?, n, k)?;
    let conic = spec.conic();
    let points = spec.enumerate(bound)?;
    let census = fiber_census(&points)?;

    let pair = |(u, v): &(Integer, Integer)| json!([int_json(u), int_json(v)]);
    let payload = json!({
        "spec": {
            "coeffs": [int_json(spec.coeffs.a()), int_json(spec.coeffs.b()), int_json(spec.coeffs.c())],
            "N": n,
            "k": k,
            "bound": bound,
        },
        "points": points.iter().map(|p| json!({
            "entries": p.entries.iter().map(int_json).collect::<Vec<_>>(),
            "projection": pair(&p.projection),
            "on_conic": conic.contains(&p.projection.0, &p.projection.1),
        })).collect::<Vec<_>>(),
        "census": census.iter().map(|(uv, count)| json!({ "projection": pair(uv), "count": count })).collect::<Vec<_>>(),
        "members": points.len(),
    });

    let mut human = format!(
        "spec {} N={n} k={k} bound={bound}: {} members\n",
        spec.coeffs,
        points.len()
    );
    for p in &points {
        let entries: Vec<String> = p.entries.iter().map(Integer::to_string).collect();
        human += &format!(
            "({}) -> ({},{})\n",
            entries.join(","),
            p.projection.0,
            p.projection.1
        );
    }
    human += "census\n";
    for ((u, v), count) in &census {
        human += &format!("({u},{v}) {count}\n");
    }

    let mut header: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    header.extend((1..=k).map(|i| format!("a{i}")));
    header.extend(["u".to_string(), "v".to_string()]);
    let mut csv = Csv::new(&header);
    for p in &points {
        let mut row: Vec<String> = p.entries.iter().map(Integer::to_string).collect();
        row.push(p.projection.0.to_string());
        row.push(p.projection.1.to_string());
        csv.row(&row);
    }
    Ok(Report {
        payload,
        human,
        csv: Some(csv.finish()),
        failed: false,
    })
}

fn parse_t_range(text: &str) -> Result<Vec<Rational>> {
    let bad = || Error::Parse(format!("expected lo..hi, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let (lo, hi) = (parse_integer(lo)?, parse_integer(hi)?);
    if lo > hi {
        return Err(bad());
    }
    let (lo, hi) = (lo.to_i64().ok_or_else(bad)?, hi.to_i64().ok_or_else(bad)?);
    Ok((lo..=hi).map(Rational::from).collect())
}

fn parse_polys(texts: &[String]) -> Result<Vec<IntPolynomial>> {
    texts.iter().map(|t| t.parse()).collect()
}

fn surface(
    alpha_num: &str,
    alpha_den: &str,
    t: &[String],
    t_range: Option<&str>,
    pre: &[String],
    period: &[String],
) -> Result<Report> {
    let surface = LegendreSurface::new(alpha_num.parse()?, alpha_den.parse()?)?;
    let ts = if !t.is_empty() {
        t.iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>>>()?
    } else {
        parse_t_range(t_range.unwrap_or("3..12"))?
    };
    let section = if period.is_empty() {
        None
    } else {
        Some(CFSection::new(parse_polys(pre)?, parse_polys(period)?)?)
    };
    let checks = section.as_ref().map(|s| section_verify(s, &surface, &ts));

    let mut rows = Vec::with_capacity(ts.len());
    let mut human = String::new();
    for (i, t) in ts.iter().enumerate() {
        let mut row = json!({ "t": rational_text(t) });
        let mut line = format!("t={}", render::rational_short(t));
        match surface.legendre_b(t) {
            Ok(b) => {
                line += &format!("  b={}", render::rational_short(&b));
                row["b"] = json!(rational_text(&b));
            }
            Err(e) => row["b_error"] = json!(e.to_string()),
        }
        match surface.surface_matrix(t) {
            Ok(m) => {
                let [[p, q], [r, s]] = m.cleared();
                line += &format!("  matrix=(({p},{q}),({r},{s}))");
                row["matrix"] = json!([[int_json(&p), int_json(&q)], [int_json(&r), int_json(&s)]]);
            }
            Err(e) => row["matrix_error"] = json!(e.to_string()),
        }
        match surface.surface_theta(t) {
            Ok(theta) => {
                let cf = PeriodicCF::expand(&theta);
                line += &format!("  theta={theta}  cf={cf}");
                row["theta"] = surd_json(&theta);
                row["cf"] = cf_json(&cf);
            }
            Err(e) => {
                line += &format!("  theta: {e}");
                row["theta_error"] = json!(e.to_string());
            }
        }
        if let (Some(section), Some(checks)) = (&section, &checks) {
            let check = &checks[i];
            let section_cf = section.eval(t).ok();
            row["section"] = json!({
                "cf": section_cf.as_ref().map(cf_json),
                "theta": check.section_theta.as_ref().map(surd_json),
                "tail_theta": check.tail_theta.as_ref().map(surd_json),
                "literal_equal": check.literal_equal,
                "tail_equal": check.tail_equal,
                "equivalent": check.equivalent,
                "error": check.error,
            });
            match &check.error {
                None => {
                    line += &format!(
                        "\n  section={}  literal={}  tail={}  equivalent={}",
                        section_cf.map(|c| c.to_string()).unwrap_or_default(),
                        check.literal_equal,
                        check.tail_equal,
                        check.equivalent
                    );
                }
                Some(e) => line += &format!("\n  section: {e}"),
            }
        }
        human += &line;
        human.push('\n');
        rows.push(row);
    }
    let mut payload = json!({
        "alpha_num": surface.alpha_num().to_string(),
        "alpha_den": surface.alpha_den().to_string(),
        "rows": rows,
    });
    if let Some(section) = &section {
        payload["picard"] = json!(section.picard());
        human += &format!("picard {}\n", section.picard());
    }
    Ok(Report::new(payload, human))
}

fn verify(suite: &str) -> Result<Report> {
    let checks = run_suite(suite)?;
    let passed = checks.iter().filter(|c| c.passed).count();
    let mut human = String::new();
    for c in &checks {
        let timing = match (c.elapsed, c.limit) {
            (Some(e), Some(l)) => format!(" [{:.3}s, limit {}s]", e.as_secs_f64(), l.as_secs()),
            (Some(e), None) => format!(" [{:.3}s]", e.as_secs_f64()),
            _ => String::new(),
        };
        let mark = if c.passed { "PASS" } else { "FAIL" };
        human += &format!("{mark} {}: {}{timing}\n", c.name, c.detail);
    }
    human += &format!("{passed}/{} checks passed\n", checks.len());
    let payload = json!({
        "suite": suite,
        "passed": passed == checks.len(),
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
            "time_limit_s": c.limit.map(|l| l.as_secs()),
        })).collect::<Vec<_>>(),
    });
    Ok(Report {
        payload,
        human,
        csv: None,
        failed: passed != checks.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("rmtori").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            call(&["expand", "(0+1*sqrt(2))/1"]),
            (0, "[1;2]\n".into(), String::new())
        );
        assert_eq!(call(&["expand", "(1+1*sqrt(5))/2"]).1, "[;1]\n");
        let (code, _, err) = call(&["expand", "(0+1*sqrt(4))/1"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("perfect square"));
        assert_eq!(call(&["expand", "sqrt(2)"]).0, EXIT_PARSE);
    }

    #[test]
    fn error_kinds() {
        assert_eq!(
            error_kind(&Error::SquareDiscriminant(Integer::from(4))),
            "SquareDiscriminant"
        );
        assert_eq!(error_kind(&Error::InvalidBound), "InvalidBound");
        assert_eq!(
            error_kind(&Error::LengthMismatch {
                expected: 1,
                found: 2
            }),
            "LengthMismatch"
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&[]).0, EXIT_PARSE);
        assert_eq!(call(&["nope"]).0, EXIT_PARSE);
        assert_eq!(call(&["verify", "nope"]).0, EXIT_PARSE);
        assert_eq!(call(&["--csv", "expand", "(0+1*sqrt(2))/1"]).0, EXIT_PARSE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn t_ranges() {
        assert_eq!(
            parse_t_range("3..5").unwrap(),
            vec![Rational::from(3), Rational::from(4), Rational::from(5)]
        );
        assert!(parse_t_range("5..3").is_err());
        assert!(parse_t_range("3-5").is_err());
    }
}
