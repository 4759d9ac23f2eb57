use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use progsums::bernoulli::{b_gen_numbers, b_gen_poly};
use progsums::exact::{is_integer, render};
use progsums::format::{bfile, flatten, rows_for_count, to_csv, to_pretty};
use progsums::powersum::{power_sum, Method, PowerSumQuery};
use progsums::verify::{self, Suite, VerifyOptions};
use progsums::{family_triangle, Error, ExactRational, Family, ProgressionParams, RationalTriangle};

#[derive(Parser)]
#[command(name = "progsums", version, about = "Exact power sums over arithmetic progressions and their number triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sequence {
    BernoulliNumerators,
    BernoulliDenominators,
}

#[derive(clap::Args, Clone, Copy)]
struct Progression {
    /// Common difference, at least 1.
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Offset of the progression.
    #[arg(long, default_value_t = 0)]
    a: u32,
}

impl Progression {
    fn params(self) -> Result<ProgressionParams, Error> {
        ProgressionParams::new(self.d, self.a)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=ROWS of a number triangle.
    Triangle {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[command(flatten)]
        progression: Progression,
        #[arg(long, default_value_t = 8)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long, default_value_t = 64)]
        max_rows: usize,
    },
    /// Sum of (a + d j)^n for j = 0..=m.
    Powersum {
        #[command(flatten)]
        progression: Progression,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_method, default_value = "direct", conflicts_with = "all_methods")]
        method: Method,
        /// Evaluate by every route and report each.
        #[arg(long)]
        all_methods: bool,
    },
    /// Generalized Bernoulli numbers B(d,a;0..COUNT-1), or the polynomial B(d,a;n,x) with --n.
    Bernoulli {
        #[command(flatten)]
        progression: Progression,
        #[arg(long, default_value_t = 13)]
        count: usize,
        /// Print the coefficients of the polynomial of this degree instead.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Check the library's identities by independent routes.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        /// Show the first mismatching entry or coefficient.
        #[arg(long)]
        explain: bool,
        /// Also run the three-term Lah recurrence with coefficient n, expected to fail for d >= 2.
        #[arg(long = "include-printed-eq143")]
        include_printed_eq143: bool,
    },
    /// Write a triangle (flattened by rows) or a Bernoulli sequence as a b-file.
    ExportBfile {
        #[arg(long, value_parser = parse_family, required_unless_present = "sequence", conflicts_with = "sequence")]
        family: Option<Family>,
        #[arg(long, value_enum)]
        sequence: Option<Sequence>,
        #[command(flatten)]
        progression: Progression,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
        /// Allow non-integer values, written as p/q.
        #[arg(long)]
        rational: bool,
        #[arg(long, default_value_t = 64)]
        max_rows: usize,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    let family: Family = s.parse().map_err(|e: Error| e.to_string())?;
    if family == Family::Generic {
        return Err("generic is not a named family".into());
    }
    Ok(family)
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = dispatch(cli.command, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Triangle { family, progression, rows, format, max_rows } => {
            if rows > max_rows {
                return Err(Failure::Usage(format!("--rows {rows} exceeds --max-rows {max_rows}")));
            }
            let t = family_triangle(family, progression.params()?, rows)?;
            out.push_str(&triangle_text(&t, format));
        }
        Command::Powersum { progression, n, m, method, all_methods } => {
            let q = PowerSumQuery::new(progression.params()?, n, m);
            if all_methods {
                let values = Method::ALL
                    .iter()
                    .map(|&meth| Ok((meth, power_sum(q, meth)?)))
                    .collect::<Result<Vec<_>, Error>>()?;
                for (meth, v) in &values {
                    out.push_str(&format!("{} {}\n", meth, render(v)));
                }
                if values.iter().any(|(_, v)| v != &values[0].1) {
                    return Err(Failure::Verification);
                }
            } else {
                out.push_str(&format!("{}\n", render(&power_sum(q, method)?)));
            }
        }
        Command::Bernoulli { progression, count, n, format } => {
            let params = progression.params()?;
            let values = match n {
                Some(n) => b_gen_poly(params, n).coeffs().to_vec(),
                None => b_gen_numbers(params, count),
            };
            out.push_str(&sequence_text(&values, format));
        }
        Command::Verify { suite, depth, explain, include_printed_eq143 } => {
            let options = VerifyOptions {
                include_printed_three_term: include_printed_eq143,
                ..VerifyOptions::new(depth as usize)
            };
            let report = verify::run(suite, &options);
            out.push_str(&report.render(explain));
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::ExportBfile { family, sequence, progression, count, offset, rational, max_rows } => {
            let params = progression.params()?;
            let values: Vec<ExactRational> = match (family, sequence) {
                (Some(family), _) => {
                    let rows = rows_for_count(count);
                    if rows > max_rows {
                        return Err(Failure::Usage(format!("--count {count} needs {rows} rows, over --max-rows {max_rows}")));
                    }
                    flatten(&family_triangle(family, params, rows)?).into_iter().take(count).collect()
                }
                (None, Some(seq)) => {
                    let nums = b_gen_numbers(params, count);
                    match seq {
                        Sequence::BernoulliNumerators => nums.iter().map(|v| ExactRational::from_integer(v.numer().clone())).collect(),
                        Sequence::BernoulliDenominators => nums.iter().map(|v| ExactRational::from_integer(v.denom().clone())).collect(),
                    }
                }
                (None, None) => return Err(Failure::Usage("--family or --sequence is required".into())),
            };
            if !rational && !values.iter().all(is_integer) {
                return Err(Failure::Usage("values are not all integers; pass --rational to export p/q".into()));
            }
            let text: Vec<String> = values.iter().map(render).collect();
            out.push_str(&bfile(&text, offset));
        }
    }
    Ok(())
}

fn triangle_text(t: &RationalTriangle, format: Format) -> String {
    match format {
        Format::Pretty => to_pretty(t),
        Format::Csv => to_csv(t),
        Format::Bfile => {
            let text: Vec<String> = flatten(t).iter().map(render).collect();
            bfile(&text, 0)
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(render).collect()).collect();
            let value = json!({
                "family": t.family().name(),
                "d": t.params().d(),
                "a": t.params().a(),
                "rows": rows,
            });
            format!("{value}\n")
        }
    }
}

fn sequence_text(values: &[ExactRational], format: Format) -> String {
    let text: Vec<String> = values.iter().map(render).collect();
    match format {
        Format::Pretty => {
            let w = text.len().saturating_sub(1).to_string().len();
            text.iter().enumerate().map(|(i, v)| format!("{i:>w$}  {v}\n")).collect()
        }
        Format::Csv => text.iter().enumerate().map(|(i, v)| format!("{i},{v}\n")).collect(),
        Format::Bfile => bfile(&text, 0),
        Format::Json => format!("{}\n", json!(text)),
    }
}
