use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use peakqsym::insertion::{self, Inserted};
use peakqsym::qsym::{self, Notation, QSymElement, Symbol};
use peakqsym::tableau::{self, Family, Tableau};
use peakqsym::verify::{self, Check, VerifyReport};
use peakqsym::{Composition, IndexSet};

const DEFAULT_MAX_N: usize = 9;
const MAX_N_ENV: &str = "PEAKQSYM_MAX_N";

#[derive(Parser)]
#[command(name = "peakqsym", version, about = "Peak quasisymmetric Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a named function into a basis.
    Expand {
        kind: Kind,
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        into: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the tableaux of a family and shape.
    Tableaux {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        alpha: Composition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Insert a word, or the reading word of a standard immaculate tableau.
    Insert {
        /// Letters separated by commas, or a run of single digits.
        #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
        word: Option<String>,
        /// Rows bottom to top, e.g. `1,2,3/4,5`.
        #[arg(long)]
        tableau: Option<Tableau>,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the exhaustive checks on every peak composition up to a degree.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "all")]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Qsq,
    Pyqs,
    #[value(name = "dual_immaculate")]
    DualImmaculate,
    #[value(name = "young_qs")]
    YoungQs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Pyqs,
    Peak,
    Fundamental,
    Monomial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy)]
enum Which {
    All,
    One(Check),
}

impl std::str::FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(Which::All)
        } else {
            s.parse().map(Which::One)
        }
    }
}

/// A bad-input failure, reported with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Expand {
            kind,
            alpha,
            into,
            format,
        } => expand(kind, &alpha, into, format).map(Outcome::Ok),
        Command::Tableaux {
            family,
            alpha,
            format,
        } => list_tableaux(family, &alpha, format).map(Outcome::Ok),
        Command::Insert {
            word,
            tableau,
            trace,
            format,
        } => insert(word.as_deref(), tableau.as_ref(), trace, format).map(Outcome::Ok),
        Command::Verify {
            max_n,
            which,
            format,
        } => run_verify(max_n, which, format),
    };
    let mut stdout = io::stdout().lock();
    match result {
        Ok(Outcome::Ok(out)) => {
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerifyFailed(out)) => {
            let _ = writeln!(stdout, "{out}");
            ExitCode::from(1)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn notation(format: Format) -> Notation {
    match format {
        Format::Latex => Notation::Latex,
        _ => Notation::Text,
    }
}

fn kind_symbol(kind: Kind) -> Symbol {
    match kind {
        Kind::Qsq => Symbol::QSchurQ,
        Kind::Pyqs => Symbol::PeakYoung,
        Kind::DualImmaculate => Symbol::DualImmaculate,
        Kind::YoungQs => Symbol::YoungQs,
    }
}

fn expand(kind: Kind, alpha: &Composition, into: Target, format: Format) -> Result<String, Usage> {
    let lhs = kind_symbol(kind);
    if let Target::Pyqs = into {
        if !matches!(kind, Kind::Qsq) {
            return Err(Usage("--into pyqs is only valid for qsq".into()));
        }
        let coeffs = qsym::expand_qsq_in_pyqs(alpha)?;
        return Ok(match format {
            Format::Json => {
                let terms: Vec<_> = coeffs
                    .iter()
                    .map(|(beta, c)| json!({"composition": beta, "coeff": c}))
                    .collect();
                to_json(&json!({"kind": "qsq", "alpha": alpha, "into": "pyqs", "terms": terms}))
            }
            _ => {
                let rhs = qsym::render_sum(
                    coeffs
                        .iter()
                        .map(|(beta, &c)| (Symbol::PeakYoung, beta, BigInt::from(c))),
                    notation(format),
                );
                qsym::render_identity(lhs, alpha, &rhs, notation(format))
            }
        });
    }

    let native = match kind {
        Kind::Qsq => qsym::qsq_via_spct(alpha)?,
        Kind::Pyqs => qsym::pyqs(alpha)?,
        Kind::DualImmaculate => qsym::dual_immaculate(alpha)?,
        Kind::YoungQs => qsym::young_qs(alpha)?,
    };
    let element = match into {
        Target::Peak if matches!(kind, Kind::Qsq | Kind::Pyqs) => native,
        Target::Peak => return Err(Usage("--into peak is only valid for qsq and pyqs".into())),
        Target::Fundamental => match native.basis() {
            peakqsym::Basis::Peak => qsym::peak_to_fundamental(&native)?,
            _ => native,
        },
        Target::Monomial => qsym::to_monomial(&native),
        Target::Pyqs => unreachable!("handled above"),
    };
    Ok(render_element(lhs, alpha, &element, format))
}

fn render_element(lhs: Symbol, alpha: &Composition, e: &QSymElement, format: Format) -> String {
    match format {
        Format::Json => to_json(e),
        _ => {
            let rhs = qsym::render_element(e, notation(format));
            qsym::render_identity(lhs, alpha, &rhs, notation(format))
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serialisable")
}

/// A statistic shown next to each tableau: text form and JSON form.
struct Stat {
    name: &'static str,
    text: String,
    json: serde_json::Value,
}

fn set_stat(name: &'static str, set: IndexSet) -> Stat {
    Stat {
        name,
        text: set.to_string(),
        json: json!(set.elements()),
    }
}

fn comp_stat(name: &'static str, alpha: &Composition) -> Stat {
    Stat {
        name,
        text: format!("({alpha})"),
        json: json!(alpha),
    }
}

fn statistics(family: Family, t: &Tableau) -> Result<Vec<Stat>, Usage> {
    Ok(match family {
        Family::Mpct => vec![comp_stat("weight", &tableau::weight(t)?)],
        Family::Smpct => vec![set_stat("des", tableau::descent_marked(t)?)],
        Family::Spct => vec![
            set_stat("des", tableau::descent_up(t)?),
            set_stat("peak", tableau::peak_up(t)?),
        ],
        Family::Sit => vec![set_stat("des", tableau::descent_up(t)?)],
        Family::Spyct => vec![
            set_stat("des", tableau::descent_left(t)?),
            set_stat("peak", tableau::peak_left(t)?),
        ],
        Family::Syct => vec![set_stat("des", tableau::descent_left(t)?)],
        Family::Dirt => vec![
            comp_stat("shape", t.shape()),
            comp_stat("strips", &tableau::row_strip_shape(t)?),
        ],
    })
}

fn list_tableaux(family: Family, alpha: &Composition, format: Format) -> Result<String, Usage> {
    // DIRTs are listed by row strip shape, as generated
    let items = match family {
        Family::Dirt => insertion::generate_dirts(alpha)?,
        _ => tableau::enumerate(family, alpha)?,
    };
    let mut rows = Vec::with_capacity(items.len());
    for t in &items {
        rows.push((t, statistics(family, t)?));
    }
    Ok(match format {
        Format::Json => {
            let listed: Vec<_> = rows
                .iter()
                .map(|(t, stats)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("tableau".into(), json!(t));
                    for stat in stats {
                        obj.insert(stat.name.into(), stat.json.clone());
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            to_json(&json!({
                "family": family.name(),
                "alpha": alpha,
                "count": items.len(),
                "tableaux": listed,
            }))
        }
        _ => {
            let mut out = format!("{}({alpha}): {} tableaux", family.name(), items.len());
            for (t, stats) in rows {
                out.push_str(&format!("\n{t}"));
                for stat in stats {
                    out.push_str(&format!("  {}={}", stat.name, stat.text));
                }
            }
            out
        }
    })
}

fn parse_word(s: &str) -> Result<Vec<usize>, Usage> {
    let tokens: Vec<&str> = if s.contains(',') {
        s.split(',').map(str::trim).collect()
    } else {
        s.trim()
            .char_indices()
            .map(|(i, ch)| &s.trim()[i..i + ch.len_utf8()])
            .collect()
    };
    tokens
        .into_iter()
        .map(|tok| {
            tok.parse::<usize>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Usage(format!("bad letter {tok:?} in word")))
        })
        .collect()
}

fn trace_lines(trace: &[Inserted], word: &[usize]) -> Vec<String> {
    trace
        .iter()
        .zip(word)
        .flat_map(|(ins, k)| {
            ins.steps
                .iter()
                .map(move |step| format!("insert {k}: {step}"))
        })
        .collect()
}

fn insert(
    word: Option<&str>,
    t: Option<&Tableau>,
    trace: bool,
    format: Format,
) -> Result<String, Usage> {
    let letters = match (word, t) {
        (Some(w), _) => parse_word(w)?,
        (None, Some(t)) => tableau::reading_word(t)?,
        (None, None) => return Err(Usage("give --word or --tableau".into())),
    };
    if letters.is_empty() {
        return Err(Usage("empty word".into()));
    }
    let run = insertion::insert_word(&letters)?;
    let steps = if trace {
        trace_lines(&run.trace, &letters)
    } else {
        Vec::new()
    };
    Ok(match format {
        Format::Json => {
            let mut obj = json!({
                "word": letters,
                "p": run.p.to_tableau(),
                "q": run.q.to_tableau(),
            });
            if trace {
                obj["trace"] = json!(steps);
            }
            to_json(&obj)
        }
        _ => {
            let mut lines = steps;
            lines.push(format!("P = {}", run.p));
            lines.push(format!("Q = {}", run.q));
            lines.join("\n")
        }
    })
}

fn max_n_ceiling() -> Result<usize, Usage> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| Usage(format!("{MAX_N_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn run_verify(max_n: usize, which: Which, format: Format) -> Result<Outcome, Usage> {
    let ceiling = max_n_ceiling()?;
    if max_n == 0 || max_n > ceiling {
        return Err(Usage(format!("--max-n must lie in 1..={ceiling}")));
    }
    let checks = match which {
        Which::All => Check::ALL.to_vec(),
        Which::One(c) => vec![c],
    };
    let report = verify::run(&checks, max_n);
    // timings go to stderr so stdout stays reproducible
    for t in &report.timings {
        eprintln!("{:<18} {:>8.3}s", t.theorem.name(), t.seconds);
    }
    eprintln!("{:<18} {:>8.3}s", "total", report.elapsed);
    let out = match format {
        Format::Json => to_json(&report),
        _ => verify_text(&report, &checks),
    };
    Ok(if report.passed() {
        Outcome::Ok(out)
    } else {
        Outcome::VerifyFailed(out)
    })
}

fn verify_text(report: &VerifyReport, checks: &[Check]) -> String {
    let mut tally: BTreeMap<Check, (usize, usize)> = BTreeMap::new();
    for c in &report.checks {
        let entry = tally.entry(c.theorem).or_default();
        entry.0 += 1;
        entry.1 += usize::from(c.pass);
    }
    let mut lines = Vec::new();
    for check in checks {
        let (total, passed) = tally.get(check).copied().unwrap_or_default();
        let status = if passed == total { "pass" } else { "FAIL" };
        lines.push(format!(
            "{status} {:<18} n<={} {passed}/{total} compositions",
            check.name(),
            report.max_degree
        ));
    }
    for f in report.failures() {
        lines.push(format!("  {} ({}): {}", f.theorem, f.alpha, f.detail));
    }
    let overall = if report.passed() { "pass" } else { "FAIL" };
    lines.push(format!("overall: {overall}"));
    lines.join("\n")
}
