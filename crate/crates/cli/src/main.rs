use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use immaculate::compositions::compositions_of;
use immaculate::nsym::{pair, NBasis, NSymElem};
use immaculate::qsym::{matrix, MatrixName, QBasis, QSymElem};
use immaculate::skewhook::{hook_di, hook_fund_expansion, skew_f_expansion, SkewRoute};
use immaculate::tableaux::{enumerate, enumerate_hook, enumerate_standard, Shape, TableauKind};
use immaculate::verify::{self, Suite};
use immaculate::{Composition, Error};
use serde_json::{json, Value};

/// Dual immaculate and row-strict dual immaculate functions.
#[derive(Parser)]
#[command(name = "immaculate", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Immaculate,
    RowStrict,
    Standard,
    Hook,
}

#[derive(Subcommand)]
enum Command {
    /// List the compositions of n in lexicographically decreasing order.
    Compositions {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate tableaux of a (skew) shape.
    Tableaux {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        inner: Option<String>,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        max_entry: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Expand a basis element in another basis of the same space.
    Expand {
        #[arg(long)]
        space: String,
        #[arg(long)]
        basis: String,
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        #[arg(long)]
        into: String,
    },
    /// Evaluate the pairing of two basis elements, given as `BASIS:a,b,c`.
    Pair {
        #[arg(long)]
        nsym: String,
        #[arg(long)]
        qsym: String,
    },
    /// Print a transition matrix indexed by compositions of n.
    Matrix {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
    },
    /// Fundamental expansion of a skew (row-strict) dual immaculate function.
    Skew {
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long)]
        kind: String,
        #[arg(long, default_value = "tableaux")]
        route: String,
    },
    /// Hook dual immaculate function as a polynomial in x_1..x_l, y_1..y_k.
    Hook {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "tableaux")]
        route: String,
    },
    /// Check identities exhaustively up to a degree bound.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: usize,
    },
}

fn parse_composition(s: &str) -> Result<Composition, Error> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {p:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Composition::new(parts)
}

fn parse_labelled(s: &str) -> Result<(&str, Composition), Error> {
    let (basis, index) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected BASIS:a,b,c, got {s:?}")))?;
    Ok((basis, parse_composition(index)?))
}

fn parse_kind(s: &str) -> Result<TableauKind, Error> {
    match s {
        "DI" | "immaculate" => Ok(TableauKind::Immaculate),
        "RSDI" | "row-strict" => Ok(TableauKind::RowStrict),
        _ => Err(Error::Parse(format!("unknown kind {s:?}"))),
    }
}

enum Output {
    Done(Value, String),
    Verified(Value, String, bool),
}

fn json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Compositions { n } => {
            let all = compositions_of(n);
            let text = all
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            Output::Done(json(&all), text)
        }
        Command::Tableaux {
            shape,
            inner,
            kind,
            max_entry,
            l,
            k,
        } => {
            let outer = parse_composition(&shape)?;
            if let Kind::Hook = kind {
                let (Some(l), Some(k)) = (l, k) else {
                    return Err(Error::Parse("hook tableaux need --l and --k".into()));
                };
                let all = enumerate_hook(&outer, l, k);
                let text = all
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n");
                return Ok(Output::Done(
                    json(&all),
                    format!("{text}\n{} tableaux", all.len()),
                ));
            }
            let inner = inner
                .as_deref()
                .map(parse_composition)
                .transpose()?
                .unwrap_or_else(Composition::empty);
            let shape = Shape::skew(outer, inner)?;
            let max = max_entry.unwrap_or(shape.size() as u32);
            let all = match kind {
                Kind::Immaculate => enumerate(&shape, TableauKind::Immaculate, max),
                Kind::RowStrict => enumerate(&shape, TableauKind::RowStrict, max),
                _ => enumerate_standard(&shape),
            };
            let text = all
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            Output::Done(json(&all), format!("{text}\n{} tableaux", all.len()))
        }
        Command::Expand {
            space,
            basis,
            index,
            into,
        } => {
            let index = parse_composition(&index)?;
            match space.as_str() {
                "QSym" => {
                    let x = QSymElem::basis_element(QBasis::from_str(&basis)?, index)
                        .convert(QBasis::from_str(&into)?);
                    Output::Done(json(&x), x.to_string())
                }
                "NSym" => {
                    let x = NSymElem::basis_element(NBasis::from_str(&basis)?, index)
                        .convert(NBasis::from_str(&into)?);
                    Output::Done(json(&x), x.to_string())
                }
                _ => return Err(Error::Parse(format!("unknown space {space:?}"))),
            }
        }
        Command::Pair { nsym, qsym } => {
            let (nb, a) = parse_labelled(&nsym)?;
            let (qb, b) = parse_labelled(&qsym)?;
            let g = NSymElem::basis_element(NBasis::from_str(nb)?, a);
            let f = QSymElem::basis_element(QBasis::from_str(qb)?, b);
            let v = pair(&g, &f);
            Output::Done(Value::String(v.to_string()), v.to_string())
        }
        Command::Matrix { name, n } => {
            let m = matrix(MatrixName::from_str(&name)?, n);
            let mut text = String::new();
            for (a, row) in m.index.iter().zip(&m.entries) {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                text.push_str(&format!("{:<14} {}\n", a.to_string(), cells.join(" ")));
            }
            Output::Done(json(&*m), text.trim_end().to_string())
        }
        Command::Skew {
            outer,
            inner,
            kind,
            route,
        } => {
            let x = skew_f_expansion(
                &parse_composition(&outer)?,
                &parse_composition(&inner)?,
                parse_kind(&kind)?,
                SkewRoute::from_str(&route)?,
            )?;
            Output::Done(json(&x), x.to_string())
        }
        Command::Hook { shape, l, k, route } => {
            let alpha = parse_composition(&shape)?;
            let p = match route.as_str() {
                "tableaux" => hook_di(&alpha, l, k),
                "fundamental" => hook_fund_expansion(&alpha, l, k),
                _ => return Err(Error::Parse(format!("unknown hook route {route:?}"))),
            };
            Output::Done(json(&p), p.to_string())
        }
        Command::Verify { suite, max_n } => {
            let checks = verify::run(Suite::from_str(&suite)?, max_n);
            let ok = checks.iter().all(|c| c.passed());
            let records: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "identity": c.identity,
                        "range": c.range,
                        "witnesses": c.witnesses,
                        "passed": c.passed(),
                        "failures": c.failures,
                    })
                })
                .collect();
            let mut text = format!(
                "{:4} {:<58} {:<24} {:>6}\n",
                "", "identity", "range", "cases"
            );
            for c in &checks {
                text.push_str(&format!("{c}\n"));
            }
            text.push_str(if ok {
                "all identities verified"
            } else {
                "verification FAILED"
            });
            Output::Verified(Value::Array(records), text, ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, text, ok) = match run(cli.command) {
        Ok(Output::Done(v, t)) => (v, t, true),
        Ok(Output::Verified(v, t, ok)) => (v, t, ok),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Json => println!("{value}"),
        Format::Text => println!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
