mod error;
mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use tropigusa::igusa::{igusa_from_quintic, trop_igusa, IgusaInvariants, TropIgusa};
use tropigusa::metgraph::{graph_jacobian, subdivide};
use tropigusa::redtype::{classify_with, epsilon, thickness, w_table, ReductionVerdict, WTable};
use tropigusa::torsion::{elliptic_trop, genus2_trop, nonzero_slope_scan, reflection_symmetric};
use tropigusa::tropfun::breakpoints_csv;
use tropigusa::valfield::ValuedField;
use tropigusa::BigRational;

use error::CliError;
use input::{CurveInput, CycleInput, Genus2Input, GraphInput, ScanInput};

/// Reduction types, skeletons and torsion tropicalizations of genus-2 curves.
#[derive(Parser)]
#[command(name = "tropigusa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Igusa invariants of a curve and their valuations.
    Invariants(Common),
    /// Reduction type from the tropical Igusa invariants.
    Classify(Common),
    /// Thicknesses, component group and dual graph.
    Skeleton(Common),
    /// Jacobian of a metric graph.
    Graphjac(Common),
    /// Tropicalization of a Tate curve by torsion functions.
    Tropcycle(Common),
    /// Genus-2 3-torsion functions F and G on the first cycle.
    Tropgenus2(Common),
    /// Nonzero-slope check over all 3-torsion configurations.
    Scan(Common),
}

#[derive(Args)]
struct Common {
    /// JSON input document.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Directory for report.json and the DOT/CSV artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// What to print on stdout.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Subdivision unit for graph computations, e.g. 1/2.
    #[arg(long)]
    unit: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

/// What a command produced: the JSON report plus optional DOT and CSV text.
struct Output {
    report: Value,
    dot: Option<(&'static str, String)>,
    csv: Option<(&'static str, String)>,
}

impl Output {
    fn json(report: Value) -> Self {
        Output {
            report,
            dot: None,
            csv: None,
        }
    }
}

fn require(path: &Option<PathBuf>) -> Result<&Path, CliError> {
    path.as_deref()
        .ok_or_else(|| CliError::input("input.missing", "--input <path> is required"))
}

fn unit(c: &Common) -> Result<Option<BigRational>, CliError> {
    c.unit
        .as_deref()
        .map(|s| {
            let u = input::parse_rational(s)
                .map_err(|_| CliError::input("input.unit", format!("bad unit {s:?}")))?;
            if u <= BigRational::from_integer(0.into()) {
                return Err(CliError::input("input.unit", "unit must be positive"));
            }
            Ok(u)
        })
        .transpose()
}

struct Curve {
    field: ValuedField,
    j: IgusaInvariants,
    tv: TropIgusa,
    w: WTable,
    verdict: Option<ReductionVerdict>,
    eps: i64,
}

fn curve(c: &Common, classify: bool) -> Result<Curve, CliError> {
    let doc: CurveInput = input::read(require(&c.input)?)?;
    let field = doc.field.field()?;
    let model = doc.model(&field)?;
    let j = igusa_from_quintic(&model)?;
    let tv = trop_igusa(&j, &field);
    let eps = epsilon(field.residue_char());
    let w = w_table(&tv, eps);
    let verdict = if classify {
        Some(classify_with(&w, doc.reading.into())?)
    } else {
        None
    };
    Ok(Curve {
        field,
        j,
        tv,
        w,
        verdict,
        eps: eps.value(),
    })
}

fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Invariants(c) => {
            let k = curve(c, false)?;
            Ok(Output::json(report::invariants(&k.field, &k.j, &k.tv)))
        }
        Command::Classify(c) => {
            let k = curve(c, true)?;
            let v = k.verdict.as_ref().expect("classified");
            Ok(Output::json(Value::Object(report::verdict(
                &k.field, v, &k.w, &k.tv, k.eps,
            ))))
        }
        Command::Skeleton(c) => {
            let k = curve(c, true)?;
            let v = k.verdict.as_ref().expect("classified");
            let sk = thickness(v, &k.tv, epsilon(k.field.residue_char()))?;
            let u = unit(c)?.unwrap_or_else(|| sk.dual_graph.default_unit());
            let jac = graph_jacobian(&sk.dual_graph, Some(&u))?;
            let dot = if c.unit.is_some() {
                subdivide(&sk.dual_graph, &u)?.to_dot()
            } else {
                sk.dual_graph.to_dot()
            };
            let base = report::verdict(&k.field, v, &k.w, &k.tv, k.eps);
            Ok(Output {
                report: report::skeleton(base, &sk, &jac, &u),
                dot: Some(("skeleton.dot", dot)),
                csv: None,
            })
        }
        Command::Graphjac(c) => {
            let doc: GraphInput = input::read(require(&c.input)?)?;
            let g = doc.graph()?;
            let u = unit(c)?.unwrap_or_else(|| g.default_unit());
            let jac = graph_jacobian(&g, Some(&u))?;
            let dot = if c.unit.is_some() {
                subdivide(&g, &u)?.to_dot()
            } else {
                g.to_dot()
            };
            Ok(Output {
                report: report::graphjac(&g, &jac, &u),
                dot: Some(("graph.dot", dot)),
                csv: None,
            })
        }
        Command::Tropcycle(c) => {
            let doc: CycleInput = input::read(require(&c.input)?)?;
            let specs = doc.specs()?;
            let r = elliptic_trop(doc.n, &specs)?;
            let names: Vec<String> = (1..=r.functions.len()).map(|i| format!("f{i}")).collect();
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let csv = breakpoints_csv(&names, &r.functions)?;
            let divisors: Vec<_> = specs.iter().map(|s| s.a.clone()).collect();
            Ok(Output {
                report: report::elliptic(&r, &divisors),
                dot: None,
                csv: Some(("breakpoints.csv", csv)),
            })
        }
        Command::Tropgenus2(c) => {
            let doc: Genus2Input = input::read(require(&c.input)?)?;
            if doc.second.as_ref().is_some_and(|s| s.e2 == 0) {
                return Err(CliError::input(
                    "input.schema",
                    "second.e2 must be positive",
                ));
            }
            let r = genus2_trop(&doc.config()?)?;
            let csv = breakpoints_csv(&["F", "G"], &[r.f.clone(), r.g.clone()])?;
            Ok(Output {
                report: report::genus2(&r, reflection_symmetric(&r)),
                dot: Some(("skeleton.dot", r.f.graph().to_dot())),
                csv: Some(("breakpoints.csv", csv)),
            })
        }
        Command::Scan(c) => {
            let e1_max = match &c.input {
                Some(p) => input::read::<ScanInput>(p)?.e1_max,
                None => 30,
            };
            Ok(Output::json(report::scan(&nonzero_slope_scan(e1_max)?)))
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Invariants(c)
        | Command::Classify(c)
        | Command::Skeleton(c)
        | Command::Graphjac(c)
        | Command::Tropcycle(c)
        | Command::Tropgenus2(c)
        | Command::Scan(c) => c,
    }
}

fn emit(c: &Common, out: Output) -> Result<String, CliError> {
    let json = serde_json::to_string_pretty(&out.report).expect("reports serialize") + "\n";
    if let Some(dir) = &c.out {
        let write = |name: &str, text: &str| {
            std::fs::write(dir.join(name), text).map_err(|e| {
                CliError::input("output.write", format!("{}: {e}", dir.join(name).display()))
            })
        };
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::input("output.write", format!("{}: {e}", dir.display())))?;
        write("report.json", &json)?;
        for (name, text) in out.dot.iter().chain(out.csv.iter()) {
            write(name, text)?;
        }
    }
    let unsupported = |what: &str| {
        CliError::input(
            "input.format_unsupported",
            format!("this command has no {what} output"),
        )
    };
    Ok(match c.format {
        Format::Json => json,
        Format::Dot => out.dot.ok_or_else(|| unsupported("DOT"))?.1,
        Format::Csv => out.csv.ok_or_else(|| unsupported("CSV"))?.1,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::input("input.usage", e.to_string().trim().to_string());
            println!("{}", err.to_json());
            return ExitCode::from(err.exit_status());
        }
    };
    let c = common(&cli.command);
    match run(&cli.command).and_then(|out| emit(c, out)) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            println!("{}", err.to_json());
            eprintln!("error: {err}");
            ExitCode::from(err.exit_status())
        }
    }
}
