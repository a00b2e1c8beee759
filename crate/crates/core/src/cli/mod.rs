//! Command-line front end: input schema, analyses, and output rendering.

mod input;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use input::{parse, to_json, FlatDoc, GeneralDoc, IncidenceDoc, InputDocument, IntValue, ParseError, PlanarDoc, RatValue, VertexDoc};
pub use report::{
    analysis_text, analyze_general, analyze_planar, basis_json, fan_json, fan_text, tables, validation_json, validation_text, Analysis,
    AnalyzeOptions, Route, Status, Tables,
};

use crate::fanbuild::{build_fan, triangulate, Fan, Triangulation, TriangulationOrder};
use crate::framework::{validate_general, validate_planar, PlanarFramework};

#[derive(Debug, Parser)]
#[command(name = "tensegrity", version, about = "Exact self-stress spaces of rational tensegrity frameworks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Tsv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OrderArg {
    #[default]
    Lex,
    Revlex,
}

impl From<OrderArg> for TriangulationOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => TriangulationOrder::Lex,
            OrderArg::Revlex => TriangulationOrder::RevLex,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate, compute the self-stress space by both routes and compare them.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include multiplicity and intersection tables (planar input).
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value = "lex")]
        triangulation_order: OrderArg,
    },
    /// Dump the fan of a planar framework.
    Fan {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "lex")]
        triangulation_order: OrderArg,
    },
    /// Multiplicity and intersection tables of a planar framework's fan.
    Table {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, value_enum, default_value = "lex")]
        triangulation_order: OrderArg,
    },
    /// Validate only.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn load(path: &PathBuf, err: &mut dyn Write) -> Option<InputDocument> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return None;
        }
    };
    match parse(&text) {
        Ok(d) => Some(d),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            None
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage as i32 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(s) => s as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Status::Usage as i32
        }
    }
}

fn unsupported(err: &mut dyn Write, what: &str, format: Format) -> crate::Result<Status> {
    let _ = writeln!(err, "error: {what} does not support --format {}", format.to_possible_value().map_or("?".into(), |v| v.get_name().to_string()));
    Ok(Status::Usage)
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<Status> {
    let emit = |out: &mut dyn Write, s: String| {
        let _ = out.write_all(s.as_bytes());
    };
    match cmd {
        Command::Analyze { file, route, format, table, triangulation_order } => {
            if !matches!(format, Format::Json | Format::Text) {
                return unsupported(err, "analyze", format);
            }
            let Some(doc) = load(&file, err) else { return Ok(Status::Usage) };
            let route = match route {
                RouteArg::A => Route::A,
                RouteArg::B => Route::B,
                RouteArg::Both => Route::Both,
            };
            let opts = AnalyzeOptions { route, order: triangulation_order.into(), tables: table };
            let a = match doc {
                InputDocument::Planar(p) => analyze_planar(&p.to_framework()?, opts)?,
                InputDocument::General(g) => analyze_general(&g.to_framework()?, opts)?,
            };
            emit(out, if format == Format::Json { pretty(&a.json) } else { analysis_text(&a.json) });
            Ok(a.status)
        }
        Command::Fan { file, format, triangulation_order } => {
            if !matches!(format, Format::Json | Format::Text) {
                return unsupported(err, "fan", format);
            }
            let (fw, t, fan) = match planar_fan(&file, triangulation_order.into(), err)? {
                Loaded::Ready(ready) => *ready,
                Loaded::Failed(s) => return Ok(s),
            };
            let v = fan_json(&fw, &t, &fan, triangulation_order.into())?;
            emit(out, if format == Format::Json { pretty(&v) } else { fan_text(&v) });
            Ok(Status::Ok)
        }
        Command::Table { file, format, triangulation_order } => {
            if format == Format::Text {
                return unsupported(err, "table", format);
            }
            let fan = match planar_fan(&file, triangulation_order.into(), err)? {
                Loaded::Ready(ready) => ready.2,
                Loaded::Failed(s) => return Ok(s),
            };
            let t = tables(&fan)?;
            emit(
                out,
                match format {
                    Format::Json => pretty(&t.to_json()),
                    Format::Md => t.to_markdown(),
                    _ => t.to_tsv(),
                },
            );
            Ok(Status::Ok)
        }
        Command::Check { file, format } => {
            if !matches!(format, Format::Json | Format::Text) {
                return unsupported(err, "check", format);
            }
            let Some(doc) = load(&file, err) else { return Ok(Status::Usage) };
            let report = match doc {
                InputDocument::Planar(p) => validate_planar(&p.to_framework()?),
                InputDocument::General(g) => validate_general(&g.to_framework()?),
            };
            emit(out, if format == Format::Json { pretty(&validation_json(&report)) } else { validation_text(&report) });
            Ok(if report.is_valid() { Status::Ok } else { Status::Invalid })
        }
    }
}

enum Loaded {
    Ready(Box<(PlanarFramework, Triangulation, Fan)>),
    Failed(Status),
}

/// Loads a planar file and builds its fan, reporting any failure on `err`.
fn planar_fan(file: &PathBuf, order: TriangulationOrder, err: &mut dyn Write) -> crate::Result<Loaded> {
    let Some(doc) = load(file, err) else { return Ok(Loaded::Failed(Status::Usage)) };
    let InputDocument::Planar(p) = doc else {
        let _ = writeln!(err, "error: fans and tables need a planar framework");
        return Ok(Loaded::Failed(Status::Usage));
    };
    let fw = p.to_framework()?;
    let v = validate_planar(&fw);
    if !v.is_valid() {
        let _ = write!(err, "{}", validation_text(&v));
        return Ok(Loaded::Failed(Status::Invalid));
    }
    match triangulate(&fw, order).and_then(|t| build_fan(&fw, &t).map(|f| (t, f))) {
        Ok((t, fan)) => Ok(Loaded::Ready(Box::new((fw, t, fan)))),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Ok(Loaded::Failed(Status::Invalid))
        }
    }
}
