use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use strandlab::affine::{enumerate_representatives, expand_orbit, label_diagram, label_to_path, representative_of};
use strandlab::cluster::{cluster_of, is_triangulation, outer_rotation, small_triangulations};
use strandlab::counting;
use strandlab::io::{DocKind, DocumentEnvelope, IoError, Provenance};
use strandlab::render::{self, Format};
use strandlab::strands::{ArcDiagram, Line, StrandDiagram, TwistWord};
use strandlab::typea::{enumerate_sets, is_complete_set, ternary_tree, tree_to_lattice_path};
use thiserror::Error;

mod verify;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Doc(#[from] IoError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

#[derive(Parser)]
#[command(name = "strandlab", version, about = "Exceptional sets, strand diagrams and annulus triangulations")]
struct Cli {
    /// Output ordering; only the canonical order is implemented.
    #[arg(long, global = true, value_enum, default_value = "canonical")]
    seed_order: SeedOrder,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedOrder {
    Canonical,
}

#[derive(Subcommand)]
enum Cmd {
    /// List complete exceptional sets, family representatives or small triangulations.
    Enumerate {
        #[arg(value_enum)]
        what: Target,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long)]
        count_only: bool,
        /// affine: every small member of each class; clusters: group by outer class.
        #[arg(long)]
        families: bool,
    },
    /// Evaluate a closed-form count.
    Count {
        #[arg(long, value_enum)]
        formula: Formula,
        #[arg(short)]
        a: Option<u64>,
        #[arg(short)]
        b: Option<u64>,
        #[arg(short)]
        k: Option<u64>,
        #[arg(short)]
        n: u64,
    },
    /// Apply one of the bijections to documents read from a file (or stdin).
    Map {
        #[arg(value_enum)]
        what: MapSource,
        #[arg(long, value_enum)]
        to: Option<MapTo>,
        /// Input file; `-` or absent reads stdin.
        #[arg(long, alias = "input")]
        from: Option<PathBuf>,
    },
    /// Apply inner and outer Dehn twists to arc diagrams.
    Twist {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        inner: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        outer: i64,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Reduce arc diagrams to their outer-class representative, or expand the class.
    Orbit {
        #[arg(long)]
        expand: bool,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Cross-check enumerations, bijections and the homological oracle.
    Verify {
        #[arg(value_enum)]
        what: verify::Suite,
        #[arg(short)]
        n: usize,
    },
    /// Draw a document as SVG or TikZ.
    Render {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "svg")]
        format: FigFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Typea,
    Affine,
    Clusters,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Table,
    Svg,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigFormat {
    Svg,
    Tikz,
}

impl From<FigFormat> for Format {
    fn from(f: FigFormat) -> Format {
        match f {
            FigFormat::Svg => Format::Svg,
            FigFormat::Tikz => Format::Tikz,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Rothe,
    Catalan,
    Kcatalan,
    Exceptional,
    Affine,
    Clusters,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapSource {
    Typea,
    Affine,
    Cluster,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapTo {
    Tree,
    Path,
    Label,
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Enumerate { .. } => "enumerate",
            Cmd::Count { .. } => "count",
            Cmd::Map { .. } => "map",
            Cmd::Twist { .. } => "twist",
            Cmd::Orbit { .. } => "orbit",
            Cmd::Verify { .. } => "verify",
            Cmd::Render { .. } => "render",
        }
    }
}

struct Ctx {
    args: Vec<String>,
    command: String,
}

impl Ctx {
    fn doc<T: serde::Serialize>(&self, kind: DocKind, payload: &T) -> Result<DocumentEnvelope, CliError> {
        let prov = Provenance { command: self.command.clone(), args: self.args.clone() };
        Ok(DocumentEnvelope::new(kind, payload, prov)?)
    }
}

/// Read one envelope or a JSON array of envelopes.
fn read_docs(path: &Option<PathBuf>) -> Result<Vec<DocumentEnvelope>, CliError> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let v: Value = serde_json::from_str(&text).map_err(IoError::from)?;
    let items = match v {
        Value::Array(items) => items,
        one => vec![one],
    };
    items.into_iter().map(|i| Ok(DocumentEnvelope::parse(&i.to_string())?)).collect()
}

fn json_docs(docs: &[DocumentEnvelope]) -> String {
    let mut s = serde_json::to_string_pretty(docs).expect("values always serialize");
    s.push('\n');
    s
}

/// Arc diagrams may arrive as either arcDiagram or triangulation documents.
fn arc_payload(doc: &DocumentEnvelope) -> Result<ArcDiagram, CliError> {
    match doc.kind {
        DocKind::ArcDiagram | DocKind::Triangulation => Ok(doc.payload(doc.kind)?),
        k => Err(invalid(format!("expected an arc diagram, found {k:?}"))),
    }
}

fn figures(docs: &[DocumentEnvelope], fmt: Format) -> Result<String, CliError> {
    let mut out = String::new();
    for d in docs {
        out.push_str(&render::render(d, fmt)?);
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    Ok(out)
}

fn enumerate(ctx: &Ctx, what: Target, n: usize, format: OutFormat, count_only: bool, families: bool) -> Result<String, CliError> {
    let (docs, rows): (Vec<DocumentEnvelope>, Vec<String>) = match what {
        Target::Typea => {
            let sets = enumerate_sets(n);
            if count_only {
                return Ok(format!("{}\n", sets.len()));
            }
            let rows = sets.iter().map(|s| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
            let docs = sets
                .into_iter()
                .map(|s| ctx.doc(DocKind::StrandDiagram, &StrandDiagram::type_a(n, s)))
                .collect::<Result<_, _>>()?;
            (docs, rows)
        }
        Target::Affine => {
            if n == 0 {
                return Err(CliError::Usage("affine diagrams need n >= 1".into()));
            }
            let reps = enumerate_representatives(n);
            let diagrams: Vec<(usize, ArcDiagram)> = if families {
                reps.iter()
                    .enumerate()
                    .flat_map(|(k, r)| expand_orbit(r).into_iter().map(move |m| (k, m.diagram)))
                    .collect()
            } else {
                reps.iter().enumerate().map(|(k, r)| (k, r.arcs())).collect()
            };
            if count_only {
                return Ok(format!("{}\n", diagrams.len()));
            }
            let rows = diagrams
                .iter()
                .map(|(k, d)| if families { format!("{k}\t{d}") } else { d.to_string() })
                .collect();
            let docs = diagrams.iter().map(|(_, d)| ctx.doc(DocKind::ArcDiagram, d)).collect::<Result<_, _>>()?;
            (docs, rows)
        }
        Target::Clusters => {
            if n == 0 {
                return Err(CliError::Usage("triangulations need n >= 1".into()));
            }
            let ts = small_triangulations(n);
            if count_only {
                return Ok(format!("{}\n", ts.len()));
            }
            let listed: Vec<(usize, ArcDiagram)> = if families {
                let mut seen = std::collections::BTreeSet::new();
                let mut out = Vec::new();
                for t in &ts {
                    if seen.contains(t) {
                        continue;
                    }
                    let class = out.iter().map(|(k, _)| k + 1).max().unwrap_or(0);
                    let mut cur = t.clone();
                    while seen.insert(cur.clone()) {
                        out.push((class, cur.clone()));
                        cur = outer_rotation(&cur);
                    }
                }
                out
            } else {
                ts.into_iter().map(|t| (0, t)).collect()
            };
            let rows = listed
                .iter()
                .map(|(k, t)| {
                    let c = cluster_of(t).map(|c| c.to_string()).unwrap_or_default();
                    if families {
                        format!("{k}\t{t}\t{c}")
                    } else {
                        format!("{t}\t{c}")
                    }
                })
                .collect();
            let docs = listed.iter().map(|(_, t)| ctx.doc(DocKind::Triangulation, t)).collect::<Result<_, _>>()?;
            (docs, rows)
        }
    };
    match format {
        OutFormat::Json => Ok(json_docs(&docs)),
        OutFormat::Table => Ok(rows.iter().map(|r| format!("{r}\n")).collect()),
        OutFormat::Svg => figures(&docs, Format::Svg),
        OutFormat::Tikz => figures(&docs, Format::Tikz),
    }
}

fn need(v: Option<u64>, flag: &str) -> Result<u64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("this formula needs -{flag}")))
}

fn count(formula: Formula, a: Option<u64>, b: Option<u64>, k: Option<u64>, n: u64) -> Result<String, CliError> {
    let v = match formula {
        Formula::Rothe => {
            let a = need(a, "a")?;
            if a == 0 {
                return Err(CliError::Usage("rothe needs a >= 1".into()));
            }
            counting::rothe(a, need(b, "b")?, n)
        }
        Formula::Catalan => counting::catalan(n),
        Formula::Kcatalan => counting::k_catalan(need(k, "k")?, n),
        Formula::Exceptional => counting::exceptional_sets_a(n),
        Formula::Affine | Formula::Clusters if n == 0 => return Err(CliError::Usage("needs n >= 1".into())),
        Formula::Affine => counting::affine_families(n),
        Formula::Clusters => counting::small_triangulations(n),
    };
    Ok(format!("{v}\n"))
}

fn map(ctx: &Ctx, what: MapSource, to: Option<MapTo>, from: &Option<PathBuf>) -> Result<String, CliError> {
    let docs = read_docs(from)?;
    let mut out = Vec::new();
    for doc in &docs {
        match what {
            MapSource::Typea => {
                let d: StrandDiagram = doc.payload(DocKind::StrandDiagram)?;
                let n = d.strands.len();
                if d.line != Line::type_a(n) || !is_complete_set(n, &d.strands) {
                    return Err(invalid("not a complete exceptional set of straight type A"));
                }
                let tree = ternary_tree(n, &d.strands).map_err(invalid)?;
                match to {
                    Some(MapTo::Tree) => out.push(ctx.doc(DocKind::Tree, &tree)?),
                    Some(MapTo::Path) => out.push(ctx.doc(DocKind::Path, &tree_to_lattice_path(&tree))?),
                    _ => return Err(CliError::Usage("map typea needs --to tree or --to path".into())),
                }
            }
            MapSource::Affine => {
                let d = arc_payload(doc)?;
                let (rep, _) = representative_of(&d).map_err(invalid)?;
                let label = label_diagram(&rep).map_err(invalid)?;
                match to {
                    Some(MapTo::Label) => out.push(ctx.doc(DocKind::Label, &label)?),
                    Some(MapTo::Path) => out.push(ctx.doc(DocKind::Path, &label_to_path(&label))?),
                    _ => return Err(CliError::Usage("map affine needs --to label or --to path".into())),
                }
            }
            MapSource::Cluster => {
                if to.is_some() {
                    return Err(CliError::Usage("map cluster takes no --to".into()));
                }
                let t = arc_payload(doc)?;
                if !is_triangulation(&t) {
                    return Err(invalid(format!("{t} is not a triangulation")));
                }
                out.push(ctx.doc(DocKind::Cluster, &cluster_of(&t).map_err(invalid)?)?);
            }
        }
    }
    Ok(json_docs(&out))
}

fn twist(ctx: &Ctx, inner: i64, outer: i64, input: &Option<PathBuf>) -> Result<String, CliError> {
    let w = TwistWord { inner_twists: inner, outer_twists: outer };
    let mut out = Vec::new();
    for doc in read_docs(input)? {
        let d = arc_payload(&doc)?;
        out.push(ctx.doc(doc.kind, &d.apply(w))?);
    }
    Ok(json_docs(&out))
}

fn orbit(ctx: &Ctx, expand: bool, input: &Option<PathBuf>) -> Result<String, CliError> {
    let mut out = Vec::new();
    for doc in read_docs(input)? {
        let d = arc_payload(&doc)?;
        let (rep, _) = representative_of(&d).map_err(invalid)?;
        if expand {
            for m in expand_orbit(&rep) {
                out.push(ctx.doc(DocKind::ArcDiagram, &m.diagram)?);
            }
        } else {
            out.push(ctx.doc(DocKind::ArcDiagram, &rep.arcs())?);
        }
    }
    Ok(json_docs(&out))
}

fn run(cli: Cli, ctx: &Ctx) -> Result<(String, bool), CliError> {
    let SeedOrder::Canonical = cli.seed_order;
    let text = match cli.cmd {
        Cmd::Enumerate { what, n, format, count_only, families } => enumerate(ctx, what, n, format, count_only, families)?,
        Cmd::Count { formula, a, b, k, n } => count(formula, a, b, k, n)?,
        Cmd::Map { what, to, from } => map(ctx, what, to, &from)?,
        Cmd::Twist { inner, outer, input } => twist(ctx, inner, outer, &input)?,
        Cmd::Orbit { expand, input } => orbit(ctx, expand, &input)?,
        Cmd::Verify { what, n } => {
            let report = verify::run(what, n);
            return Ok((report.to_string(), report.ok()));
        }
        Cmd::Render { input, format } => figures(&read_docs(&input)?, format.into())?,
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ctx = Ctx { command: cli.cmd.name().to_string(), args: argv.iter().skip(1).cloned().collect() };
    match run(cli, &ctx) {
        Ok((text, ok)) => {
            let _ = io::stdout().write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
