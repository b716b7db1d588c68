//! Command-line surface for the affine growth diagram library: build,
//! verify, enumerate, count, cross-check, and render.
//!
//! All structured input and output is JSON on the standard streams (files
//! only via `--input`/`--output`), every document carries `"schema": 1`,
//! and the exit code is 0 on success, 1 on a validation error, and 2 when
//! an internal invariant breaks (which is a bug, not bad input).

use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use affine_growth::bijections::{
    embed_rs, fpf_to_osc, knuth_matrix_from_osc, knuth_osc_from_matrix, osc_to_fpf, schensted,
    unembed_rs, BijectionError, FpfInvolution, NatFpfMatrix, OscillatingTableau,
    SemistandardOscTableau,
};
use affine_growth::hive::{build_hive_n, count_via_hives, count_via_kostka, Hive3, HiveError};
use affine_growth::staircase::{
    count_paths, enumerate_diagrams, AffineGrowthDiagram, DiagramError, DiagramType, MinusculePath,
};
use affine_growth::tableaux::{dual_promotion, promotion, Tableau};
use affine_growth::weights::{GlWeight, Int, Partition};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "agd",
    version,
    about = "Affine growth diagrams: fill, verify, enumerate, count, and convert"
)]
struct Cli {
    /// Read JSON input from a file instead of standard input.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Fill the staircase below a minuscule path.
    ///
    /// Input: {"schema":1,"m":M,"type":"f1,d1,...","weights":[[..],..]}
    /// with n+1 dominant weights of rank M from zero back to zero.
    Fill,

    /// Check every structural invariant of a diagram and list violations.
    ///
    /// Input: a diagram document as produced by `fill`. Exit 0 when valid,
    /// 1 otherwise; the report goes to standard output either way.
    Verify,

    /// List every affine growth diagram of a type.
    Enumerate {
        /// Period of minuscule labels, e.g. f1,f1,d1,d1 for two boxes up
        /// and two dual boxes down.
        #[arg(long = "type", value_name = "LABELS")]
        ty: String,

        /// Rank of the weights; defaults to the smallest rank the labels
        /// allow.
        #[arg(long)]
        m: Option<usize>,
    },

    /// Count diagrams of a type by one method or cross-check all of them.
    Count {
        /// Period of minuscule labels, e.g. f1,f1,d1,d1.
        #[arg(long = "type", value_name = "LABELS")]
        ty: String,

        /// Rank of the weights; defaults to the smallest rank the labels
        /// allow.
        #[arg(long)]
        m: Option<usize>,

        /// Counting method; `all` runs every method and demands agreement.
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
    },

    /// Build the n-hive over a minuscule path (input as for `fill`).
    Hive,

    /// Marked squares of a diagram, with the affine window when the marks
    /// form a permutation (input: a diagram document).
    Marks,

    /// Insertion and recording tableaux of a permutation plus its
    /// fixed-point-free shadow.  A window like 546213 that is already an
    /// embedded involution reports the data of its preimage.
    Rs {
        /// One-line permutation: digits like 546213, or comma-separated.
        perm: String,
    },

    /// Convert between oscillating tableaux and fixed-point-free
    /// involutions; the direction is read off the input keys.
    ///
    /// Input: {"schema":1,"oscillating":[[..],..]} or
    /// {"schema":1,"involution":[..]}.
    Osc,

    /// Convert between natural fixed-point-free matrices and semistandard
    /// oscillating tableaux.
    ///
    /// Input: {"schema":1,"matrix":[[..],..]} or
    /// {"schema":1,"oscillating":[[..],..]}.
    Knuth {
        /// Rank for the tableau-to-matrix direction; defaults to half the
        /// number of refined steps.
        #[arg(long)]
        m: Option<usize>,
    },

    /// Apply promotion to a rectangular tableau (negative steps apply dual
    /// promotion).  Input: {"schema":1,"rows":[[..],..]}.
    Promote {
        /// Size of the entry alphabet; defaults to the largest entry.
        #[arg(long)]
        n: Option<Int>,

        /// Number of promotion steps; negative for dual promotion.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        steps: i64,
    },

    /// Render a diagram ("lines" document) or a 3-hive ("rows" document).
    Render {
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Paths,
    Hives,
    Kostka,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

/// How a command failed: bad input exits 1, a broken invariant exits 2.
#[derive(Debug)]
enum Failure {
    Invalid(String),
    Internal(String),
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Invalid(_) => "validation",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(msg) | Failure::Internal(msg) => msg,
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Internal(_) => 2,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

/// Errors surfacing from user-supplied diagrams are validation failures;
/// only the library's own invariant breakage is internal.
fn diagram_failure(e: DiagramError) -> Failure {
    match e {
        DiagramError::Internal(msg) => Failure::Internal(msg),
        other => Failure::Invalid(other.to_string()),
    }
}

fn bijection_failure(e: BijectionError) -> Failure {
    match e {
        BijectionError::Diagram(DiagramError::Internal(msg)) => Failure::Internal(msg),
        other => Failure::Invalid(other.to_string()),
    }
}

enum Rendered {
    Json(Value),
    Text(String),
}

struct Done {
    output: Rendered,
    code: u8,
}

impl Done {
    fn json(value: Value) -> Done {
        Done {
            output: Rendered::Json(value),
            code: 0,
        }
    }

    fn text(text: String) -> Done {
        Done {
            output: Rendered::Text(text),
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here with use_stderr() false.
            if !e.use_stderr() {
                // A reader hanging up (e.g. `agd --help | head`) is fine.
                let _ = io::stdout().write_all(e.to_string().as_bytes());
                return ExitCode::SUCCESS;
            }
            let diag = json!({"schema": 1, "error": e.to_string(), "kind": "usage"});
            eprintln!("{diag}");
            return ExitCode::from(1);
        }
    };
    let output = cli.output.clone();
    match run(&cli) {
        Ok(done) => {
            if let Err(e) = emit(&output, &done.output) {
                eprintln!("{}", json!({"schema": 1, "error": e, "kind": "io"}));
                return ExitCode::from(1);
            }
            ExitCode::from(done.code)
        }
        Err(failure) => {
            let diag = json!({
                "schema": 1,
                "error": failure.message(),
                "kind": failure.kind(),
            });
            eprintln!("{diag}");
            ExitCode::from(failure.code())
        }
    }
}

fn emit(target: &Option<PathBuf>, rendered: &Rendered) -> Result<(), String> {
    let text = match rendered {
        Rendered::Json(value) => format!("{value}\n"),
        Rendered::Text(text) => text.clone(),
    };
    match target {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => match io::stdout().write_all(text.as_bytes()) {
            // A reader hanging up mid-stream is not our error.
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                Err(format!("cannot write standard output: {e}"))
            }
            _ => Ok(()),
        },
    }
}

fn run(cli: &Cli) -> Result<Done, Failure> {
    match &cli.verb {
        Verb::Fill => fill(cli),
        Verb::Verify => verify(cli),
        Verb::Enumerate { ty, m } => enumerate(ty, *m),
        Verb::Count { ty, m, method } => count(ty, *m, *method),
        Verb::Hive => hive(cli),
        Verb::Marks => marks(cli),
        Verb::Rs { perm } => rs(perm),
        Verb::Osc => osc(cli),
        Verb::Knuth { m } => knuth(cli, *m),
        Verb::Promote { n, steps } => promote(cli, *n, *steps),
        Verb::Render { format } => render(cli, *format),
    }
}

// ---------- input plumbing ----------

fn read_input(cli: &Cli) -> Result<String, Failure> {
    match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut raw = String::new();
            io::stdin()
                .read_to_string(&mut raw)
                .map_err(|e| Failure::Invalid(format!("cannot read standard input: {e}")))?;
            Ok(raw)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(raw: &str) -> Result<T, Failure> {
    serde_json::from_str(raw).map_err(|e| Failure::Invalid(format!("bad JSON input: {e}")))
}

fn check_schema(schema: u32) -> Result<(), Failure> {
    if schema == 1 {
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "unsupported schema {schema}, expected 1"
        )))
    }
}

fn check_schema_value(v: &Value) -> Result<(), Failure> {
    match v.get("schema").and_then(Value::as_u64) {
        Some(1) => Ok(()),
        Some(s) => Err(Failure::Invalid(format!("unsupported schema {s}, expected 1"))),
        None => Err(Failure::Invalid("missing \"schema\" field".into())),
    }
}

// ---------- shared documents ----------

/// A minuscule path: the type plus its n+1 dominant weights.
#[derive(Serialize, Deserialize)]
struct PathDoc {
    schema: u32,
    m: usize,
    #[serde(rename = "type")]
    ty: String,
    weights: Vec<Vec<Int>>,
}

/// One period of a diagram: lines 1..=n, each of n+1 weights.
#[derive(Serialize, Deserialize)]
struct DiagramDoc {
    schema: u32,
    m: usize,
    #[serde(rename = "type")]
    ty: String,
    lines: Vec<Vec<Vec<Int>>>,
}

fn parse_type(spec: &str, m: Option<usize>) -> Result<DiagramType, Failure> {
    let m = match m {
        Some(m) => m,
        // Smallest rank the labels allow: parse once with no rank bound
        // just to read off the largest column height.
        None => DiagramType::parse(spec, usize::MAX)
            .map_err(invalid)?
            .labels()
            .iter()
            .map(|l| l.j())
            .max()
            .unwrap_or(1),
    };
    DiagramType::parse(spec, m).map_err(invalid)
}

fn type_spec(ty: &DiagramType) -> String {
    ty.labels()
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn weights_from(raw: Vec<Vec<Int>>) -> Result<Vec<GlWeight>, Failure> {
    raw.into_iter()
        .map(|entries| GlWeight::new(entries).map_err(invalid))
        .collect()
}

fn path_from_doc(doc: PathDoc) -> Result<MinusculePath, Failure> {
    check_schema(doc.schema)?;
    let ty = parse_type(&doc.ty, Some(doc.m))?;
    MinusculePath::new(ty, weights_from(doc.weights)?).map_err(invalid)
}

fn diagram_from_doc(doc: DiagramDoc) -> Result<AffineGrowthDiagram, Failure> {
    check_schema(doc.schema)?;
    let ty = parse_type(&doc.ty, Some(doc.m))?;
    let lines = doc
        .lines
        .into_iter()
        .map(weights_from)
        .collect::<Result<Vec<_>, _>>()?;
    // The constructor validates; whatever it rejects was bad input here.
    AffineGrowthDiagram::from_lines(ty, lines).map_err(invalid)
}

fn diagram_to_doc(d: &AffineGrowthDiagram) -> DiagramDoc {
    DiagramDoc {
        schema: 1,
        m: d.m(),
        ty: type_spec(d.ty()),
        lines: (1..=d.n() as i64)
            .map(|l| d.line(l).iter().map(|w| w.entries().to_vec()).collect())
            .collect(),
    }
}

fn diagram_value(d: &AffineGrowthDiagram) -> Value {
    serde_json::to_value(diagram_to_doc(d)).expect("diagram documents serialize")
}

// ---------- verbs ----------

fn fill(cli: &Cli) -> Result<Done, Failure> {
    let doc: PathDoc = parse_json(&read_input(cli)?)?;
    let path = path_from_doc(doc)?;
    // The path is validated, so the local rule must close the period;
    // anything it reports now is a bug.
    let d = AffineGrowthDiagram::fill_from_path(&path)
        .map_err(|e| Failure::Internal(format!("local rule failed on a valid path: {e}")))?;
    Ok(Done::json(diagram_value(&d)))
}

fn verify(cli: &Cli) -> Result<Done, Failure> {
    let doc: DiagramDoc = parse_json(&read_input(cli)?)?;
    check_schema(doc.schema)?;
    let ty = parse_type(&doc.ty, Some(doc.m))?;
    // Deserialize through the library types without the validating
    // constructor so every violation is reported, not just the first.
    let unchecked = json!({ "ty": ty, "lines": doc.lines });
    let d: AffineGrowthDiagram = serde_json::from_value(unchecked)
        .map_err(|e| Failure::Invalid(format!("bad diagram lines: {e}")))?;
    let violations = d.verify();
    let ok = violations.is_empty();
    let report = json!({"schema": 1, "ok": ok, "violations": violations});
    Ok(Done {
        output: Rendered::Json(report),
        code: if ok { 0 } else { 1 },
    })
}

fn enumerate(spec: &str, m: Option<usize>) -> Result<Done, Failure> {
    let ty = parse_type(spec, m)?;
    let diagrams = enumerate_diagrams(&ty).map_err(diagram_failure)?;
    Ok(Done::json(json!({
        "schema": 1,
        "type": type_spec(&ty),
        "m": ty.m(),
        "count": diagrams.len(),
        "diagrams": diagrams.iter().map(diagram_value).collect::<Vec<_>>(),
    })))
}

fn count(spec: &str, m: Option<usize>, method: Method) -> Result<Done, Failure> {
    let ty = parse_type(spec, m)?;
    let picked: &[(&str, fn(&DiagramType) -> u64)] = match method {
        Method::Paths => &[("paths", count_paths)],
        Method::Hives => &[("hives", count_via_hives)],
        Method::Kostka => &[("kostka", count_via_kostka)],
        Method::All => &[
            ("paths", count_paths),
            ("hives", count_via_hives),
            ("kostka", count_via_kostka),
        ],
    };
    let counts: Vec<(&str, u64)> = picked.iter().map(|&(name, f)| (name, f(&ty))).collect();
    if counts.windows(2).any(|w| w[0].1 != w[1].1) {
        let report: Vec<String> = counts.iter().map(|(n, c)| format!("{n}={c}")).collect();
        return Err(Failure::Internal(format!(
            "counting methods disagree on type {}: {}",
            type_spec(&ty),
            report.join(", ")
        )));
    }
    let table: serde_json::Map<String, Value> = counts
        .iter()
        .map(|&(name, c)| (name.to_string(), json!(c)))
        .collect();
    Ok(Done::json(json!({
        "schema": 1,
        "type": type_spec(&ty),
        "m": ty.m(),
        "counts": table,
        "agreement": true,
    })))
}

fn hive(cli: &Cli) -> Result<Done, Failure> {
    let doc: PathDoc = parse_json(&read_input(cli)?)?;
    let path = path_from_doc(doc)?;
    let h = build_hive_n(&path).map_err(|e| match e {
        HiveError::TooFewCorners => invalid(e),
        other => Failure::Internal(format!("hive excavation failed on a valid path: {other}")),
    })?;
    Ok(Done::json(json!({
        "schema": 1,
        "n": h.n(),
        "m": h.m(),
        "values": h.entries(),
    })))
}

fn marks(cli: &Cli) -> Result<Done, Failure> {
    let doc: DiagramDoc = parse_json(&read_input(cli)?)?;
    let d = diagram_from_doc(doc)?;
    let marks = d.marks().map_err(diagram_failure)?;
    let mut out = json!({"schema": 1, "marks": marks});
    // The window only exists when every row carries a single mark.
    if let Ok(f) = d.affine_permutation() {
        out["window"] = json!(f.window());
    }
    Ok(Done::json(out))
}

fn parse_perm(s: &str) -> Result<Vec<usize>, Failure> {
    let vals: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Invalid(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Failure::Invalid(format!("bad permutation digit {ch:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let n = vals.len();
    let mut seen = vec![false; n + 1];
    for &v in &vals {
        if v == 0 || v > n || seen[v] {
            return Err(Failure::Invalid(format!("not a permutation of 1..={n}")));
        }
        seen[v] = true;
    }
    if n == 0 {
        return Err(Failure::Invalid("empty permutation".into()));
    }
    Ok(vals)
}

fn rs(arg: &str) -> Result<Done, Failure> {
    let perm = parse_perm(arg)?;
    // A window that is already an embedded fixed-point-free involution
    // reports its preimage; any other permutation is embedded first.
    let (sigma, pi) = match FpfInvolution::new(perm.clone()).ok().and_then(|pi| {
        unembed_rs(&pi).ok().map(|sigma| (sigma, pi))
    }) {
        Some(found) => found,
        None => {
            let pi = embed_rs(&perm).map_err(bijection_failure)?;
            (perm, pi)
        }
    };
    let (p, q) = schensted(&sigma).map_err(bijection_failure)?;
    Ok(Done::json(json!({
        "schema": 1,
        "sigma": sigma,
        "p": p,
        "q": q,
        "involution": pi.as_slice(),
        "window": pi.window(),
    })))
}

fn partitions_from(v: &Value) -> Result<Vec<Partition>, Failure> {
    let raw: Vec<Vec<Int>> = serde_json::from_value(v.clone())
        .map_err(|e| Failure::Invalid(format!("bad partition list: {e}")))?;
    raw.into_iter()
        .map(|parts| Partition::new(parts).map_err(invalid))
        .collect()
}

fn parts_value(parts: &[Partition]) -> Value {
    json!(parts
        .iter()
        .map(|p| p.parts().to_vec())
        .collect::<Vec<_>>())
}

fn osc(cli: &Cli) -> Result<Done, Failure> {
    let v: Value = parse_json(&read_input(cli)?)?;
    check_schema_value(&v)?;
    if let Some(stages) = v.get("oscillating") {
        let osc = OscillatingTableau::new(partitions_from(stages)?).map_err(invalid)?;
        let pi = osc_to_fpf(&osc).map_err(bijection_failure)?;
        Ok(Done::json(json!({
            "schema": 1,
            "involution": pi.as_slice(),
            "window": pi.window(),
        })))
    } else if let Some(map) = v.get("involution") {
        let map: Vec<usize> = serde_json::from_value(map.clone())
            .map_err(|e| Failure::Invalid(format!("bad involution: {e}")))?;
        let pi = FpfInvolution::new(map).map_err(invalid)?;
        let osc = fpf_to_osc(&pi).map_err(bijection_failure)?;
        Ok(Done::json(json!({
            "schema": 1,
            "oscillating": parts_value(osc.parts()),
        })))
    } else {
        Err(Failure::Invalid(
            "expected an \"oscillating\" or \"involution\" field".into(),
        ))
    }
}

fn knuth(cli: &Cli, m: Option<usize>) -> Result<Done, Failure> {
    let v: Value = parse_json(&read_input(cli)?)?;
    check_schema_value(&v)?;
    if let Some(entries) = v.get("matrix") {
        let entries: Vec<Vec<u64>> = serde_json::from_value(entries.clone())
            .map_err(|e| Failure::Invalid(format!("bad matrix: {e}")))?;
        let mat = NatFpfMatrix::new(entries).map_err(invalid)?;
        let osc = knuth_osc_from_matrix(&mat).map_err(bijection_failure)?;
        Ok(Done::json(json!({
            "schema": 1,
            "oscillating": parts_value(osc.parts()),
        })))
    } else if let Some(stages) = v.get("oscillating") {
        let osc = SemistandardOscTableau::new(partitions_from(stages)?).map_err(invalid)?;
        // Half the refined steps is the smallest rank at which every
        // intermediate line of the rebuilt diagram stays two-phase.
        let m = m.unwrap_or_else(|| (osc.refine().0.len() / 2).max(1));
        let mat = knuth_matrix_from_osc(&osc, m).map_err(bijection_failure)?;
        Ok(Done::json(json!({
            "schema": 1,
            "matrix": mat.entries(),
        })))
    } else {
        Err(Failure::Invalid(
            "expected a \"matrix\" or \"oscillating\" field".into(),
        ))
    }
}

#[derive(Deserialize)]
struct TableauDoc {
    schema: u32,
    rows: Tableau,
}

fn promote(cli: &Cli, n: Option<Int>, steps: i64) -> Result<Done, Failure> {
    let doc: TableauDoc = parse_json(&read_input(cli)?)?;
    check_schema(doc.schema)?;
    let top = doc
        .rows
        .rows()
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    let n = n.unwrap_or_else(|| top.max(1));
    if n < top {
        return Err(Failure::Invalid(format!(
            "--n {n} is smaller than the largest entry {top}"
        )));
    }
    let mut t = doc.rows;
    for _ in 0..steps.unsigned_abs() {
        t = if steps >= 0 {
            promotion(&t, n)
        } else {
            dual_promotion(&t, n)
        };
    }
    Ok(Done::json(json!({"schema": 1, "rows": t})))
}

fn render(cli: &Cli, format: Format) -> Result<Done, Failure> {
    let v: Value = parse_json(&read_input(cli)?)?;
    check_schema_value(&v)?;
    if v.get("lines").is_some() {
        let doc: DiagramDoc = serde_json::from_value(v)
            .map_err(|e| Failure::Invalid(format!("bad diagram document: {e}")))?;
        let d = diagram_from_doc(doc)?;
        Ok(match format {
            Format::Json => Done::json(diagram_value(&d)),
            Format::Ascii => Done::text(render_diagram_ascii(&d)),
            Format::Svg => Done::text(render_diagram_svg(&d)),
        })
    } else if let Some(rows) = v.get("rows") {
        let hive: Hive3 = serde_json::from_value(rows.clone())
            .map_err(|e| Failure::Invalid(format!("bad 3-hive: {e}")))?;
        Ok(match format {
            Format::Json => Done::json(json!({"schema": 1, "rows": hive})),
            Format::Ascii => Done::text(render_hive3_ascii(&hive)),
            Format::Svg => Done::text(render_hive3_svg(&hive)),
        })
    } else {
        Err(Failure::Invalid(
            "render expects a diagram (\"lines\") or a 3-hive (\"rows\")".into(),
        ))
    }
}

// ---------- renderers ----------

fn weight_cell(w: &GlWeight) -> String {
    let body: Vec<String> = w.entries().iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(","))
}

/// One period of the staircase, each line shifted one cell right of the
/// one above, closing with line n+1 = line 1.
fn render_diagram_ascii(d: &AffineGrowthDiagram) -> String {
    let n = d.n() as i64;
    let width = (1..=n + 1)
        .flat_map(|l| d.line(l).iter().map(|w| weight_cell(w).len()))
        .max()
        .unwrap_or(2)
        + 2;
    let mut out = format!("type {}  rank {}\n", type_spec(d.ty()), d.m());
    for l in 1..=n + 1 {
        let mut row = format!("line {l:>2}  ");
        row.push_str(&" ".repeat((l - 1) as usize * width));
        for w in d.line(l) {
            let cell = weight_cell(w);
            row.push_str(&format!("{cell:<width$}"));
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

fn render_diagram_svg(d: &AffineGrowthDiagram) -> String {
    let n = d.n() as i64;
    let (sx, sy, margin) = (80i64, 56i64, 40i64);
    let x = |l: i64, c: i64| margin + (l - 1 + c) * sx;
    let y = |l: i64| margin + (l - 1) * sy;
    let width = 2 * margin + 2 * n * sx;
    let height = 2 * margin + n * sy;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"12\">\n"
    );
    for l in 1..=n + 1 {
        for c in 0..=n {
            if c < n {
                svg.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
                    x(l, c),
                    y(l),
                    x(l, c + 1),
                    y(l)
                ));
            }
            // The step down to the next line keeps the staircase column.
            if l <= n && c >= 1 {
                svg.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
                    x(l, c),
                    y(l),
                    x(l + 1, c - 1),
                    y(l + 1)
                ));
            }
        }
    }
    for l in 1..=n + 1 {
        for (c, w) in d.line(l).iter().enumerate() {
            svg.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"white\" \
                 stroke=\"white\" stroke-width=\"6\">{}</text>\n",
                x(l, c as i64),
                y(l) + 4,
                weight_cell(w)
            ));
            svg.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                x(l, c as i64),
                y(l) + 4,
                weight_cell(w)
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn render_hive3_ascii(h: &Hive3) -> String {
    // An even cell width keeps the half-cell shift of successive rows exact.
    let width = h
        .rows()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .next_multiple_of(2)
        + 2;
    let mut out = String::new();
    for (r, row) in h.rows().iter().enumerate() {
        let mut line = " ".repeat(r * width / 2);
        for v in row {
            line.push_str(&format!("{v:<width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_hive3_svg(h: &Hive3) -> String {
    let m = h.m() as i64;
    let (s, margin) = (70i64, 40i64);
    // Row r shrinks by one and shifts half a cell: a triangular lattice.
    let x = |r: i64, t: i64| margin + t * s + r * s / 2;
    let y = |r: i64| margin + r * s;
    let width = 2 * margin + m * s;
    let height = 2 * margin + m * s;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"12\">\n"
    );
    for r in 0..=m {
        let len = m - r;
        for t in 0..=len {
            if t < len {
                svg.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
                    x(r, t),
                    y(r),
                    x(r, t + 1),
                    y(r)
                ));
            }
            if r < m && t < len {
                svg.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
                    x(r, t),
                    y(r),
                    x(r + 1, t),
                    y(r + 1)
                ));
                svg.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
                    x(r, t + 1),
                    y(r),
                    x(r + 1, t),
                    y(r + 1)
                ));
            }
        }
    }
    for (r, row) in h.rows().iter().enumerate() {
        for (t, v) in row.iter().enumerate() {
            svg.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"white\" \
                 stroke=\"white\" stroke-width=\"6\">{v}</text>\n",
                x(r as i64, t as i64),
                y(r as i64) + 4,
            ));
            svg.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{v}</text>\n",
                x(r as i64, t as i64),
                y(r as i64) + 4,
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_parse_as_digits_or_comma_lists() {
        assert_eq!(parse_perm("546213").unwrap(), vec![5, 4, 6, 2, 1, 3]);
        assert_eq!(parse_perm("3,1,2").unwrap(), vec![3, 1, 2]);
        assert_eq!(parse_perm("10,2,3,4,5,6,7,8,9,1").unwrap().len(), 10);
        assert!(parse_perm("122").is_err());
        assert!(parse_perm("1,0").is_err());
        assert!(parse_perm("").is_err());
    }

    #[test]
    fn type_rank_defaults_to_the_tallest_label() {
        assert_eq!(parse_type("f1,d1", None).unwrap().m(), 1);
        assert_eq!(parse_type("f2,f1,d2,d1", None).unwrap().m(), 2);
        assert!(parse_type("f3,d1", Some(2)).is_err());
    }

    #[test]
    fn round_trip_through_the_diagram_document() {
        let ty = parse_type("f1,d1", Some(2)).unwrap();
        for d in enumerate_diagrams(&ty).unwrap() {
            let doc = diagram_to_doc(&d);
            assert_eq!(diagram_from_doc(doc).unwrap(), d);
        }
    }
}
