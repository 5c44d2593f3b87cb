//! Command-line front end. The `goeritz` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 on success, 1 when the input is invalid or a check fails,
//! 2 on usage and I/O errors.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::colorings::{verify_theorems, CheckRecord, ColoringReport, VerifyOptions, DEFAULT_ENUM_CAP};
use crate::diagram::{Diagram, PlanarDiagram};
use crate::library;
use crate::linalg::{bigint_json, smith_normal_form, FgAbelianGroup};
use crate::shading::{both_shadings, checkerboard_shade, EtaConvention, ShadedDiagram, Shading};

pub const CAP_ENV: &str = "GOERITZ_ENUM_CAP";

#[derive(Parser, Debug)]
#[command(name = "goeritz", version, about = "Fox and Dehn coloring groups of link diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a diagram file describes a planar link diagram.
    Validate {
        /// Built-in diagram name or path to a diagram file.
        input: String,
        #[arg(long)]
        text: bool,
    },
    /// Goeritz matrix, kernel and coloring groups.
    Invariants {
        input: String,
        #[command(flatten)]
        shading: ShadingArgs,
        /// Coefficient group, e.g. `Z`, `Z/5`, `Z^2 + Z/4`.
        #[arg(long, default_value = "Z")]
        group: String,
        /// Moduli for coloring counts; repeat or separate with commas.
        #[arg(long = "mod", value_delimiter = ',')]
        moduli: Vec<u64>,
        #[arg(long)]
        text: bool,
    },
    /// Goeritz matrix with face order, indices, β and the shading.
    Goeritz {
        input: String,
        #[command(flatten)]
        shading: ShadingArgs,
        #[arg(long)]
        text: bool,
    },
    /// Check the structure theorems against enumeration.
    Verify {
        input: Option<String>,
        /// Run on every built-in diagram.
        #[arg(long, conflicts_with = "input")]
        all_examples: bool,
        /// Inclusive range of moduli, `a..b`.
        #[arg(long, default_value = "2..9")]
        mod_range: String,
        #[arg(long, value_enum, default_value = "standard")]
        eta: EtaArg,
        #[arg(long)]
        text: bool,
    },
    /// List or print the built-in diagrams.
    Examples {
        #[arg(long, conflicts_with = "emit", required_unless_present = "emit")]
        list: bool,
        #[arg(long, value_name = "NAME")]
        emit: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct ShadingArgs {
    /// Reference face and its shade as `face:value`; defaults to the
    /// unbounded face unshaded.
    #[arg(long)]
    pub shading: Option<String>,
    /// Orientation of the Goeritz index rule.
    #[arg(long, value_enum, default_value = "standard")]
    pub eta: EtaArg,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum EtaArg {
    Standard,
    Reversed,
}

impl From<EtaArg> for EtaConvention {
    fn from(e: EtaArg) -> Self {
        match e {
            EtaArg::Standard => EtaConvention::Standard,
            EtaArg::Reversed => EtaConvention::Reversed,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } => 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Validate { input, text } => validate(&input, text, out),
        Command::Invariants { input, shading, group, moduli, text } => {
            invariants(&input, &shading, &group, &moduli, text, out)
        }
        Command::Goeritz { input, shading, text } => goeritz(&input, &shading, text, out),
        Command::Verify { input, all_examples, mod_range, eta, text } => {
            verify(input.as_deref(), all_examples, &mod_range, eta.into(), text, out)
        }
        Command::Examples { list, emit } => examples(list, emit.as_deref(), out),
    }
}

/// Resolves a built-in name or a file path to `(label, source)`.
pub fn load_input(input: &str) -> Result<(String, String), CliError> {
    if let Some(e) = library::get(input) {
        return Ok((e.name.to_string(), e.source.to_string()));
    }
    let path = Path::new(input);
    std::fs::read_to_string(path)
        .map(|s| (input.to_string(), s))
        .map_err(|source| CliError::Io { path: input.to_string(), source })
}

fn realize(input: &str) -> Result<(String, PlanarDiagram), CliError> {
    let (label, src) = load_input(input)?;
    let d = Diagram::parse(&src).map_err(|e| CliError::Domain(format!("{label}: {e}")))?;
    let pd = d.realize().map_err(|e| CliError::Domain(format!("{label}: {e}")))?;
    Ok((label, pd))
}

pub fn enumeration_cap() -> Result<u64, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{CAP_ENV} must be an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn pick_shading(pd: &PlanarDiagram, spec: Option<&str>) -> Result<Shading, CliError> {
    let Some(spec) = spec else {
        let [s, _] = both_shadings(pd);
        return Ok(s);
    };
    let bad = || CliError::Usage(format!("shading must look like `face:0` or `face:1`, got `{spec}`"));
    let (f, v) = spec.split_once(':').ok_or_else(bad)?;
    let f: usize = f.trim().parse().map_err(|_| bad())?;
    let v: u8 = v.trim().parse().map_err(|_| bad())?;
    if v > 1 {
        return Err(bad());
    }
    checkerboard_shade(pd, f, v).map_err(|e| CliError::Usage(e.to_string()))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{s}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn emit_text(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn validate(input: &str, text: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let (label, src) = load_input(input)?;
    let (ok, value, summary) = match Diagram::parse(&src) {
        Err(e) => {
            let v = json!({
                "ok": false,
                "errors": [{ "code": e.code(), "message": e.to_string(), "location": label }],
                "pieces": [],
            });
            (false, v, format!("{label}: {} {e}\n", e.code()))
        }
        Ok(d) => {
            let r = d.validate();
            let mut summary = String::new();
            if r.ok {
                for p in &r.pieces {
                    summary += &format!("piece {}: V={} E={} F={}\n", p.name, p.vertices, p.edges, p.faces);
                }
                summary += &format!("{label}: ok\n");
            } else {
                for e in &r.errors {
                    summary += &format!("{label}: {} at {}: {}\n", e.code, e.location, e.message);
                }
            }
            (r.ok, serde_json::to_value(&r).expect("serializable"), summary)
        }
    };
    if text {
        emit_text(out, &summary)?;
    } else {
        emit_json(out, &value)?;
    }
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct InvariantsOutput {
    diagram: String,
    crossings: usize,
    faces: usize,
    arcs: usize,
    components: usize,
    eta_convention: EtaConvention,
    shading: Shading,
    goeritz: crate::shading::GoeritzReport,
    snf: serde_json::Value,
    #[serde(flatten)]
    colorings: ColoringReport,
}

fn invariants(
    input: &str,
    shading: &ShadingArgs,
    group: &str,
    moduli: &[u64],
    text: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let coeffs: FgAbelianGroup = group.parse().map_err(|e| CliError::Usage(format!("bad group `{group}`: {e}")))?;
    if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
        return Err(CliError::Usage(format!("moduli must be at least 2, got {m}")));
    }
    let cap = enumeration_cap()?;
    let (label, pd) = realize(input)?;
    let s = pick_shading(&pd, shading.shading.as_deref())?;
    let sd = ShadedDiagram::new(&pd, s.clone()).with_convention(shading.eta.into());
    let goeritz = sd.report();
    let snf = smith_normal_form(&goeritz.matrix);
    let mut moduli = moduli.to_vec();
    moduli.sort_unstable();
    moduli.dedup();
    let report = InvariantsOutput {
        diagram: label,
        crossings: pd.crossing_count(),
        faces: pd.face_count(),
        arcs: pd.arc_count(),
        components: pd.component_count(),
        eta_convention: sd.convention(),
        shading: s,
        snf: json!({ "diag": snf.diag().iter().map(bigint_json).collect::<Vec<_>>(), "rank": snf.rank() }),
        colorings: ColoringReport::new(&sd, &coeffs, &moduli, cap),
        goeritz,
    };
    if text {
        let r = &report;
        let mut t = format!(
            "{}: crossings {}, faces {}, arcs {}, components {}\n",
            r.diagram, r.crossings, r.faces, r.arcs, r.components
        );
        t += &format!("unshaded faces {:?}, beta {}\n", r.goeritz.face_order, r.goeritz.beta);
        t += &format!("G =\n{}", r.goeritz.matrix);
        t += &format!("kernel over {}: {}\n", r.colorings.coefficients, r.colorings.kernel);
        t += &format!("Fox group:  {}\n", r.colorings.fox_group);
        t += &format!("Dehn group: {}\n", r.colorings.dehn_group);
        for (m, c) in &r.colorings.counts {
            let fe = c.fox_enumerated.map_or("-".to_string(), |x| x.to_string());
            let de = c.dehn_enumerated.map_or("-".to_string(), |x| x.to_string());
            t += &format!("mod {m}: |ker| {} |F| {} ({fe}) |D| {} ({de})\n", c.kernel, c.fox, c.dehn);
        }
        emit_text(out, &t)?;
    } else {
        emit_json(out, &report)?;
    }
    Ok(0)
}

fn goeritz(input: &str, shading: &ShadingArgs, text: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let (_, pd) = realize(input)?;
    let s = pick_shading(&pd, shading.shading.as_deref())?;
    let r = ShadedDiagram::new(&pd, s).with_convention(shading.eta.into()).report();
    if text {
        let t = format!("faces {:?}\neta {:?}\nbeta {}\n{}", r.face_order, r.eta, r.beta, r.matrix);
        emit_text(out, &t)?;
    } else {
        emit_json(out, &r)?;
    }
    Ok(0)
}

pub fn parse_mod_range(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Usage(format!("mod range must look like `2..9`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || b < a {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

/// Golden Goeritz matrix check for library entries that carry one.
pub fn golden_record(entry: &library::LibraryEntry, pd: &PlanarDiagram, eta: EtaConvention) -> Option<CheckRecord> {
    let want = entry.golden_matrix()?;
    let [s, _] = both_shadings(pd);
    let got = ShadedDiagram::new(pd, s).with_convention(eta).goeritz_matrix().matrix;
    let fmt = |m: &crate::linalg::IntMatrix| serde_json::to_string(m).expect("serializable");
    let (expected, actual) = (fmt(&want), fmt(&got));
    Some(CheckRecord {
        diagram: entry.name.to_string(),
        check: "golden_matrix".into(),
        m: None,
        shading: "s".into(),
        pass: expected == actual,
        expected,
        actual,
    })
}

fn verify(
    input: Option<&str>,
    all: bool,
    mod_range: &str,
    eta: EtaConvention,
    text: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let moduli = parse_mod_range(mod_range)?;
    let opts = VerifyOptions { moduli, cap: enumeration_cap()?, convention: eta };
    let mut targets: Vec<(String, PlanarDiagram, Option<&library::LibraryEntry>)> = Vec::new();
    if all {
        for e in library::LIBRARY {
            targets.push((e.name.to_string(), e.diagram().realize().expect("library diagrams are valid"), Some(e)));
        }
    } else {
        let input = input.ok_or_else(|| CliError::Usage("give a diagram or --all-examples".into()))?;
        let (label, pd) = realize(input)?;
        targets.push((label, pd, library::get(input)));
    }

    let mut records: Vec<CheckRecord> = targets
        .par_iter()
        .flat_map_iter(|(label, pd, entry)| {
            let mut recs = verify_theorems(label, pd, &opts);
            recs.extend(entry.and_then(|e| golden_record(e, pd, eta)));
            recs
        })
        .collect();
    records.sort();
    let failed = records.iter().filter(|r| !r.pass).count();

    if text {
        let mut t = String::new();
        for r in &records {
            let m = r.m.map_or("-".to_string(), |m| m.to_string());
            t += &format!(
                "{} {} {} m={} {} expected={} actual={}\n",
                if r.pass { "PASS" } else { "FAIL" },
                r.diagram,
                r.check,
                m,
                r.shading,
                r.expected,
                r.actual
            );
        }
        t += &format!("{} checks, {} failed\n", records.len(), failed);
        emit_text(out, &t)?;
    } else {
        let v = json!({
            "records": records,
            "total": records.len(),
            "failed": failed,
            "all_pass": failed == 0,
        });
        emit_json(out, &v)?;
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn examples(list: bool, emit: Option<&str>, out: &mut dyn Write) -> Result<i32, CliError> {
    if list {
        let mut t = String::new();
        for e in library::LIBRARY {
            t += &format!("{}\t{}\n", e.name, e.description);
        }
        emit_text(out, &t)?;
        return Ok(0);
    }
    let name = emit.expect("clap requires --list or --emit");
    let e = library::get(name).ok_or_else(|| {
        CliError::Usage(format!("unknown example `{name}`; known: {}", library::names().collect::<Vec<_>>().join(", ")))
    })?;
    emit_text(out, &e.diagram().to_source())?;
    Ok(0)
}
