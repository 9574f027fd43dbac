//! Command-line driver: file formats, subcommands and JSON reports.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 on success,
//! 1 when a verification finds a disagreement, 2 on parse or validation errors.

mod ideal_file;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

pub use ideal_file::{parse_ideal, write_ideal, Syntax};

use crate::cm::{benchmark_cm, cm_report, polarize};
use crate::corpus::{verify_corpus, CorpusSpec};
use crate::distraction::{components, degree_with, distraction_generators, exponent_catalog, is_unmixed};
use crate::error::{Error, Result};
use crate::grading::{generate_generic, GradingMatrix, Parameter};
use crate::ideal::MonomialIdeal;
use crate::oracle::{exceptional_scan, rank_oracle};
use crate::par;
use crate::rank::rank_terms;

#[derive(Parser, Debug)]
#[command(name = "mondist", version, about = "Monomial ideals through their distractions")]
struct Cli {
    /// Worker threads for the parallel loops (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MatrixSource {
    /// Grading matrix file ("d n" then d rows).
    #[arg(long = "A", value_name = "MATRIXFILE")]
    a: Option<PathBuf>,
    /// Generate a generic grading matrix from this seed.
    #[arg(long = "auto-A", value_name = "SEED")]
    auto_a: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible components of the distraction variety.
    Components { file: PathBuf },
    /// Distinct exponent complexes with witness points.
    Catalog { file: PathBuf },
    /// Cohen–Macaulay decision with a witness on failure.
    IsCm {
        file: PathBuf,
        /// Report every failing exponent complex.
        #[arg(long)]
        full: bool,
        /// Include wall-clock time (makes the report nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Degree, Krull dimension and unmixedness.
    Degree { file: PathBuf },
    /// Rank at a parameter via the closed formula.
    Rank {
        file: PathBuf,
        #[command(flatten)]
        matrix: MatrixSource,
        /// Comma-separated rationals, e.g. "3" or "1/2,0".
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Also compute the rank by Buchberger and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Oracle scan for rank jumps at lattice-induced parameters.
    Exceptional {
        file: PathBuf,
        #[command(flatten)]
        matrix: MatrixSource,
    },
    /// Polarization and the f-vector of its Stanley–Reisner complex.
    Polarize {
        file: PathBuf,
        /// Also write the polarized ideal file here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the catalog decision against Reisner's test on the polarization.
    Benchmark { file: PathBuf },
    /// Compare formula, spectral form and oracle on a random corpus.
    Verify {
        /// "n,maxdeg,maxgens,count": up to n variables, exponents up to maxdeg.
        #[arg(long)]
        random: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    seed: u64,
    ideal: Option<Value>,
    inputs: Map<String, Value>,
    results: Value,
    /// Exit 1 when set.
    mismatch: bool,
    stderr: String,
}

impl Report {
    fn new(command: &'static str, seed: u64, ideal: Option<&MonomialIdeal>, results: Value) -> Self {
        Report {
            command,
            seed,
            ideal: ideal.map(ideal_echo),
            inputs: Map::new(),
            results,
            mismatch: false,
            stderr: String::new(),
        }
    }

    fn document(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        if let Some(i) = &self.ideal {
            doc.insert("ideal".into(), i.clone());
        }
        doc.insert("inputs".into(), Value::Object(self.inputs.clone()));
        doc.insert("results".into(), self.results.clone());
        doc.insert(
            "provenance".into(),
            json!({ "tool": "mondist", "version": env!("CARGO_PKG_VERSION"), "seed": self.seed }),
        );
        Value::Object(doc)
    }
}

fn ideal_echo(i: &MonomialIdeal) -> Value {
    json!({
        "vars": i.n_vars(),
        "generators": i.generators(),
        "display": i.to_string(),
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal> {
    parse_ideal(&read(path)?).map_err(|e| Error::Validation(format!("{}: {}", path.display(), inner(&e))))
}

fn inner(e: &Error) -> &str {
    match e {
        Error::Validation(m) | Error::Domain(m) | Error::Internal(m) => m,
    }
}

fn load_matrix(src: &MatrixSource, ideal: &MonomialIdeal) -> Result<GradingMatrix> {
    match (&src.a, src.auto_a) {
        (Some(p), _) => GradingMatrix::parse(&read(p)?)
            .map_err(|e| Error::Validation(format!("{}: {}", p.display(), inner(&e)))),
        (None, Some(seed)) => generate_generic(ideal.n_vars(), ideal.krull_dimension(), seed),
        (None, None) => unreachable!("clap enforces one matrix source"),
    }
}

fn components_cmd(ideal: &MonomialIdeal, seed: u64) -> Report {
    let comps = components(ideal);
    let list: Vec<Value> = comps
        .iter()
        .map(|c| json!({ "sigma": c.sigma, "base": c.base, "dim": c.dim(), "display": c.to_string() }))
        .collect();
    let distraction: Vec<String> = distraction_generators(ideal).iter().map(|g| g.to_string()).collect();
    Report::new(
        "components",
        seed,
        Some(ideal),
        json!({ "count": comps.len(), "components": list, "distraction": distraction }),
    )
}

fn catalog_cmd(ideal: &MonomialIdeal, seed: u64) -> Result<Report> {
    let cat = exponent_catalog(ideal)?;
    let entries: Vec<Value> = cat
        .iter()
        .map(|e| json!({ "facets": e.complex, "dimension": e.complex.dimension(), "witness": e.witness }))
        .collect();
    Ok(Report::new("catalog", seed, Some(ideal), json!({ "size": cat.len(), "entries": entries })))
}

fn is_cm_cmd(ideal: &MonomialIdeal, full: bool, timing: bool, seed: u64) -> Result<Report> {
    let r = cm_report(ideal, full)?;
    let mut res = json!({
        "verdict": r.verdict,
        "d": r.d,
        "catalog_size": r.catalog_size,
        "witness_b": r.witness().map(|w| &w.point),
        "witness_complex": r.witness().map(|w| &w.complex),
        "failure": r.witness().map(|w| &w.failure),
    });
    if full {
        res["witnesses"] = json!(r.witnesses);
    }
    if timing {
        res["seconds"] = json!(r.elapsed.as_secs_f64());
    }
    Ok(Report::new("is-cm", seed, Some(ideal), res))
}

fn degree_cmd(ideal: &MonomialIdeal, seed: u64) -> Report {
    let d = ideal.krull_dimension();
    let deg = degree_with(d, &components(ideal));
    Report::new("degree", seed, Some(ideal), json!({ "degree": deg, "d": d, "unmixed": is_unmixed(ideal) }))
}

fn rank_cmd(ideal: &MonomialIdeal, src: &MatrixSource, beta: &str, oracle: bool, seed: u64) -> Result<Report> {
    let a = load_matrix(src, ideal)?;
    let beta: Parameter = beta.parse()?;
    let terms = rank_terms(ideal, &a, &beta)?;
    let formula: i64 = terms.iter().map(|t| t.rank).sum();
    let mut res = json!({ "formula": formula, "exponents": terms });
    let mut mismatch = false;
    if oracle {
        let o = rank_oracle(ideal, &a, &beta)? as i64;
        res["oracle"] = json!(o);
        res["agree"] = json!(o == formula);
        mismatch = o != formula;
    }
    let mut rep = Report::new("rank", seed, Some(ideal), res);
    rep.inputs.insert("A".into(), json!(a.rows()));
    rep.inputs.insert("beta".into(), json!(beta));
    rep.mismatch = mismatch;
    Ok(rep)
}

fn exceptional_cmd(ideal: &MonomialIdeal, src: &MatrixSource, seed: u64) -> Result<Report> {
    let a = load_matrix(src, ideal)?;
    let scan = exceptional_scan(ideal, &a, seed)?;
    let mut rep = Report::new("exceptional", seed, Some(ideal), json!(scan));
    rep.inputs.insert("A".into(), json!(a.rows()));
    Ok(rep)
}

fn polarize_cmd(ideal: &MonomialIdeal, output: Option<&Path>, seed: u64) -> Result<Report> {
    let p = polarize(ideal)?;
    let names: Vec<String> = (0..p.names.len()).map(|k| p.name(k)).collect();
    let mut text = String::from("# polarization of ");
    text.push_str(&ideal.to_string());
    text.push('\n');
    for (k, name) in names.iter().enumerate() {
        text.push_str(&format!("# x{} = {name}\n", k + 1));
    }
    text.push_str(&write_ideal(&p.ideal, Syntax::Vector));
    if let Some(path) = output {
        std::fs::write(path, &text).map_err(|e| Error::Validation(format!("{}: {e}", path.display())))?;
    }
    let f = p.complex().f_vector();
    Ok(Report::new(
        "polarize",
        seed,
        Some(ideal),
        json!({
            "vars": p.ideal.n_vars(),
            "variables": names,
            "polarized": ideal_echo(&p.ideal),
            "ideal_file": text,
            "f_vector": f,
        }),
    ))
}

fn benchmark_cmd(ideal: &MonomialIdeal, seed: u64) -> Result<Report> {
    let b = benchmark_cm(ideal)?;
    let mut rep = Report::new("benchmark", seed, Some(ideal), json!(b));
    rep.mismatch = !b.agree;
    rep.stderr = b.table();
    Ok(rep)
}

fn verify_cmd(random: &str, seed: u64) -> Result<Report> {
    let spec: CorpusSpec = random.parse()?;
    let r = verify_corpus(&spec, seed)?;
    let mut rep = Report::new(
        "verify",
        seed,
        None,
        json!({ "instances": r.instances, "checks": r.checks, "ok": r.ok(), "mismatches": r.mismatches }),
    );
    rep.inputs.insert("random".into(), json!(spec));
    rep.mismatch = !r.ok();
    Ok(rep)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Components { file } => Ok(components_cmd(&load_ideal(file)?, seed)),
        Command::Catalog { file } => catalog_cmd(&load_ideal(file)?, seed),
        Command::IsCm { file, full, timing } => is_cm_cmd(&load_ideal(file)?, *full, *timing, seed),
        Command::Degree { file } => Ok(degree_cmd(&load_ideal(file)?, seed)),
        Command::Rank { file, matrix, beta, oracle } => rank_cmd(&load_ideal(file)?, matrix, beta, *oracle, seed),
        Command::Exceptional { file, matrix } => exceptional_cmd(&load_ideal(file)?, matrix, seed),
        Command::Polarize { file, output } => polarize_cmd(&load_ideal(file)?, output.as_deref(), seed),
        Command::Benchmark { file } => benchmark_cmd(&load_ideal(file)?, seed),
        Command::Verify { random } => verify_cmd(random, seed),
    }
}

/// Run the CLI on `args` (including the program name) without exiting.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    if cli.jobs > 0 {
        par::set_jobs(cli.jobs);
    }
    match dispatch(&cli) {
        Ok(rep) => {
            let mut stdout = serde_json::to_string_pretty(&rep.document()).expect("report is valid JSON");
            stdout.push('\n');
            Outcome { code: i32::from(rep.mismatch), stdout, stderr: rep.stderr }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("{e}\n") },
    }
}
