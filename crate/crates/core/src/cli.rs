//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code: 0 for success or a true
//! answer, 1 for a false answer, a refutation or a failing suite, 2 for
//! usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{core, enumerate, product, AlgebraError, AlgebraFile, Filter, HeytingAlgebra};
use crate::formula::{parse, Atom, Formula};
use crate::lab::{run_all, run_suite, suite_appendix, LabConfig, Status, SuiteReport, SUITE_NAMES};
use crate::prover::{equiv_ipc, find_countermodel, prove_cpc, prove_ipc};
use crate::ruitenburg::{classify_univariate, ruitenburg_index, ChiSignature, DEFAULT_CAP};
use crate::semantics::{chi_refuting_valuation, ipc_chi_member, refuting_valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON record per line.
    Structured,
    /// Graphviz, for commands that produce algebras.
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "chilogic", version, about = "Intuitionistic logic, Ruitenburg fixpoints and chi-logics over finite Heyting algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide intuitionistic provability.
    Prove { formula: String },
    /// Decide intuitionistic equivalence.
    Equiv { left: String, right: String },
    /// Decide classical validity.
    Cpc { formula: String },
    /// Search small algebras for a refutation.
    Countermodel {
        formula: String,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_size: u64,
    },
    /// Print the K-fold iterate of a formula in p.
    Iterate {
        chi: String,
        #[arg(short = 'n', default_value_t = 2)]
        k: usize,
    },
    /// Ruitenburg index and fixpoint.
    Ruitenburg {
        formula: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Atom to iterate in; defaults to p.
        #[arg(long, default_value = "p")]
        atom: String,
    },
    /// Index, fixpoint and canonical class of a formula in p.
    Classify { chi: String },
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Core of an algebra for a formula in p.
    Core { file: PathBuf, chi: String },
    /// Validity, or chi-validity with --chi, of a formula in an algebra.
    Check {
        file: PathBuf,
        formula: String,
        #[arg(long)]
        chi: Option<String>,
    },
    /// Membership in the chi-variant of intuitionistic logic.
    Member {
        formula: String,
        #[arg(long)]
        chi: String,
    },
    /// List finite Heyting algebras up to isomorphism.
    Enumerate {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_size: u64,
    },
    /// Quotient by the filter generated by comma-separated elements.
    Quotient {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        filter: Vec<String>,
    },
    /// Product of two algebras.
    Product { left: PathBuf, right: PathBuf },
    /// Run verification suites.
    Suite(SuiteArgs),
    /// Run the Rieger-Nishimura checks and the fixpoint inventory.
    Appendix,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCommand {
    /// Check that a file describes a Heyting algebra.
    Validate { file: PathBuf },
    /// Describe an algebra.
    Show {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        /// Highlight the core of this formula.
        #[arg(long)]
        chi: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// One of the suite names; all suites when omitted.
    pub name: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
    pub max_size: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Compare structured output with DIR/NAME.jsonl, writing missing files.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// Overwrite golden files instead of comparing.
    #[arg(long, requires = "golden")]
    pub bless: bool,
    /// Algebra files validated before the suites.
    #[arg(long)]
    pub fixture: Vec<PathBuf>,
}

enum Failure {
    Usage(String),
    Input(String),
}

type Outcome = Result<bool, Failure>;

fn formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| Failure::Usage(format!("cannot parse `{text}`: {e}")))
}

fn signature(text: &str) -> Result<ChiSignature, Failure> {
    classify_univariate(&formula(text)?).map_err(|e| Failure::Usage(format!("`{text}`: {e}")))
}

fn load(path: &Path) -> Result<HeytingAlgebra, Failure> {
    AlgebraFile::load(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

struct Session<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn line(&mut self, text: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", text.as_ref());
    }

    fn record(&mut self, value: serde_json::Value) {
        self.line(value.to_string());
    }

    /// Report a yes/no answer in the selected format.
    fn answer(&mut self, command: &str, subject: &str, value: bool, text: &str) -> Outcome {
        match self.format {
            Format::Structured => self.record(json!({ "command": command, "input": subject, "result": value })),
            _ => self.line(text),
        }
        Ok(value)
    }

    fn algebra(&mut self, h: &HeytingAlgebra, highlight: &[usize]) {
        match self.format {
            Format::Dot => {
                let _ = write!(self.out, "{}", h.to_dot(highlight));
            }
            Format::Structured => self.line(AlgebraFile::from_algebra(h).to_json().replace('\n', "")),
            Format::Text => {
                let covers: Vec<String> =
                    h.covers().iter().map(|&(a, b)| format!("{} < {}", h.name(a), h.name(b))).collect();
                self.line(format!("elements: {}", h.names().join(", ")));
                self.line(format!("covers: {}", covers.join(", ")));
            }
        }
    }
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let mut session = Session { format: cli.format, out };
    match execute(cli.command, &mut session) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) | Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, s: &mut Session) -> Outcome {
    match command {
        Command::Prove { formula: text } => {
            let ok = prove_ipc(&formula(&text)?);
            s.answer("prove", &text, ok, if ok { "provable" } else { "not provable" })
        }
        Command::Equiv { left, right } => {
            let ok = equiv_ipc(&formula(&left)?, &formula(&right)?);
            s.answer("equiv", &format!("{left} ; {right}"), ok, if ok { "equivalent" } else { "not equivalent" })
        }
        Command::Cpc { formula: text } => {
            let ok = prove_cpc(&formula(&text)?);
            s.answer("cpc", &text, ok, if ok { "classically valid" } else { "not classically valid" })
        }
        Command::Countermodel { formula: text, max_size } => countermodel(s, &text, max_size as usize),
        Command::Iterate { chi, k } => {
            let phi = formula(&chi)?;
            let result = phi.iterate(&Atom::new("p"), k);
            match s.format {
                Format::Structured => s.record(json!({ "command": "iterate", "input": chi, "n": k, "result": result.to_string() })),
                _ => s.line(result.to_string()),
            }
            Ok(true)
        }
        Command::Ruitenburg { formula: text, cap, atom } => {
            if !Atom::is_valid_name(&atom) {
                return Err(Failure::Usage(format!("invalid atom `{atom}`")));
            }
            let phi = formula(&text)?;
            match ruitenburg_index(&phi, &Atom::new(&atom), cap) {
                Ok((index, fixpoint)) => {
                    match s.format {
                        Format::Structured => s.record(json!({
                            "command": "ruitenburg", "input": text, "index": index, "fixpoint": fixpoint.to_string()
                        })),
                        _ => s.line(format!("index {index}, fixpoint {fixpoint}")),
                    }
                    Ok(true)
                }
                Err(e) => {
                    s.line(e.to_string());
                    Ok(false)
                }
            }
        }
        Command::Classify { chi } => {
            let sig = signature(&chi)?;
            match s.format {
                Format::Structured => s.record(json!({
                    "command": "classify",
                    "input": chi,
                    "index": sig.index,
                    "fixpoint": sig.representative.as_ref().unwrap_or(&sig.fixpoint).to_string(),
                    "class": sig.canonical_class.label(),
                    "exact": sig.exact_match,
                })),
                _ => s.line(sig.summary()),
            }
            Ok(true)
        }
        Command::Algebra(AlgebraCommand::Validate { file }) => validate(s, &file),
        Command::Algebra(AlgebraCommand::Show { file, dot, chi }) => {
            let h = load(&file)?;
            let highlight = match &chi {
                Some(text) => core(&h, &signature(text)?),
                None => Vec::new(),
            };
            if dot || s.format == Format::Dot {
                let _ = write!(s.out, "{}", h.to_dot(&highlight));
                return Ok(true);
            }
            s.algebra(&h, &highlight);
            if s.format == Format::Text {
                s.line(format!("size: {}", h.size()));
                s.line(format!("subdirectly irreducible: {}", h.is_subdirectly_irreducible()));
                s.line(format!("dense: {}", h.format_set(&h.dense_elements())));
                s.line(format!("regular: {}", h.format_set(&h.regular_elements())));
                if chi.is_some() {
                    s.line(format!("core: {}", h.format_set(&highlight)));
                }
            }
            Ok(true)
        }
        Command::Core { file, chi } => {
            let h = load(&file)?;
            let c = core(&h, &signature(&chi)?);
            match s.format {
                Format::Structured => {
                    let names: Vec<&str> = c.iter().map(|&e| h.name(e)).collect();
                    s.record(json!({ "command": "core", "chi": chi, "core": names }))
                }
                Format::Dot => {
                    let _ = write!(s.out, "{}", h.to_dot(&c));
                }
                Format::Text => s.line(h.format_set(&c)),
            }
            Ok(true)
        }
        Command::Check { file, formula: text, chi } => {
            let h = load(&file)?;
            let phi = formula(&text)?;
            let refutation = match &chi {
                Some(c) => chi_refuting_valuation(&h, &signature(c)?, &phi),
                None => refuting_valuation(&h, &phi),
            };
            let ok = refutation.is_none();
            match s.format {
                Format::Structured => s.record(json!({
                    "command": "check",
                    "input": text,
                    "chi": chi,
                    "result": ok,
                    "refutation": refutation.as_ref().map(|v| v.describe(&h)),
                })),
                _ => match &refutation {
                    None => s.line("valid"),
                    Some(v) => s.line(format!("refuted at {}", v.describe(&h))),
                },
            }
            Ok(ok)
        }
        Command::Member { formula: text, chi } => {
            let ok = ipc_chi_member(&formula(&text)?, &signature(&chi)?);
            s.answer("member", &text, ok, if ok { "member" } else { "not a member" })
        }
        Command::Enumerate { max_size } => {
            let all = enumerate(max_size as usize);
            for h in &all {
                s.algebra(h, &[]);
            }
            if s.format == Format::Text {
                s.line(format!("{} algebras", all.len()));
            }
            Ok(true)
        }
        Command::Quotient { file, filter } => {
            let h = load(&file)?;
            let members = filter
                .iter()
                .map(|n| h.element(n).ok_or_else(|| Failure::Usage(format!("unknown element `{n}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let f = Filter::generated(&h, &members);
            let (q, hom) = h.quotient(&f).map_err(|e: AlgebraError| Failure::Input(e.to_string()))?;
            if s.format == Format::Text {
                s.line(format!("filter: {}", h.format_set(&f.elements())));
                let map: Vec<String> =
                    h.elements().map(|x| format!("{} -> {}", h.name(x), q.name(hom.apply(x)))).collect();
                s.line(format!("map: {}", map.join(", ")));
            }
            s.algebra(&q, &[]);
            Ok(true)
        }
        Command::Product { left, right } => {
            let (a, b) = (load(&left)?, load(&right)?);
            let (p, _) = product(&[&a, &b]);
            s.algebra(&p, &[]);
            Ok(true)
        }
        Command::Suite(args) => suite(s, args),
        Command::Appendix => {
            let report = suite_appendix(&LabConfig::default());
            emit_reports(s, &[report], None, false)
        }
    }
}

fn countermodel(s: &mut Session, text: &str, max_size: usize) -> Outcome {
    let phi = formula(text)?;
    let found = find_countermodel(&phi, max_size);
    match (&found, s.format) {
        (_, Format::Structured) => s.record(json!({
            "command": "countermodel",
            "input": text,
            "found": found.is_some(),
            "algebra": found.as_ref().map(|c| AlgebraFile::from_algebra(&c.algebra)),
            "valuation": found.as_ref().map(|c| c.valuation.describe(&c.algebra)),
            "value": found.as_ref().map(|c| c.algebra.name(c.value).to_string()),
        })),
        (Some(c), Format::Dot) => {
            let _ = write!(s.out, "{}", c.algebra.to_dot(&[c.value]));
        }
        (Some(c), Format::Text) => {
            s.algebra(&c.algebra, &[]);
            s.line(format!("valuation: {}", c.valuation.describe(&c.algebra)));
            s.line(format!("value: {}", c.algebra.name(c.value)));
        }
        (None, _) => s.line(format!("no countermodel among algebras of size at most {max_size}")),
    }
    // a countermodel refutes the formula
    Ok(found.is_none())
}

fn validate(s: &mut Session, file: &Path) -> Outcome {
    let text = fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let parsed = AlgebraFile::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let result = parsed.to_algebra();
    match s.format {
        Format::Structured => s.record(json!({
            "command": "validate",
            "input": file.display().to_string(),
            "result": result.is_ok(),
            "error": result.as_ref().err().map(|e| e.to_string()),
        })),
        _ => match &result {
            Ok(h) => s.line(format!("valid Heyting algebra with {} elements", h.size())),
            Err(e) => s.line(format!("invalid: {e}")),
        },
    }
    Ok(result.is_ok())
}

fn suite(s: &mut Session, args: SuiteArgs) -> Outcome {
    let mut config = LabConfig::default();
    if let Some(n) = args.max_size {
        config = config.with_max_size(n as usize);
    }
    if let Some(seed) = args.seed {
        config = config.with_seed(seed);
    }
    config.fixtures = args.fixture;
    let reports = match &args.name {
        Some(name) => match run_suite(name, &config) {
            Some(r) => vec![r],
            None => {
                return Err(Failure::Usage(format!(
                    "unknown suite `{name}`; expected one of {}",
                    SUITE_NAMES.join(", ")
                )))
            }
        },
        None => run_all(&config),
    };
    emit_reports(s, &reports, args.golden.as_deref(), args.bless)
}

fn emit_reports(s: &mut Session, reports: &[SuiteReport], golden: Option<&Path>, bless: bool) -> Outcome {
    let mut ok = true;
    for report in reports {
        match s.format {
            Format::Structured => {
                let _ = write!(s.out, "{}", report.to_jsonl());
            }
            _ => s.line(report.summary_table()),
        }
        ok &= report.passed();
        if let Some(dir) = golden {
            ok &= compare_golden(s, report, dir, bless)?;
        }
    }
    if s.format == Format::Text {
        let count = |status| reports.iter().map(|r| r.count(status)).sum::<usize>();
        s.line(format!(
            "total: {} passed, {} failed, {} flagged",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Flagged)
        ));
    }
    Ok(ok)
}

fn compare_golden(s: &mut Session, report: &SuiteReport, dir: &Path, bless: bool) -> Outcome {
    let path = dir.join(format!("{}.jsonl", report.name));
    let actual = report.to_jsonl();
    let io = |e: std::io::Error| Failure::Input(format!("{}: {e}", path.display()));
    if bless || !path.exists() {
        fs::create_dir_all(dir).map_err(io)?;
        fs::write(&path, &actual).map_err(io)?;
        if s.format == Format::Text {
            s.line(format!("golden: wrote {}", path.display()));
        }
        return Ok(true);
    }
    let expected = fs::read_to_string(&path).map_err(io)?;
    if expected == actual {
        if s.format == Format::Text {
            s.line(format!("golden: {} matches", path.display()));
        }
        return Ok(true);
    }
    let mismatch = expected
        .lines()
        .zip(actual.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| expected.lines().count().min(actual.lines().count()));
    s.line(format!("golden: {} differs at line {}", path.display(), mismatch + 1));
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("chilogic").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["prove", "~~(p | ~p)"]).0, 0);
        assert_eq!(call(&["prove", "~~p -> p"]).0, 1);
        assert_eq!(call(&["prove", ")"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["countermodel", "p", "--max-size", "0"]).0, 2);
    }

    #[test]
    fn structured_answers() {
        let (code, text) = call(&["--format", "structured", "equiv", "p", "~~p"]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(v["result"], false);
    }
}
