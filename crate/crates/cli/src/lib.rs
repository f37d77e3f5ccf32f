//! Command-line front end for `brickword`.
//!
//! [`execute`] runs one invocation and returns the exit code and output,
//! so the binary and the tests share the same path. With `--json` every
//! invocation prints a single JSON document carrying `schema_version`.
//!
//! Exit codes: 0 success or true, 1 checked-false, 2 input error,
//! 3 cap exceeded or method disagreement.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use brickword::algebra::{Algebra, Presentation};
use brickword::bricks::Checker;
use brickword::construct::StringAutomaton;
use brickword::mia::{BrickReport, Method, Mia, Witness};
use brickword::recover::{presentations_isomorphic, recover_presentation, same_monomial_ideal};
use brickword::strings::{enumerate_bands, enumerate_strings};
use brickword::sturmian::{
    bridge, characteristic_prefix, characteristic_window_check, BridgeSide, DirectiveSequence,
    SturmianViolation,
};
use brickword::Error;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "brickword", version, about = "Brick detection for string algebras")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Automaton,
    Endo,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Direct => vec![Method::Direct],
            MethodArg::Automaton => vec![Method::Automaton],
            MethodArg::Endo => vec![Method::Endo],
            MethodArg::All => vec![Method::Direct, Method::Automaton, Method::Endo],
        }
    }
}

#[derive(Debug, clap::Args)]
struct CheckOpts {
    #[arg(long, value_enum, default_value = "direct")]
    method: MethodArg,
    /// Prime field for the endomorphism method.
    #[arg(long, default_value_t = brickword::endo::DEFAULT_PRIME)]
    prime: u64,
    /// Largest module dimension the endomorphism method accepts.
    #[arg(long, default_value_t = brickword::endo::DEFAULT_DIM_CAP)]
    dim_cap: usize,
}

impl CheckOpts {
    fn checker(&self, alg: &Algebra) -> Checker {
        Checker::new(alg).with_prime(self.prime).with_dim_cap(self.dim_cap)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the string algebra conditions and solve for signs.
    Validate { file: PathBuf },
    /// Print sign maps, declared or solved.
    Signs { file: PathBuf },
    /// Build the automaton of strings and print it in text form.
    BuildMia {
        file: PathBuf,
        /// Relabel the letters to the binary parity alphabet.
        #[arg(long)]
        parity: bool,
        /// Also write a DOT rendering to this file.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// List all strings up to a length.
    Strings {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// List bands up to a length, one per rotation and inversion class.
    Bands {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Decide whether a string module is a brick.
    CheckStringBrick {
        file: PathBuf,
        syllables: String,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Decide whether a band module M(b, l, lambda) is a brick.
    CheckBandBrick {
        file: PathBuf,
        syllables: String,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lambda: i64,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// List strings and bands up to a length whose modules are bricks.
    EnumerateBricks {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Characteristic Sturmian prefixes, their check and the brick bridge.
    Sturmian {
        /// Comma list with an optional parenthesized period, e.g. `1,(1)`.
        #[arg(long)]
        directive: String,
        #[arg(long)]
        prefix: usize,
        #[arg(long)]
        bridge: bool,
        #[arg(long)]
        check: bool,
    },
    /// Recover a presentation from a binary automaton file.
    Recover { file: PathBuf },
    /// Build, recover and compare against the input presentation.
    Roundtrip { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Signs { .. } => "signs",
            Command::BuildMia { .. } => "build-mia",
            Command::Strings { .. } => "strings",
            Command::Bands { .. } => "bands",
            Command::CheckStringBrick { .. } => "check-string-brick",
            Command::CheckBandBrick { .. } => "check-band-brick",
            Command::EnumerateBricks { .. } => "enumerate-bricks",
            Command::Sturmian { .. } => "sturmian",
            Command::Recover { .. } => "recover",
            Command::Roundtrip { .. } => "roundtrip",
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a command produced: an exit code, text, and the JSON fields.
struct Report {
    code: i32,
    text: String,
    fields: Map<String, Value>,
}

impl Report {
    fn new(code: i32, text: String, fields: Value) -> Report {
        let Value::Object(fields) = fields else {
            unreachable!("report fields are an object");
        };
        Report { code, text, fields }
    }
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Run = std::result::Result<Report, Failure>;

/// Runs the command line `args` (program name first).
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = args.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => return usage_error(e, json_mode),
    };
    let command = cli.command.name();
    let (code, text, mut fields, error) = match run(cli.command) {
        Ok(r) => (r.code, r.text, r.fields, None),
        Err(Failure::Input(m)) => (EXIT_INPUT, String::new(), Map::new(), Some(("input", m))),
        Err(Failure::Cap(m)) => (EXIT_CAP, String::new(), Map::new(), Some(("cap", m))),
    };
    if cli.json {
        let mut doc = Map::new();
        doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
        doc.insert("command".into(), json!(command));
        doc.insert("exit_code".into(), json!(code));
        if let Some((kind, message)) = &error {
            doc.insert("error".into(), json!({ "kind": kind, "message": message }));
        }
        doc.append(&mut fields);
        let stdout = serde_json::to_string_pretty(&Value::Object(doc)).expect("json") + "\n";
        return Outcome {
            code,
            stdout,
            stderr: String::new(),
        };
    }
    let stderr = match error {
        Some((_, m)) => format!("error: {m}\n"),
        None => String::new(),
    };
    Outcome {
        code,
        stdout: text,
        stderr,
    }
}

fn usage_error(e: clap::Error, json_mode: bool) -> Outcome {
    let rendered = e.render().to_string();
    if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
        return Outcome {
            code: EXIT_OK,
            stdout: rendered,
            stderr: String::new(),
        };
    }
    if json_mode {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": Value::Null,
            "exit_code": EXIT_INPUT,
            "error": { "kind": "usage", "message": rendered.trim_end() },
        });
        return Outcome {
            code: EXIT_INPUT,
            stdout: serde_json::to_string_pretty(&doc).expect("json") + "\n",
            stderr: String::new(),
        };
    }
    Outcome {
        code: EXIT_INPUT,
        stdout: String::new(),
        stderr: rendered,
    }
}

fn run(command: Command) -> Run {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Signs { file } => signs(&file),
        Command::BuildMia { file, parity, dot } => build_mia(&file, parity, dot.as_deref()),
        Command::Strings { file, max_len } => strings(&file, max_len),
        Command::Bands { file, max_len } => bands(&file, max_len),
        Command::CheckStringBrick {
            file,
            syllables,
            opts,
        } => check_string(&file, &syllables, &opts),
        Command::CheckBandBrick {
            file,
            syllables,
            l,
            lambda,
            opts,
        } => check_band(&file, &syllables, l, lambda, &opts),
        Command::EnumerateBricks {
            file,
            max_len,
            opts,
        } => enumerate_bricks(&file, max_len, &opts),
        Command::Sturmian {
            directive,
            prefix,
            bridge,
            check,
        } => sturmian(&directive, prefix, bridge, check),
        Command::Recover { file } => recover(&file),
        Command::Roundtrip { file } => roundtrip(&file),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> std::result::Result<Algebra, Failure> {
    Algebra::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn validate(path: &Path) -> Run {
    let p = Presentation::parse(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let report = p.validate();
    let signs = if report.is_string_algebra {
        p.solve_signs().map(|_| ()).map_err(|e| e.to_string())
    } else {
        Err("not attempted".to_string())
    };
    let ok = report.is_string_algebra && signs.is_ok();

    let mut text = format!(
        "vertices {}, arrows {}, relations {}\nstring algebra: {}\ngentle: {}\n",
        p.vertex_count(),
        p.arrow_count(),
        p.relations().len(),
        yes_no(report.is_string_algebra),
        yes_no(report.is_gentle),
    );
    if let Some(b) = report.admissibility_bound {
        text += &format!("longest relation-free path: {b}\n");
    }
    for v in &report.violations {
        text += &format!("violation {}: {}\n", v.condition, v.locus);
    }
    match &signs {
        Ok(()) => text += "signs: ok\n",
        Err(m) => text += &format!("signs: {m}\n"),
    }
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "condition": v.condition.code(), "locus": v.locus }))
        .collect();
    let fields = json!({
        "valid": ok,
        "vertices": p.vertex_count(),
        "arrows": p.arrow_count(),
        "relations": p.relations().len(),
        "string_algebra": report.is_string_algebra,
        "gentle": report.is_gentle,
        "admissibility_bound": report.admissibility_bound,
        "violations": violations,
        "signs": { "ok": signs.is_ok(), "error": signs.err() },
    });
    Ok(Report::new(if ok { EXIT_OK } else { EXIT_FALSE }, text, fields))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn signs(path: &Path) -> Run {
    let alg = load_algebra(path)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for a in alg.arrows() {
        let (s, e) = (alg.signs().sigma(a), alg.signs().eps(a));
        text += &format!("sign {} {} {}\n", alg.arrow_name(a), s, e);
        list.push(json!({ "arrow": alg.arrow_name(a), "sigma": s.value(), "eps": e.value() }));
    }
    let fields = json!({
        "declared": alg.declared_signs().is_some(),
        "signs": list,
    });
    Ok(Report::new(EXIT_OK, text, fields))
}

fn build_mia(path: &Path, parity: bool, dot: Option<&Path>) -> Run {
    let alg = load_algebra(path)?;
    let sa = StringAutomaton::build(&alg);
    let m = if parity {
        sa.parity(&alg)?
    } else {
        sa.mia().clone()
    };
    if let Some(out) = dot {
        fs::write(out, m.to_dot()).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    }
    let text = m.to_string();
    let fields = json!({
        "parity": parity,
        "states": m.state_count(),
        "initial_states": m.initial_states().len(),
        "transitions": m.edge_count(),
        "dot": dot.map(|p| p.display().to_string()),
        "mia": text,
    });
    Ok(Report::new(EXIT_OK, text, fields))
}

fn strings(path: &Path, max_len: usize) -> Run {
    let alg = load_algebra(path)?;
    let list: Vec<String> = enumerate_strings(&alg, max_len)?
        .iter()
        .map(|x| alg.str_text(x))
        .collect();
    Ok(listing(max_len, "strings", list))
}

fn bands(path: &Path, max_len: usize) -> Run {
    let alg = load_algebra(path)?;
    let list: Vec<String> = enumerate_bands(&alg, max_len)?
        .iter()
        .map(|b| alg.syllables_text(b.syllables(), " "))
        .collect();
    Ok(listing(max_len, "bands", list))
}

fn listing(max_len: usize, key: &str, list: Vec<String>) -> Report {
    let text: String = list.iter().map(|s| format!("{s}\n")).collect();
    let mut fields = json!({ "max_len": max_len, "count": list.len() });
    fields[key] = json!(list);
    Report::new(EXIT_OK, text, fields)
}

fn witness_json(checker: &Checker, w: &Witness) -> Value {
    match w {
        Witness::String {
            sub,
            factor_start,
            image_start,
            host,
        } => json!({
            "kind": "string",
            "substring": checker.algebra().str_text(sub),
            "factor_start": factor_start,
            "image_start": image_start,
            "host": host.to_string(),
        }),
        Witness::Word {
            word,
            factor_offset,
            image_offset,
            host,
        } => {
            let (m, _) = checker.word_automaton();
            json!({
                "kind": "word",
                "subword": word.underlying().map(|u| m.word_text(&u)),
                "factor_offset": factor_offset,
                "image_offset": image_offset,
                "host": host.to_string(),
            })
        }
    }
}

fn witness_text(checker: &Checker, w: &Witness) -> String {
    match w {
        Witness::String {
            sub,
            factor_start,
            image_start,
            host,
        } => format!(
            "`{}` is a factor substring at {factor_start} and an image substring at {image_start} of the {host}",
            checker.algebra().str_text(sub)
        ),
        Witness::Word {
            word,
            factor_offset,
            image_offset,
            host,
        } => {
            let (m, _) = checker.word_automaton();
            let sub = word.underlying().map(|u| m.word_text(&u)).unwrap_or_default();
            format!(
                "`{sub}` is a factor subword at {factor_offset} and an image subword at {image_offset} of the {host}"
            )
        }
    }
}

fn report_json(checker: &Checker, r: &BrickReport) -> Value {
    json!({
        "method": r.method.to_string(),
        "verdict": r.verdict,
        "scope": r.scope.to_string(),
        "periodicity": r.periodicity.to_string(),
        "reason": r.reason,
        "end_dim": r.end_dim,
        "witness": r.witness.as_ref().map(|w| witness_json(checker, w)),
    })
}

fn report_text(checker: &Checker, r: &BrickReport) -> String {
    let mut line = format!(
        "{}: {}",
        r.method,
        if r.verdict { "brick" } else { "not a brick" }
    );
    if let Some(d) = r.end_dim {
        line += &format!(", dim End = {d}");
    }
    if let Some(w) = &r.witness {
        line += &format!(", {}", witness_text(checker, w));
    } else if let Some(reason) = &r.reason {
        line += &format!(", {reason}");
    }
    line + "\n"
}

/// Combines per-method reports: exit 3 on disagreement, else 0 or 1.
fn verdicts(checker: &Checker, header: String, mut fields: Value, reports: &[BrickReport]) -> Report {
    let verdict = reports[0].verdict;
    let agree = reports.iter().all(|r| r.verdict == verdict);
    let mut text = header;
    for r in reports {
        text += &report_text(checker, r);
    }
    let code = if !agree {
        text += "verdict: methods disagree\n";
        EXIT_CAP
    } else {
        text += &format!("verdict: {}\n", if verdict { "brick" } else { "not a brick" });
        if verdict {
            EXIT_OK
        } else {
            EXIT_FALSE
        }
    };
    fields["verdict"] = if agree { json!(verdict) } else { Value::Null };
    fields["agree"] = json!(agree);
    fields["results"] = reports.iter().map(|r| report_json(checker, r)).collect();
    Report::new(code, text, fields)
}

fn check_string(path: &Path, syllables: &str, opts: &CheckOpts) -> Run {
    let alg = load_algebra(path)?;
    let x = alg.parse_str(syllables)?;
    let checker = opts.checker(&alg);
    let input = x.clone().into();
    let reports = opts
        .method
        .methods()
        .into_iter()
        .map(|m| checker.string(&input, m))
        .collect::<brickword::Result<Vec<_>>>()?;
    let shown = alg.str_text(&x);
    let fields = json!({ "kind": "string", "input": shown });
    Ok(verdicts(&checker, format!("string {shown}\n"), fields, &reports))
}

fn check_band(path: &Path, syllables: &str, l: usize, lambda: i64, opts: &CheckOpts) -> Run {
    let alg = load_algebra(path)?;
    let b = alg.band(&alg.parse_str(syllables)?)?;
    let checker = opts.checker(&alg);
    let reports = opts
        .method
        .methods()
        .into_iter()
        .map(|m| checker.band(&b, l, lambda, m))
        .collect::<brickword::Result<Vec<_>>>()?;
    let shown = alg.syllables_text(b.syllables(), " ");
    let fields = json!({ "kind": "band", "input": shown, "l": l, "lambda": lambda });
    let header = format!("band {shown}, l = {l}, lambda = {lambda}\n");
    Ok(verdicts(&checker, header, fields, &reports))
}

/// Common verdict of all requested methods; `None` on disagreement.
fn agreed(reports: &[BrickReport]) -> Option<bool> {
    let v = reports[0].verdict;
    reports.iter().all(|r| r.verdict == v).then_some(v)
}

fn enumerate_bricks(path: &Path, max_len: usize, opts: &CheckOpts) -> Run {
    let alg = load_algebra(path)?;
    let checker = opts.checker(&alg);
    let methods = opts.method.methods();
    let mut disagreements = Vec::new();

    let all_strings = enumerate_strings(&alg, max_len)?;
    let mut brick_strings = Vec::new();
    for x in &all_strings {
        let input = x.clone().into();
        let reports = methods
            .iter()
            .map(|&m| checker.string(&input, m))
            .collect::<brickword::Result<Vec<_>>>()?;
        match agreed(&reports) {
            Some(true) => brick_strings.push(alg.str_text(x)),
            Some(false) => {}
            None => disagreements.push(alg.str_text(x)),
        }
    }
    let all_bands = enumerate_bands(&alg, max_len)?;
    let mut brick_bands = Vec::new();
    for b in &all_bands {
        let reports = methods
            .iter()
            .map(|&m| checker.band(b, 1, 1, m))
            .collect::<brickword::Result<Vec<_>>>()?;
        let shown = alg.syllables_text(b.syllables(), " ");
        match agreed(&reports) {
            Some(true) => brick_bands.push(shown),
            Some(false) => {}
            None => disagreements.push(shown),
        }
    }

    let mut text = format!(
        "{} of {} strings are bricks\n",
        brick_strings.len(),
        all_strings.len()
    );
    for s in &brick_strings {
        text += &format!("  {s}\n");
    }
    text += &format!(
        "{} of {} bands give bricks with l = 1\n",
        brick_bands.len(),
        all_bands.len()
    );
    for s in &brick_bands {
        text += &format!("  {s}\n");
    }
    for s in &disagreements {
        text += &format!("methods disagree on {s}\n");
    }
    let code = if disagreements.is_empty() { EXIT_OK } else { EXIT_CAP };
    let fields = json!({
        "max_len": max_len,
        "strings_checked": all_strings.len(),
        "bands_checked": all_bands.len(),
        "brick_strings": brick_strings,
        "brick_bands": brick_bands,
        "disagreements": disagreements,
    });
    Ok(Report::new(code, text, fields))
}

fn violation_json(v: &SturmianViolation) -> Value {
    json!({
        "core": String::from_utf8_lossy(&v.core),
        "a_at": v.a_at,
        "b_at": v.b_at,
    })
}

fn violation_text(v: &SturmianViolation) -> String {
    let at = |p: Option<usize>| p.map_or("prefix".to_string(), |i| i.to_string());
    format!(
        "core `{}` (a at {}, b at {})",
        String::from_utf8_lossy(&v.core),
        at(v.a_at),
        at(v.b_at)
    )
}

fn sturmian(directive: &str, prefix: usize, run_bridge: bool, check: bool) -> Run {
    let d: DirectiveSequence = directive.parse()?;
    let window = characteristic_prefix(&d, prefix)?;
    let word = String::from_utf8_lossy(&window.letters).into_owned();
    let mut code = EXIT_OK;
    let mut text = format!("directive {d}\n{word}\n");
    if !window.certified {
        text += "periodic: the directive sequence is finite\n";
    }
    let mut fields = json!({
        "directive": d.to_string(),
        "prefix": prefix,
        "word": word,
        "certified": window.certified,
    });
    if check {
        let v = characteristic_window_check(&window.letters);
        match &v {
            Some(v) => {
                text += &format!("check: violation, {}\n", violation_text(v));
                code = EXIT_FALSE;
            }
            None => text += "check: no violation\n",
        }
        fields["check"] = json!({ "violation": v.as_ref().map(violation_json) });
    }
    if run_bridge && !window.letters.is_empty() {
        let r = bridge(&window.letters, BridgeSide::RightInfinite, window.certified)?;
        let binary = brickword::words::binary_text(&r.binary);
        let consistent = r.consistent();
        text += &format!(
            "bridge: {} ({})\nbinary {binary}\n",
            if r.brick.verdict { "brick word" } else { "not a brick word" },
            r.brick.scope
        );
        if let Some(core) = &r.witness_core {
            text += &format!("bridge witness decodes to `{}`\n", String::from_utf8_lossy(core));
        }
        if !consistent {
            text += "bridge and Sturmian check disagree\n";
            code = EXIT_CAP;
        } else if !r.brick.verdict && code == EXIT_OK {
            code = EXIT_FALSE;
        }
        fields["bridge"] = json!({
            "brick": r.brick.verdict,
            "scope": r.brick.scope.to_string(),
            "binary": binary,
            "witness_core": r.witness_core.as_ref().map(|c| String::from_utf8_lossy(c).into_owned()),
            "sturmian_violation": r.violation.as_ref().map(violation_json),
            "consistent": consistent,
        });
    }
    Ok(Report::new(code, text, fields))
}

fn recover(path: &Path) -> Run {
    let m = Mia::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let rec = recover_presentation(&m)?;
    let p = &rec.presentation;
    let text = p.to_string();
    let vertex_states: Vec<Value> = rec
        .vertex_states
        .iter()
        .map(|&(a, b)| json!([m.name(a), m.name(b)]))
        .collect();
    let fields = json!({
        "vertices": p.vertex_count(),
        "arrows": p.arrow_count(),
        "relations": p.relations().len(),
        "vertex_states": vertex_states,
        "presentation": text,
    });
    Ok(Report::new(EXIT_OK, text, fields))
}

fn roundtrip(path: &Path) -> Run {
    let alg = load_algebra(path)?;
    let m = StringAutomaton::build(&alg).parity(&alg)?;
    let rec = recover_presentation(&m)?;
    let p = alg.without_signs();
    let q = &rec.presentation;
    let iso = presentations_isomorphic(&p, q)?;
    let ideal = iso.as_ref().is_some_and(|iso| {
        let mapped: Vec<_> = p.relations().iter().map(|r| iso.map_path(r)).collect();
        same_monomial_ideal(&mapped, q.relations())
    });
    let mut text = String::new();
    let mut fields = json!({
        "isomorphic": iso.is_some() && ideal,
        "recovered": q.to_string(),
    });
    match iso.filter(|_| ideal) {
        Some(iso) => {
            text += "isomorphic\n";
            let mut vmap = Map::new();
            for v in p.vertices() {
                let w = iso.vertex_map[v.0];
                text += &format!("  {} -> {}\n", p.vertex_name(v), q.vertex_name(w));
                vmap.insert(p.vertex_name(v).into(), json!(q.vertex_name(w)));
            }
            let mut amap = Map::new();
            for a in p.arrows() {
                let b = iso.arrow_map[a.0];
                text += &format!("  {} -> {}\n", p.arrow_name(a), q.arrow_name(b));
                amap.insert(p.arrow_name(a).into(), json!(q.arrow_name(b)));
            }
            fields["vertex_map"] = Value::Object(vmap);
            fields["arrow_map"] = Value::Object(amap);
            Ok(Report::new(EXIT_OK, text, fields))
        }
        None => {
            text += "not isomorphic\nrecovered presentation:\n";
            text += &q.to_string();
            Ok(Report::new(EXIT_FALSE, text, fields))
        }
    }
}
