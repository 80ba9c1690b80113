//! Command-line front-end: game ingestion, quarrel application, power
//! computation, monotonicity analysis, paradox scanning and the claim suite.
//!
//! Exit codes: 0 clean, 2 usage or input error, 3 violations (or refuted
//! claims) found, 4 capability limit reached. Output is deterministic for a
//! fixed invocation.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quarrels::power::format_decimal;
use quarrels::{
    apply_with_options, enumerate_monotonic_games, game_from_json, game_to_json, run_theorem_suite,
    scan_paradox, verify_csr, verify_reciprocality, verify_symmetry, CsrReport, Measure, Postulate,
    PowerReport, QuarrelRule, RuleShape, ScanResult, TheoremResult, VerdictStatus, VotingGame,
};

#[derive(Parser)]
#[command(name = "quarrels", version, about = "Quarrel analysis for binary voting games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-player voting power for a game file.
    Power {
        /// Game file (JSON: {"n", "winning"} or {"n", "weights", "quota"}).
        #[arg(long)]
        game: PathBuf,
        /// Measure: pb (Penrose-Banzhaf), bz (Banzhaf index) or ss (Shapley-Shubik).
        #[arg(long, value_parser = parse_measure)]
        measure: Measure,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Apply a quarrel rule and report diagnostics on the derived game.
    Quarrel {
        #[arg(long)]
        game: PathBuf,
        /// Rule, e.g. weak:sym:recip:i=1,j=2 or fm:i=1,j=2 or lv:i=1,j=2.
        #[arg(long, value_parser = parse_rule)]
        rule: QuarrelRule,
        /// Force unanimity back onto the derived game ([n] wins, {} loses).
        #[arg(long)]
        unanimity_patch: bool,
        /// With --out, the derived game alone is written there in the game
        /// file format (re-ingestible); diagnostics still go to stdout.
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exhaustive postulate scan over all non-trivial monotonic games.
    Scan {
        /// Rule shape without a pair, e.g. weak:sym:recip, fm, lv.
        #[arg(long, value_parser = parse_shape)]
        rule: RuleShape,
        #[arg(long, value_parser = parse_measure)]
        measure: Measure,
        #[arg(long, value_parser = parse_postulate, default_value = "standard")]
        postulate: Postulate,
        /// Player count (exhaustive, n <= 4).
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the typology claim suite.
    Theorems {
        /// Largest player count for the exhaustive checks (2..=4).
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Monotonicity and k-monotonicity analysis of a game file.
    Kmon {
        #[arg(long)]
        game: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// List every monotonic game on n players (n <= 5).
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Skip the two trivial games.
        #[arg(long)]
        non_trivial: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

fn parse_measure(text: &str) -> Result<Measure, String> {
    Measure::parse(text).ok_or_else(|| format!("unknown measure {text:?}: use pb, bz or ss"))
}

fn parse_postulate(text: &str) -> Result<Postulate, String> {
    Postulate::parse(text)
        .ok_or_else(|| format!("unknown postulate {text:?}: use standard, yes-power or no-power"))
}

fn parse_rule(text: &str) -> Result<QuarrelRule, String> {
    QuarrelRule::parse(text).map_err(|e| e.to_string())
}

fn parse_shape(text: &str) -> Result<RuleShape, String> {
    RuleShape::parse(text).map_err(|e| e.to_string())
}

enum CliError {
    Lib(quarrels::Error),
    Io(PathBuf, std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<quarrels::Error> for CliError {
    fn from(e: quarrels::Error) -> CliError {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_capability() => 4,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Power { game, measure, output } => cmd_power(&game, measure, &output),
        Command::Quarrel { game, rule, unanimity_patch, output } => {
            cmd_quarrel(&game, &rule, unanimity_patch, &output)
        }
        Command::Scan { rule, measure, postulate, n, output } => {
            cmd_scan(rule, measure, postulate, n, &output)
        }
        Command::Theorems { n_max, output } => cmd_theorems(n_max, &output),
        Command::Kmon { game, output } => cmd_kmon(&game, &output),
        Command::Enumerate { n, non_trivial, output } => cmd_enumerate(n, non_trivial, &output),
    }
}

fn load_game(path: &Path) -> Result<VotingGame, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_owned(), e))?;
    Ok(game_from_json(&text)?)
}

fn emit(output: &OutputOpts, payload: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => {
            std::fs::write(path, payload).map_err(|e| CliError::Io(path.clone(), e))
        }
        None => {
            std::io::stdout()
                .write_all(payload.as_bytes())
                .map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))
        }
    }
}

fn csv_string(rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row).expect("csv write");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
}

// ---------------------------------------------------------------------------
// power
// ---------------------------------------------------------------------------

fn cmd_power(path: &Path, measure: Measure, output: &OutputOpts) -> Result<u8, CliError> {
    let game = load_game(path)?;
    let report = quarrels::power_report(&game, measure)?;
    let payload = match output.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => power_csv(&report),
        Format::Table => power_table(&report),
    };
    emit(output, &payload)?;
    Ok(0)
}

fn power_csv(report: &PowerReport) -> String {
    let mut rows = vec![vec![
        "measure".into(),
        "player".into(),
        "value".into(),
        "decimal".into(),
        "yes_value".into(),
        "yes_decimal".into(),
        "no_value".into(),
        "no_decimal".into(),
    ]];
    for (k, value) in report.values.iter().enumerate() {
        let (yes, yes_dec, no, no_dec) = match (&report.yes_values, &report.no_values) {
            (Some(yes), Some(no)) => (
                yes[k].to_string(),
                format_decimal(&yes[k]),
                no[k].to_string(),
                format_decimal(&no[k]),
            ),
            _ => (String::new(), String::new(), String::new(), String::new()),
        };
        rows.push(vec![
            report.measure.token().into(),
            (k + 1).to_string(),
            value.to_string(),
            format_decimal(value),
            yes,
            yes_dec,
            no,
            no_dec,
        ]);
    }
    csv_string(&rows)
}

fn power_table(report: &PowerReport) -> String {
    let mut out = format!("measure: {}\n", report.measure.token());
    let split = report.yes_values.is_some();
    if split {
        writeln!(out, "{:<8}{:<16}{:<22}{:<16}{:<16}", "player", "value", "decimal", "yes", "no")
            .unwrap();
    } else {
        writeln!(out, "{:<8}{:<16}{:<22}", "player", "value", "decimal").unwrap();
    }
    for (k, value) in report.values.iter().enumerate() {
        if let (Some(yes), Some(no)) = (&report.yes_values, &report.no_values) {
            writeln!(
                out,
                "{:<8}{:<16}{:<22}{:<16}{:<16}",
                k + 1,
                value.to_string(),
                format_decimal(value),
                yes[k].to_string(),
                no[k].to_string(),
            )
            .unwrap();
        } else {
            writeln!(out, "{:<8}{:<16}{:<22}", k + 1, value.to_string(), format_decimal(value))
                .unwrap();
        }
    }
    out
}

// ---------------------------------------------------------------------------
// quarrel
// ---------------------------------------------------------------------------

fn cmd_quarrel(
    path: &Path,
    rule: &QuarrelRule,
    unanimity_patch: bool,
    output: &OutputOpts,
) -> Result<u8, CliError> {
    let game = load_game(path)?;
    let derived = apply_with_options(rule, &game, unanimity_patch)?;
    let monotonicity = derived.monotonicity_report();
    let csr = verify_csr(&game, &derived, rule.i, rule.j)?;
    let symmetry = verify_symmetry(rule, &game)?;
    let reciprocality = verify_reciprocality(rule, &game)?;

    let game_file = format!("{}\n", game_to_json(&derived));
    let diagnostics = serde_json::json!({
        "rule": rule.to_string(),
        "derived_game": game_to_json(&derived),
        "monotonicity": monotonicity.to_json(),
        "csr": csr.to_json(),
        "symmetry": symmetry,
        "reciprocality": reciprocality,
    });

    let stdout_payload = match output.format {
        Format::Json => format!("{diagnostics}\n"),
        Format::Csv => quarrel_csv(rule, &derived, &monotonicity, &csr, symmetry, reciprocality),
        Format::Table => {
            quarrel_table(rule, &derived, &monotonicity, &csr, symmetry, reciprocality)
        }
    };
    match &output.out {
        Some(path) => {
            // The file gets the bare derived game so it can be re-ingested.
            std::fs::write(path, &game_file).map_err(|e| CliError::Io(path.clone(), e))?;
            print!("{stdout_payload}");
        }
        None => print!("{stdout_payload}"),
    }
    Ok(0)
}

fn csr_lines(csr: &CsrReport) -> Vec<(String, String)> {
    let existential = |holds: bool, vacuous: bool, witness: &Option<quarrels::PlayerSet>| {
        if vacuous {
            "holds vacuously (no effective cooperation)".to_string()
        } else {
            match (holds, witness) {
                (true, Some(w)) => format!("holds (witness {w})"),
                (true, None) => "holds".to_string(),
                (false, _) => "fails (no reduction)".to_string(),
            }
        }
    };
    vec![
        ("yq1".into(), if csr.yq1_holds { "holds".into() } else { "fails".into() }),
        ("yq2".into(), existential(csr.yq2_holds, csr.yq2_vacuous, &csr.yq2_witness)),
        ("nq1".into(), if csr.nq1_holds { "holds".into() } else { "fails".into() }),
        ("nq2".into(), existential(csr.nq2_holds, csr.nq2_vacuous, &csr.nq2_witness)),
    ]
}

fn quarrel_table(
    rule: &QuarrelRule,
    derived: &VotingGame,
    monotonicity: &quarrels::MonotonicityReport,
    csr: &CsrReport,
    symmetry: bool,
    reciprocality: bool,
) -> String {
    let mut out = String::new();
    writeln!(out, "rule: {rule}").unwrap();
    writeln!(out, "derived game: {}", derived.id_string()).unwrap();
    writeln!(out, "monotonic: {}", monotonicity.is_monotonic).unwrap();
    writeln!(out, "min_k: {}", monotonicity.min_k).unwrap();
    if !monotonicity.violating_pairs.is_empty() {
        writeln!(out, "violating pairs (winning subset -> losing superset):").unwrap();
        for (t, s) in &monotonicity.violating_pairs {
            writeln!(out, "  {t} -> {s}").unwrap();
        }
    }
    writeln!(out, "csr:").unwrap();
    for (name, verdict) in csr_lines(csr) {
        writeln!(out, "  {name}: {verdict}").unwrap();
    }
    writeln!(out, "symmetry: {symmetry}").unwrap();
    writeln!(out, "reciprocality: {reciprocality}").unwrap();
    out
}

fn quarrel_csv(
    rule: &QuarrelRule,
    derived: &VotingGame,
    monotonicity: &quarrels::MonotonicityReport,
    csr: &CsrReport,
    symmetry: bool,
    reciprocality: bool,
) -> String {
    let mut rows = vec![vec!["key".to_string(), "value".to_string()]];
    rows.push(vec!["rule".into(), rule.to_string()]);
    rows.push(vec!["derived_game".into(), derived.id_string()]);
    rows.push(vec!["is_monotonic".into(), monotonicity.is_monotonic.to_string()]);
    rows.push(vec!["min_k".into(), monotonicity.min_k.to_string()]);
    for (t, s) in &monotonicity.violating_pairs {
        rows.push(vec!["violating_pair".into(), format!("{t} -> {s}")]);
    }
    for (name, verdict) in csr_lines(csr) {
        rows.push(vec![name, verdict]);
    }
    rows.push(vec!["symmetry".into(), symmetry.to_string()]);
    rows.push(vec!["reciprocality".into(), reciprocality.to_string()]);
    csv_string(&rows)
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn cmd_scan(
    shape: RuleShape,
    measure: Measure,
    postulate: Postulate,
    n: usize,
    output: &OutputOpts,
) -> Result<u8, CliError> {
    let scan = scan_paradox(postulate, measure, shape, n)?;
    let payload = match output.format {
        Format::Json => {
            let mut out = String::new();
            for v in &scan.violations {
                writeln!(out, "{}", v.to_json()).unwrap();
            }
            out
        }
        Format::Csv => scan_csv(&scan),
        Format::Table => scan_table(&scan),
    };
    emit(output, &payload)?;
    eprintln!(
        "scan: {} games, {} pairs, {} violations, {} capability-limited",
        scan.games_scanned,
        scan.pairs_scanned,
        scan.violations.len(),
        scan.capability_skips,
    );
    Ok(if scan.violations.is_empty() { 0 } else { 3 })
}

fn verdict_fields(v: &quarrels::PostulateVerdict) -> (String, String) {
    match &v.status {
        VerdictStatus::Holds => ("holds".into(), String::new()),
        VerdictStatus::Violated { witness } => ("violated".into(), witness.to_string()),
        VerdictStatus::CapabilityLimited { reason } => ("capability-limited".into(), reason.clone()),
    }
}

fn rational_cell<T: std::fmt::Display>(r: &Option<T>) -> String {
    r.as_ref().map(|r| r.to_string()).unwrap_or_default()
}

fn scan_csv(scan: &ScanResult) -> String {
    let mut rows = vec![vec![
        "postulate".to_string(),
        "measure".into(),
        "rule".into(),
        "game".into(),
        "status".into(),
        "witness".into(),
        "psi_before_i".into(),
        "psi_after_i".into(),
        "psi_before_j".into(),
        "psi_after_j".into(),
    ]];
    for v in &scan.violations {
        let (status, witness) = verdict_fields(v);
        rows.push(vec![
            v.postulate.token().into(),
            v.measure.token().into(),
            v.rule.to_string(),
            v.game_id(),
            status,
            witness,
            rational_cell(&v.psi_before_i),
            rational_cell(&v.psi_after_i),
            rational_cell(&v.psi_before_j),
            rational_cell(&v.psi_after_j),
        ]);
    }
    csv_string(&rows)
}

fn scan_table(scan: &ScanResult) -> String {
    let mut out = String::new();
    if scan.violations.is_empty() {
        writeln!(out, "no violations").unwrap();
        return out;
    }
    writeln!(out, "violations:").unwrap();
    for v in &scan.violations {
        let (_, witness) = verdict_fields(v);
        writeln!(
            out,
            "  {} under {}: player {} gains ({} -> {}, {} -> {})",
            v.game_id(),
            v.rule,
            witness,
            rational_cell(&v.psi_before_i),
            rational_cell(&v.psi_after_i),
            rational_cell(&v.psi_before_j),
            rational_cell(&v.psi_after_j),
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// theorems
// ---------------------------------------------------------------------------

fn cmd_theorems(n_max: usize, output: &OutputOpts) -> Result<u8, CliError> {
    let results = run_theorem_suite(n_max)?;
    let payload = match output.format {
        Format::Json => {
            let mut out = String::new();
            for r in &results {
                writeln!(out, "{}", r.to_json()).unwrap();
            }
            out
        }
        Format::Csv => theorem_csv(&results),
        Format::Table => theorem_table(&results),
    };
    emit(output, &payload)?;
    let failures = results.iter().filter(|r| !r.verified).count();
    eprintln!("theorems: {} checked, {} refuted", results.len(), failures);
    Ok(if failures == 0 { 0 } else { 3 })
}

fn theorem_csv(results: &[TheoremResult]) -> String {
    let mut rows = vec![vec![
        "id".to_string(),
        "cell".into(),
        "verified".into(),
        "evidence".into(),
        "scope".into(),
        "claim".into(),
        "counterexample".into(),
    ]];
    for r in results {
        rows.push(vec![
            r.id.clone(),
            r.cell.map(|c| c.to_string()).unwrap_or_default(),
            r.verified.to_string(),
            r.evidence.to_string(),
            r.scope.clone(),
            r.claim.clone(),
            r.counterexample.clone().unwrap_or_default(),
        ]);
    }
    csv_string(&rows)
}

fn theorem_table(results: &[TheoremResult]) -> String {
    use quarrels::{Degree, Direction, Scope};
    let columns = [
        (Scope::YesOnly, Direction::Reciprocal, "asym recip"),
        (Scope::YesOnly, Direction::NonReciprocal, "asym nonrecip"),
        (Scope::Symmetric, Direction::Reciprocal, "sym recip"),
        (Scope::Symmetric, Direction::NonReciprocal, "sym nonrecip"),
    ];
    let class_label = |shape: RuleShape| quarrels::CellClass::of(shape).label();

    let mut out = String::new();
    writeln!(out, "typology (per-cell classification, check status, evidence count):").unwrap();
    write!(out, "{:<14}", "").unwrap();
    for (_, _, header) in &columns {
        write!(out, "{header:<34}").unwrap();
    }
    out.push('\n');
    for (degree, label) in
        [(Degree::Weak, "weak"), (Degree::Strong, "strong"), (Degree::Cataclysmic, "cataclysmic")]
    {
        write!(out, "{label:<14}").unwrap();
        for (scope, direction, _) in &columns {
            let shape = RuleShape { degree, scope: *scope, direction: *direction };
            let cell = results
                .iter()
                .find(|r| r.cell == Some(shape))
                .expect("cell result present");
            let status = if cell.verified { "ok" } else { "REFUTED" };
            let text = format!("{} [{status}, {}]", class_label(shape), cell.evidence);
            write!(out, "{text:<34}").unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "\nother claims:").unwrap();
    for r in results.iter().filter(|r| r.cell.is_none()) {
        let status = if r.verified { "ok" } else { "REFUTED" };
        writeln!(out, "  [{status}] {} (evidence: {}): {}", r.id, r.evidence, r.claim).unwrap();
        if let Some(cx) = &r.counterexample {
            writeln!(out, "      counterexample: {cx}").unwrap();
        }
    }
    out
}

// ---------------------------------------------------------------------------
// kmon / enumerate
// ---------------------------------------------------------------------------

fn cmd_kmon(path: &Path, output: &OutputOpts) -> Result<u8, CliError> {
    let game = load_game(path)?;
    let report = game.monotonicity_report();
    let payload = match output.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut rows = vec![vec!["key".to_string(), "value".to_string()]];
            rows.push(vec!["game".into(), game.id_string()]);
            rows.push(vec!["is_monotonic".into(), report.is_monotonic.to_string()]);
            rows.push(vec!["min_k".into(), report.min_k.to_string()]);
            for (t, s) in &report.violating_pairs {
                rows.push(vec!["violating_pair".into(), format!("{t} -> {s}")]);
            }
            csv_string(&rows)
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "game: {}", game.id_string()).unwrap();
            writeln!(out, "monotonic: {}", report.is_monotonic).unwrap();
            writeln!(out, "min_k: {}", report.min_k).unwrap();
            if !report.violating_pairs.is_empty() {
                writeln!(out, "violating pairs (winning subset -> losing superset):").unwrap();
                for (t, s) in &report.violating_pairs {
                    writeln!(out, "  {t} -> {s}").unwrap();
                }
            }
            out
        }
    };
    emit(output, &payload)?;
    Ok(0)
}

fn cmd_enumerate(n: usize, non_trivial: bool, output: &OutputOpts) -> Result<u8, CliError> {
    let games: Vec<VotingGame> = enumerate_monotonic_games(n, non_trivial)?.collect();
    let payload = match output.format {
        Format::Json => {
            let mut out = String::new();
            for g in &games {
                writeln!(out, "{}", game_to_json(g)).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![vec!["n".to_string(), "winning".to_string()]];
            for g in &games {
                rows.push(vec![n.to_string(), game_to_json(g)["winning"].to_string()]);
            }
            csv_string(&rows)
        }
        Format::Table => {
            let mut out = String::new();
            for g in &games {
                writeln!(out, "{}", g.id_string()).unwrap();
            }
            out
        }
    };
    emit(output, &payload)?;
    eprintln!("enumerate: {} games", games.len());
    Ok(0)
}
