// Copyright 2026 The qparrondo Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end.
//!
//! ```text
//! qparrondo [--config PATH] [--seed N] [--format csv|jsonl] [--out PATH] [--oracle-every N]
//!     classical classify|simulate|region
//!     quantum play|sequence|sweep
//!     compare
//! ```
//!
//! Flags override the matching config fields. Exit codes: 0 success,
//! 1 I/O failure, 2 configuration error, 3 degenerate classical chain,
//! 4 closed form disagreeing with the simulation oracle.

pub mod config;
pub mod emit;
pub mod records;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::classical::{
    classify, find_parrondo_samples, pwin_closed_form, schedule_win_probability, simulate_sequence,
    ClassicalGame, ClassicalHDGame, GameA,
};
use crate::quantumgame::{
    check_sequence_formula, classify_probability, play_sequence, pwin_equal_superposition,
    pwin_quantum_closed, pwin_quantum_sim, sweep, InitialStateSpec, QuantumHDGame, ORACLE_TOLERANCE,
};
use crate::{Error, Outcome};

use config::RunConfig;
use emit::{Format, Record, RecordWriter};
use records::{
    BlockColumns, ClassifyRecord, CompareRecord, PlayRecord, RegionRecord, SequenceRecord, SimulateRecord, SweepRow,
};

/// Stream offsets added to the top-level seed, one per consumer.
pub mod seed_offsets {
    pub const CLASSIFY_MC: u64 = 0x636c_6173_7369_6679;
    pub const SIMULATE: u64 = 0x7369_6d75_6c61_7465;
    pub const REGION: u64 = 0x7265_6769_6f6e_0000;
    pub const REGION_VALIDATE: u64 = 0x7661_6c69_6461_7465;
    pub const SWEEP: u64 = 0x7377_6565_7000_0000;
}

pub fn derive_seed(seed: u64, offset: u64) -> u64 {
    seed.wrapping_add(offset)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("degenerate chain: {0}")]
    Degenerate(String),
    #[error("oracle mismatch: {0}")]
    Oracle(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Oracle(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateChain(_) | Error::ReducibleChain(_) => CliError::Degenerate(e.to_string()),
            Error::OracleMismatch { .. } => CliError::Oracle(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<emit::EmitError> for CliError {
    fn from(e: emit::EmitError) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "qparrondo", version, about = "Classical and quantum history-dependent Parrondo games")]
pub struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Base seed; each subcommand derives its own stream from it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Check every Nth closed-form value against the simulation.
    #[arg(long, global = true)]
    pub oracle_every: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// History-dependent classical games.
    #[command(subcommand)]
    Classical(ClassicalCommand),
    /// The quantized game.
    #[command(subcommand)]
    Quantum(QuantumCommand),
    /// Classical games against coin-matched quantum games.
    Compare,
}

#[derive(Debug, Subcommand)]
pub enum ClassicalCommand {
    /// Win probability, c, s and classification of one history game.
    Classify,
    /// Monte Carlo play of a periodic schedule or of region instances.
    Simulate,
    /// Search a parameter box for Parrondo instances.
    Region,
}

#[derive(Debug, Subcommand)]
pub enum QuantumCommand {
    /// One game on one initial state.
    Play,
    /// Several games composed into one multiplexer.
    Sequence,
    /// Grid or random sweep over the 21 parameters.
    Sweep,
}

/// Settings after applying flag overrides.
struct Resolved {
    cfg: RunConfig,
    seed: u64,
    format: Format,
    oracle_every: u64,
    out: Option<PathBuf>,
}

fn resolve(cli: &Cli) -> Result<Resolved, CliError> {
    let cfg = match &cli.config {
        Some(path) => config::load(path)?,
        None => RunConfig::default(),
    };
    let oracle_every = cli
        .oracle_every
        .or(cfg.oracle_every)
        .unwrap_or_else(config::default_oracle_every);
    if oracle_every == 0 {
        return Err(CliError::Config("oracle_every: must be at least 1".into()));
    }
    Ok(Resolved {
        seed: cli.seed.or(cfg.seed).unwrap_or(0),
        format: cli.format.or(cfg.format).unwrap_or_default(),
        out: cli.out.clone().or_else(|| cfg.out.clone()),
        oracle_every,
        cfg,
    })
}

/// Parse `args` (including the program name) and run, writing records to
/// `stdout` unless `--out` is given. Returns the process exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "qparrondo: {e}");
            e.exit_code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_with(args, &mut lock, &mut std::io::stderr())
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let r = resolve(cli)?;
    let mut file;
    let out: &mut dyn Write = match &r.out {
        Some(path) => {
            file = BufWriter::new(
                File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
            );
            &mut file
        }
        None => stdout,
    };
    match &cli.command {
        Command::Classical(ClassicalCommand::Classify) => cmd_classify(&r, out),
        Command::Classical(ClassicalCommand::Simulate) => cmd_simulate(&r, out),
        Command::Classical(ClassicalCommand::Region) => cmd_region(&r, out),
        Command::Quantum(QuantumCommand::Play) => cmd_play(&r, out),
        Command::Quantum(QuantumCommand::Sequence) => cmd_sequence(&r, out),
        Command::Quantum(QuantumCommand::Sweep) => cmd_sweep(&r, out),
        Command::Compare => cmd_compare(&r, out),
    }
}

fn write_all<T: Record>(records: &[T], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    emit::emit(records, format, out)?;
    Ok(())
}

fn cmd_classify(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let game = r.cfg.classical_game()?;
    let cls = classify(&game)?;
    let p_win = pwin_closed_form(&game)?;
    let [p1, p2, p3, p4] = game.probabilities();
    let mut record = ClassifyRecord {
        p1,
        p2,
        p3,
        p4,
        p_win,
        expected_payoff: 2.0 * p_win - 1.0,
        c: cls.c,
        s: cls.s,
        classification: cls.outcome.to_string(),
        ..Default::default()
    };
    let steps = r.cfg.classical.simulate_steps;
    if steps > 0 {
        let sim = simulate_sequence(&[game.into()], steps, derive_seed(r.seed, seed_offsets::CLASSIFY_MC))?;
        record.mc_steps = Some(steps);
        record.mc_mean_payoff = Some(sim.mean_payoff);
        record.mc_std_error = Some(sim.std_error);
    }
    write_all(&[record], r.format, out)
}

fn build_schedule(pattern: &str, a: GameA, b: ClassicalHDGame) -> Result<Vec<ClassicalGame>, CliError> {
    if pattern.is_empty() {
        return Err(CliError::Config("schedule: empty pattern".into()));
    }
    pattern
        .chars()
        .map(|ch| match ch {
            'A' => Ok(ClassicalGame::A(a)),
            'B' => Ok(ClassicalGame::B(b)),
            other => Err(CliError::Config(format!("schedule: unknown game {other:?}, expected A or B"))),
        })
        .collect()
}

fn format_from_path(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => Format::Csv,
        _ => Format::Jsonl,
    }
}

fn cmd_simulate(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let c = &r.cfg.classical;
    let jobs: Vec<(String, GameA, ClassicalHDGame)> = match &c.instances_file {
        Some(path) => {
            let file = File::open(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            let rows: Vec<RegionRecord> = emit::read_records(file, format_from_path(path))
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            rows.into_iter()
                .enumerate()
                .map(|(i, row)| {
                    let field = format!("{} record {}", path.display(), i + 1);
                    let a = GameA::new(row.p_a).map_err(|e| CliError::Config(format!("{field}: {e}")))?;
                    let b = ClassicalHDGame::new([row.p1, row.p2, row.p3, row.p4])
                        .map_err(|e| CliError::Config(format!("{field}: {e}")))?;
                    Ok((row.pattern, a, b))
                })
                .collect::<Result<_, CliError>>()?
        }
        None => vec![(c.schedule.clone(), r.cfg.game_a()?, r.cfg.classical_game()?)],
    };
    if c.steps == 0 {
        return Err(CliError::Config("classical.steps: must be at least 1".into()));
    }

    let base = derive_seed(r.seed, seed_offsets::SIMULATE);
    let mut w = RecordWriter::new::<SimulateRecord>(out, r.format)?;
    for (i, (pattern, a, b)) in jobs.into_iter().enumerate() {
        let schedule = build_schedule(&pattern, a, b)?;
        let analytic = schedule_win_probability(&schedule)?;
        let seed = base.wrapping_add(i as u64);
        let sim = simulate_sequence(&schedule, c.steps, seed)?;
        let a_loses = !pattern.contains('A') || classify_probability(a.p_win()) == Outcome::Losing;
        let b_loses = !pattern.contains('B') || classify(&b)?.outcome == Outcome::Losing;
        let [p1, p2, p3, p4] = b.probabilities();
        w.write(&SimulateRecord {
            pattern,
            p_a: a.p_win(),
            p1,
            p2,
            p3,
            p4,
            steps: c.steps,
            seed,
            analytic_p_win: analytic,
            analytic_payoff: 2.0 * analytic - 1.0,
            mean_payoff: sim.mean_payoff,
            std_error: sim.std_error,
            effect: a_loses && b_loses && sim.mean_payoff > 3.0 * sim.std_error,
        })?;
    }
    w.finish()?;
    Ok(())
}

fn cmd_region(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let search = r.cfg.region_search()?;
    let found = find_parrondo_samples(&search, derive_seed(r.seed, seed_offsets::REGION))?;
    let validate = r.cfg.classical.region.validate_steps;
    let base = derive_seed(r.seed, seed_offsets::REGION_VALIDATE);
    let mut w = RecordWriter::new::<RegionRecord>(out, r.format)?;
    for (i, inst) in found.iter().enumerate() {
        let [p1, p2, p3, p4] = inst.game_b.probabilities();
        let mut record = RegionRecord {
            sample_index: inst.sample_index as u64,
            pattern: inst.pattern.clone(),
            p_a: inst.game_a.p_win(),
            p1,
            p2,
            p3,
            p4,
            b_p_win: inst.b_p_win,
            c: inst.b_classification.c,
            s: inst.b_classification.s,
            schedule_p_win: inst.schedule_p_win,
            schedule_payoff: inst.schedule_payoff(),
            effect: true,
            ..Default::default()
        };
        if validate > 0 {
            let sim = simulate_sequence(&inst.schedule(), validate, base.wrapping_add(i as u64))?;
            record.sim_mean_payoff = Some(sim.mean_payoff);
            record.sim_std_error = Some(sim.std_error);
        }
        w.write(&record)?;
    }
    w.finish()?;
    Ok(())
}

fn initial_label(spec: &InitialStateSpec) -> &'static str {
    match spec {
        InitialStateSpec::Product(_) => "product",
        InitialStateSpec::EqualSuperposition => "equal_superposition",
        InitialStateSpec::Ghz => "ghz",
    }
}

fn block_columns(game: &QuantumHDGame) -> BlockColumns {
    let a: Vec<f64> = game
        .blocks()
        .iter()
        .flat_map(|b| [b.theta(), b.phi(), b.eta()])
        .collect();
    BlockColumns::from_slice(&a)
}

fn oracle_check(index: u64, closed: f64, simulated: f64) -> Result<(), CliError> {
    if (closed - simulated).abs() > ORACLE_TOLERANCE {
        return Err(Error::OracleMismatch {
            index,
            closed,
            simulated,
        }
        .into());
    }
    Ok(())
}

fn cmd_play(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let q = &r.cfg.quantum;
    let game = r.cfg.quantum_game("quantum.game", &q.game)?;
    let spec = r.cfg.initial_state("quantum.initial", &q.initial)?;
    let sim = pwin_quantum_sim(&game, &spec)?.p_win;
    let closed = spec.product_qubits().map(|qs| pwin_quantum_closed(&qs, game.blocks()));
    if let Some(c) = closed {
        oracle_check(0, c, sim)?;
    }
    let p_win = closed.unwrap_or(sim);
    let record = PlayRecord {
        initial: initial_label(&spec).into(),
        blocks: block_columns(&game),
        p_win,
        p_win_sim: sim,
        closed_form: closed.is_some(),
        expected_payoff: 2.0 * p_win - 1.0,
        classification: classify_probability(p_win).to_string(),
        oracle_checked: closed.is_some(),
    };
    write_all(&[record], r.format, out)
}

fn cmd_sequence(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let q = &r.cfg.quantum;
    if q.sequence.is_empty() {
        return Err(CliError::Config("quantum.sequence: list at least one game".into()));
    }
    let games = q
        .sequence
        .iter()
        .enumerate()
        .map(|(k, g)| r.cfg.quantum_game(&format!("quantum.sequence[{k}]"), g))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = r.cfg.initial_state("quantum.initial", &q.initial)?;
    let equal = spec == InitialStateSpec::EqualSuperposition;

    let mut rows = Vec::with_capacity(games.len() + 1);
    for (k, g) in games.iter().enumerate() {
        let p = pwin_quantum_sim(g, &spec)?.p_win;
        let formula = equal.then(|| pwin_equal_superposition(g.blocks()));
        if let Some(f) = formula {
            oracle_check(k as u64, f, p)?;
        }
        rows.push(SequenceRecord {
            label: format!("game{}", k + 1),
            p_win: p,
            p_win_formula: formula,
            deviation: formula.map(|f| (f - p).abs()),
            formula_exact: formula.is_some(),
            expected_payoff: 2.0 * p - 1.0,
            classification: classify_probability(p).to_string(),
            effect: false,
        });
    }
    let p = play_sequence(&games, &spec)?.p_win;
    let check = if equal { Some(check_sequence_formula(&games)?) } else { None };
    if let Some(c) = check.filter(|c| c.exact_domain) {
        oracle_check(games.len() as u64, c.formula, c.simulated)?;
    }
    let effect = games.len() >= 2
        && rows
            .iter()
            .all(|row| classify_probability(row.p_win) == Outcome::Losing)
        && classify_probability(p) == Outcome::Winning;
    rows.push(SequenceRecord {
        label: "sequence".into(),
        p_win: p,
        p_win_formula: check.map(|c| c.formula),
        deviation: check.map(|c| c.deviation),
        formula_exact: check.is_some_and(|c| c.exact_domain),
        expected_payoff: 2.0 * p - 1.0,
        classification: classify_probability(p).to_string(),
        effect,
    });
    write_all(&rows, r.format, out)
}

fn cmd_sweep(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = r.cfg.sweep_spec(r.oracle_every)?;
    let mut w = RecordWriter::new::<SweepRow>(&mut *out, r.format)?;
    for record in sweep(&spec, derive_seed(r.seed, seed_offsets::SWEEP)) {
        match record {
            Ok(rec) => w.write(&SweepRow::from(&rec))?,
            Err(e) => {
                w.finish()?;
                return Err(e.into());
            }
        }
    }
    w.finish()?;
    Ok(())
}

fn cmd_compare(r: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    let cmp = &r.cfg.compare;
    let spec = r.cfg.initial_state("compare.initial", &cmp.initial)?;
    let mut rows = Vec::with_capacity(cmp.games.len());
    for (i, p) in cmp.games.iter().enumerate() {
        let (classical, quantum) = r.cfg.compare_game(i, p)?;
        let classical_p = pwin_closed_form(&classical)?;
        let classical_cls = classify(&classical)?.outcome;
        let index = i as u64;
        let (quantum_p, checked) = match spec.product_qubits() {
            Some(qs) => {
                let closed = pwin_quantum_closed(&qs, quantum.blocks());
                let checked = index % r.oracle_every == 0;
                if checked {
                    oracle_check(index, closed, pwin_quantum_sim(&quantum, &spec)?.p_win)?;
                }
                (closed, checked)
            }
            None => (pwin_quantum_sim(&quantum, &spec)?.p_win, false),
        };
        rows.push(CompareRecord {
            index,
            p1: p[0],
            p2: p[1],
            p3: p[2],
            p4: p[3],
            classical_p_win: classical_p,
            classical_classification: classical_cls.to_string(),
            quantum_p_win: quantum_p,
            quantum_classification: classify_probability(quantum_p).to_string(),
            difference: quantum_p - classical_p,
            oracle_checked: checked,
        });
    }
    write_all(&rows, r.format, out)
}
