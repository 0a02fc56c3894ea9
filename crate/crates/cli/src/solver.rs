//! External SAT solver orchestration: write DIMACS to a temp file, run
//! `<command> <path>`, parse the competition-style `s `/`v ` lines. Results
//! are relayed, never fabricated: anything unparseable comes back UNKNOWN.

use gml_core::satgen::{emit_dimacs, CnfFormula};

use std::io::Read;
use std::io::Write as _;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

#[derive(Debug)]
pub enum SolveOutcome {
    Sat(Vec<bool>),
    Unsat,
    Unknown(String),
}

/// The solver could not be run at all (missing binary, IO failure). Distinct
/// from UNKNOWN, which means the solver ran but decided nothing.
#[derive(Debug)]
pub struct SolverFailure(pub String);

impl std::fmt::Display for SolverFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Solver command resolution: explicit flag, then SAT_SOLVER, then the
/// bundled solver next to the running binary.
pub fn resolve_solver(flag: Option<&str>) -> Result<String, SolverFailure> {
    if let Some(cmd) = flag {
        return Ok(cmd.to_string());
    }
    if let Ok(cmd) = std::env::var("SAT_SOLVER") {
        if !cmd.trim().is_empty() {
            return Ok(cmd);
        }
    }
    let exe = std::env::current_exe()
        .map_err(|e| SolverFailure(format!("cannot locate own binary: {e}")))?;
    for dir in exe.ancestors().skip(1).take(3) {
        let cand = dir.join("gml-splr");
        if cand.is_file() {
            return Ok(cand.to_string_lossy().into_owned());
        }
    }
    Err(SolverFailure(
        "no solver: pass --solver, set SAT_SOLVER, or install gml-splr beside this binary".into(),
    ))
}

pub fn run_solver(
    cmd: &str,
    cnf: &CnfFormula,
    time_limit: Option<Duration>,
) -> Result<SolveOutcome, SolverFailure> {
    let mut file = tempfile::Builder::new()
        .prefix("gml-")
        .suffix(".cnf")
        .tempfile()
        .map_err(|e| SolverFailure(format!("temp file: {e}")))?;
    file.write_all(emit_dimacs(cnf).as_bytes())
        .map_err(|e| SolverFailure(format!("temp file: {e}")))?;
    file.flush().map_err(|e| SolverFailure(format!("temp file: {e}")))?;

    let mut parts = cmd.split_whitespace();
    let program = parts.next().ok_or_else(|| SolverFailure("empty solver command".into()))?;
    let mut child = Command::new(program)
        .args(parts)
        .arg(file.path())
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| SolverFailure(format!("cannot run `{program}`: {e}")))?;

    // drain pipes on threads so a chatty solver cannot deadlock the timeout
    // loop below
    let mut stdout_pipe = child.stdout.take().expect("stdout piped");
    let mut stderr_pipe = child.stderr.take().expect("stderr piped");
    let out_reader = std::thread::spawn(move || {
        let mut buf = String::new();
        let _ = stdout_pipe.read_to_string(&mut buf);
        buf
    });
    let err_reader = std::thread::spawn(move || {
        let mut buf = String::new();
        let _ = stderr_pipe.read_to_string(&mut buf);
        buf
    });

    let started = Instant::now();
    let timed_out = loop {
        match child.try_wait() {
            Ok(Some(_)) => break false,
            Ok(None) => {
                if let Some(limit) = time_limit {
                    if started.elapsed() >= limit {
                        let _ = child.kill();
                        let _ = child.wait();
                        break true;
                    }
                }
                std::thread::sleep(Duration::from_millis(20));
            }
            Err(e) => return Err(SolverFailure(format!("waiting on solver: {e}"))),
        }
    };
    let stdout = out_reader.join().unwrap_or_default();
    let stderr = err_reader.join().unwrap_or_default();
    if timed_out {
        return Ok(SolveOutcome::Unknown(format!(
            "time limit of {:?} reached",
            time_limit.expect("timed out implies a limit")
        )));
    }
    Ok(parse_output(&stdout, &stderr, cnf.num_vars()))
}

fn parse_output(stdout: &str, stderr: &str, num_vars: usize) -> SolveOutcome {
    let mut status: Option<&str> = None;
    let mut lits: Vec<i64> = Vec::new();
    for line in stdout.lines() {
        if let Some(rest) = line.strip_prefix("s ") {
            status = Some(rest.trim());
        } else if let Some(rest) = line.strip_prefix("v ") {
            for tok in rest.split_whitespace() {
                if let Ok(v) = tok.parse::<i64>() {
                    if v != 0 {
                        lits.push(v);
                    }
                }
            }
        }
    }
    match status {
        Some("SATISFIABLE") => {
            let mut assignment = vec![false; num_vars];
            for lit in lits {
                let var = lit.unsigned_abs() as usize;
                if var == 0 || var > num_vars {
                    return SolveOutcome::Unknown(format!(
                        "model names variable {var} outside 1..={num_vars}"
                    ));
                }
                assignment[var - 1] = lit > 0;
            }
            SolveOutcome::Sat(assignment)
        }
        Some("UNSATISFIABLE") => SolveOutcome::Unsat,
        Some(other) => SolveOutcome::Unknown(format!("solver reported `{other}`")),
        None => {
            let excerpt: String = stderr.chars().take(200).collect();
            SolveOutcome::Unknown(if excerpt.is_empty() {
                "solver produced no s-line".into()
            } else {
                format!("solver produced no s-line; stderr: {excerpt}")
            })
        }
    }
}
