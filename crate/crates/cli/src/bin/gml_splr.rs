//! Bundled CDCL solver: a thin DIMACS front end over the splr crate,
//! speaking the competition output conventions the orchestrator parses.

use splr::{Certificate, SolverError};

use std::process::ExitCode;

fn main() -> ExitCode {
    let mut args = std::env::args().skip(1);
    let path = match (args.next(), args.next()) {
        (Some(p), None) => p,
        _ => {
            eprintln!("usage: gml-splr <cnf-file>");
            return ExitCode::from(2);
        }
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("gml-splr: {path}: {e}");
            return ExitCode::from(2);
        }
    };
    let (num_vars, clauses) = match parse_dimacs(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("gml-splr: {path}: {e}");
            return ExitCode::from(2);
        }
    };
    // normalize for the backend: drop tautologies and duplicate literals,
    // map an empty clause straight to UNSAT
    let mut cleaned: Vec<Vec<i32>> = Vec::with_capacity(clauses.len());
    for mut c in clauses {
        c.sort_unstable();
        c.dedup();
        if c.windows(2).any(|w| w[0] == -w[1]) {
            continue;
        }
        if c.is_empty() {
            println!("s UNSATISFIABLE");
            return ExitCode::from(20);
        }
        cleaned.push(c);
    }
    if cleaned.is_empty() {
        println!("s SATISFIABLE");
        println!("v 0");
        return ExitCode::from(10);
    }
    match Certificate::try_from(cleaned) {
        Ok(Certificate::SAT(model)) => {
            println!("s SATISFIABLE");
            let mut line = String::from("v");
            for lit in &model {
                line.push(' ');
                line.push_str(&lit.to_string());
            }
            // pad variables the backend never saw
            let seen = model.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0);
            for v in seen + 1..=num_vars as u32 {
                line.push_str(&format!(" -{v}"));
            }
            line.push_str(" 0");
            println!("{line}");
            ExitCode::from(10)
        }
        Ok(Certificate::UNSAT) => {
            println!("s UNSATISFIABLE");
            ExitCode::from(20)
        }
        Err(SolverError::EmptyClause | SolverError::Inconsistent) => {
            println!("s UNSATISFIABLE");
            ExitCode::from(20)
        }
        Err(e) => {
            println!("s UNKNOWN");
            eprintln!("gml-splr: backend error: {e:?}");
            ExitCode::from(1)
        }
    }
}

fn parse_dimacs(text: &str) -> Result<(usize, Vec<Vec<i32>>), String> {
    let mut num_vars: Option<usize> = None;
    let mut num_clauses: Option<usize> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let mut toks = rest.split_whitespace();
            if toks.next() != Some("cnf") {
                return Err(format!("line {}: only `p cnf` is supported", idx + 1));
            }
            num_vars = toks.next().and_then(|t| t.parse().ok());
            num_clauses = toks.next().and_then(|t| t.parse().ok());
            if num_vars.is_none() || num_clauses.is_none() {
                return Err(format!("line {}: malformed problem line", idx + 1));
            }
            continue;
        }
        let nv = num_vars.ok_or_else(|| format!("line {}: clause before problem line", idx + 1))?;
        for tok in line.split_whitespace() {
            let lit: i32 =
                tok.parse().map_err(|_| format!("line {}: bad literal `{tok}`", idx + 1))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() as usize > nv {
                    return Err(format!("line {}: literal {lit} outside 1..={nv}", idx + 1));
                }
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let nv = num_vars.ok_or("missing problem line")?;
    if let Some(nc) = num_clauses {
        if clauses.len() != nc {
            return Err(format!("header promises {nc} clauses, file has {}", clauses.len()));
        }
    }
    Ok((nv, clauses))
}
