use clap::{Args, Parser, Subcommand};

use gml_core::gen::{random_forbidden_set, random_labeling, random_sparse_paving};
use gml_core::graph::make_r10;
use gml_core::matroid::Matroid;
use gml_core::multilabel::{
    check_power_of_two_bound, closest_valid_basis, extract_uniform_minor, lower_bound_instance,
    verify_unique_valid_basis, PowerBoundVerdict,
};
use gml_core::ordering::OrderingPair;
use gml_core::proximity::{check_proximity_conjecture, ProximityVerdict};
use gml_core::rng::Rng;
use gml_core::satgen::{
    build_non_sibo_cnf, decode_model, emit_dimacs, verify_model, CnfOptions, SubsetVarMap,
};
use gml_core::set::ElemSet;
use gml_core::sibo::{find_si_ordering, si_window_table, SiboVerdict};

use gml_cli::formats::{
    self, fmt_ids, fmt_seq, multi_instance, parse_group_spec, parse_id_list, parse_sections,
    proximity_instance, Section,
};
use gml_cli::reproduce::{self, JobCtx, JOB_IDS, LONG_JOB_IDS};
use gml_cli::solver::{resolve_solver, run_solver, SolveOutcome};
use gml_cli::is_sibo_parallel;

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "gml", about = "Group-labeled matroid basis toolkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write an instance file: a fixed matroid or a seeded random one
    Gen(GenArgs),
    /// Check the proximity bound on a labeled instance
    CheckProximity(CheckProximityArgs),
    /// SI-ordering searches over basis pairs
    Sibo {
        #[command(subcommand)]
        cmd: SiboCmd,
    },
    /// Emit, solve, and verify the counterexample-hunting CNF
    Sat {
        #[command(subcommand)]
        cmd: SatCmd,
    },
    /// Multi-labeled instances: constructions and closest valid bases
    Multilabel {
        #[command(subcommand)]
        cmd: MultiCmd,
    },
    /// Uniform minor extraction from sparse paving matroids
    Minor {
        #[command(subcommand)]
        cmd: MinorCmd,
    },
    /// Run a scripted acceptance check by id, or `all`
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GenArgs {
    /// r10 | uniform | sparsepaving | labels
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Ground set size (uniform, sparsepaving, labels)
    #[arg(long)]
    n: Option<usize>,
    /// Rank (uniform, sparsepaving)
    #[arg(long)]
    rank: Option<usize>,
    /// Group spec: Z | Zm:<m> | prod:<spec>,<spec>,... (labels)
    #[arg(long)]
    group: Option<String>,
    /// Forbidden set size (labels)
    #[arg(long, default_value_t = 1)]
    forbidden: usize,
}

#[derive(Args)]
struct CheckProximityArgs {
    /// Instance files; sections are concatenated
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum SiboCmd {
    /// Scan every ordered basis pair for SI-orderings
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Search one basis pair
    Pair {
        file: PathBuf,
        #[arg(long, value_name = "IDS")]
        a: String,
        #[arg(long, value_name = "IDS")]
        b: String,
    },
    /// Print the window table of an explicit ordering pair
    Table {
        file: PathBuf,
        /// Ordering of the first basis, comma-separated
        #[arg(long, value_name = "IDS")]
        a: String,
        /// Ordering of the second basis, comma-separated
        #[arg(long, value_name = "IDS")]
        b: String,
    },
}

#[derive(Subcommand)]
enum SatCmd {
    /// Write the rank-r formula as DIMACS
    Emit {
        #[arg(long)]
        rank: usize,
        #[arg(long = "sparse-paving")]
        sparse_paving: bool,
        #[arg(long = "simplify-units")]
        simplify_units: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the rank-r formula with an external solver
    Solve {
        #[arg(long)]
        rank: usize,
        #[arg(long = "sparse-paving")]
        sparse_paving: bool,
        #[arg(long)]
        solver: Option<String>,
        /// Seconds before the solver is stopped
        #[arg(long = "time-limit")]
        time_limit: Option<u64>,
    },
    /// Decode and check a model produced elsewhere
    Verify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        rank: usize,
        #[arg(long = "sparse-paving")]
        sparse_paving: bool,
    },
}

#[derive(Subcommand)]
enum MultiCmd {
    /// Build the k-constraint instance whose unique valid basis is far
    LowerBound {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closest valid basis to a given basis
    Closest {
        /// Instance files; sections are concatenated
        #[arg(long, num_args = 1.., required = true)]
        instance: Vec<PathBuf>,
        #[arg(long, value_name = "IDS")]
        a: String,
    },
}

#[derive(Subcommand)]
enum MinorCmd {
    /// Extract a uniform minor through a given basis
    Extract {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "IDS")]
        basis: String,
    },
}

#[derive(Args)]
struct ReproduceArgs {
    /// A job id, or `all`
    id: String,
    /// With `all`, also run the long jobs
    #[arg(long = "include-long")]
    include_long: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    solver: Option<String>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Seconds per solver call
    #[arg(long = "time-limit")]
    time_limit: Option<u64>,
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn dispatch(cmd: Cmd) -> Result<i32, String> {
    match cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::CheckProximity(args) => cmd_check_proximity(args),
        Cmd::Sibo { cmd } => match cmd {
            SiboCmd::Check { file, workers } => cmd_sibo_check(file, workers),
            SiboCmd::Pair { file, a, b } => cmd_sibo_pair(file, a, b),
            SiboCmd::Table { file, a, b } => cmd_sibo_table(file, a, b),
        },
        Cmd::Sat { cmd } => match cmd {
            SatCmd::Emit { rank, sparse_paving, simplify_units, out } => {
                cmd_sat_emit(rank, sparse_paving, simplify_units, out)
            }
            SatCmd::Solve { rank, sparse_paving, solver, time_limit } => {
                cmd_sat_solve(rank, sparse_paving, solver, time_limit)
            }
            SatCmd::Verify { model, rank, sparse_paving } => {
                cmd_sat_verify(model, rank, sparse_paving)
            }
        },
        Cmd::Multilabel { cmd } => match cmd {
            MultiCmd::LowerBound { k, out } => cmd_multi_lower_bound(k, out),
            MultiCmd::Closest { instance, a } => cmd_multi_closest(instance, a),
        },
        Cmd::Minor { cmd } => match cmd {
            MinorCmd::Extract { file, k, basis } => cmd_minor_extract(file, k, basis),
        },
        Cmd::Reproduce(args) => cmd_reproduce(args),
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_sections(paths: &[PathBuf]) -> Result<Vec<Section>, String> {
    let mut sections = Vec::new();
    for path in paths {
        let text = read_file(path)?;
        let mut parsed =
            parse_sections(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        sections.append(&mut parsed);
    }
    Ok(sections)
}

fn load_matroid(path: &PathBuf) -> Result<Matroid, String> {
    let sections = load_sections(core::slice::from_ref(path))?;
    sections
        .iter()
        .find_map(|s| s.to_matroid())
        .ok_or_else(|| format!("{}: no matroid, sparsepaving, or graph section", path.display()))
}

fn parse_set(raw: &str) -> Result<ElemSet, String> {
    Ok(ElemSet::from_iter(parse_id_list(raw)?))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32, String> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| format!("--{name} is required for --type {}", args.kind))
    };
    let body = match args.kind.as_str() {
        "r10" => formats::write_matroid(&make_r10()),
        "uniform" => {
            let r = need(args.rank, "rank")?;
            let n = need(args.n, "n")?;
            let m = Matroid::make_uniform(r, n).map_err(|e| e.to_string())?;
            formats::write_matroid(&m)
        }
        "sparsepaving" => {
            let r = need(args.rank, "rank")?;
            let n = need(args.n, "n")?;
            let mut rng = Rng::new(args.seed);
            let m = random_sparse_paving(&mut rng, r, n).map_err(|e| e.to_string())?;
            formats::write_sparse_paving(&m)
        }
        "labels" => {
            let n = need(args.n, "n")?;
            let spec = args.group.as_deref().ok_or("--group is required for --type labels")?;
            let group = parse_group_spec(0, spec).map_err(|e| e.msg)?;
            let mut rng = Rng::new(args.seed);
            let psi = random_labeling(&mut rng, &group, n);
            let f = random_forbidden_set(&mut rng, &group, args.forbidden, None)
                .map_err(|e| e.to_string())?;
            formats::write_labels(&psi, f.elements())
        }
        other => return Err(format!("unknown --type `{other}`")),
    };
    emit(args.out.as_ref(), &format!("# seed={}\n{body}", args.seed))?;
    Ok(0)
}

fn cmd_check_proximity(args: CheckProximityArgs) -> Result<i32, String> {
    let sections = load_sections(&args.files)?;
    let inst = proximity_instance(&sections)?;
    match check_proximity_conjecture(&inst).map_err(|e| e.to_string())? {
        ProximityVerdict::Pass { .. } => {
            println!("PASS");
            Ok(0)
        }
        ProximityVerdict::Fail { witness, radius, bound } => {
            println!("FAIL witness={} radius={radius} bound={bound}", fmt_ids(witness));
            Ok(1)
        }
    }
}

fn cmd_sibo_check(file: PathBuf, workers: usize) -> Result<i32, String> {
    if workers == 0 {
        return Err("--workers must be positive".into());
    }
    let m = load_matroid(&file)?;
    match is_sibo_parallel(&m, workers) {
        SiboVerdict::Pass => {
            println!("PASS bases={}", m.bases().len());
            Ok(0)
        }
        SiboVerdict::Fail { a, b } => {
            println!("FAIL a={} b={}", fmt_ids(a), fmt_ids(b));
            Ok(1)
        }
    }
}

fn cmd_sibo_pair(file: PathBuf, a: String, b: String) -> Result<i32, String> {
    let m = load_matroid(&file)?;
    let a = parse_set(&a)?;
    let b = parse_set(&b)?;
    match find_si_ordering(&m, a, b).map_err(|e| e.to_string())? {
        Some(ord) => {
            println!("a={}", fmt_seq(&ord.full_a()));
            println!("b={}", fmt_seq(&ord.full_b()));
            Ok(0)
        }
        None => {
            println!("NONE");
            Ok(1)
        }
    }
}

fn cmd_sibo_table(file: PathBuf, a: String, b: String) -> Result<i32, String> {
    let m = load_matroid(&file)?;
    let pair =
        OrderingPair::new(parse_id_list(&a)?, parse_id_list(&b)?).map_err(|e| e.to_string())?;
    let table = si_window_table(&m, &pair).map_err(|e| e.to_string())?;
    for i in 1..=table.r() {
        let row: Vec<&str> = table.row(i).iter().map(|&f| if f { "1" } else { "0" }).collect();
        println!("{}{}", "  ".repeat(i - 1), row.join(" "));
    }
    Ok(0)
}

fn cnf_options(sparse_paving: bool, simplify_units: bool) -> CnfOptions {
    CnfOptions { sparse_paving, simplify_units }
}

fn cmd_sat_emit(
    rank: usize,
    sparse_paving: bool,
    simplify_units: bool,
    out: Option<PathBuf>,
) -> Result<i32, String> {
    let cnf = build_non_sibo_cnf(rank, cnf_options(sparse_paving, simplify_units))
        .map_err(|e| e.to_string())?;
    emit(out.as_ref(), &emit_dimacs(&cnf))?;
    Ok(0)
}

fn cmd_sat_solve(
    rank: usize,
    sparse_paving: bool,
    solver: Option<String>,
    time_limit: Option<u64>,
) -> Result<i32, String> {
    let cnf =
        build_non_sibo_cnf(rank, cnf_options(sparse_paving, false)).map_err(|e| e.to_string())?;
    let cmd = resolve_solver(solver.as_deref()).map_err(|e| e.to_string())?;
    let limit = time_limit.map(Duration::from_secs);
    match run_solver(&cmd, &cnf, limit).map_err(|e| e.to_string())? {
        SolveOutcome::Unsat => {
            println!("s UNSATISFIABLE");
            Ok(0)
        }
        SolveOutcome::Sat(assignment) => {
            let map = SubsetVarMap::new(rank);
            let decoded = decode_model(&map, &assignment).map_err(|e| e.to_string())?;
            if !verify_model(&decoded) {
                return Err("solver model fails verification".into());
            }
            let m =
                Matroid::from_bases(decoded.n, decoded.bases.clone()).map_err(|e| e.to_string())?;
            println!("s SATISFIABLE");
            print!("{}", formats::write_matroid(&m));
            Ok(1)
        }
        SolveOutcome::Unknown(msg) => {
            println!("s UNKNOWN");
            eprintln!("solver: {msg}");
            Ok(3)
        }
    }
}

fn cmd_sat_verify(model: PathBuf, rank: usize, sparse_paving: bool) -> Result<i32, String> {
    let text = read_file(&model)?;
    let map = SubsetVarMap::new(rank);
    let nv = gml_core::set::binom(2 * rank, rank) as usize;
    let mut assignment = vec![None; nv];
    for line in text.lines() {
        let line = line.trim();
        let line = line.strip_prefix("v ").unwrap_or(line);
        if line.starts_with('c') || line.starts_with('s') {
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| format!("{}: bad literal `{tok}`", model.display()))?;
            if lit == 0 {
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var == 0 || var > nv {
                return Err(format!("{}: literal {lit} out of range", model.display()));
            }
            assignment[var - 1] = Some(lit > 0);
        }
    }
    let assignment: Vec<bool> = assignment
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or(format!("{}: variable {} unassigned", model.display(), i + 1)))
        .collect::<Result<_, _>>()?;
    let decoded = decode_model(&map, &assignment).map_err(|e| e.to_string())?;
    let mut ok = verify_model(&decoded);
    if ok && sparse_paving {
        match Matroid::from_bases(decoded.n, decoded.bases.clone()) {
            Ok(m) => ok = m.is_sparse_paving(),
            Err(_) => ok = false,
        }
    }
    if ok {
        println!("VERIFIED bases={}", decoded.bases.len());
        Ok(0)
    } else {
        println!("NOT VERIFIED");
        Ok(1)
    }
}

fn cmd_multi_lower_bound(k: usize, out: Option<PathBuf>) -> Result<i32, String> {
    let (inst, a) = lower_bound_instance(k).map_err(|e| e.to_string())?;
    let b = inst.matroid().ground().diff(a);
    if !verify_unique_valid_basis(&inst, b).map_err(|e| e.to_string())? {
        println!("FAIL complement is not the unique valid basis");
        return Ok(1);
    }
    let (_, dist) = closest_valid_basis(&inst, a)
        .map_err(|e| e.to_string())?
        .expect("the unique valid basis exists");
    if let Some(path) = out {
        let mut text = formats::write_matroid(inst.matroid());
        for c in inst.constraints() {
            text.push_str(&formats::write_labels(c.psi(), core::slice::from_ref(c.forbidden())));
        }
        emit(Some(&path), &text)?;
    }
    println!("k={k} bases={} unique={} dist={dist}", inst.matroid().bases().len(), fmt_ids(b));
    Ok(0)
}

fn cmd_multi_closest(instance: Vec<PathBuf>, a: String) -> Result<i32, String> {
    let sections = load_sections(&instance)?;
    let inst = multi_instance(&sections)?;
    let a = parse_set(&a)?;
    match closest_valid_basis(&inst, a).map_err(|e| e.to_string())? {
        None => {
            println!("NONE");
            Ok(1)
        }
        Some((b, dist)) => match check_power_of_two_bound(&inst, a).map_err(|e| e.to_string())? {
            PowerBoundVerdict::Satisfied { bound, .. } => {
                println!("closest={} dist={dist} bound={bound}", fmt_ids(b));
                Ok(0)
            }
            PowerBoundVerdict::Violated { bound, .. } => {
                println!("FAIL closest={} dist={dist} bound={bound}", fmt_ids(b));
                Ok(1)
            }
            PowerBoundVerdict::NoValidBasis => unreachable!("a closest basis was just found"),
        },
    }
}

fn cmd_minor_extract(file: PathBuf, k: usize, basis: String) -> Result<i32, String> {
    let m = load_matroid(&file)?;
    let b = parse_set(&basis)?;
    let (x, y) = extract_uniform_minor(&m, b, k).map_err(|e| e.to_string())?;
    let (minor, _) = m.minor(x, y).map_err(|e| e.to_string())?;
    println!("X={}", fmt_ids(x));
    println!("Y={}", fmt_ids(y));
    print!("{}", formats::write_matroid(&minor));
    Ok(0)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<i32, String> {
    let ctx = JobCtx {
        seed: args.seed,
        solver: args.solver,
        time_limit: args.time_limit.map(Duration::from_secs),
    };
    let ids: Vec<&str> = if args.id == "all" {
        let mut ids: Vec<&str> = JOB_IDS.to_vec();
        if args.include_long {
            ids.extend_from_slice(&LONG_JOB_IDS);
        }
        ids
    } else if JOB_IDS.contains(&args.id.as_str()) || LONG_JOB_IDS.contains(&args.id.as_str()) {
        vec![args.id.as_str()]
    } else {
        return Err(format!(
            "unknown reproduce id `{}`; known ids: {} and long jobs {}",
            args.id,
            JOB_IDS.join(", "),
            LONG_JOB_IDS.join(", ")
        ));
    };
    println!("seed={}", ctx.seed);
    let mut all_pass = true;
    for id in ids {
        let start = Instant::now();
        let report = reproduce::run_job(id, &ctx)?;
        eprintln!("# {id} {:.2}s", start.elapsed().as_secs_f64());
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!("{id}: {verdict} {}", report.detail);
        all_pass &= report.pass;
    }
    Ok(if all_pass { 0 } else { 1 })
}
