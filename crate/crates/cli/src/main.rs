//! Command-line interface: classify configurations, emit representatives,
//! run the finite-field census, export the Hasse diagram, and run the
//! verification suites.
//!
//! Exit codes: 0 on success (all checks pass), 1 on verification failure,
//! 2 on usage or parse errors.

mod file;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use projorb::census::{census_by_group_action, census_by_label, Census, CensusMethod};
use projorb::classify::classify;
use projorb::closure::{to_dot, to_dot_mod_s4};
use projorb::field::FieldCtx;
use projorb::label::OrbitLabel;
use projorb::openfinite::{has_open_orbit, infinite_family_witness, is_finite_type, open_orbit_witness};
use projorb::param::ProjParam;
use projorb::rankfn::{compute_pi, format_mask};
use projorb::splitting::compute_varpi;
use projorb::stab::stabilizer_dim;
use projorb::verify::{run_all_with, VerifyOptions};

use file::ConfigFile;

const EXIT_VERIFICATION_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "projorb",
    version,
    about = "Classify quadruples of points in the projective plane up to projective transformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a configuration file (JSON; reads stdin when no path given).
    Classify {
        /// Path to the configuration file; `-` or absent for stdin.
        path: Option<PathBuf>,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Write the canonical representative of an orbit label.
    Repr {
        /// Label, e.g. "phi[7;1]", "phi[4;1,2]", or "O5@2" (affine parameter).
        label: String,
        /// Output path (stdout when absent).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive orbit census over a prime field.
    Census {
        /// Field size (prime).
        #[arg(long)]
        q: u64,
        /// Counting method.
        #[arg(long, value_enum, default_value_t = MethodArg::Label)]
        method: MethodArg,
        /// Shape "n,m" for the group method (default 3,4).
        #[arg(long)]
        nm: Option<String>,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Export the Hasse diagram of closures as DOT.
    Hasse {
        /// Affine parameter of the 5-dimensional orbit (rational, not 0 or 1).
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Write DOT here instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Quotient by column permutations (nine classes).
        #[arg(long = "mod-s4")]
        mod_s4: bool,
    },
    /// Run the verification suites.
    Verify {
        /// Trials per randomized suite.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report open-orbit existence and orbit finiteness for (n, m).
    Openfinite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Label,
    Group,
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (`projorb hasse ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { path, json } => cmd_classify(path, json),
        Command::Repr { label, out } => cmd_repr(&label, out),
        Command::Census { q, method, nm, json } => cmd_census(q, method, nm, json),
        Command::Hasse { p, dot, mod_s4 } => cmd_hasse(&p, dot, mod_s4),
        Command::Verify { trials, seed } => cmd_verify(trials, seed),
        Command::Openfinite { n, m } => cmd_openfinite(n, m),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_input(path: Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(&p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn parse_config_file(text: &str) -> Result<ConfigFile, String> {
    serde_json::from_str(text)
        .map_err(|e| format!("parse error at line {}, column {}: {e}", e.line(), e.column()))
}

fn cmd_classify(path: Option<PathBuf>, json: bool) -> Result<ExitCode, String> {
    let text = read_input(path)?;
    let cfg_file = parse_config_file(&text)?;
    let cfg = cfg_file.to_configuration()?;
    if cfg.m() != 4 || !(2..=3).contains(&cfg.n()) {
        return Err(format!(
            "unsupported shape n = {}, m = {}: expected (3,4) or (2,4)",
            cfg.n(),
            cfg.m()
        ));
    }
    let label = classify(&cfg).map_err(|e| e.to_string())?;
    let phi = compute_pi(&cfg);
    let varpi = compute_varpi(&cfg);
    let representative = label.representative(cfg.field()).map_err(|e| e.to_string())?;
    let affine = |p: &ProjParam| p.affine().map_or("inf".to_string(), |a| a.to_string());
    if json {
        let rank_table: serde_json::Map<String, serde_json::Value> = (0..1u32 << cfg.m())
            .map(|mask| (format_mask(mask, cfg.m()), json!(phi.value(mask))))
            .collect();
        let mut out = json!({
            "label": label.to_string(),
            "dim": label.orbit_dim(),
            "splitting": varpi.to_string(),
            "rank_function": rank_table,
            "representative": ConfigFile::from_configuration(&representative),
        });
        if let OrbitLabel::O5(p) = &label {
            out["parameter"] = json!({
                "projective": p.to_string(),
                "affine": affine(p),
            });
        }
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("{label}, dim {}", label.orbit_dim());
        if let OrbitLabel::O5(p) = &label {
            println!("p = {}", affine(p));
        }
        println!("splitting: {varpi}");
        println!("rank function:");
        for mask in 0..1u32 << cfg.m() {
            println!("  {} -> {}", format_mask(mask, cfg.m()), phi.value(mask));
        }
        let cols: Vec<String> = representative.columns().iter().map(|c| c.to_string()).collect();
        println!("representative: {}", cols.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_repr(label_text: &str, out: Option<PathBuf>) -> Result<ExitCode, String> {
    let label = OrbitLabel::parse(label_text).map_err(|e| e.to_string())?;
    let rep = label.representative(FieldCtx::Rational).map_err(|e| e.to_string())?;
    let file = ConfigFile::from_configuration(&rep);
    let text = serde_json::to_string_pretty(&file).expect("serializable");
    match out {
        Some(path) => fs::write(&path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_nm(nm: Option<&str>) -> Result<(usize, usize), String> {
    match nm {
        None => Ok((3, 4)),
        Some(text) => {
            let (n, m) = text
                .split_once(',')
                .ok_or_else(|| format!("cannot parse --nm {text:?}: expected \"n,m\""))?;
            let n = n.trim().parse().map_err(|_| format!("bad n in --nm {text:?}"))?;
            let m = m.trim().parse().map_err(|_| format!("bad m in --nm {text:?}"))?;
            Ok((n, m))
        }
    }
}

fn cmd_census(
    q: u64,
    method: MethodArg,
    nm: Option<String>,
    json: bool,
) -> Result<ExitCode, String> {
    let (n, m) = parse_nm(nm.as_deref())?;
    let census: Census = match method {
        MethodArg::Label => {
            if (n, m) != (3, 4) {
                return Err(format!(
                    "the label census covers n = 3, m = 4 only; got n = {n}, m = {m}"
                ));
            }
            census_by_label(q).map_err(|e| e.to_string())?
        }
        MethodArg::Group => census_by_group_action(q, n, m).map_err(|e| e.to_string())?,
    };
    if json {
        println!("{}", census.report.to_json());
    } else {
        print!("{}", census.report.to_text());
    }
    let mut ok = true;
    let total: u64 = census.report.per_label.iter().map(|e| e.count).sum();
    if total != census.report.total_points {
        eprintln!(
            "cross-check failed: class sizes sum to {total}, space has {}",
            census.report.total_points
        );
        ok = false;
    }
    if census.report.method == CensusMethod::ByGroupAction
        && census.report.per_label.iter().any(|e| e.stabilizer_order.is_none())
    {
        eprintln!("cross-check failed: an orbit size does not divide the group order");
        ok = false;
    }
    if census.report.method == CensusMethod::ByLabel
        && census.report.orbit_count != 25 + q.saturating_sub(2)
    {
        eprintln!(
            "cross-check failed: expected {} classes, found {}",
            25 + q.saturating_sub(2),
            census.report.orbit_count
        );
        ok = false;
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFICATION_FAILURE) })
}

fn parse_param(text: &str) -> Result<ProjParam, String> {
    let a: BigRational = text
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse parameter {text:?} as a rational"))?;
    let p = ProjParam::from_affine(a);
    if !p.is_primed() {
        return Err("parameter must avoid 0, 1, and infinity".to_string());
    }
    Ok(p)
}

fn cmd_hasse(p_text: &str, dot_path: Option<PathBuf>, mod_s4: bool) -> Result<ExitCode, String> {
    let p = parse_param(p_text)?;
    let dot = if mod_s4 {
        to_dot_mod_s4(&p).map_err(|e| e.to_string())?
    } else {
        to_dot(&p).map_err(|e| e.to_string())?
    };
    match dot_path {
        Some(path) => fs::write(&path, dot.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{dot}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(trials: u64, seed: u64) -> Result<ExitCode, String> {
    let opts = VerifyOptions { trials, seed };
    // Negative-control fixture for tests: corrupt the parameter-action
    // generator table and confirm the run goes red.
    let corrupt = std::env::var("PROJORB_TEST_CORRUPT_PSI").is_ok_and(|v| v == "1");
    let outcomes = run_all_with(&opts, corrupt);
    let mut checks = 0;
    let mut failures = 0;
    for o in &outcomes {
        let status = if o.passed() { "ok" } else { "FAILED" };
        println!(
            "suite {:<13} {:>8} checks, {} failures ... {status}",
            o.name, o.checks, o.failures
        );
        for note in &o.notes {
            println!("    {note}");
        }
        checks += o.checks;
        failures += o.failures;
    }
    if failures == 0 {
        println!("verify: PASS ({checks} checks)");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verify: FAIL ({failures} of {checks} checks)");
        Ok(ExitCode::from(EXIT_VERIFICATION_FAILURE))
    }
}

fn cmd_openfinite(n: usize, m: usize) -> Result<ExitCode, String> {
    if n < 2 || m < 1 {
        return Err(format!("need n >= 2 and m >= 1, got n = {n}, m = {m}"));
    }
    let open = has_open_orbit(n, m);
    let finite = is_finite_type(n, m);
    let open_part = if open {
        let witness = open_orbit_witness(n, m, FieldCtx::Rational).map_err(|e| e.to_string())?;
        let dim = n * n - stabilizer_dim(&witness);
        if dim != (n - 1) * m {
            return Err(format!(
                "witness certification failed: orbit dimension {dim} != {}",
                (n - 1) * m
            ));
        }
        format!("open: yes (dim {dim} witness verified)")
    } else {
        "open: no".to_string()
    };
    let finite_part = if finite {
        "finite: yes".to_string()
    } else {
        "finite: no (family v(p))".to_string()
    };
    println!("{open_part}; {finite_part}");
    if open {
        let witness = open_orbit_witness(n, m, FieldCtx::Rational).map_err(|e| e.to_string())?;
        let cols: Vec<String> = witness.columns().iter().map(|c| c.to_string()).collect();
        println!("witness: {}", cols.join(" "));
    }
    if !finite && m >= 4 {
        let p = ProjParam::from_ints(FieldCtx::Rational, 1, 2).expect("nonzero");
        let member = infinite_family_witness(n, m, &p).map_err(|e| e.to_string())?;
        let cols: Vec<String> = member.columns().iter().map(|c| c.to_string()).collect();
        println!("family member at p = 2: {}", cols.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}
