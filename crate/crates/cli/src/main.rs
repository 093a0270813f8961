//! `matroid-cert`: replay minor-containment certificates and inspect binary
//! matroids from the command line.
//!
//! Exit status: 0 on success, 1 when a check answers "no" or a replay
//! fails, 2 for usage, parse and capacity errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use matroid_core::catalog::{self, write_matrix_file};
use matroid_core::minor::{check_graphic_cocircuits, graphic_obstruction};
use matroid_core::{
    built_in_cases, find_minor_witness, load_certificates, replay_all, BinaryMatroid, MinorOp,
};

#[derive(Parser, Debug)]
#[command(
    name = "matroid-cert",
    version,
    about = "Binary matroid minor certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Replay the built-in certificates, or those in a JSON file.
    Verify {
        /// Only replay the named case(s).
        #[arg(long)]
        case: Vec<String>,
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, env = "MATROID_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
        /// One JSON report per line instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Test whether a minor of MATROID is isomorphic to TARGET.
    Minor {
        #[arg(long, value_name = "FILE|NAME")]
        matroid: String,
        #[arg(long, value_name = "FILE|NAME")]
        target: String,
        /// Contract these elements first.
        #[arg(long, value_delimiter = ',', value_name = "E1,E2,...")]
        contract: Vec<String>,
        /// Then delete these.
        #[arg(long, value_delimiter = ',', value_name = "E1,E2,...")]
        delete: Vec<String>,
        /// Print the witness as JSON.
        #[arg(long)]
        witness: bool,
    },
    /// Test graphicness via the excluded minors F7, F7*, M*(K5), M*(K33).
    Graphic {
        #[arg(long, value_name = "FILE|NAME")]
        matroid: String,
    },
    /// List cocircuits, optionally testing M \ Y for graphicness.
    Cocircuits {
        #[arg(long, value_name = "FILE|NAME")]
        matroid: String,
        #[arg(long)]
        check_graphic: bool,
    },
    /// Rank, size, loops, coloops and circuit count.
    Info {
        #[arg(long, value_name = "FILE|NAME")]
        matroid: String,
    },
    /// Write the dual in the matrix file format.
    Dual {
        #[arg(long, value_name = "FILE|NAME")]
        matroid: String,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

/// A matroid argument: a file path, or failing that a catalog name.
fn load_matroid(arg: &str) -> Result<(String, BinaryMatroid)> {
    let path = Path::new(arg);
    if path.is_file() {
        if catalog::canonical_name(arg).is_some() {
            eprintln!("warning: `{arg}` is both a file and a catalog name; using the file");
        }
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return catalog::parse_matrix_file(&text).with_context(|| format!("parsing {arg}"));
    }
    match catalog::get_named(arg) {
        Ok(m) => Ok((catalog::canonical_name(arg).unwrap_or(arg).to_string(), m)),
        Err(_) => bail!("`{arg}` is neither a readable file nor a catalog name"),
    }
}

fn labels(ls: &[matroid_core::ElementLabel]) -> String {
    ls.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(",")
}

fn verify(case: &[String], cert: Option<&Path>, jobs: Option<u32>, json: bool) -> Result<ExitCode> {
    let mut cases = match cert {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            load_certificates(&text).with_context(|| format!("loading {}", p.display()))?
        }
        None => built_in_cases(),
    };
    if !case.is_empty() {
        for name in case {
            if !cases.iter().any(|c| &c.name == name) {
                bail!("no case named `{name}`");
            }
        }
        cases.retain(|c| case.contains(&c.name));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        pool = pool.num_threads(n as usize);
    }
    let summary = pool.build()?.install(|| replay_all(&cases));

    for r in &summary.reports {
        if json {
            println!("{}", serde_json::to_string(r)?);
            continue;
        }
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let found = r.verdict.as_deref().unwrap_or("no listed minor");
        let mut line = format!(
            "{status} {:<5} found {found} (expected {})",
            r.case_name, r.expected
        );
        if r.verdict.is_some() {
            line += if r.witness_verified {
                ", witness verified"
            } else {
                ", witness REJECTED"
            };
        }
        if !r.loop_contractions.is_empty() {
            line += &format!(", loop contracted: {}", labels(&r.loop_contractions));
        }
        if let Some(e) = &r.error {
            line += &format!(", error: {e}");
        }
        println!("{line} [{:.1} ms]", r.elapsed_ms);
    }
    if !json {
        println!("{}/{} passed", summary.passed, summary.total);
    }
    Ok(if summary.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn minor(
    matroid: &str,
    target: &str,
    contract: &[String],
    delete: &[String],
    witness: bool,
) -> Result<ExitCode> {
    let (_, m) = load_matroid(matroid)?;
    let (target_name, t) = load_matroid(target)?;
    let ops: Vec<MinorOp> = contract
        .iter()
        .map(|e| MinorOp::contract(e))
        .chain(delete.iter().map(|e| MinorOp::delete(e)))
        .collect::<matroid_core::Result<_>>()?;
    let host = m.apply_minor_ops(&ops)?;
    match find_minor_witness(&host, &t)? {
        Some(w) => {
            println!("has minor {target_name}");
            if witness {
                println!("{}", serde_json::to_string_pretty(&w)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("no minor {target_name}");
            Ok(ExitCode::from(1))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            case,
            cert,
            jobs,
            json,
        } => verify(&case, cert.as_deref(), jobs, json),
        Command::Minor {
            matroid,
            target,
            contract,
            delete,
            witness,
        } => minor(&matroid, &target, &contract, &delete, witness),
        Command::Graphic { matroid } => {
            let (name, m) = load_matroid(&matroid)?;
            match graphic_obstruction(&m)? {
                None => {
                    println!("{name} is graphic");
                    Ok(ExitCode::SUCCESS)
                }
                Some((ex, w)) => {
                    println!(
                        "{name} is not graphic: has an {ex} minor (contract {{{}}}, delete {{{}}})",
                        labels(&w.contract_set),
                        labels(&w.delete_set)
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Cocircuits {
            matroid,
            check_graphic,
        } => {
            let (_, m) = load_matroid(&matroid)?;
            if !check_graphic {
                for y in m.cocircuits()? {
                    println!("{}", labels(&y));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let report = check_graphic_cocircuits(&m)?;
            for c in &report.checks {
                match &c.obstruction {
                    None => println!("{} graphic", labels(&c.cocircuit)),
                    Some(ex) => println!("{} not graphic ({ex} minor)", labels(&c.cocircuit)),
                }
            }
            let good = report.checks.iter().filter(|c| c.graphic).count();
            println!("{good}/{} cocircuits graphic", report.checks.len());
            Ok(if report.all_graphic {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Info { matroid } => {
            let (name, m) = load_matroid(&matroid)?;
            let circuits = m.circuits()?;
            println!("name      {name}");
            println!("elements  {}", m.len());
            println!("rank      {}", m.rank());
            println!("corank    {}", m.corank());
            println!("loops     {}", m.loops().len());
            println!("coloops   {}", m.coloops().len());
            println!("circuits  {}", circuits.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { matroid, output } => {
            let (name, m) = load_matroid(&matroid)?;
            let text = write_matrix_file(&format!("{name}*"), &m.dual());
            match output {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
