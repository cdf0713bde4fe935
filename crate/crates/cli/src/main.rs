mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use symgirard::sweep::{run_sweep, Policy};
use symgirard::{
    e_to_p, expand_m, m_to_p, pieri_power_times_monomial, theorem_terms, MExpansion, PExpansion, Partition, Poly,
    Rational,
};

#[derive(Parser, Debug)]
#[command(name = "symgirard", version, about = "Exact monomial/power-sum symmetric function toolkit")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand m_λ as a polynomial in N variables.
    Expand {
        partition: Partition,
        #[arg(long = "vars", value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
        vars: u32,
    },
    /// Write m_λ in the power-sum basis.
    M2p { partition: Partition },
    /// Expand p_a · m_λ in the monomial basis.
    Pieri {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
        partition: Partition,
    },
    /// Write e_k in the power-sum basis.
    E2p {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Check the identity for every partition up to a weight bound.
    Verify {
        #[arg(long = "max-weight", value_name = "W", value_parser = clap::value_parser!(u32).range(1..))]
        max_weight: u32,
        #[arg(long, value_enum, default_value_t = PolicyArg::Paper)]
        policy: PolicyArg,
        #[arg(long, value_name = "K", default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Print the identity at λ in current-algebra notation.
    Garland { partition: Partition },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    Paper,
    Extended,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Paper => Policy::Paper,
            PolicyArg::Extended => Policy::Extended,
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn print_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

fn require_nonempty(p: &Partition) -> Result<(), ExitCode> {
    if p.is_empty() {
        eprintln!("error: the empty partition is not accepted here");
        Err(ExitCode::from(EXIT_USAGE))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), ExitCode> {
    match cli.command {
        Command::Expand { partition, vars } => {
            let f: Poly = expand_m(&partition, vars as usize);
            if cli.json {
                let mut v = render::poly_json(&f);
                v["partition"] = render::partition_json(&partition);
                print_json(v);
            } else {
                println!("{f}");
            }
        }
        Command::M2p { partition } => {
            require_nonempty(&partition)?;
            let p: PExpansion = m_to_p(&partition);
            if cli.json {
                let mut v = render::expansion_json(&p);
                v["partition"] = render::partition_json(&partition);
                print_json(v);
            } else {
                println!("{p}");
            }
        }
        Command::Pieri { power, partition } => {
            let m: MExpansion = pieri_power_times_monomial(power, &partition);
            if cli.json {
                let mut v = render::expansion_json(&m);
                v["power"] = json!(power);
                v["partition"] = render::partition_json(&partition);
                print_json(v);
            } else {
                println!("{m}");
            }
        }
        Command::E2p { k } => {
            let p: PExpansion = e_to_p::<Rational>(k as usize);
            if cli.json {
                let mut v = render::expansion_json(&p);
                v["k"] = json!(k);
                print_json(v);
            } else {
                println!("{p}");
            }
        }
        Command::Verify {
            max_weight,
            policy,
            jobs,
        } => {
            let report = run_sweep(max_weight, policy.into(), jobs);
            if cli.json {
                print_json(render::report_json(&report));
            } else {
                println!("{}", render::report_text(&report));
            }
            if !report.passed() {
                return Err(ExitCode::from(EXIT_FAILURE));
            }
        }
        Command::Garland { partition } => {
            require_nonempty(&partition)?;
            let terms = theorem_terms(&partition).expect("nonempty");
            let identity = render::garland_identity(&partition, &terms);
            let ones = partition.distinct_len() == 1 && partition.values().next() == Some(1);
            let classical = ones.then(|| render::garland_classical(partition.length()));
            if cli.json {
                print_json(json!({
                    "partition": render::partition_json(&partition),
                    "identity": identity,
                    "classical": classical,
                    "terms": terms.iter().map(render::theorem_term_json).collect::<Vec<_>>(),
                }));
            } else {
                println!("{identity}");
                if let Some(line) = classical {
                    println!("{line}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
