mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use totreal::classify::{table1, table2, z_set};
use totreal::dioph::{
    family_solution, solve_all_with, solver, solvers, DiophInstance, DiophSolution, Family,
};
use totreal::maslov::{maslov_index_with, Integrand, Mode, TrigFamily};
use totreal::report::{ClassifyReport, ZSetReport};
use totreal::surface::{parse_surface, Surface};
use totreal::target::{parse_target, Target};
use totreal::Error;

#[derive(Debug, Parser)]
#[command(
    name = "totreal",
    version,
    about = "Totally real surfaces in complex surfaces: existence, invariants, Maslov indices"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Reserved; no command uses randomness.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Existence of totally real immersions and embeddings, with the realizable invariants.
    Classify {
        /// or:<genus>, nonor:<genus>, S2, T2, RP2 or K2
        #[arg(long)]
        surface: String,
        /// C2, CP2, CP1xCP1 or CP2#<m>
        #[arg(long)]
        target: String,
    },
    /// The set of realizable (index, degree) pairs.
    Zset {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        target: String,
    },
    /// Solutions of sum q = 3d, sum q^2 = d^2 + chi.
    Dioph {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long, allow_hyphen_values = true)]
        dmin: i64,
        #[arg(long, allow_hyphen_values = true)]
        dmax: i64,
        /// List members of the explicit families instead of searching.
        #[arg(long)]
        families: bool,
        #[arg(long, default_value = "pruned")]
        solver: String,
    },
    /// Maslov index of the trigonometric torus or Klein bottle in C2.
    Maslov {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, default_value_t = 10.0)]
        a: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::Torus)]
        mode: ModeArg,
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = IntegrandArg::Finite)]
        integrand: IntegrandArg,
    },
    /// Regenerate the existence table (1) or the total mod 2 degree table (2).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Torus,
    Klein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IntegrandArg {
    Finite,
    Limit,
}

/// Rounds to 9 significant digits so printed floats do not depend on the last bits.
pub fn sig9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

fn surface_target(surface: &str, target: &str) -> Result<(Surface, Target), Error> {
    Ok((parse_surface(surface)?, parse_target(target)?))
}

/// Family members lying in the instance, with `d` in range.
fn family_members(inst: &DiophInstance, dmin: i64, dmax: i64) -> Vec<(Family, DiophSolution)> {
    let (m, chi) = (i64::from(inst.m), inst.chi);
    let mut candidates = vec![Family::Zero { m: inst.m }];
    if m % 3 == 0 {
        candidates.push(Family::Ones { d: m / 3 });
    }
    if m % 2 == 0 && m >= 2 {
        candidates.push(Family::Conic { d: (m - 2) / 2 });
    }
    if m == 10 {
        for eps in [0u8, 1] {
            let num = 8 - 2 * i64::from(eps) - chi;
            if num % 6 == 0 {
                candidates.push(Family::TenA { c: num / 6, eps });
            }
        }
        if (4 - chi) % 6 == 0 {
            candidates.push(Family::TenB { c: (4 - chi) / 6 });
        }
    }
    candidates
        .into_iter()
        .filter_map(|f| family_solution(f).ok().map(|(i, s)| (f, i, s)))
        .filter(|(_, i, s)| *i == *inst && (dmin..=dmax).contains(&s.d))
        .map(|(f, _, s)| (f, s))
        .collect()
}

fn run(cli: &Cli) -> Result<String, Error> {
    let json = cli.format == Format::Json;
    let doc = |v: Value| serde_json::to_string_pretty(&v).expect("JSON value serializes") + "\n";
    match &cli.command {
        Command::Classify { surface, target } => {
            let (s, t) = surface_target(surface, target)?;
            let report = ClassifyReport::new(&s, &t);
            Ok(if json {
                doc(serde_json::to_value(&report).expect("report serializes"))
            } else {
                render::classify(&report)
            })
        }
        Command::Zset { surface, target } => {
            let (s, t) = surface_target(surface, target)?;
            let z = z_set(&s, &t);
            let report = ZSetReport::from(&z);
            Ok(if json {
                doc(serde_json::to_value(&report).expect("report serializes"))
            } else {
                render::zset(&s, &t, &report)
            })
        }
        Command::Dioph {
            m,
            chi,
            dmin,
            dmax,
            families,
            solver: name,
        } => {
            let inst = DiophInstance::new(*m, *chi)?;
            if dmin > dmax {
                return Err(Error::InvalidArgument(format!(
                    "empty range [{dmin}, {dmax}]"
                )));
            }
            let lines: Vec<(Option<Family>, DiophSolution)> = if *families {
                family_members(&inst, *dmin, *dmax)
                    .into_iter()
                    .map(|(f, s)| (Some(f), s))
                    .collect()
            } else {
                let algo = solver(name).ok_or_else(|| {
                    let known: Vec<&str> = solvers().keys().copied().collect();
                    Error::InvalidArgument(format!(
                        "unknown solver '{name}' (known: {})",
                        known.join(", ")
                    ))
                })?;
                solve_all_with(algo.as_ref(), &inst, *dmin, *dmax)?
                    .into_iter()
                    .map(|s| (None, s))
                    .collect()
            };
            if !json {
                return Ok(render::dioph(&inst, &lines));
            }
            let mut out = String::new();
            for (family, sol) in &lines {
                let mut v = serde_json::to_value(sol).expect("solution serializes");
                if let Some(f) = family {
                    v["family"] =
                        serde_json::to_value(f).expect("family serializes")["family"].clone();
                }
                out += &serde_json::to_string(&v).expect("JSON value serializes");
                out.push('\n');
            }
            Ok(out)
        }
        Command::Maslov {
            k,
            l,
            a,
            mode,
            grid,
            integrand,
        } => {
            let imm = TrigFamily::new(*k, *l, *a)?;
            let mode = match mode {
                ModeArg::Torus => Mode::Torus,
                ModeArg::Klein => Mode::Klein,
            };
            let integrand = match integrand {
                IntegrandArg::Finite => Integrand::Finite,
                IntegrandArg::Limit => Integrand::Limit,
            };
            let r = maslov_index_with(&imm, mode, *grid, integrand)?;
            let residuals: Vec<f64> = r.residuals().into_iter().map(sig9).collect();
            let min_j = sig9(r.min_j);
            Ok(if json {
                doc(json!({ "index": r.index_values(), "residuals": residuals, "minJ": min_j }))
            } else {
                render::maslov(&imm, mode, &r.index_values(), &residuals, min_j)
            })
        }
        Command::Table { which: 1 } => {
            let t = table1();
            Ok(if json {
                doc(serde_json::to_value(&t).expect("table serializes"))
            } else {
                render::table1(&t)
            })
        }
        Command::Table { .. } => {
            let t = table2();
            Ok(if json {
                doc(serde_json::to_value(&t).expect("table serializes"))
            } else {
                render::table2(&t)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error for a report.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}
