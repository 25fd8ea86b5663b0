//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for configuration or I/O problems, 3 when the
//! numerical method fails (halving budget exhausted, blow-up, negative moment).

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pbedg::geometry::{AggregationRefinement, BreakageRefinement};
use pbedg::harness::{self, CsvPaths, ProblemSpec, RunOutput};
use pbedg::kernels;
use pbedg::Error;

#[derive(Parser)]
#[command(name = "pbedg", version, about = "Positivity-preserving DG solver for population balance equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a problem described by a JSON file.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one of the prewired benchmarks.
    Bench {
        /// Benchmark name, e.g. ex1-I or ex5-II-unlimited.
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Convergence study on successively split meshes.
    Converge {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Also write errors.csv into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the aggregation and breakage refinements as CSV.
    GeometryDump {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Check kernel symmetry, daughter mass consistency and growth sign.
    Validate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}

fn create_dir(dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io {
        path: dir.to_path_buf(),
        source: e,
    })
}

fn report(output: &RunOutput) {
    println!(
        "{}: t = {}, {} steps, {} halvings, {} limiter activations",
        if output.name.is_empty() { "run" } else { &output.name },
        output.summary.t,
        output.summary.steps,
        output.summary.halvings,
        output.summary.limiter_activations
    );
    let m1 = output.initial_mass();
    println!(
        "max |M1(t) - M1(0)| = {:e} (relative {:e})",
        output.max_mass_deviation(),
        output.max_mass_deviation() / m1.abs().max(f64::MIN_POSITIVE)
    );
    for row in &output.errors {
        println!(
            "L1 = {:e}, L2 = {:e}, Linf = {:e}",
            row.norms.l1, row.norms.l2, row.norms.linf
        );
    }
    if let Some(r) = output.reference_l1_relative {
        println!("relative L1 distance to DPBE reference = {r:e}");
    }
}

fn finish_run(output: RunOutput, out: &Path) -> Result<(), Error> {
    create_dir(out)?;
    harness::emit_csv(&output, &CsvPaths::in_dir(out))?;
    report(&output);
    Ok(())
}

fn execute(command: Command) -> Result<(), Error> {
    match command {
        Command::Run { config, out } => {
            let spec = ProblemSpec::load(&config)?;
            finish_run(harness::run(&spec)?, &out)
        }
        Command::Bench { name, out } => {
            let spec = harness::benchmark_spec(&name)?;
            create_dir(&out)?;
            spec.save(&out.join("config.json"))?;
            finish_run(harness::run(&spec)?, &out)
        }
        Command::Converge {
            config,
            levels,
            out,
        } => {
            let spec = ProblemSpec::load(&config)?;
            let rows = harness::convergence_study(&spec, levels)?;
            println!("level cells L1 order L2 order Linf order");
            for r in &rows {
                let o = |k: usize| r.orders.map_or("--".to_string(), |o| format!("{:.2}", o[k]));
                println!(
                    "{} {} {:.3e} {} {:.3e} {} {:.3e} {}",
                    r.level,
                    r.cells,
                    r.norms.l1,
                    o(0),
                    r.norms.l2,
                    o(1),
                    r.norms.linf,
                    o(2)
                );
            }
            if let Some(dir) = out {
                create_dir(&dir)?;
                harness::output::write_errors(&rows, &dir.join("errors.csv"))?;
            }
            Ok(())
        }
        Command::GeometryDump { config, out } => {
            let spec = ProblemSpec::load(&config)?;
            let mesh = spec.mesh.build()?;
            create_dir(&out)?;
            let open = |name: &str| {
                let path = out.join(name);
                File::create(&path)
                    .map(BufWriter::new)
                    .map_err(|e| Error::Io { path, source: e })
            };
            let agg = AggregationRefinement::build(&mesh)?;
            agg.write_csv(open("aggregation_refinement.csv")?)?;
            let brk = BreakageRefinement::build(&mesh)?;
            brk.write_csv(open("breakage_refinement.csv")?)?;
            println!(
                "{} aggregation triangles (area {}), {} breakage elements (area {})",
                agg.len(),
                agg.total_area(),
                brk.len(),
                brk.total_area()
            );
            Ok(())
        }
        Command::Validate {
            config,
            samples,
            seed,
        } => {
            let spec = ProblemSpec::load(&config)?;
            let mesh = spec.mesh.build()?;
            let report = kernels::validate(&spec.kernels()?, mesh.v_max(), samples, seed);
            println!("{report:#?}");
            if report.passed() {
                println!("all kernel checks passed");
                Ok(())
            } else {
                Err(Error::Config(report.failures.join("; ")))
            }
        }
    }
}
