//! End-to-end tests of the `pbedg` binary: exit codes, written files and
//! reproducibility of the CSV output.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pbedg::harness::config::MeshSpec;
use pbedg::harness::{self, ProblemSpec};

fn pbedg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbedg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

/// A short aggregation-breakage run on a coarse mesh.
fn small_spec() -> ProblemSpec {
    let mut spec = harness::benchmark_spec("ex2").unwrap();
    spec.mesh = MeshSpec::Power {
        v_max: 10.0,
        cells: 6,
        exponent: 3.0,
    };
    spec.time.t_end = 0.2;
    spec
}

fn write_config(dir: &Path, spec: &ProblemSpec) -> String {
    let path = dir.join("config.json");
    spec.save(&path).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn run_writes_csv_files_and_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), &small_spec());
    let out_dir = dir.path().join("out");
    let out = pbedg(&["run", "--config", &config, "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    for name in ["solution.csv", "moments.csv", "errors.csv", "steps.csv"] {
        let text = fs::read_to_string(out_dir.join(name)).unwrap();
        assert!(text.lines().count() > 1, "{name} has no data rows");
    }
}

#[test]
fn repeated_runs_produce_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), &small_spec());
    let dirs = ["a", "b"].map(|d| dir.path().join(d));
    for d in &dirs {
        let out = pbedg(&["run", "--config", &config, "--out", d.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
    }
    for name in ["solution.csv", "moments.csv", "errors.csv", "steps.csv"] {
        let a = fs::read(dirs[0].join(name)).unwrap();
        let b = fs::read(dirs[1].join(name)).unwrap();
        assert!(a == b, "{name} differs between identical runs");
    }
}

#[test]
fn configuration_problems_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let out_dir = out_dir.to_str().unwrap();

    let missing = dir.path().join("missing.json");
    let out = pbedg(&["run", "--config", missing.to_str().unwrap(), "--out", out_dir]);
    assert_eq!(code(&out), 2);

    let garbled = dir.path().join("garbled.json");
    fs::write(&garbled, "{ \"mesh\": 3 ").unwrap();
    let out = pbedg(&["run", "--config", garbled.to_str().unwrap(), "--out", out_dir]);
    assert_eq!(code(&out), 2);

    let out = pbedg(&["bench", "--name", "no-such-benchmark", "--out", out_dir]);
    assert_eq!(code(&out), 2);

    let mut spec = small_spec();
    spec.dg.degree = 0;
    let config = write_config(dir.path(), &spec);
    let out = pbedg(&["run", "--config", &config, "--out", out_dir]);
    assert_eq!(code(&out), 2);
}

#[test]
fn numerical_failure_exits_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let out = pbedg(&["bench", "--name", "ex5-I-unlimited", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn validate_and_geometry_dump_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), &small_spec());
    let out = pbedg(&["validate", "--config", &config, "--samples", "200"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));

    let out_dir = dir.path().join("geometry");
    let out = pbedg(&["geometry-dump", "--config", &config, "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    for name in ["aggregation_refinement.csv", "breakage_refinement.csv"] {
        assert!(out_dir.join(name).is_file(), "{name} missing");
    }
}

#[test]
fn converge_reports_every_level() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), &small_spec());
    let out_dir = dir.path().join("study");
    let out = pbedg(&[
        "converge",
        "--config",
        &config,
        "--levels",
        "2",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let errors = fs::read_to_string(out_dir.join("errors.csv")).unwrap();
    assert_eq!(errors.lines().count(), 3);
}
