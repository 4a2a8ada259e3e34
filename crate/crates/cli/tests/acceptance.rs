//! Acceptance criterion for the CLI: byte-identical output on repeated runs
//! of the shipped example config, and a clear rejection of rank-1 E.

use std::path::PathBuf;
use std::process::Command;

fn repo_config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
}

#[test]
fn criterion_9_cli_determinism_and_rank_guard() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_quotcoh"))
            .arg("run")
            .arg(repo_config("example.json"))
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "output must be byte-identical");
    assert_eq!(first.stderr, second.stderr);

    let rejected = Command::new(env!("CARGO_BIN_EXE_quotcoh"))
        .arg("run")
        .arg(repo_config("rank1-e.json"))
        .output()
        .expect("binary runs");
    assert_eq!(rejected.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&rejected.stderr);
    assert!(stderr.contains("rk E >= 2"), "stderr: {stderr}");

    println!("criterion 9 (CLI determinism + rank guard): PASS");
}
