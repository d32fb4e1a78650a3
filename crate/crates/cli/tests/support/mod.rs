//! Fixture corpus runner shared by the CLI test targets.
//!
//! Each directory under `fixtures/` holds `args` (subcommand and flags on one
//! line), `input.json` (fed on standard input) and the golden
//! `expected.stdout`, `expected.stderr` and `expected.code`. Running with
//! `COPRA_BLESS=1` rewrites the goldens from the current binary.

#![allow(dead_code)]

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

pub struct Fixture {
    pub name: String,
    pub dir: PathBuf,
    pub args: Vec<String>,
    pub input: Vec<u8>,
}

pub fn fixture_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = fs::read_dir(fixture_root())
        .expect("fixtures directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.is_dir())
        .map(|dir| Fixture {
            name: dir.file_name().unwrap().to_string_lossy().into_owned(),
            args: fs::read_to_string(dir.join("args"))
                .unwrap()
                .split_whitespace()
                .map(String::from)
                .collect(),
            input: fs::read(dir.join("input.json")).unwrap(),
            dir,
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn run_cli(args: &[String], input: &[u8]) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_copra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn copra");
    child.stdin.take().unwrap().write_all(input).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: out.stdout,
        stderr: out.stderr,
        code: out.status.code().expect("exit code"),
    }
}

impl Fixture {
    pub fn run(&self) -> Run {
        run_cli(&self.args, &self.input)
    }

    pub fn expected(&self) -> Run {
        Run {
            stdout: fs::read(self.dir.join("expected.stdout")).unwrap_or_default(),
            stderr: fs::read(self.dir.join("expected.stderr")).unwrap_or_default(),
            code: fs::read_to_string(self.dir.join("expected.code"))
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(-1),
        }
    }

    pub fn bless(&self, run: &Run) {
        fs::write(self.dir.join("expected.stdout"), &run.stdout).unwrap();
        fs::write(self.dir.join("expected.stderr"), &run.stderr).unwrap();
        fs::write(self.dir.join("expected.code"), format!("{}\n", run.code)).unwrap();
    }
}

pub fn blessing() -> bool {
    std::env::var_os("COPRA_BLESS").is_some()
}
