#![allow(dead_code)]

use std::collections::HashMap;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use msd_core::Digraph;

pub const FIXTURES: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../core/tests/fixtures/spectral_pairs.txt"
);

/// Runs the `msd` binary, feeding `stdin` when given.
pub fn msd(args: &[&str], stdin: Option<&str>) -> Output {
    msd_env(args, stdin, &[])
}

pub fn msd_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_msd"));
    cmd.args(args)
        .env_remove("MSD_SCRATCH")
        .envs(env.iter().copied())
        .stdin(if stdin.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn msd");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    child.wait_with_output().unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Named digraphs from the shared fixture file (`name order u-w ...`).
pub fn fixtures() -> HashMap<String, Digraph> {
    std::fs::read_to_string(FIXTURES)
        .expect("fixture file")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split_whitespace();
            let name = f.next().unwrap().to_string();
            let order: usize = f.next().unwrap().parse().unwrap();
            let arcs: Vec<(usize, usize)> = f
                .map(|a| {
                    let (u, w) = a.split_once('-').unwrap();
                    (u.parse().unwrap(), w.parse().unwrap())
                })
                .collect();
            (name, Digraph::from_arcs(order, &arcs).unwrap())
        })
        .collect()
}
