#![allow(dead_code)]

use std::process::{Command, Output};

pub fn brownlab(args: &[&str]) -> Output {
    brownlab_with_env(args, &[])
}

pub fn brownlab_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brownlab"));
    cmd.args(args).env_remove("BROWNLAB_MAX_ORDER");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let out = brownlab(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}
