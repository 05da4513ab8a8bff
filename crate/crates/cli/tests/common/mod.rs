use std::process::{Command, Output};

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn pfib(args: &[&str]) -> Run {
    pfib_with_env(args, &[])
}

pub fn pfib_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pfib"));
    cmd.args(args).env_remove("PFIB_WORD_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output {
        status,
        stdout,
        stderr,
    } = cmd.output().expect("binary runs");
    Run {
        code: status.code().expect("exited normally"),
        stdout: String::from_utf8(stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(stderr).expect("utf-8 stderr"),
    }
}

/// Runs a command that must succeed and returns its stdout.
#[allow(dead_code)]
pub fn ok(args: &[&str]) -> String {
    let r = pfib(args);
    assert_eq!(r.code, 0, "pfib {args:?} failed: {}", r.stderr);
    r.stdout
}
