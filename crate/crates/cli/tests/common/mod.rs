#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("fixtures").join(name)
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

/// Entries of corpus.txt with the fixture argument made absolute.
pub fn corpus() -> Vec<Case> {
    let text = std::fs::read_to_string(crate_dir().join("corpus.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, rest) = l.split_once('|').expect("`name | args`");
            let mut args = shlex::split(rest).expect("balanced quotes");
            if args[1].ends_with(".prob") {
                args[1] = fixture(&args[1]).to_string_lossy().into_owned();
            }
            Case { name: name.trim().to_string(), args }
        })
        .collect()
}

/// Exit code, stdout and stderr as one comparable blob.
pub fn transcript(args: &[String]) -> String {
    let out = sqfree_cli::run(std::iter::once("sqfree".to_string()).chain(args.iter().cloned()));
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", out.code, out.stdout, out.stderr)
}
