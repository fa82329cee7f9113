use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use lwb_cli::corpus::run_corpus;
use lwb_cli::run;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn corpus_dir() -> PathBuf {
    manifest_dir().join("corpus")
}

fn lwb(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lwb"))
        .args(args)
        .output()
        .expect("spawn lwb")
}

#[test]
fn shipped_corpus_passes() {
    let results = run_corpus(&corpus_dir()).unwrap();
    assert!(results.len() >= 40, "only {} cases", results.len());
    let failed: Vec<_> = results
        .iter()
        .filter_map(|c| c.failure.as_ref().map(|f| format!("{}: {f}", c.name)))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn empty_corpus_has_no_cases() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run_corpus(dir.path()).unwrap().is_empty());
    let out = run(["lwb", "corpus", "run", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "passed 0/0\n");
}

#[test]
fn missing_corpus_dir_is_an_error() {
    assert!(run_corpus(Path::new("/nonexistent/lwb-corpus")).is_err());
    assert_eq!(
        run(["lwb", "corpus", "run", "/nonexistent/lwb-corpus"]).code,
        1
    );
}

fn copy_corpus(to: &Path) {
    for entry in fs::read_dir(corpus_dir()).unwrap() {
        let p = entry.unwrap().path();
        fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
    }
}

#[test]
fn corrupted_expectation_fails_only_that_case() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    let victim = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "out"))
        .min()
        .unwrap();
    let name = victim.file_stem().unwrap().to_string_lossy().into_owned();
    let mut body = fs::read(&victim).unwrap();
    body.extend_from_slice(b"extra\n");
    fs::write(&victim, body).unwrap();

    let results = run_corpus(dir.path()).unwrap();
    let failed: Vec<_> = results.iter().filter(|c| c.failure.is_some()).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].name, name);

    let out = run(["lwb", "corpus", "run", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains(&format!("FAIL {name}")));
}

#[test]
fn wrong_exit_code_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("t.cmd"), "prop classify \"P |\"\n").unwrap();
    fs::write(dir.path().join("t.out"), "").unwrap();
    let r = run_corpus(dir.path()).unwrap();
    assert!(r[0].failure.as_ref().unwrap().contains("exit code 1"));
    fs::write(dir.path().join("t.exit"), "1\n").unwrap();
    assert!(run_corpus(dir.path()).unwrap()[0].failure.is_none());
}

#[test]
fn bless_reproduces_the_shipped_outputs() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    for p in fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()) {
        if p.extension().is_some_and(|x| x == "out") {
            fs::write(&p, "stale\n").unwrap();
        }
    }
    // `{dir}` must resolve to the copy, whose data files are identical.
    assert_eq!(
        run(["lwb", "corpus", "bless", dir.path().to_str().unwrap()]).code,
        0
    );
    for p in fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
    {
        let file = p.file_name().unwrap();
        assert_eq!(
            fs::read(&p).unwrap(),
            fs::read(dir.path().join(file)).unwrap(),
            "{}",
            file.to_string_lossy()
        );
    }
}

#[test]
fn binary_exit_codes() {
    let ok = lwb(&["prop", "classify", "P | ~P"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "VALIDITY\n");

    let domain = lwb(&["prop", "classify", "P |"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(domain.stdout.is_empty());
    assert!(String::from_utf8_lossy(&domain.stderr).starts_with("error:"));

    let usage = lwb(&["prop", "no-such-command"]);
    assert_eq!(usage.status.code(), Some(2));

    let usage = lwb(&["sat", "solve"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn binary_output_is_deterministic() {
    let corpus = corpus_dir();
    let inst = corpus.join("square-2.inst");
    let code = format!("@{}", corpus.join("succ.code").display());
    let runs: [&[&str]; 4] = [
        &["prop", "adequate", "--census"],
        &["sat", "solve", inst.to_str().unwrap()],
        &["ord", "goodstein", "4", "--steps", "40"],
        &["tm", "we", &code, "--fuel", "8"],
    ];
    for args in runs {
        let a = lwb(args);
        let b = lwb(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(b.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_lines_parse() {
    let corpus = corpus_dir();
    let inst = corpus.join("diamond.inst");
    let runs: [&[&str]; 5] = [
        &["--format", "json-lines", "prop", "table", "P -> Q"],
        &[
            "--format",
            "json-lines",
            "sat",
            "solve",
            inst.to_str().unwrap(),
        ],
        &["--format", "json-lines", "ord", "goodstein", "3"],
        &["--format", "json-lines", "hf", "vn", "--count", "4"],
        &["--format", "json-lines", "tm", "fixtures"],
    ];
    for args in runs {
        let out = lwb(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(!text.is_empty(), "{args:?}");
        for line in text.lines() {
            let v: serde_json::Value =
                serde_json::from_str(line).unwrap_or_else(|e| panic!("{args:?}: {line}: {e}"));
            assert!(v.is_object());
        }
    }
}

/// `operation: invocation` pairs from the coverage manifest.
fn coverage() -> Vec<(String, String)> {
    fs::read_to_string(manifest_dir().join("coverage.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (op, inv) = l.split_once(": ").expect("operation: invocation");
            (op.trim().to_string(), inv.trim().to_string())
        })
        .collect()
}

fn public_functions(dir: &Path, out: &mut BTreeSet<String>) {
    for entry in fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        if p.is_dir() {
            public_functions(&p, out);
        } else if p.extension().is_some_and(|x| x == "rs") {
            for line in fs::read_to_string(&p).unwrap().lines() {
                if let Some(rest) = line.strip_prefix("pub fn ") {
                    let name: String = rest
                        .chars()
                        .take_while(|c| c.is_alphanumeric() || *c == '_')
                        .collect();
                    out.insert(name);
                }
            }
        }
    }
}

#[test]
fn every_library_operation_is_reachable() {
    let mut fns = BTreeSet::new();
    public_functions(&manifest_dir().join("../core/src"), &mut fns);
    assert!(fns.len() > 40);
    let listed: BTreeSet<String> = coverage().into_iter().map(|(op, _)| op).collect();
    let missing: Vec<_> = fns.difference(&listed).collect();
    assert!(missing.is_empty(), "not in coverage.txt: {missing:?}");
}

#[test]
fn coverage_invocations_succeed() {
    let corpus = corpus_dir();
    let corpus = corpus.to_str().unwrap();
    for (op, inv) in coverage() {
        let words = shlex::split(&inv.replace("{corpus}", corpus)).expect("quoting");
        let out = run(std::iter::once("lwb".to_string()).chain(words));
        assert_eq!(out.code, 0, "{op}: {inv}\n{}", out.stderr);
        assert!(!out.stdout.is_empty(), "{op}: {inv}");
    }
}
