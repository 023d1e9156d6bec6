use std::process::{Command, Output};

fn dbgsr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dbgsr"))
        .args(args)
        .output()
        .expect("spawn dbgsr")
}

fn stdout_of(args: &[&str]) -> String {
    let out = dbgsr(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn assert_prints(args: &[&str], expected: &str) {
    assert_eq!(stdout_of(args), format!("{expected}\n"), "{args:?}");
}

fn assert_exit(args: &[&str], code: i32, stderr_fragment: &str) {
    let out = dbgsr(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(stderr_fragment), "{args:?}: {stderr}");
}

#[test]
fn generate_examples() {
    assert_prints(
        &["generate", "--n", "2", "--k", "3", "--variant", "max"],
        "221201100",
    );
    assert_prints(&["generate", "--n", "3", "--k", "2"], "00010111");
    assert_prints(
        &["generate", "--n", "3", "--k", "2", "--limit", "4"],
        "0001",
    );
    assert_prints(&["generate", "--n", "1", "--k", "4"], "0123");
}

#[test]
fn generate_csv_and_large_alphabets() {
    assert_prints(
        &["generate", "--n", "2", "--k", "2", "--format", "csv"],
        "0,0,1,1",
    );
    assert_prints(
        &["generate", "--n", "1", "--k", "12", "--limit", "13"],
        "0,1,2,3,4,5,6,7,8,9,10,11,0",
    );
    assert_exit(
        &["generate", "--n", "1", "--k", "12", "--format", "digits"],
        2,
        "digits",
    );
}

#[test]
fn generate_long_stream_spans_chunks() {
    let out = stdout_of(&["generate", "--n", "30", "--k", "2", "--limit", "200000"]);
    let body = out.trim_end();
    assert_eq!(body.len(), 200_000);
    assert!(body.starts_with(&"0".repeat(30)));
    let csv = stdout_of(&[
        "generate", "--n", "20", "--k", "2", "--limit", "150000", "--format", "csv",
    ]);
    assert_eq!(csv.trim_end().split(',').count(), 150_000);
}

#[test]
fn gsr_examples() {
    assert_prints(
        &[
            "gsr", "--n", "3", "--k", "2", "--word", "000", "--count", "5",
        ],
        "10111",
    );
    assert_prints(
        &[
            "gsr",
            "--n",
            "2",
            "--k",
            "3",
            "--word",
            "22",
            "--count",
            "3",
            "--variant",
            "max",
        ],
        "120",
    );
    assert_prints(
        &[
            "gsr", "--n", "3", "--k", "2", "--word", "111", "--count", "3",
        ],
        "000",
    );
    assert_prints(
        &[
            "gsr", "--n", "3", "--k", "2", "--word", "101", "--count", "0",
        ],
        "",
    );
    assert_exit(
        &["gsr", "--n", "3", "--k", "2", "--word", "00"],
        2,
        "word length must equal n",
    );
}

#[test]
fn next_examples() {
    assert_prints(&["next", "--n", "3", "--k", "2", "--word", "000"], "1");
    assert_prints(&["next", "--n", "3", "--k", "2", "--word", "111"], "0");
    assert_prints(
        &[
            "next",
            "--n",
            "2",
            "--k",
            "3",
            "--word",
            "22",
            "--variant",
            "max",
        ],
        "1",
    );
}

#[test]
fn ftg_examples() {
    assert_prints(&["ftg", "--n", "3", "--k", "2", "--word", "100"], "001\n01");
    assert_prints(&["ftg", "--n", "3", "--k", "2", "--word", "111"], "1\n");
    assert_prints(&["ftg", "--n", "3", "--k", "2", "--word", "000"], "001\n1");
}

#[test]
fn lnext_and_cfl_examples() {
    assert_prints(
        &["lnext", "--n", "7", "--k", "2", "--word", "0010111"],
        "0011011",
    );
    assert_prints(&["lnext", "--n", "3", "--k", "3", "--word", "2"], "0");
    assert_prints(&["cfl", "--k", "3", "--word", "211"], "2|1|1");
    assert_prints(&["cfl", "--k", "2", "--word", "0101101"], "01011|01");
    assert_exit(
        &["lnext", "--n", "3", "--k", "2", "--word", "10"],
        2,
        "not a Lyndon word",
    );
}

#[test]
fn verify_examples() {
    let out = stdout_of(&["verify", "--n", "3", "--k", "2", "--exhaustive"]);
    assert_eq!(out.lines().count(), 4);
    assert!(
        out.lines()
            .all(|l| l.starts_with("suite=") && l.ends_with("status=pass")),
        "{out}"
    );
    assert_exit(
        &["verify", "--n", "30", "--k", "2", "--exhaustive"],
        2,
        "cap",
    );
    let out = stdout_of(&["verify", "--n", "4", "--k", "3"]);
    assert!(out.lines().all(|l| l.ends_with("status=pass")), "{out}");
    let out = stdout_of(&["verify", "--n", "13", "--k", "2"]);
    assert!(out.lines().all(|l| l.ends_with("status=pass")), "{out}");
}

fn bench_rows(args: &[&str]) -> Vec<Vec<u128>> {
    let out = stdout_of(args);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n\tc\tnanoseconds\tsymbols_per_second"));
    lines
        .map(|l| l.split('\t').map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn bench_examples() {
    let rows = bench_rows(&["bench", "--n", "16384,32768", "--c", "16384"]);
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0][0], rows[1][0]), (16384, 32768));
    let ratio = rows[1][2] as f64 / rows[0][2] as f64;
    assert!(ratio <= 3.0, "n-doubling ratio {ratio}");

    let rows = bench_rows(&["bench", "--n", "1024", "--c", "1024,2048,4096"]);
    assert_eq!(rows.len(), 3);
    for pair in rows.windows(2) {
        let ratio = pair[1][2] as f64 / pair[0][2] as f64;
        assert!(ratio <= 3.0, "c-doubling ratio {ratio}");
    }

    assert_exit(&["bench"], 2, "non-empty");
    assert_exit(&["bench", "--n", "8"], 2, "non-empty");
}

#[test]
fn invalid_input_exits_two() {
    assert_exit(&["generate", "--n", "3", "--k", "1"], 2, "k >= 2");
    assert_exit(&["generate", "--n", "0", "--k", "2"], 2, "n >= 1");
    assert_exit(
        &["gsr", "--n", "2", "--k", "2", "--word", "02"],
        2,
        "out of range",
    );
    assert_exit(
        &["gsr", "--n", "2", "--k", "2", "--word", "0x"],
        2,
        "malformed",
    );
    assert_exit(
        &["generate", "--n", "2", "--k", "2", "--variant", "mid"],
        2,
        "min or max",
    );
    assert_exit(&["frobnicate"], 2, "");
}
