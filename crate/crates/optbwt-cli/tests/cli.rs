use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SAMPLE_LINES: &[u8] = b"TCGA\nGGAA\nTCCT\nTTCT\nGCCT\n";

fn optbwt(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_optbwt"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_then_stats_reports_minimal_runs() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();

    let out = optbwt(
        &["build", "--order", "input", "--rewrite", "opt", "-i", "reads.txt", "--format", "lines",
          "-o", "out.bwt"],
        dir.path(),
    );
    assert_ok(&out);
    assert_eq!(
        fs::read(dir.path().join("out.bwt")).unwrap(),
        b"TTTAAAGGGTTTCCCG$$CCC$$T$"
    );

    let out = optbwt(&["stats", "out.bwt"], dir.path());
    assert_ok(&out);
    let text = stdout(&out);
    assert!(text.contains("n=25"), "{text}");
    assert!(text.contains("r=11"), "{text}");
}

#[test]
fn compare_prints_the_run_count_row() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();
    let out = optbwt(&["compare", "-i", "reads.txt", "--format", "lines"], dir.path());
    assert_ok(&out);
    let text = stdout(&out);
    let r_row: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with("r "))
        .expect("r row present")
        .split_whitespace()
        .collect();
    assert_eq!(r_row, ["r", "17", "17", "14", "17", "11"]);
}

#[test]
fn compare_kv_is_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();
    let out = optbwt(&["compare", "-i", "reads.txt", "--kv"], dir.path());
    assert_ok(&out);
    let text = stdout(&out);
    assert!(text.contains("variant=opt n=25 r=11"), "{text}");
    assert!(text.contains("variant=input n=25 r=17"), "{text}");
}

#[test]
fn build_then_invert_round_trips_the_reordered_input() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();

    let out = optbwt(
        &["build", "-i", "reads.txt", "--order", "colex", "--rewrite", "none", "-o", "colex.bwt"],
        dir.path(),
    );
    assert_ok(&out);
    let out = optbwt(&["invert", "colex.bwt"], dir.path());
    assert_ok(&out);
    // colex order of the fixture
    assert_eq!(out.stdout, b"GGAA\nTCGA\nGCCT\nTCCT\nTTCT\n");
}

#[test]
fn invert_recovers_multiset_after_opt_rewrite() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();
    let out = optbwt(
        &["build", "-i", "reads.txt", "--rewrite", "opt", "-o", "opt.bwt"],
        dir.path(),
    );
    assert_ok(&out);
    let out = optbwt(&["invert", "opt.bwt"], dir.path());
    assert_ok(&out);
    let mut got: Vec<&[u8]> = out.stdout.split(|&b| b == b'\n').filter(|s| !s.is_empty()).collect();
    got.sort();
    let mut expected: Vec<&[u8]> =
        SAMPLE_LINES.split(|&b| b == b'\n').filter(|s| !s.is_empty()).collect();
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn sap_and_rle_outputs() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();
    let out = optbwt(
        &["build", "-i", "reads.txt", "-o", "out.bwt", "--sap", "out.sap", "--rle", "out.rle"],
        dir.path(),
    );
    assert_ok(&out);
    let sap = fs::read(dir.path().join("out.sap")).unwrap();
    assert_eq!(sap.len(), 25);
    assert!(sap.iter().all(|&b| b == b'0' || b == b'1'));
    let rle = String::from_utf8(fs::read(dir.path().join("out.rle")).unwrap()).unwrap();
    assert!(rle.starts_with("A\t2\n"), "{rle}");
    // every line is char TAB count
    assert!(rle.lines().all(|l| l.len() >= 3 && l.as_bytes()[1] == b'\t'));
}

#[test]
fn gen_is_reproducible_and_feeds_build() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "--num", "5", "--minlen", "4", "--maxlen", "6", "--seed", "42", "-o"];
    let out = optbwt(&[&args[..], &["a.txt"]].concat(), dir.path());
    assert_ok(&out);
    let out = optbwt(&[&args[..], &["b.txt"]].concat(), dir.path());
    assert_ok(&out);
    let a = fs::read(dir.path().join("a.txt")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.txt")).unwrap());
    assert_eq!(a.iter().filter(|&&b| b == b'\n').count(), 5);

    let out = optbwt(&["build", "-i", "a.txt", "-o", "a.bwt"], dir.path());
    assert_ok(&out);
}

#[test]
fn malformed_input_fails_with_context() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.fq"), b"@r1\nACGT\n+\n").unwrap();
    let out = optbwt(
        &["build", "-i", "bad.fq", "--format", "fastq", "-o", "out.bwt"],
        dir.path(),
    );
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.fq"), "{err}");
    assert!(err.contains("FASTQ"), "{err}");
}

#[test]
fn missing_input_fails_with_file_context() {
    let dir = tempfile::tempdir().unwrap();
    let out = optbwt(&["stats", "nope.bwt"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope.bwt"));
}

#[test]
fn output_may_not_overwrite_input() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), SAMPLE_LINES).unwrap();
    let out = optbwt(&["build", "-i", "reads.txt", "-o", "reads.txt"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("equals the input path"));
}

#[test]
fn stdin_is_accepted_for_dash() {
    use std::io::Write;
    use std::process::Stdio;
    let dir = tempfile::tempdir().unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_optbwt"))
        .args(["build", "-i", "-", "--rewrite", "opt", "-o", "out.bwt"])
        .current_dir(dir.path())
        .stdin(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(SAMPLE_LINES).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(
        fs::read(dir.path().join("out.bwt")).unwrap(),
        b"TTTAAAGGGTTTCCCG$$CCC$$T$"
    );
}

#[test]
fn invert_can_write_fasta() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("two.txt"), b"AC\nGT\n").unwrap();
    let out = optbwt(&["build", "-i", "two.txt", "-o", "two.bwt"], dir.path());
    assert_ok(&out);
    let out = optbwt(&["invert", "two.bwt", "--format", "fasta"], dir.path());
    assert_ok(&out);
    assert_eq!(out.stdout, b">s1\nAC\n>s2\nGT\n");
}

#[test]
fn stats_equals_compare_opt_run_count() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("reads.txt"), b"TGA\nCACAA\nAGAGT\nTAA\nCGAGT\nCCA\nTA\n").unwrap();
    let out = optbwt(
        &["build", "-i", "reads.txt", "--rewrite", "opt", "-o", "opt.bwt"],
        dir.path(),
    );
    assert_ok(&out);
    let stats_out = stdout(&optbwt(&["stats", "opt.bwt"], dir.path()));
    let kv_out = stdout(&optbwt(&["compare", "-i", "reads.txt", "--kv"], dir.path()));
    let r_stats = stats_out
        .lines()
        .find_map(|l| l.strip_prefix("r="))
        .unwrap()
        .to_owned();
    let opt_line = kv_out.lines().find(|l| l.starts_with("variant=opt")).unwrap();
    assert!(opt_line.contains(&format!(" r={r_stats} ")), "{opt_line} vs r={r_stats}");
}
