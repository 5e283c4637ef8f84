use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plumbtrace")).args(args).env_remove("PLUMBTRACE_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/../../surfaces/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn golden_trace() {
    let o = run(&["trace", "--surface", &fixture("sigma04.surf"), "--q", "2", "--p", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4*t1^2 - 8*t1 + 6\n");
}

#[test]
fn trace_with_matrix_and_jsonl() {
    let o = run(&["--format", "jsonl", "trace", "--surface", "s11", "--coords", "q=[1] p=[0]", "--matrix"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["trace"], "i*t1 - i");
    assert_eq!(v["matrix"], "[[-i*t1 + i, -i], [-i, 0]]");
    assert_eq!(v["h"], 0);
}

#[test]
fn word_round_trip() {
    let w = run(&["word", "--surface", "s20", "--q", "1,3,4", "--p", "-1,-1,-2"]);
    assert_eq!(w.status.code(), Some(0));
    let word = stdout(&w);
    let via_word = run(&["trace", "--word", word.trim()]);
    let direct = run(&["trace", "--surface", "s20", "--q", "1,3,4", "--p", "-1,-1,-2"]);
    assert_eq!(stdout(&via_word), stdout(&direct));
}

#[test]
fn coords_file_and_convert_twist() {
    let o = run(&["convert-twist", "--surface", &fixture("sigma20.surf"), "--coords", "q=[0,1,1] p=[0,1,-1]"]);
    assert_eq!(stdout(&o).lines().next(), Some("p_hat=[0,0,0]"));
    let o = run(&["trace", "--surface", &fixture("sigma20.surf"), "--coords-file", &fixture("examples.coords")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("# ")).count(), 3);
}

#[test]
fn verify_single_and_fuzz() {
    let o = run(&["verify", "--surface", "s12", "--q", "2,1", "--p", "1,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().starts_with("pass"));
    let o = run(&["--format", "jsonl", "verify", "--fuzz", "40", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 40);
    assert!(lines.iter().all(|v| v["pass"] == true));
}

#[test]
fn seed_from_environment() {
    let a = Command::new(env!("CARGO_BIN_EXE_plumbtrace")).args(["random", "--surface", "s20"]).env("PLUMBTRACE_SEED", "5").output().unwrap();
    let b = run(&["random", "--surface", "s20", "--seed", "5"]);
    let c = run(&["random", "--surface", "s20", "--seed", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(b.stdout, c.stdout);
    assert_eq!(stdout(&b).lines().count(), 10);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["trace", "--surface", "s04", "--q", "1", "--p", "0"]).status.code(), Some(2));
    assert_eq!(run(&["trace", "--surface", "nope", "--q", "2", "--p", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--surface", "s11", "--q", "2", "--p", "0"]).status.code(), Some(2));
    assert_eq!(run(&["trace", "--word", "xi=1 unit=0 O0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));

    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "genus 0\nboundary 4\npants 2\nglue s1 (0,inf) (1,2)").unwrap();
    let o = run(&["trace", "--surface", f.path().to_str().unwrap(), "--q", "2", "--p", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn kra_round_trip() {
    let o = run(&["kra", "--tau", "0.25,1.5"]);
    let tk = stdout(&o).trim().strip_prefix("tk=").unwrap().to_string();
    let o = run(&["kra", "--tk", &tk]);
    let tau = stdout(&o);
    let (re, im) = tau.trim().strip_prefix("tau=").unwrap().split_once(',').unwrap();
    assert!((re.parse::<f64>().unwrap() - 0.25).abs() < 1e-12);
    assert!((im.parse::<f64>().unwrap() - 1.5).abs() < 1e-12);
    assert_eq!(run(&["kra", "--tk", "0,0"]).status.code(), Some(2));
}
