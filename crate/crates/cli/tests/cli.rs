use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tourney(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tourney"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const F1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/f1.txt");
const F2: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/f2.txt");

#[test]
fn solve_f1() {
    let o = tourney(&["solve", "--solutions", "mc,me", "--input", F1], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "MC: {1,2,3,4,5,6,7,8,9,10}\nME: {1,2,3,4,5,6,7,8,9}\n");
}

#[test]
fn solve_f2_teq() {
    let o = tourney(&["solve", "--solutions", "TEQ", "--input", F2], None);
    assert_eq!(stdout(&o), "TEQ: {1,2,3,4,6,7,8}\n");
}

#[test]
fn solve_transitive_triple() {
    let o = tourney(&["solve", "-s", "co,uc,ba,tc,bp", "--strategy", "-i", "-"], Some("3\n011\n001\n000\n"));
    assert_eq!(
        stdout(&o),
        "CO: {1}\nUC: {1}\nBA: {1}\nTC: {1}\nBP: {1}\nBP strategy: 1:1/1 2:0/1 3:0/1\n"
    );
}

#[test]
fn output_is_stable() {
    let a = tourney(&["solve", "-i", "f3"], None);
    let b = tourney(&["solve", "-i", "f3"], None);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn parse_errors_exit_2() {
    let o = tourney(&["solve", "-i", "-"], Some("3\n011\n00x\n000\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = tourney(&["solve", "-s", "nope", "-i", "f1"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exact_cap_exits_3() {
    let n = 13;
    let mut m = format!("{n}\n");
    for i in 0..n {
        m.extend((0..n).map(|j| if j > i { '1' } else { '0' }));
        m.push('\n');
    }
    let o = tourney(&["solve", "-s", "me", "-i", "-"], Some(&m));
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ME"));
}

#[test]
fn mcgarvey_pipes_into_solve() {
    let o = tourney(&["mcgarvey", "-i", "-"], Some("3\n1 2 3\n2 3 1\n3 1 2\n"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n010\n001\n100\n");
    let s = tourney(&["solve", "-s", "tc", "-i", "-"], Some(&stdout(&o)));
    assert_eq!(stdout(&s), "TC: {1,2,3}\n");
    let single = tourney(&["mcgarvey", "-i", "-"], Some("3\n2 1 3\n"));
    assert_eq!(stdout(&single), "3\n001\n101\n000\n");
}

#[test]
fn mcgarvey_even_electorate_exits_4() {
    let o = tourney(&["mcgarvey", "-i", "-"], Some("2\n1 2\n2 1\n"));
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn sweep_inclusions() {
    let o = tourney(&["sweep", "--orders", "1..5", "--mode", "labeled", "--checks", "inclusions"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("scope: orders=1..5 mode=labeled sample=none\nseed: 0\n"));
    assert!(out.contains("check:ba-in-uc pass=1099 viol=0"));
}

#[test]
fn sweep_mc_unique_order_6() {
    let o = tourney(&["sweep", "--orders", "6..6", "--checks", "mc-unique"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check:mc-unique pass=32768 viol=0"));
}

#[test]
fn sampled_sweep_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let args = [
        "sweep", "--orders", "7..7", "--sample", "200", "--seed", "7", "--checks", "teq-unique",
        "--output", path.to_str().unwrap(),
    ];
    let o = tourney(&args, None);
    assert_eq!(o.status.code(), Some(0));
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.contains("check:teq-retentive-unique pass=200 viol=0"));
    assert!(!report.contains("FINDING"));
    let again = tourney(&args, None);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), report);
}

#[test]
fn sweep_axioms_and_demo() {
    let o = tourney(&["sweep", "--orders", "4..4", "--checks", "tc-oracle", "--axiom", "co:wsp,tc:ssp", "--demo"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("axiom:CO:WSP n=4 checked=64 viol=24"));
    assert!(out.contains("witness:CO:WSP"));
    assert!(out.contains("axiom:TC:SSP n=4 checked=64 viol=0"));
    assert!(out.contains("demo:f3 external-co-stable=8"));
}

#[test]
fn sweep_bad_config_exits_2() {
    assert_eq!(tourney(&["sweep", "--orders", "5..2"], None).status.code(), Some(2));
    assert_eq!(tourney(&["sweep", "--orders", "12..12"], None).status.code(), Some(2));
    assert_eq!(tourney(&["sweep", "--orders", "3", "--checks", "bogus"], None).status.code(), Some(2));
}

#[test]
fn banks_element_is_seeded() {
    let a = tourney(&["banks-element", "-i", "f2", "--seed", "11"], None);
    let b = tourney(&["banks-element", "-i", "f2", "--seed", "11"], None);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("BA element: "));
}
