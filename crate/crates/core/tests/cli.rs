use std::path::PathBuf;
use std::process::{Command, Output};

fn mtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtc"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("mtc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mtc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_exit_codes() {
    let ok = mtc(&["validate", "fixtures/so5_3half_ad.mtc"]);
    assert_eq!(ok.status.code(), Some(0));

    let text = std::fs::read_to_string("fixtures/fib.mtc").unwrap();
    let asym = tmp("asym.mtc");
    std::fs::write(&asym, text.replacen("[[[-1,1,2],[-1,1,3]],[[-1,1,0]]]", "[[[1,1,2],[-1,1,3]],[[-1,1,0]]]", 1)).unwrap();
    let bad = mtc(&["validate", asym.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("s not symmetric at (0,1)"));

    let trunc = tmp("trunc.mtc");
    std::fs::write(&trunc, &text[..100]).unwrap();
    let parse = mtc(&["validate", trunc.to_str().unwrap()]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 7"));
}

#[test]
fn report_examples() {
    let o = mtc(&["report", "fixtures/sl2_12_A0.mtc"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("orbits: 3+2"));
    assert!(s.contains("simple, two orbits"));

    let o = mtc(&["report", "fixtures/ising.mtc", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["analysis"]["diagnosis"]["clause"]["kind"], "ising");

    assert!(stdout(&mtc(&["report", "fib"])).contains("(transitive)"));
    assert_eq!(mtc(&["report", "no_such_input"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let a = mtc(&["report", "so5_3half_ad", "--json"]);
    let b = mtc(&["report", "so5_3half_ad", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pointed_counts() {
    assert_eq!(stdout(&mtc(&["pointed", "2,30,30", "--count-only"])).trim(), "2,30,30: 280");
    assert_eq!(stdout(&mtc(&["pointed", "1800", "--count-only"])).trim(), "1800: 36");
    let o = mtc(&["pointed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("5: 2 orbits"));
    assert_eq!(mtc(&["pointed", "1800"]).status.code(), Some(2));
    assert_eq!(mtc(&["pointed", "4,2"]).status.code(), Some(2));
    assert_eq!(mtc(&["pointed", "2,2", "--form", "0,1;1,0"]).status.code(), Some(0));
    assert_eq!(mtc(&["pointed", "2,2", "--form", "0,0;0,0"]).status.code(), Some(2));
}

#[test]
fn products() {
    let ff = tmp("ff.mtc");
    assert_eq!(mtc(&["product", "fixtures/fib.mtc", "fixtures/fib.mtc", "-o", ff.to_str().unwrap()]).status.code(), Some(0));
    assert!(stdout(&mtc(&["report", ff.to_str().unwrap()])).contains("orbits: 2+2 (2 orbits)"));

    let f7 = tmp("f7.mtc");
    assert_eq!(mtc(&["product", "fixtures/fib.mtc", "fixtures/sl2_7_ad.mtc", "-o", f7.to_str().unwrap()]).status.code(), Some(0));
    assert!(stdout(&mtc(&["report", f7.to_str().unwrap()])).contains("(transitive)"));
}

#[test]
fn fixtures_and_tables() {
    let out = tmp("so5.mtc");
    assert_eq!(mtc(&["fixture", "so5_3half_ad", "-o", out.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read("fixtures/so5_3half_ad.mtc").unwrap());
    assert_eq!(mtc(&["fixture", "nope"]).status.code(), Some(2));

    let t = mtc(&["tables", "--check", "4"]);
    assert_eq!(t.status.code(), Some(0));
    assert!(stdout(&t).contains("9 rows, 0 failed"));
    // level 8 includes rows whose printed dimension disagrees with the printed spectrum
    let t = mtc(&["tables", "--check", "16"]);
    assert_eq!(t.status.code(), Some(1));
    assert!(stdout(&t).contains("60 rows, 4 failed"));
}
