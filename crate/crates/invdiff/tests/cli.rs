use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_invdiff")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn census_reports_exact_densities() {
    let (code, out) = run(&["census", "--n", "3", "--p", "3", "--nu", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let c = v["comparisons"].as_array().unwrap().iter().find(|c| c["event"] == "squareful_in_maximal").unwrap();
    assert_eq!(c["census_density"], "1/4");
    let (code, out) = run(&["census", "--n", "4", "--p", "3", "--nu", "0", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("event,count,total,census_density,closed_form,verdict"));
    assert!(out.contains("evenly_ramified_in_maximal,") && out.contains(",1/12,1/12,equal"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["census", "--n", "3", "--p", "4"]).0, 2);
    assert_eq!(run(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(run(&["enumerate", "--n", "3", "--f0", "4", "--height", "3"]).0, 2);
    assert_eq!(run(&["enumerate", "--n", "3", "--f0", "7", "--height", "x"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn verify_suites() {
    let (code, out) = run(&["verify", "golden-pair"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(run(&["verify", "simon"]).0, 0);
}

#[test]
fn construct_and_classgroup() {
    let (code, out) = run(&["construct", "--form", "1,2,-5,3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["A"][2][2], "-5");
    assert_eq!(v["round_trip"], true);
    let (code, out) = run(&["classgroup", "--form", "7,10,5,6", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().ends_with(",2,2,0,false"));
}

#[test]
fn enumerate_writes_file() {
    let dir = std::env::temp_dir().join(format!("invdiff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("enum.json");
    let p = path.to_str().unwrap();
    let (code, _) = run(&["enumerate", "--n", "3", "--f0", "7", "--height", "5/2", "--out", p]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["height"], "5/2");
    assert!(!v["forms"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ff_orbits_table() {
    let (code, out) = run(&["ff-orbits", "--form", "0,2,0", "--p", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 4);
    assert_eq!(v["mass_identity"], true);
}
