use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn germlab(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germlab")).args(args).arg(fixture(file)).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn machine_entries(text: &str) -> Vec<(String, String)> {
    let start = text.find("---RESULTS---\n").expect("machine block") + "---RESULTS---\n".len();
    let end = text.find("---END---").expect("end fence");
    text[start..end]
        .lines()
        .map(|l| {
            let (k, v) = l.split_once(" = ").expect("key = value");
            (k.to_string(), v.to_string())
        })
        .collect()
}

fn value<'a>(entries: &'a [(String, String)], key: &str) -> &'a str {
    &entries.iter().find(|(k, _)| k == key).unwrap_or_else(|| panic!("no {key}")).1
}

#[test]
fn sphere_report() {
    let o = germlab(&["invariants"], "sphere4.germ");
    assert_eq!(o.status.code(), Some(0));
    let e = machine_entries(&stdout(&o));
    assert_eq!(value(&e, "mu_br_rel"), "1");
    assert_eq!(value(&e, "gsv"), "2");
    assert_eq!(value(&e, "brasselet"), "2");
    assert_eq!(value(&e, "eu_fx"), "0");
    assert!(e.iter().filter(|(k, _)| k.starts_with("check.") && !k.ends_with("hs")).all(|(_, v)| v == "pass"));
}

#[test]
fn human_block_agrees_with_machine_block() {
    let text = stdout(&germlab(&["invariants"], "cubic4.germ"));
    let (human, _) = text.split_once("---RESULTS---").unwrap();
    let e = machine_entries(&text);
    for (key, label) in [("gsv", "GSV index"), ("eu_fx", "Eu_f,X(0)"), ("polar_md", "polar multiplicity m_d")] {
        let line = human.lines().find(|l| l.trim_start().starts_with(label)).unwrap();
        assert_eq!(line.split_whitespace().last().unwrap(), value(&e, key));
    }
    let checks = e.iter().filter(|(k, _)| k.starts_with("check.") && k.matches('.').count() == 1).count();
    assert_eq!(human.matches("[PASS]").count(), checks);
}

#[test]
fn machine_flag_suppresses_human_block() {
    let text = stdout(&germlab(&["milnor", "--machine"], "plane_curve.germ"));
    assert_eq!(text, "---RESULTS---\ncommand = milnor\nmu = 12\n---END---\n");
}

#[test]
fn tjurina_of_plane_curve() {
    let e = machine_entries(&stdout(&germlab(&["tjurina"], "plane_curve.germ")));
    assert_eq!(value(&e, "tau"), "11");
}

#[test]
fn icis_numbers() {
    let e = machine_entries(&stdout(&germlab(&["milnor"], "two_quadrics.germ")));
    assert_eq!(value(&e, "mu"), "9");
    let e = machine_entries(&stdout(&germlab(&["tjurina"], "cubic4.germ")));
    assert_eq!(value(&e, "tau"), "2");
}

#[test]
fn seed_flag_overrides_file() {
    let a = machine_entries(&stdout(&germlab(&["invariants"], "sphere4.germ")));
    let b = machine_entries(&stdout(&germlab(&["invariants", "--seed", "5"], "sphere4.germ")));
    assert_eq!(value(&b, "seed"), "5");
    assert_ne!(value(&a, "generic_form"), value(&b, "generic_form"));
    assert_eq!(value(&a, "eu_x"), value(&b, "eu_x"));
}

#[test]
fn theta_of_line() {
    let e = machine_entries(&stdout(&germlab(&["theta"], "line.germ")));
    assert_eq!(value(&e, "theta.count"), "2");
    let mut gens = vec![value(&e, "theta.1").to_string(), value(&e, "theta.2").to_string()];
    gens.sort();
    assert_eq!(gens, vec!["[-x, 0]", "[0, 1]"]);
}

#[test]
fn std_of_cone() {
    let e = machine_entries(&stdout(&germlab(&["std"], "cone.germ")));
    assert_eq!(value(&e, "colength"), "infinite");
    assert_eq!(value(&e, "dimension"), "2");
}

#[test]
fn parse_errors_exit_1_with_position() {
    let o = germlab(&["std"], "malformed_expr.germ");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 12"));
    assert_eq!(germlab(&["std"], "malformed_section.germ").status.code(), Some(1));
    assert_eq!(germlab(&["theta"], "no_such_file.germ").status.code(), Some(1));
}

#[test]
fn precondition_errors_exit_2() {
    let o = germlab(&["check"], "bad.germ");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ICIS violation: dimension 2, expected 1"));
    let o = germlab(&["invariants"], "low_dim.germ");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension 2 < 3"));
    assert_eq!(germlab(&["std"], "plane_curve.germ").status.code(), Some(2));
}

#[test]
fn step_cap_is_a_precondition_failure() {
    let o = germlab(&["milnor", "--max-steps", "1"], "two_quadrics.germ");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("reduction steps"));
}

#[test]
fn corrupted_identity_exits_3() {
    let o = germlab(&["check"], "corrupted.germ");
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("brasselet_relation: lhs = 2, rhs = 3"), "{err}");
    let e = machine_entries(&stdout(&o));
    assert_eq!(value(&e, "check.brasselet_relation"), "fail");
}

#[test]
fn bad_usage_exits_1() {
    let o = Command::new(env!("CARGO_BIN_EXE_germlab")).arg("frobnicate").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
