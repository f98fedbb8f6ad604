use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn shipped(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn meyer(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_meyer")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = meyer(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn spec_examples() {
    assert_eq!(ok(&["phi1", "1,1;0,1"]), "2/3\n");
    assert_eq!(ok(&["order", "-p", "sl2z.json"]), "3\n");
    assert_eq!(ok(&["tau", "-g", "1", "1,0;0,1", "0,1;-1,0"]), "0\n");
}

#[test]
fn shipped_files_on_disk() {
    assert_eq!(ok(&["order", "-p", &shipped("sl2z.json")]), "3\n");
    assert_eq!(ok(&["order", "-p", &shipped("genus2.json"), "--verbose"]).lines().take(2).collect::<Vec<_>>(), ["5", "m 3"]);
    assert_eq!(ok(&["phi", "-p", &shipped("genus2.json"), "(c1 c2)^6"]), "-4/5\n");
    assert_eq!(ok(&["phi", "-p", "genus2.json", "c3"]), "3/5\n");
}

#[test]
fn genus1_commands() {
    assert_eq!(ok(&["phi1", "[[1,-1],[0,1]]"]), "-2/3\n");
    assert_eq!(ok(&["phi1", "-1,0;0,-1"]), "0\n");
    assert_eq!(ok(&["dedekind", "1", "3"]), "1/18\n");
    assert_eq!(ok(&["dedekind", "-1", "3"]), "-1/18\n");
    assert_eq!(ok(&["rademacher", "1,1;0,1"]), "1\n");
    assert_eq!(ok(&["tau", "-g", "1", "1,1;0,1", "1,1;0,1"]), "1\n");
}

#[test]
fn fibration_files() {
    let out = ok(&["local-sig", "-f", &data("twelve_i1.json")]);
    assert_eq!(out.lines().filter(|l| l.ends_with("\t-2/3")).count(), 12);
    assert!(out.ends_with("total\t-8\n"), "{out}");
    let out = ok(&["local-sig", "-f", &data("genus2_pair.json")]);
    assert!(out.ends_with("total\t0\n"), "{out}");
}

#[test]
fn bookkeeping_commands() {
    assert_eq!(ok(&["euler", "-g", "1", "-b", "0", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]), "12\n");
    assert_eq!(ok(&["euler", "-g", "2", "--fiber-chi", "0"]), "2\n");
    assert_eq!(ok(&["euler", "-g", "2", "-b", "2"]), "4\n");
    assert_eq!(ok(&["geo", "0", "1"]), "-8 12\n");
    assert_eq!(ok(&["geo", "--invert", "-8", "12"]), "0 1\n");
    assert_eq!(ok(&["twist-value", "-g", "2", "--nonsep"]), "3/5\n");
    assert_eq!(ok(&["twist-value", "-g", "3", "--sep", "1"]), "-8/7\n");
    assert_eq!(ok(&["sigma-alg", "-g", "2", "--horikawa", "0", "--eps", "1"]), "-3/5\n");
    assert_eq!(ok(&["horikawa", "-g", "2", "--k2", "2", "--chi-f", "1"]), "0\n");
}

#[test]
fn orders_of_custom_presentations() {
    assert_eq!(ok(&["order", "-p", &data("z4.json"), "--verbose"]), "1\nq s -1\n");
    let (code, _, err) = meyer(&["order", "-p", &data("bad_relator.json")]);
    assert_eq!(code, 1);
    assert!(err.contains("relator"), "{err}");
}

#[test]
fn seeded_output_is_stable() {
    let a = ok(&["random-sp", "-g", "2", "--seed", "17"]);
    assert_eq!(a, ok(&["random-sp", "-g", "2", "--seed", "17"]));
    assert_ne!(a, ok(&["random-sp", "-g", "2", "--seed", "18"]));
}

#[test]
fn errors_and_exit_codes() {
    let (code, _, err) = meyer(&["phi1", "1,x;0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 2"), "{err}");
    let (code, _, err) = meyer(&["phi1", "2,0;0,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("ᵗA J A = J"), "{err}");
    let (code, _, err) = meyer(&["phi", "-p", "sl2z.json", "a q"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(meyer(&["tau", "-g", "2", "1,0;0,1", "1,0;0,1"]).0, 1);
    assert_eq!(meyer(&["dedekind", "1", "0"]).0, 1);
    assert_eq!(meyer(&["twist-value", "-g", "2", "--sep", "2"]).0, 1);
    assert_eq!(meyer(&["order", "-p", "/nonexistent/p.json"]).0, 1);
    assert_eq!(meyer(&["bogus"]).0, 2);
}

#[test]
fn data_override() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").display().to_string();
    assert_eq!(ok(&["--data", &dir, "order", "-p", "sl2z.json"]), "3\n");
    let (code, _, _) = meyer(&["--data", "/nonexistent", "phi1", "1,1;0,1"]);
    assert_eq!(code, 0);
}

#[test]
fn selftest_passes() {
    let out = ok(&["--selftest", "--seed", "3"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}
