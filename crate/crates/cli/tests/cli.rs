use std::process::{Command, Output};

use fractal_lie::{Element, HullElement, Rationals};

fn fractal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fractal"))
        .args(args)
        .env_remove("FRACTAL_CHAR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fractal(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn bracket_of_generators() {
    assert_eq!(stdout(&["bracket", "v0", "v1"]).trim(), "-1·x0·v2");
}

#[test]
fn bracket_with_oracle() {
    let out = stdout(&["bracket", "x0v2", "v3", "--oracle", "7"]);
    assert!(out.contains("oracle: agrees"), "{out}");
}

#[test]
fn square_in_characteristic_two() {
    assert_eq!(stdout(&["--char", "2", "bracket", "--square", "v0"]).trim(), "1·x1·v2");
}

#[test]
fn hilbert_csv() {
    let out = stdout(&["hilbert", "--max-degree", "60", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,dim");
    assert_eq!(lines.len(), 61);
    let dims: Vec<&str> = lines[1..7].iter().map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(dims, ["2", "3", "2", "3", "4", "4"]);
    assert_eq!(lines[60], "60,4");
    assert_eq!(out, stdout(&["growth", "hilbert", "--max-degree", "60", "--format", "csv"]));
}

#[test]
fn width_in_characteristic_two() {
    let out = stdout(&["width", "--char", "2", "--variant", "lie", "--max", "100"]);
    assert!(out.starts_with("2,1,2,2,1,1,2,"), "{out}");
    assert!(out.contains("width 2"));
}

#[test]
fn diagonals_start_at_57() {
    let out = stdout(&["growth", "diagonals", "--max", "200", "--format", "csv"]);
    assert_eq!(out.lines().nth(1), Some("57"));
}

#[test]
fn diamonds_pass() {
    let out = fractal(&["diamonds", "--char", "2", "--variant", "lie", "--terms", "98", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["tail_period"].is_null());
    assert_eq!(v["sequence"].as_array().unwrap().len(), 98);
}

#[test]
fn basis_csv_schema() {
    let out = stdout(&["basis", "--max-length", "3", "--format", "csv"]);
    assert_eq!(out.lines().next(), Some("kind,length,tail,wt,swt,x1,x2"));
    assert!(out.lines().any(|l| l == "first,2,x0,3,0,1,1"));
    let hull = stdout(&["hull", "basis", "--length", "2", "--format", "csv"]);
    assert_eq!(hull.lines().next(), Some("kind,length,tail,wt,swt,x1,x2,suffix"));
    assert_eq!(hull.lines().count(), 13);
}

#[test]
fn printed_elements_reparse() {
    let q = Rationals::new();
    for (u, w) in [("v0", "v1"), ("x0v2", "v3 - 2*x1v4"), ("1/2*x0x1v3", "v2 + x2v4"), ("v5", "x3v6")] {
        let printed = stdout(&["bracket", u, w]);
        let expected = Element::parse(q, u).unwrap().bracket(&Element::parse(q, w).unwrap()).unwrap();
        assert_eq!(Element::parse(q, printed.trim()).unwrap(), expected, "{u} {w}");
    }
    for factors in [&["v0", "v0"][..], &["v0", "v1", "v0"], &["x0v2", "v3", "v1"]] {
        let mut args = vec!["hull", "product"];
        args.extend_from_slice(factors);
        let printed = stdout(&args);
        let parsed = HullElement::parse(q, printed.trim()).unwrap();
        assert_eq!(parsed.to_string(), printed.trim());
    }
}

#[test]
fn verify_reports() {
    let out = fractal(&["verify", "relations", "--max", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let out = stdout(&["verify", "justinf", "--seed", "x0v2", "--max-len", "12"]);
    assert!(out.starts_with("PASS"), "{out}");
    let out = stdout(&["verify", "adnil", "--element", "v1", "--probe-weight", "32"]);
    assert!(out.starts_with("PASS"), "{out}");
}

#[test]
fn characteristic_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fractal"))
        .args(["bracket", "v0", "v0"])
        .env("FRACTAL_CHAR", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2·x1·v2");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--char", "4", "basis"][..],
        &["--char", "2", "--variant", "zform", "basis"],
        &["bracket", "v0", "y1"],
        &["bracket", "v0"],
        &["verify", "notthin"],
        &["basis", "--bogus"],
        &["nosuch"],
    ] {
        let out = fractal(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
