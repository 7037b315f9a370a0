use std::fs;
use std::process::{Command, Output};

fn harmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmap"))
        .args(args)
        .output()
        .expect("running harmap")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn table_two_first_column() {
    let o = harmap(&["table", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0].split(',').next(), Some("quantity"));
    assert!(lines[1].starts_with("r3',0.8333,"));
    assert!(lines[2].starts_with("rho2,0.4545,"));
    assert!(lines[3].starts_with("sigma3',0.5740,0.2768,"));
    assert!(lines[4].starts_with("R2,0.2726,"));
    assert!(lines[4].ends_with(",0.0397"));
}

#[test]
fn table_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        assert!(harmap(&["--out", p.to_str().unwrap(), "table", "1"])
            .status
            .success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn radii_reports_comparator_and_errors() {
    let o = harmap(&["radii", "thm1", "--K", "1", "--Kp", "0", "--Lambda", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("thm1,0.5000000000,0.2739075653"));
    assert!(text.contains("thmC,"));

    let o = harmap(&["radii", "thm10", "--Lambda", "1"]);
    assert!(stdout(&o).contains("thm10,1.000000000,1.000000000"));

    let o = harmap(&["radii", "thm11", "--M", "2"]);
    assert!(stdout(&o).contains("thm11,0.2679491924,n/a"));

    let o = harmap(&["radii", "thm1", "--K", "0.5", "--Lambda", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("K >= 1"));
}

#[test]
fn extremal_then_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("f0.map");
    let o = harmap(&[
        "--out",
        map.to_str().unwrap(),
        "extremal",
        "f0",
        "--M",
        "2",
        "--N",
        "64",
    ]);
    assert!(o.status.success());
    let spec = fs::read_to_string(&map).unwrap();
    assert!(spec.starts_with("harmonic-map v1 N=64\n"));
    assert!(spec.contains("\na 2 -1.5 0.0\n"));

    let o = harmap(&[
        "oracle",
        map.to_str().unwrap(),
        "--max-radius",
        "0.9",
        "--radial-steps",
        "48",
        "--angular-steps",
        "64",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let lo: f64 = row[1].parse().unwrap();
    let hi: f64 = row[2].parse().unwrap();
    let rho = 2.0 - 3f64.sqrt();
    assert!(lo <= rho + 1e-9 && hi >= rho - 1e-9);
    assert_eq!(row[3], "violated");
}

#[test]
fn fn_extremal_coefficient() {
    let o = harmap(&["extremal", "fn", "--Lambda", "2", "--n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\na 2 0.75 0.0\n"));
    let o = harmap(&["extremal", "fn", "--Lambda", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_reports_parse_errors_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("bad.map");
    fs::write(&map, "harmonic-map v1 N=2\na 1 1 0\nb 2 x 0\n").unwrap();
    let o = harmap(&["oracle", map.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn verify_exit_codes() {
    let o = harmap(&["verify", "lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("suite,check,value,reference,margin,tolerance,status\n"));

    let o = harmap(&["verify", "sharpness", "--theorem", "thm11", "--M", "2"]);
    assert_eq!(o.status.code(), Some(0));

    // one published entry disagrees with its formula
    let o = harmap(&["verify", "tables"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 53);
    assert_eq!(text.lines().filter(|l| l.ends_with(",fail")).count(), 1);

    let o = harmap(&["verify", "sharpness", "--theorem", "thm6", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = harmap(&["verify", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conjecture_scan_is_seeded() {
    let args = [
        "conjecture-scan",
        "--K",
        "2",
        "--Lambda",
        "2",
        "--n",
        "2",
        "--samples",
        "200",
        "--radial-steps",
        "12",
        "--angular-steps",
        "24",
    ];
    let run = |seed: &str| {
        let mut a = vec!["--seed", seed];
        a.extend(args);
        let o = harmap(&a);
        assert!(o.status.success());
        stdout(&o)
    };
    assert_eq!(run("9"), run("9"));
    let row = run("9");
    let fields: Vec<&str> = row.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(fields[5], "1.500000000");
    assert_eq!(fields[9], "1.875000000");
}

#[test]
fn coeff_bound_command() {
    let o = harmap(&[
        "coeff-bound",
        "conjecture",
        "--K",
        "2",
        "--Lambda",
        "2",
        "--n",
        "2",
    ]);
    assert_eq!(stdout(&o), "variant,n,bound\nconjecture,2,1.500000000\n");
    let o = harmap(&[
        "coeff-bound",
        "cor4",
        "--K",
        "2",
        "--Lambda",
        "2",
        "--n",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
