use std::process::{Command, Output};

fn cde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cde")).args(args).output().expect("spawn cde")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn expect_shifted_4_2() {
    let o = cde(&["expect", "--shape", "4,2", "--shifted"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"E_X":"6/5","E_Y":"6/5","cde":true}"#);
}

#[test]
fn expect_methods_agree() {
    let base = stdout(&cde(&["expect", "--shape", "5,3,1", "--shifted"]));
    for m in ["interval", "sbt"] {
        assert_eq!(stdout(&cde(&["expect", "--shape", "5,3,1", "--shifted", "--method", m])), base);
    }
}

#[test]
fn count_syt_4_3_1() {
    let o = cde(&["count", "--shape", "4,3,1", "--what", "syt", "--method", "formula"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "70");
    let e = cde(&["count", "--shape", "4,3,1", "--what", "syt", "--method", "enumerate"]);
    assert_eq!(stdout(&e).trim(), "70");
}

#[test]
fn count_sbt_methods_agree() {
    for shifted in [false, true] {
        let mut a = vec!["count", "--shape", "4,2,1", "--what", "sbt"];
        if shifted {
            a.push("--shifted");
        }
        let f = stdout(&cde(&[a.as_slice(), &["--method", "formula"]].concat()));
        let e = stdout(&cde(&[a.as_slice(), &["--method", "enumerate"]].concat()));
        assert_eq!(f, e);
    }
}

#[test]
fn aq_conjecture_4_2() {
    let o = cde(&["aq", "--shape", "4,2", "--check-conjecture"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["equal"], true);
    assert_eq!(v["balanced"], true);
    assert_eq!(v["conjugate_equal"], true);
    assert_eq!(v["E_aq"], v["product"]);
}

#[test]
fn classify_outputs_label() {
    let v = json(&cde(&["classify", "--shape", "4,2"]));
    assert_eq!(v["classification"], "balanced(slope=1/2)");
    let v = json(&cde(&["classify", "--shape", "5,3,1", "--shifted"]));
    assert_eq!(v["classification"], "shifted-balanced+trapezoidal");
    let v = json(&cde(&["classify", "--shape", "6,4,2", "--shifted"]));
    assert_eq!(v["classification"], "trapezoidal");
}

#[test]
fn scan_csv_is_byte_stable_across_jobs() {
    let a = cde(&["scan", "--max-size", "8", "--shifted", "--jobs", "1"]);
    let b = cde(&["scan", "--max-size", "8", "--shifted", "--jobs", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("size,shape,ex_num,ex_den,ey_num,ey_den,cde,classification,conjecture_ok"));
    assert_eq!(lines.next(), Some("1,1,1,2,1,2,true,shifted-balanced+trapezoidal,true"));
}

#[test]
fn scan_empty_is_header_only() {
    let o = cde(&["scan", "--max-size", "0"]);
    assert_eq!(stdout(&o), "size,shape,ex_num,ex_den,ey_num,ey_den,cde,classification,conjecture_ok\n");
}

#[test]
fn scan_writes_file() {
    let path = std::env::temp_dir().join(format!("cde-scan-{}.csv", std::process::id()));
    let o = cde(&["scan", "--max-size", "4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(body.lines().count(), 1 + 1 + 2 + 3 + 5);
}

#[test]
fn scan_bad_path_exits_1() {
    let o = cde(&["scan", "--max-size", "2", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_identity_json() {
    let o = cde(&["verify", "--identity", "mainidentity", "--params", "m=0,n=1"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        r#"{"equal":true,"lhs":"1/6","name":"mainidentity","params":{"m":"0","n":"1"},"rhs":"1/6"}"#
    );
}

#[test]
fn verify_bijections_and_integrals() {
    for map in ["k2", "k1", "diag"] {
        let o = cde(&["verify", "--bijection", map, "--shape", "5,3,1"]);
        assert!(o.status.success(), "{map}");
        assert!(stdout(&o).lines().all(|l| l.contains(r#""bijective":true"#)));
    }
    let o = cde(&["verify", "--integrals", "--shape", "3,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(r#""name":"SSYT_int""#));
}

#[test]
fn usage_errors_exit_2() {
    let bad_shape = cde(&["expect", "--shape", "2,x"]);
    assert_eq!(bad_shape.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_shape.stderr).contains("position 2"));
    assert_eq!(cde(&["expect", "--shape", "2,3", "--shifted"]).status.code(), Some(2));
    assert_eq!(cde(&["verify", "--identity", "border-series", "--params", "N=3"]).status.code(), Some(2));
    assert_eq!(cde(&["verify", "--identity", "nosuch", "--params", "n=1"]).status.code(), Some(2));
    assert_eq!(cde(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cde(&["verify"]).status.code(), Some(2));
}
