use std::process::Command;

fn arcinv(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_arcinv"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn pair_prints_in_the_input_grammar() {
    assert_eq!(
        arcinv(&["pair", "x1_0^2", "x1_0^3"]),
        (0, "6*x1_0\n".into())
    );
    assert_eq!(arcinv(&["pair", "2*x1_0*x1_2 + x1_1^2", "x1_1^2"]).1, "2\n");
    assert_eq!(arcinv(&["pair", "x1_0 +", "x1_0"]).0, 2);
}

#[test]
fn gens_lists_generators() {
    let (code, text) = arcinv(&["gens", "--n", "1", "--max-order", "2"]);
    assert_eq!(code, 0);
    assert!(text.contains("g[1,1,2] = 2*x1_0*x1_2 + x1_1^2"));
}

#[test]
fn perp_json_reports_the_basis() {
    let (code, text) = arcinv(&[
        "--json", "perp", "--n", "1", "--degree", "2", "--order", "2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dim"], 1);
    assert_eq!(v["basis"][0], "x1_0*x1_2 - x1_1^2");
}

#[test]
fn minors_reports_degree_dimensions() {
    let (code, text) = arcinv(&["--json", "minors", "--family", "T", "--n", "1", "--h", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["total_dim"], 8);
    assert_eq!(
        arcinv(&["minors", "--family", "Q", "--n", "1", "--h", "1"]).0,
        2
    );
}

#[test]
fn series_and_chain_exit_zero() {
    let (code, text) = arcinv(&["series", "--n", "2", "--h-max", "2"]);
    assert_eq!(code, 0);
    assert!(text.contains("h=2 dim=27 closed_form=27 ok"));
    let (code, text) = arcinv(&["--json", "dims-chain", "--n", "1", "--h", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        (v["dim_t"].as_u64(), v["equal"].as_bool()),
        (Some(4), Some(true))
    );
}

#[test]
fn verify_reports_are_deterministic() {
    let args = ["--json", "--threads", "2", "verify", "--n", "2", "--h", "1"];
    let (code, first) = arcinv(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["total_dim"], 9);
    assert_eq!(arcinv(&args).1, first);
}

#[test]
fn verify_writes_to_out_file() {
    let path = std::env::temp_dir().join(format!("arcinv-report-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (code, stdout) = arcinv(&[
        "--json", "--out", path_str, "verify", "--n", "1", "--h", "0",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["total_dim"], 2);
    std::fs::remove_file(path).ok();
}
