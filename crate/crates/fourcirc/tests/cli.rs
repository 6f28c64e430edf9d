use fourcirc::report::{EnumerateReport, Envelope, SearchReport};
use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("fourcirc").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = fourcirc::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    assert!(out.ends_with('\n'));
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert!(doc["schema"].as_str().unwrap().starts_with("fourcirc/"));
    assert!(doc["manifest"]["wall_time_ms"].is_number());
    doc["report"].clone()
}

#[test]
fn check_snapshot() {
    let r = report(&["check", "--q", "2", "--n", "3", "--a", "0,1,0", "--b", "0,0,0"]);
    assert_eq!(
        r,
        json!({
            "a": [0, 1, 0],
            "b": [0, 0, 0],
            "self_dual": true,
            "lcd": false,
            "criterion_residue": [0, 0, 0],
            "matrix_self_dual": true
        })
    );
}

#[test]
fn enumerate_snapshot() {
    let r = report(&["enumerate", "--q", "2", "--n", "3"]);
    assert_eq!(r["pair_count"], 12);
    assert_eq!(r["formula_count"], "12");
    assert_eq!(r["formula_matches"], true);
    assert_eq!(r["pairs"][0], json!({"a": [0, 0, 0], "b": [0, 0, 1], "distance": null}));
}

#[test]
fn factor_snapshot() {
    let r = report(&["factor", "--q", "3", "--n", "7"]);
    assert_eq!(r["degrees"], json!([1, 6]));
    assert_eq!(r["self_reciprocal"], json!([[2, 1], [1, 1, 1, 1, 1, 1, 1]]));
    assert_eq!(r["pairs"], json!([]));
    assert_eq!(r["cosets"], json!([[0], [1, 2, 3, 4, 5, 6]]));
    assert_eq!(r["alpha"], 1);
    let r = report(&["factor", "--q", "2", "--n", "7"]);
    assert_eq!(r["self_reciprocal"], json!([[1, 1]]));
    assert_eq!(r["pairs"], json!([[[1, 0, 1, 1], [1, 1, 0, 1]]]));
    assert_eq!(r["cosets"], json!([[0], [1, 2, 4], [3, 5, 6]]));
    assert_eq!(r["factors"][1], json!({"kind": "pair_second", "factor": [1, 1, 0, 1], "coset": [1, 2, 4]}));
}

#[test]
fn distance_snapshot() {
    let r = report(&["distance", "--q", "2", "--n", "3", "--a", "0,1,0", "--b", "0,0,0"]);
    assert_eq!(r["d"], 2);
    assert_eq!(r["witness_weight"], 2);
    assert_eq!(r["length"], 12);
    let (code, _, err) = run(&["distance", "--q", "2", "--n", "3", "--a", "0,1", "--b", "0", "--cap", "10"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn crt_snapshot() {
    let r = report(&["crt", "--q", "2", "--n", "3", "--a", "0,1,0", "--b", "0,0,0"]);
    let cons = r["constituents"].as_array().unwrap();
    assert_eq!(cons.len(), 2);
    assert_eq!(cons[0]["field"], "2^1");
    assert_eq!(cons[1]["field"], "2^2");
    assert!(cons.iter().all(|c| c["hermitian_self_dual"] == true));
    let r = report(&["crt", "--q", "2", "--n", "7", "--a", "1", "--b", "0"]);
    let kinds: Vec<&str> = r["constituents"].as_array().unwrap().iter().map(|c| c["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["self_reciprocal", "pair_second", "pair_first"]);
    assert_eq!(r["constituents"][1]["hermitian_self_dual"], Value::Null);
    assert_eq!(r["constituents"][1]["factor"], json!([1, 1, 0, 1]));
}

#[test]
fn counts_snapshots() {
    let r = report(&["counts", "--lemma", "4.1", "--q", "7"]);
    assert_eq!((r["brute_force"].clone(), r["formula"].clone(), r["agrees"].clone()), (json!(8), json!(8), json!(true)));
    let r = report(&["counts", "--lemma", "4.2", "--q", "3"]);
    assert_eq!((r["brute_force"].clone(), r["formula"].clone()), (json!(24), json!(24)));
    let (code, _, _) = run(&["counts", "--lemma", "4.1", "--q", "2"]);
    assert_eq!(code, 2);
}

fn primitive_root_oracle(q: u64, n: u64) -> bool {
    let mut x = 1u64;
    for k in 1..n - 1 {
        x = x * q % n;
        if x == 1 {
            return k == n - 1;
        }
    }
    x * q % n == 1
}

#[test]
fn artin_snapshot() {
    let r = report(&["artin", "--q", "2", "--limit", "1000"]);
    let primes: Vec<u64> = r["primes"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let expect: Vec<u64> = (3..=1000u64)
        .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .filter(|&n| primitive_root_oracle(2, n))
        .collect();
    assert_eq!(primes, expect);
    assert_eq!(&primes[..6], &[3, 5, 11, 13, 19, 29]);
    assert_eq!(report(&["artin", "--q", "4", "--limit", "30"])["primes"], json!([]));
}

#[test]
fn search_is_ranked() {
    let (code, out, _) = run(&["search", "--q", "2", "--n", "5", "--top", "200"]);
    assert_eq!(code, 0);
    let env: Envelope<SearchReport> = serde_json::from_str(&out).unwrap();
    let codes = &env.report.codes;
    assert_eq!(codes.len(), 120);
    assert_eq!(env.report.self_dual_codes, 120);
    for w in codes.windows(2) {
        let key = |c: &fourcirc::report::RankedCode| (std::cmp::Reverse(c.distance), c.a.clone(), c.b.clone());
        assert!(key(&w[0]) < key(&w[1]));
    }
    assert_eq!(codes[0].distance, 4);
    let top = report(&["search", "--q", "2", "--n", "3", "--top", "2"]);
    assert_eq!(top["codes"].as_array().unwrap().len(), 2);
}

#[test]
fn bound_snapshot() {
    let r = report(&["bound", "--q", "2", "--n", "13"]);
    assert_eq!(r["total_self_dual"], "524160");
    assert_eq!(r["bad_bounds"][1], json!({"d": 1, "bad_bound": "425984", "below_total": true}));
    assert_eq!(r["guaranteed_distance"], 2);
    assert_eq!(r["notes"].as_array().unwrap().len(), 2);
    let (code, _, _) = run(&["bound", "--q", "2", "--n", "7"]);
    assert_eq!(code, 2);
}

#[test]
fn entropy_snapshots() {
    let r = report(&["entropy", "--q", "2", "--t", "0.25"]);
    assert!((r["h"].as_f64().unwrap() - 0.8112781244591328).abs() < 1e-12);
    let r = report(&["entropy", "--q", "2", "--inverse", "--y", "0.125"]);
    let t = r["t"].as_f64().unwrap();
    assert!((t - 0.01712865507).abs() < 1e-9);
    let (code, _, _) = run(&["entropy", "--q", "2", "--t", "0.9"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["entropy", "--q", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn enumerate_csv_and_json_round_trip() {
    let (code, csv, _) = run(&["enumerate", "--q", "2", "--n", "3", "--distances", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("a,b,distance"));
    assert_eq!(lines.next(), Some("\"0,0,0\",\"0,0,1\",2"));
    assert_eq!(csv.lines().count(), 13);

    let (_, out, _) = run(&["enumerate", "--q", "5", "--n", "3", "--distances"]);
    let env: Envelope<EnumerateReport> = serde_json::from_str(&out).unwrap();
    let again = serde_json::to_string_pretty(&env).unwrap() + "\n";
    assert_eq!(again, out);
    let hist = env.report.distance_histogram.unwrap();
    assert_eq!(hist.iter().map(|e| e.count).sum::<u64>(), 480);
}

#[test]
fn errors_and_exit_codes() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["check", "--q", "6", "--n", "3", "--a", "0", "--b", "0"]).0, 2);
    assert_eq!(run(&["check", "--q", "2", "--n", "3", "--a", "0,1,0,1", "--b", "0"]).0, 2);
    assert_eq!(run(&["check", "--q", "2^2", "--n", "3", "--a", "0", "--b", "0", "--modulus", "1,0,1"]).0, 2);
    assert_eq!(run(&["enumerate", "--q", "3", "--n", "3"]).0, 2);
    assert_eq!(run(&["enumerate", "--q", "3", "--n", "5", "--cap", "1000"]).0, 3);
    assert_eq!(run(&["enumerate", "--q", "2", "--n", "3", "--workers", "0"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}

#[test]
fn environment_cap_and_output_file() {
    let bin = env!("CARGO_BIN_EXE_fourcirc");
    let status = std::process::Command::new(bin)
        .args(["enumerate", "--q", "3", "--n", "5"])
        .env("FOURCIRC_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));

    let dir = std::env::temp_dir().join(format!("fourcirc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("factor.csv");
    let (code, out, _) = run(&["factor", "--q", "2", "--n", "7", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("kind,factor,coset\n"));
    std::fs::remove_dir_all(&dir).unwrap();

    let bad = dir.join("missing").join("x.json");
    assert_eq!(run(&["factor", "--q", "2", "--n", "7", "--output", bad.to_str().unwrap()]).0, 1);
}

#[test]
fn extension_field_arguments() {
    let r = report(&["check", "--q", "4", "--n", "3", "--a", "2,3", "--b", "1"]);
    assert_eq!(r["a"], json!([2, 3, 0]));
    let a = report(&["enumerate", "--q", "2^2", "--n", "3"]);
    let b = report(&["enumerate", "--q", "4", "--n", "3", "--modulus", "1,1,1"]);
    assert_eq!(a, b);
}

#[test]
fn bodies_do_not_depend_on_workers() {
    for args in [
        vec!["search", "--q", "5", "--n", "3", "--top", "5"],
        vec!["enumerate", "--q", "2", "--n", "5", "--distances"],
        vec!["distance", "--q", "3", "--n", "5", "--a", "1,2,0,1", "--b", "0,1"],
    ] {
        let with = |w: &str| {
            let mut a = args.clone();
            a.extend(["--workers", w]);
            report(&a)
        };
        assert_eq!(with("1"), with("3"));
    }
}
