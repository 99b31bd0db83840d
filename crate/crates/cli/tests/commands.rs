use serde_json::Value;
use virasoro_o_cli::run_with;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("virasoro-o").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_trivial_block() {
    let v = json(&["classify", "--h", "0", "--c", "0", "--window", "12"]);
    assert_eq!(v["kind"], "thick");
    assert_eq!(v["boundary"], "HasMax");
    let level = |k: i64| -> Vec<String> {
        v["weights"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|w| w["level"] == k)
            .map(|w| w["offset"].as_str().unwrap().to_string())
            .collect()
    };
    for k in 1..=6i64 {
        assert_eq!(level(k), vec![((3 * k * k - k) / 2).to_string(), ((3 * k * k + k) / 2).to_string()]);
    }
}

#[test]
fn koszul_two_chain() {
    let (code, out, _) = call(&["koszul", "--chain", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({"koszul": true, "hilbert_identity": true}));
}

#[test]
fn parse_errors_exit_two() {
    let (code, out, err) = call(&["classify", "--h", "1/0", "--c", "0"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(e["error"], "parse-error");
    assert_eq!(call(&["classify", "--c", "0"]).0, 2);
    assert_eq!(call(&["ext", "--kind", "ll", "--h", "1", "--c", "1", "--from", "x", "--to", "0/plain", "--degree", "0"]).0, 2);
}

#[test]
fn domain_errors_exit_one() {
    let (code, _, err) = call(&["ext", "--kind", "ll", "--h", "0", "--c", "2", "--from", "3/plain", "--to", "0/plain", "--degree", "0"]);
    assert_eq!(code, 1);
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(e["error"], "weight-not-in-block");

    let (code, _, err) = call(&["char", "--h", "0", "--c", "0", "--window", "8", "--cutoff", "100000"]);
    assert_eq!(code, 1);
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(e["error"], "window-exhausted");
}

#[test]
fn quiver_dot_output() {
    let (code, dot, _) = call(&["quiver", "--h", "0", "--c", "2", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph ext1 {"));
    assert!(dot.contains("// a1b1=0"));
    assert_eq!(dot.matches(" -> ").count(), 2);

    let (_, dot, _) = call(&["quiver", "--h", "0", "--c", "0", "--truncate", "2", "--format", "dot"]);
    assert_eq!(dot.matches("[label=").count() - dot.matches(" -> ").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 12);

    let (_, dot, _) = call(&["quiver", "--h", "1/7", "--c", "2", "--format", "dot"]);
    assert_eq!(dot.matches(" -> ").count(), 0);
    assert_eq!(dot.matches("[label=").count(), 1);
}

#[test]
fn ext_matches_oracle_schema() {
    let oracle = json(&["oracle", "--chain", "3", "--max-degree", "3"]);
    let entries = oracle["ext"]["entries"].as_array().unwrap();
    for e in entries {
        let v = json(&[
            "ext", "--kind", "ll", "--h", "1", "--c", "1", "--from", e["lambda"].as_str().unwrap(), "--to",
            e["nu"].as_str().unwrap(), "--degree", &e["n"].to_string(),
        ]);
        let formula = &v["entries"][0];
        // 2/plain is the bottom of the 3-chain but not of the c = 1 block
        if e["lambda"] != "2/plain" && e["nu"] != "2/plain" {
            assert_eq!(formula, e);
        }
        assert_eq!(v["kind"], oracle["ext"]["kind"]);
    }
}

#[test]
fn bgg_cohomology_and_characters() {
    let v = json(&["bgg", "--h", "0", "--c", "0", "--level", "0", "--branch", "plain", "--max-length", "3"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);

    let v = json(&["cohomology", "--h", "0", "--c", "0", "--k", "3"]);
    let offsets: Vec<&str> = v["weights"].as_array().unwrap().iter().map(|w| w["offset"].as_str().unwrap()).collect();
    assert_eq!(offsets, vec!["12", "15"]);

    let v = json(&["char", "--h", "0", "--c", "0", "--cutoff", "12"]);
    let coeffs: Vec<&str> = v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs[0], "1");
    assert!(coeffs[1..].iter().all(|c| *c == "0"));
}

#[test]
fn output_is_deterministic() {
    let args = ["quiver", "--h", "0", "--c", "0", "--truncate", "3", "--format", "json"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn verify_runs_the_battery() {
    let v = json(&["verify"]);
    let results = v.as_array().unwrap();
    assert_eq!(results.len(), 9);
    assert!(results.iter().all(|r| r["passed"] == true));
}
