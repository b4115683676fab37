//! End-to-end behavior of the command-line surface.

use grobius::{grothendieck_poly, is_multiplicity_free, iterate_sn, schubert_poly, Int, Poly};

/// Runs the CLI in process; returns (status, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["grobius"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = grobius::cli::run(argv, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Minimal DOT grammar check: a `digraph` header, one statement per line
/// (attribute assignment, quoted node with optional attribute list, or a
/// quoted edge), and a closing brace.
fn assert_valid_dot(text: &str) {
    let mut lines = text.lines();
    let header = lines.next().expect("nonempty");
    assert!(
        header.starts_with("digraph ") && header.ends_with('{'),
        "bad header {header:?}"
    );
    let body: Vec<&str> = lines.collect();
    let last = body.last().expect("closing brace");
    assert_eq!(last.trim(), "}");

    fn take_quoted(s: &str) -> Option<(&str, &str)> {
        let rest = s.strip_prefix('"')?;
        let mut escaped = false;
        for (i, c) in rest.char_indices() {
            match (escaped, c) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => return Some((&rest[..i], &rest[i + 1..])),
                _ => {}
            }
        }
        None
    }

    for line in &body[..body.len() - 1] {
        let stmt = line.trim();
        let stmt = stmt.strip_suffix(';').expect("statement ends with ;");
        if let Some((_, rest)) = take_quoted(stmt) {
            let rest = rest.trim();
            if rest.is_empty() {
                continue; // bare node
            }
            if let Some(edge) = rest.strip_prefix("->") {
                let (_, tail) = take_quoted(edge.trim()).expect("quoted edge target");
                assert!(tail.trim().is_empty(), "junk after edge: {line:?}");
                continue;
            }
            // node with attribute list
            let attrs = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .unwrap_or_else(|| panic!("bad node statement: {line:?}"));
            let (key, value) = attrs.split_once('=').expect("key=value attribute");
            assert!(!key.trim().is_empty());
            let (_, tail) = take_quoted(value.trim()).expect("quoted attribute value");
            assert!(tail.trim().is_empty());
        } else {
            // plain attribute like rankdir=BT
            let (key, value) = stmt.split_once('=').expect("key=value statement");
            assert!(!key.trim().is_empty() && !value.trim().is_empty());
        }
    }
}

#[test]
fn schubert_verb_emits_canonical_json() {
    let (status, out, err) = run(&["schubert", "143562"]);
    assert_eq!(status, 0, "stderr: {err}");
    assert!(err.is_empty());
    let poly: Poly = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(poly, schubert_poly::<Int>(&"143562".parse().unwrap()));
    assert_eq!(poly.num_terms(), 9);
    // re-serializing reproduces the output byte for byte
    assert_eq!(serde_json::to_string(&poly).unwrap(), out.trim());
}

#[test]
fn grothendieck_methods_emit_identical_bytes() {
    let mut cases: Vec<String> = vec!["1".into(), "21".into(), "132".into(), "143562".into()];
    cases.extend(
        iterate_sn(4)
            .filter(is_multiplicity_free::<Int>)
            .map(|w| w.to_string()),
    );
    for w in cases {
        let (s1, via_mobius, _) = run(&["grothendieck", &w, "--method", "mobius"]);
        let (s2, via_recursion, _) = run(&["grothendieck", &w, "--method", "recursion"]);
        assert_eq!((s1, s2), (0, 0));
        assert_eq!(via_mobius, via_recursion, "w = {w}");
    }
}

#[test]
fn grothendieck_defaults_to_mobius_and_accepts_comma_form() {
    let (status, from_digits, _) = run(&["grothendieck", "143562"]);
    let (status2, from_commas, _) = run(&["grothendieck", "1,4,3,5,6,2", "--format", "json"]);
    assert_eq!((status, status2), (0, 0));
    assert_eq!(from_digits, from_commas);
    let poly: Poly = serde_json::from_str(from_digits.trim()).unwrap();
    assert_eq!(poly, grothendieck_poly::<Int>(&"143562".parse().unwrap()));
}

#[test]
fn grothendieck_mobius_rejects_hypothesis_violators() {
    let violator = iterate_sn(5)
        .find(|w| !is_multiplicity_free::<Int>(w))
        .unwrap()
        .to_string();
    let (status, out, err) = run(&["grothendieck", &violator, "--method", "mobius"]);
    assert_eq!(status, 1);
    assert!(out.is_empty());
    assert!(err.contains("hypothesis violated"), "stderr: {err}");
    assert!(err.contains(&violator));
    // the oracle route still works for the same permutation
    let (status, out, _) = run(&["grothendieck", &violator, "--method", "recursion"]);
    assert_eq!(status, 0);
    assert!(!out.is_empty());
}

#[test]
fn poset_json_matches_golden_labels() {
    let (status, out, _) = run(&["poset", "143562"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["ceiling"], serde_json::json!([2, 2, 1, 1, 1, 0]));
    assert_eq!(v["elements"].as_array().unwrap().len(), 15);
    assert_eq!(v["nu"]["2,2,1,1,1"], serde_json::json!(3));
    assert_eq!(v["nu"]["2,1,1,1,1"], serde_json::json!(-4));
    assert_eq!(v["mu"]["2,1,1,1,1"], serde_json::json!(4));
    assert_eq!(v["nu"]["2,0,1,1,1"], serde_json::json!(1));
}

#[test]
fn poset_dot_is_valid_and_deterministic() {
    let (status, plain, _) = run(&["poset", "143562", "--format", "dot"]);
    assert_eq!(status, 0);
    assert_valid_dot(&plain);
    // 16 nodes (15 vectors plus the bottom), 30 cover edges
    assert_eq!(plain.matches(" -> ").count(), 30);
    assert_eq!(plain.lines().filter(|l| l.contains("->")).count(), 30);

    let (_, labelled, _) = run(&["poset", "143562", "--format", "dot", "--labels"]);
    assert_valid_dot(&labelled);
    assert!(labelled.contains("ν=-4"));
    assert!(labelled.contains("ν=3"));

    let (_, again, _) = run(&["poset", "143562", "--format", "dot"]);
    assert_eq!(plain, again);

    let (status, diamond, _) = run(&["poset", "132", "--format", "dot"]);
    assert_eq!(status, 0);
    assert_valid_dot(&diamond);
    assert_eq!(diamond.matches(" -> ").count(), 4);
}

#[test]
fn diagram_verb_reports_cells_and_weight() {
    let (status, out, _) = run(&["diagram", "143562"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(
        v["cells"],
        serde_json::json!([[2, 2], [2, 3], [3, 2], [4, 2], [5, 2]])
    );
    assert_eq!(v["weight"], serde_json::json!([0, 2, 1, 1, 1, 0]));

    let (status, out, _) = run(&["diagram", "143562", "--closure"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["weight"], serde_json::json!([2, 2, 1, 1, 1, 0]));
    assert_eq!(v["cells"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_verb_small_sweep() {
    let (status, out, _) = run(&["verify", "--n", "4"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["n"], serde_json::json!(4));
    assert_eq!(v["total"], serde_json::json!(24));
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["matches"], v["multiplicity_free"]);
    assert!(v.get("skipped").is_none());
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn verify_verb_lists_skipped_permutations() {
    let (status, out, _) = run(&["verify", "--n", "5", "--jobs", "2", "--list-skipped"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["mismatches"], serde_json::json!([]));
    let skipped = v["skipped"].as_array().unwrap();
    assert!(!skipped.is_empty());
    for w in skipped {
        let w: grobius::Permutation = w.as_str().unwrap().parse().unwrap();
        assert!(!is_multiplicity_free::<Int>(&w));
    }
}

#[test]
fn proofcheck_verb() {
    let (status, out, _) = run(&["proofcheck", "132"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["ok"], serde_json::json!(true));
    assert_eq!(v["d"], serde_json::json!(2));
    assert_eq!(v["poset_size"], serde_json::json!(8));

    let (status, out, _) = run(&["proofcheck", "132", "--d", "3"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["ok"], serde_json::json!(true));

    let (status, _, err) = run(&["proofcheck", "143562", "--d", "2"]);
    assert_eq!(status, 1);
    assert!(err.contains("truncation degree"), "stderr: {err}");
}

#[test]
fn malformed_permutations_are_domain_errors() {
    for bad in ["1431", "10", "abc", "1,2,2"] {
        let (status, out, err) = run(&["schubert", bad]);
        assert_eq!(status, 1, "input {bad:?}");
        assert!(out.is_empty());
        assert!(err.contains("malformed permutation"), "stderr: {err}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let (status, _, err) = run(&["frobnicate", "123"]);
    assert_eq!(status, 2);
    assert!(!err.is_empty());
    let (status, _, _) = run(&["schubert"]);
    assert_eq!(status, 2);
    let (status, _, _) = run(&["grothendieck", "132", "--method", "sorcery"]);
    assert_eq!(status, 2);
    let (status, _, _) = run(&["verify"]);
    assert_eq!(status, 2);
}

#[test]
fn help_goes_to_stdout_with_status_0() {
    let (status, out, err) = run(&["--help"]);
    assert_eq!(status, 0);
    assert!(err.is_empty());
    assert!(out.contains("proofcheck"));
    let (status, out, _) = run(&["poset", "--help"]);
    assert_eq!(status, 0);
    assert!(out.contains("--labels"));
}

#[test]
fn spawned_binary_round_trip() {
    use std::process::Command;
    let exe = env!("CARGO_BIN_EXE_grobius");
    let ok = Command::new(exe)
        .args(["grothendieck", "143562", "--method", "mobius", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let poly: Poly = serde_json::from_slice(ok.stdout.trim_ascii()).unwrap();
    assert_eq!(poly, grothendieck_poly::<Int>(&"143562".parse().unwrap()));

    let usage = Command::new(exe).args(["no-such-verb"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let violator = iterate_sn(5)
        .find(|w| !is_multiplicity_free::<Int>(w))
        .unwrap()
        .to_string();
    let domain = Command::new(exe)
        .args(["grothendieck", &violator, "--method", "mobius"])
        .output()
        .unwrap();
    assert_eq!(domain.status.code(), Some(1));
}
