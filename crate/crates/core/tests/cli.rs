use supernomial::cli::run;

fn sn(args: &[&str]) -> supernomial::cli::CliOutput {
    run(std::iter::once("supernomial").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = sn(args);
    assert_eq!(out.code, 0, "args {args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn golden_polynomials_every_route() {
    for via in ["formula", "rc", "multitab", "ribbon"] {
        let sym = ok(&[
            "--lambda", "2,2,1", "--mu", "2,2,1", "--n", "3", "--mode", "sym", "--via", via,
        ]);
        assert_eq!(sym.trim(), "[1,2,4,3,1]", "sym via {via}");
        let anti = ok(&[
            "supernomial",
            "--lambda",
            "[2,2,1]",
            "--mu",
            "[2,2,1]",
            "--mode",
            "anti",
            "--via",
            via,
        ]);
        assert_eq!(anti.trim(), "[2,2,1]", "anti via {via}");
    }
}

#[test]
fn trivial_and_rendered() {
    assert_eq!(
        ok(&["--lambda", "0", "--mu", "0", "--n", "1"]).trim(),
        "[1]"
    );
    let text = ok(&["--lambda", "2,2,1", "--mu", "2,2,1", "--render", "ascii"]);
    assert_eq!(text.trim(), "1 + 2q + 4q^2 + 3q^3 + q^4");
}

#[test]
fn usage_errors_exit_two() {
    let bad = sn(&["--lambda", "2,x", "--mu", "1"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("nonnegative integer"));
    let unsorted = sn(&["--lambda", "1,2", "--mu", "1,2"]);
    assert_eq!(unsorted.code, 2);
    let core = sn(&["ribbon", "quot", "--shape", "3,1,1", "--L", "2"]);
    assert_eq!(core.code, 2);
    assert!(core.stderr.contains("core"), "{}", core.stderr);
    assert_eq!(sn(&["frobnicate"]).code, 2);
    assert_eq!(sn(&["ribbon", "spin", "--tableau", "{not json"]).code, 2);
}

#[test]
fn quotient_round_trip() {
    let q = ok(&["ribbon", "quot", "--shape", "6,6,4,4,4,3", "--L", "3"]);
    assert_eq!(q.trim(), "[[1,1],[2,2],[2,1]]");
    let back = ok(&["ribbon", "unquot", "--quotient", q.trim(), "--L", "3"]);
    assert_eq!(back.trim(), "[6,6,4,4,4,3]");
}

#[test]
fn ribbon_json_feeds_spin() {
    let lines = ok(&[
        "ribbon",
        "enumerate",
        "--shape",
        "5,5,5",
        "--weight",
        "2,2,1",
        "--L",
        "3",
        "--json",
    ]);
    let lines: Vec<&str> = lines.lines().collect();
    assert_eq!(lines.len(), 11);
    let mut cospins = Vec::new();
    for line in lines {
        let out = ok(&["ribbon", "spin", "--tableau", line, "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        cospins.push(v["cospin"].as_u64().unwrap());
    }
    cospins.sort();
    // (5,5,5) has 3-quotient ((2),(2),(1)): the symmetric golden
    assert_eq!(cospins, vec![0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4]);
}

#[test]
fn multitab_json_feeds_inv_and_standardize() {
    let lines = ok(&[
        "multitab",
        "enumerate",
        "--rows",
        "2,2,1",
        "--weight",
        "2,2,1",
        "--json",
    ]);
    let mut invs: Vec<usize> = lines
        .lines()
        .map(|l| {
            ok(&["multitab", "inv", "--tableau", l])
                .trim()
                .parse()
                .unwrap()
        })
        .collect();
    invs.sort();
    assert_eq!(invs, vec![0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4]);
    let first = lines.lines().next().unwrap();
    let st = ok(&["multitab", "standardize", "--tableau", first, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&st).unwrap();
    assert_eq!(v["n"], 5);
}

#[test]
fn psi_round_trip_through_json() {
    let rc = ok(&[
        "bij",
        "psi",
        "--words",
        "[[2,3],[1,1],[1,3,4]]",
        "--n",
        "4",
        "--json",
    ]);
    let t = ok(&[
        "bij",
        "psi-inv",
        "--rc",
        rc.trim(),
        "--sizes",
        "2,2,3",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&t).unwrap();
    assert_eq!(
        v["fillings"],
        serde_json::json!([[[2, 3]], [[1, 1]], [[1, 3, 4]]])
    );
    let wrong = sn(&[
        "bij",
        "psi-prime-inv",
        "--rc",
        rc.trim(),
        "--sizes",
        "2,2,3",
    ]);
    assert_eq!(wrong.code, 2);
    assert!(wrong.stderr.contains("mode mismatch"));
}

#[test]
fn psi_prime_trace_round_trip() {
    let words = "[[3,4],[2],[1,3,4]]";
    let rc = ok(&["bij", "psi-prime", "--words", words, "--n", "4", "--json"]);
    let traced = ok(&[
        "bij",
        "psi-prime-inv",
        "--rc",
        rc.trim(),
        "--sizes",
        "2,1,3",
        "--trace",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&traced).unwrap();
    assert_eq!(v["trace"]["steps"].as_array().unwrap().len(), 6);
    assert_eq!(
        v["result"]["fillings"],
        serde_json::json!([[[3], [4]], [[2]], [[1], [3], [4]]])
    );
    let text = ok(&["bij", "psi-prime", "--words", words, "--n", "4", "--trace"]);
    assert!(text.contains("stage 6"));
}

#[test]
fn rc_enumerate_counts() {
    let sym = ok(&[
        "rc",
        "enumerate",
        "--lambda",
        "2,2,1",
        "--mu",
        "2,2,1",
        "--json",
    ]);
    assert_eq!(sym.lines().count(), 11);
    let anti = ok(&[
        "rc",
        "enumerate",
        "--lambda",
        "2,2,1",
        "--mu",
        "2,2,1",
        "--mode",
        "anti",
        "--json",
    ]);
    assert_eq!(anti.lines().count(), 5);
    let first = anti.lines().next().unwrap();
    let back = ok(&["bij", "psi-prime-inv", "--rc", first, "--sizes", "2,2,1"]);
    assert!(!back.trim().is_empty());
}

#[test]
fn verify_small_sweep() {
    let out = sn(&["verify", "--max-size", "3", "--json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stderr.contains("0 failed"), "{}", out.stderr);
    for line in out.stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true);
    }
}
