//! End-to-end checks of the command surface: exit codes, report
//! shapes, caching, and determinism.

use eil_cli::run;

fn eil(args: &[&str]) -> (i32, String, String) {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("eil".to_string()).chain(args.iter().map(|s| s.to_string()));
    let code = run(argv, &mut stdout, &mut stderr);
    (
        code,
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn compute_k4() {
    let (code, out, _) = eil(&["compute", "--graph6", "C~"]);
    assert_eq!(code, 0);
    assert!(out.contains("aso=12.727922061357855"), "{out}");
    assert!(out.contains("n=4 m=6"));
}

#[test]
fn compute_rejects_isolated_edge_with_exit_2() {
    let (code, _, err) = eil(&["compute", "--graph6", "A_"]);
    assert_eq!(code, 2);
    assert!(err.contains("isolated edge"), "{err}");
    assert!(err.contains("ASO undefined"), "{err}");
}

#[test]
fn compute_rejects_malformed_graph6() {
    let (code, _, err) = eil(&["compute", "--graph6", "C"]);
    assert_eq!(code, 2);
    assert!(err.contains("graph6"), "{err}");
}

#[test]
fn compute_reads_graph6_files_and_skips_headers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, ">>class=connected;n=4;count=2\nC~\nCh\n").unwrap();
    let (code, out, _) = eil(&[
        "compute",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("C~,4,6,"));
    assert!(lines[2].starts_with("Ch,4,3,"));
}

#[test]
fn compute_needs_exactly_one_source() {
    let (code, _, _) = eil(&["compute"]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_command_is_usage_error() {
    let (code, _, _) = eil(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn construct_star_plus_edge() {
    let (code, out, _) = eil(&["construct", "--family", "s_prime", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("degrees=[4,2,2,1,1]"), "{out}");
    let (code, out, _) = eil(&[
        "construct",
        "--family",
        "connectivity_extremal",
        "--n",
        "5",
        "--k",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("degrees=[4,4,3,3,2]"), "{out}");
    let (code, _, err) = eil(&["construct", "--family", "cycle", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("cycle"), "{err}");
}

#[test]
fn enumerate_emits_spool_format() {
    let (code, out, _) = eil(&["enumerate", "--class", "connected", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with(">>class=connected;n=5;count=21\n"), "{out}");
    assert_eq!(out.lines().count(), 22);
    // Every printed graph6 string re-decodes.
    for line in out.lines().skip(1) {
        eil_core::graph6::decode(line).unwrap();
    }
}

#[test]
fn enumerate_with_connectivity_filter() {
    let (code, out, _) = eil(&["enumerate", "--class", "connected", "--n", "4", "--k", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("count=1"), "{out}");
    assert!(out.contains("C~"), "{out}");
}

#[test]
fn enumerate_labeled_trees() {
    let (code, out, _) = eil(&["enumerate", "--class", "labeled-trees", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with(">>class=labeled-trees;n=5;count=125\n"),
        "{out}"
    );
}

#[test]
fn verify_pass_and_fail_exit_codes() {
    let (code, out, _) = eil(&["verify", "unicyclic-max", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("summary: 1/1 pass"), "{out}");
    // Out-of-range parameter: usage error.
    let (code, _, err) = eil(&["verify", "unicyclic-max", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("n >= 4"), "{err}");
}

#[test]
fn verify_json_witness_is_s_prime() {
    let (code, out, _) = eil(&["verify", "unicyclic-max", "--n", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let verdicts: serde_json::Value = serde_json::from_str(&out).unwrap();
    let verdict = &verdicts[0];
    assert_eq!(verdict["pass"], serde_json::json!(true));
    let witness = &verdict["witnesses"][0];
    assert_eq!(witness["is_extremal"], serde_json::json!(true));
    let g6 = witness["graph6"].as_str().unwrap();
    let g = eil_core::graph6::decode(g6).unwrap();
    let s5 = eil_core::families::s_prime(5).unwrap();
    assert!(eil_core::are_isomorphic(&g, &s5));
}

#[test]
fn lemma_ee1_sweep_row_count_in_csv() {
    let (code, out, _) = eil(&[
        "verify",
        "lemma-ee1",
        "--n-lo",
        "9",
        "--n-hi",
        "200",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    // Header plus one row per n.
    assert_eq!(
        out.lines().count(),
        1 + 192,
        "{}",
        out.lines().take(3).collect::<Vec<_>>().join("\n")
    );
    assert!(out.lines().skip(1).all(|line| line.contains(",true,")));
}

#[test]
fn empty_verdict_list_is_empty_json_array() {
    let text = eil_cli::render_verdicts(&[], eil_cli::Format::Json);
    assert_eq!(text, "[]\n");
}

#[test]
fn reports_are_identical_across_jobs_and_reruns() {
    let a = eil(&[
        "verify",
        "connectivity-max",
        "--n",
        "6",
        "--format",
        "json",
        "--jobs",
        "1",
    ]);
    let b = eil(&[
        "verify",
        "connectivity-max",
        "--n",
        "6",
        "--format",
        "json",
        "--jobs",
        "4",
    ]);
    assert_eq!(a.0, 0);
    // jobs is echoed in the config, so compare after normalizing it.
    let normalize = |text: &str| text.replace("\"jobs\": \"4\"", "\"jobs\": \"1\"");
    assert_eq!(normalize(&a.1), normalize(&b.1));
    let c = eil(&[
        "verify",
        "connectivity-max",
        "--n",
        "6",
        "--format",
        "json",
        "--jobs",
        "1",
    ]);
    assert_eq!(a.1, c.1, "reruns of one RunConfig must be byte-identical");
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (code, out_first, _) = eil(&[
        "enumerate",
        "--class",
        "unicyclic",
        "--n",
        "6",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(code, 0);
    let spool = dir.path().join("unicyclic_n6.g6");
    assert!(spool.exists());
    let (code, out_second, _) = eil(&[
        "enumerate",
        "--class",
        "unicyclic",
        "--n",
        "6",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out_first, out_second);
    // A corrupted cache is regenerated rather than trusted.
    std::fs::write(&spool, ">>class=unicyclic;n=6;count=2\nE?~o\n").unwrap();
    let (code, out_third, _) = eil(&[
        "enumerate",
        "--class",
        "unicyclic",
        "--n",
        "6",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out_first, out_third);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = eil(&[
        "verify",
        "unicyclic-min",
        "--n",
        "5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.contains("\"unicyclic-min\""));
}

#[test]
fn verify_all_runs_the_suite() {
    let (code, out, err) = eil(&["verify", "all", "--n-max", "5", "--format", "csv"]);
    assert_eq!(code, 0, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    // unicyclic-max 4..5, unicyclic-min 3..5, edge-deletion 3..5,
    // random, connectivity (n=4: 3k x2, n=5: 4k x2), lemma-a1 x6,
    // lemma-ee1 x192, lemma-mvt, proof-inequalities x194.
    let expected_rows = 2 + 3 + 3 + 1 + 14 + 6 + 192 + 1 + 194;
    assert_eq!(lines.len(), 1 + expected_rows, "{}", lines[0]);
    assert!(lines.iter().skip(1).all(|line| line.contains(",true,")));
}

#[test]
fn csv_single_pass_row() {
    let (code, out, _) = eil(&["verify", "unicyclic-min", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("claim,params,pass,"));
    assert!(lines[1].contains(",true,"));
    assert!(
        lines[1].ends_with(",0"),
        "counterexample count 0 and runtime 0: {}",
        lines[1]
    );
}
