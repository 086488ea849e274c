use std::io::Write;
use std::process::{Command, Output, Stdio};

use cospec::graph6;
use cospec::Graph;
use serde_json::Value;

fn cospec(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cospec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn construct_graph6_has_42_vertices() {
    let o = cospec(&["construct", "--b", "5", "--format", "graph6"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = graph6::decode_str(text.trim()).unwrap();
    assert_eq!(g.order(), 42);
    assert!(g.is_regular(5));
}

#[test]
fn switched_mate_is_cospectral() {
    let g = stdout(&cospec(&["construct", "--b", "5"], ""));
    let h = stdout(&cospec(&["construct", "--b", "5", "--switched"], ""));
    assert_ne!(g, h);
    let pg = json(&cospec(&["spectrum"], &g));
    let ph = json(&cospec(&["spectrum", "-"], &h));
    assert_eq!(pg["coeffs"], ph["coeffs"]);
    assert_eq!(json(&cospec(&["match"], &g))["perfect"], false);
    assert_eq!(json(&cospec(&["match"], &h))["perfect"], true);
}

#[test]
fn small_degree_is_an_error() {
    let o = cospec(&["construct", "--b", "4"], "");
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("b <= 4"));
    let o = cospec(&["certify", "--b", "4"], "");
    assert!(!o.status.success());
    assert!(json(&o)["error"].as_str().unwrap().contains("b = 4"));
}

#[test]
fn spectrum_of_triangle() {
    let v = json(&cospec(&["spectrum"], "Bw\n"));
    assert_eq!(v["coeffs"], serde_json::json!(["1", "0", "-3", "-2"]));
    assert_eq!(v["n"], 3);
}

#[test]
fn match_on_five_cycle() {
    let c5 = graph6::encode(&Graph::cycle(5).unwrap());
    let v = json(&cospec(&["match"], &c5));
    assert_eq!((v["size"].as_u64(), v["deficiency"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn bad_graph6_is_reported_as_json() {
    let o = cospec(&["spectrum"], "C~~\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(json(&o)["error"].as_str().unwrap().contains("line 1"));
}

#[test]
fn switch_names_the_offending_vertex() {
    // 4-cycle on X = {0,1,2,3}; vertex 4 sees only vertex 0
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)]).unwrap();
    let o = cospec(&["switch", "--x", "0,1,2,3"], &graph6::encode(&g));
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("vertex 4"), "{err}");
}

#[test]
fn switch_round_trips_and_accepts_partition_files() {
    let g = stdout(&cospec(&["construct", "--b", "5"], ""));
    let dir = std::env::temp_dir().join(format!("cospec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let x = (0..8).map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let h = stdout(&cospec(&["switch", "--x", &x], &g));
    assert_eq!(h, stdout(&cospec(&["construct", "--b", "5", "--switched"], "")));
    let part = dir.join("x.json");
    std::fs::write(&part, r#"{"X":[0,1,2,3,4,5,6,7]}"#).unwrap();
    let back = stdout(&cospec(&["switch", "--partition", part.to_str().unwrap()], &h));
    assert_eq!(back, g);
}

#[test]
fn sidecar_and_other_formats() {
    let dir = std::env::temp_dir().join(format!("cospec-side-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let side = dir.join("layout.json");
    let o = cospec(&["construct", "--b", "6", "--sidecar", side.to_str().unwrap()], "");
    assert!(o.status.success());
    let layout: Value = serde_json::from_str(&std::fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(layout["b"], 6);
    assert_eq!(layout["parity"], "even");
    assert_eq!(layout["order"], 44);
    assert_eq!(layout["X"].as_array().unwrap().len(), 8);
    assert_eq!(layout["W"].as_array().unwrap().len(), 4);
    assert_eq!(layout["u_v_pairs"].as_array().unwrap().len(), 4);

    let dot = stdout(&cospec(&["construct", "--b", "5", "--format", "dot"], ""));
    assert!(dot.starts_with("graph {"));
    assert_eq!(dot.matches(" -- ").count(), 105);
    assert!(dot.contains("triangle.0"));

    let doc = json(&cospec(&["construct", "--b", "5", "--format", "json", "--switched"], ""));
    assert_eq!(doc["switched"], true);
    assert_eq!(doc["layout"]["order"], 42);
}

#[test]
fn search_reports() {
    let v = json(&cospec(&["search", "--k", "3", "--n-max", "10"], ""));
    assert_eq!(v["discrepant_classes"].as_array().unwrap().len(), 0);
    assert_eq!(v["total_graphs"], 1 + 2 + 5 + 19);
    let v = json(&cospec(&["search", "--k", "3", "--n-max", "4"], ""));
    assert_eq!(v["total_graphs"], 1);
    let v = json(&cospec(&["search", "--k", "2", "--n-max", "12"], ""));
    assert_eq!(v["discrepant_classes"].as_array().unwrap().len(), 0);
    assert_eq!(v["cospectral_class_count"], 0);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["certify", "--b", "6"][..],
        &["construct", "--b", "7", "--seed", "3"],
        &["search", "--k", "3", "--n-max", "12"],
    ] {
        assert_eq!(cospec(args, "").stdout, cospec(args, "").stdout, "{args:?}");
    }
}

#[test]
fn constructed_graphs_reproduce_certify_fields() {
    for b in [5, 6, 7] {
        let bs = b.to_string();
        let report = json(&cospec(&["certify", "--b", &bs], ""));
        let g = stdout(&cospec(&["construct", "--b", &bs], ""));
        let h = stdout(&cospec(&["construct", "--b", &bs, "--switched"], ""));
        assert_eq!(g.trim(), report["graph6"]);
        assert_eq!(h.trim(), report["switched_graph6"]);
        let sg = json(&cospec(&["spectrum"], &g));
        assert_eq!(sg["coeffs"], report["char_poly"]);
        assert_eq!(sg["digest"], report["char_poly_digest"]);
        let sh = json(&cospec(&["spectrum"], &h));
        assert_eq!(sh["digest"], report["switched_char_poly_digest"]);
        let mh = json(&cospec(&["match"], &h));
        assert_eq!(mh["edges"], report["matching_witness"]);
        assert_eq!(mh["perfect"], report["pm_switched"]);
        let mg = json(&cospec(&["match"], &g));
        assert_eq!(mg["deficiency"], report["deficiency_unswitched"]);
        assert_eq!(mg["perfect"], report["pm_unswitched"]);
    }
}
