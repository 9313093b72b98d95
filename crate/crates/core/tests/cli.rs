use std::fs;
use std::process::Command;

use resolvedim::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("resolvedim").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn tmp(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("resolvedim-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn compute_family_h3() {
    let (code, out, _) = call(&["compute", "--family", "H", "--l", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["dim_plus"], 4);
    assert!(v["res"].as_u64().unwrap() >= 4);
    assert_eq!(
        v["upper_basis_labels"],
        serde_json::json!(["g:0,1", "g:1,1", "g:1,2", "alpha"])
    );
}

#[test]
fn compute_k4_file() {
    let path = tmp("k4.g6", "C~\n");
    let (code, out, _) = call(&["compute", "--input", &path, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"dim":3,"dim_plus":3,"metric_basis":[0,1,2],"n":4,"randomly_k":3,"res":3,"res_witness":[0,1],"upper_basis":[0,1,2]}"#
    );
}

#[test]
fn compute_edge_list_and_corpus() {
    let path = tmp("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let (code, out, _) = call(&["compute", "--input", &path, "--params", "res"]);
    assert_eq!(code, 0);
    assert!(out.contains("res=2"), "{out}");

    let path = tmp("many.g6", "C~\nCh\n\nBw\n");
    let (code, out, _) = call(&["compute", "--input", &path, "--json", "--params", "dim"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn input_errors_exit_2() {
    let disconnected = tmp("split.g6", "C?\n");
    assert_eq!(call(&["compute", "--input", &disconnected]).0, 2);
    let garbage = tmp("bad.g6", "C\n");
    let (code, _, err) = call(&["compute", "--input", &garbage]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
    assert_eq!(call(&["compute"]).0, 2);
    assert_eq!(call(&["compute", "--family", "Hm", "--l", "3"]).0, 2);
    assert_eq!(call(&["compute", "--family", "H", "--l", "1"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "diameter", "--nmax", "9"]).0, 2);
    assert_eq!(
        call(&["compute", "--params", "dim,size", "--family", "H", "--l", "3"]).0,
        2
    );
    let big = tmp(
        "c12.txt",
        &format!(
            "12\n{}",
            (0..12)
                .map(|i| format!("{i} {}\n", (i + 1) % 12))
                .collect::<String>()
        ),
    );
    assert_eq!(
        call(&["compute", "--input", &big, "--cap-dimplus", "10"]).0,
        2
    );
}

#[test]
fn help_exits_0() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("compute"));
}

#[test]
fn generate_writes_sidecar() {
    let (code, out, _) = call(&[
        "generate", "--family", "Hm", "--l", "3", "--m", "2", "--p", "1",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let g = resolvedim::parse_graph6(lines[0]).unwrap();
    assert_eq!(g.order(), 9 + 2 + 1);
    let side: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(side["9"], "a1");
    assert_eq!(side["11"], "pv1");

    let target = tmp("h3.txt", "");
    let (code, _, _) = call(&[
        "generate", "--family", "H", "--l", "3", "--format", "edgelist", "--output", &target,
    ]);
    assert_eq!(code, 0);
    let g = resolvedim::parse_edge_list(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(g.order(), 11);
    let side = fs::read_to_string(format!("{target}.labels.json")).unwrap();
    assert!(side.contains(r#""10":"beta""#));
}

#[test]
fn path_extended_flags() {
    let a = call(&[
        "generate",
        "--family",
        "PathExtended",
        "--base",
        "H",
        "--l",
        "3",
        "--p",
        "2",
    ]);
    let b = call(&["generate", "--family", "H", "--l", "3", "--p", "2"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert_eq!(
        call(&[
            "generate",
            "--family",
            "PathExtended",
            "--l",
            "3",
            "--p",
            "2"
        ])
        .0,
        2
    );
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = call(&["verify", "--suite", "characterization", "--nmax", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"));
    let (code, out, _) = call(&[
        "verify", "--suite", "families", "--lmax", "2", "--mmax", "2", "--pmax", "1",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("violation"));
    let corpus = tmp("corpus.g6", "C~\nDhc\n");
    let (code, out, _) = call(&[
        "verify",
        "--suite",
        "oracle",
        "--corpus",
        &corpus,
        "--samples",
        "0",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["examined"], 2);
}

#[test]
fn enumerate_counts() {
    let (code, out, _) = call(&["enumerate", "--n", "5", "--dedup"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 21);
    assert_eq!(call(&["enumerate", "--n", "4"]).1.lines().count(), 38);
}

fn binary(args: &[&str], threads: &str) -> (Option<i32>, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_resolvedim"))
        .args(args)
        .env("RESOLVEDIM_THREADS", threads)
        .output()
        .unwrap();
    (o.status.code(), o.stdout)
}

#[test]
fn binary_thread_env_and_flag() {
    let args = ["compute", "--family", "TildeH", "--l", "4", "--json"];
    let base = binary(&args, "1");
    assert_eq!(base.0, Some(0));
    assert_eq!(binary(&args, "3"), base);
    let mut flagged = args.to_vec();
    flagged.extend(["--threads", "2"]);
    assert_eq!(binary(&flagged, "7"), base);
}
