use std::process::Command;

fn drg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_drg-cayley"))
        .args(args)
        .env("DRG_DATA", concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn census_table_1_markdown() {
    let (code, out, _) = drg(&["census", "--table", "1", "--format", "md"]);
    assert_eq!(code, 0, "{out}");
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("| {")).collect();
    assert_eq!(rows.len(), 13);
    assert!(out.lines().next().unwrap().starts_with("Table 1"));
    assert!(rows.iter().any(|r| r.contains("| {3,2;1,1} | 10 | 2 | 5 | Petersen ~ O_3 | No |")));
    assert!(rows.iter().all(|r| r.contains("| OK |")));
}

#[test]
fn census_table_3_is_labelled_putative() {
    let (code, out, _) = drg(&["census", "--table", "3", "--format", "md"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().contains("known putative arrays"));
    assert_eq!(out.lines().filter(|l| l.contains("feasibility-only")).count(), 2);
}

#[test]
fn census_json_is_versioned() {
    let (code, out, _) = drg(&["census", "--table", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 17);
}

#[test]
fn census_is_deterministic() {
    let a = drg(&["census", "--format", "tsv", "--threads", "1"]).1;
    let b = drg(&["census", "--format", "tsv", "--threads", "4"]).1;
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 61);
}

#[test]
fn feasibility_messages() {
    assert_eq!(
        drg(&["feasibility", "gh", "4"]),
        (1, "infeasible: s not multiple of 6; 5 divides s+1\n".into(), String::new())
    );
    assert_eq!(drg(&["feasibility", "gq", "4"]).0, 0);
    let (code, out, _) = drg(&["feasibility", "halving", "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("infeasible"), "{out}");
}

#[test]
fn is_cayley_exit_convention() {
    assert_eq!(drg(&["is-cayley", "--name", "petersen"]), (1, "no (exhaustive)\n".into(), String::new()));
    assert_eq!(drg(&["is-cayley", "--name", "petersen", "--expect", "no"]).0, 0);
    assert_eq!(drg(&["is-cayley", "--name", "icosahedron", "--expect", "no"]).0, 1);
    let (code, out, _) = drg(&["is-cayley", "--name", "dodecahedron", "--budget", "0"]);
    assert_eq!(code, 3);
    assert!(out.starts_with("unknown"), "{out}");
}

#[test]
fn is_cayley_witness_files() {
    let dir = std::env::temp_dir().join(format!("drg-witness-{}", std::process::id()));
    let (code, out, _) = drg(&["is-cayley", "--name", "heawood", "--witness", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("yes (group of order 14)"));
    let table = std::fs::read_to_string(dir.join("group.tbl")).unwrap();
    let group = drg_cayley::io::parse_group_table(&table).unwrap();
    assert_eq!(group.order(), 14);
    let set = std::fs::read_to_string(dir.join("connection-set.txt")).unwrap();
    let tbl = dir.join("group.tbl");
    let spec = format!("file:{}", tbl.display());
    let (code, g6, _) = drg(&["cayley", "--group", &spec, "--set", set.trim()]);
    assert_eq!(code, 0);
    let (_, arr, _) = drg(&["drg-check", "--g6", g6.trim()]);
    assert!(arr.contains("{3,2,2;1,1,3}"), "{arr}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn klein_distance_sets_and_quotient() {
    let s = "(123),(132),(12)(34),(13),(14),(1234),(1432)";
    let (code, out, _) = drg(&["distance-sets", "--group", "symmetric:4", "--set", s]);
    assert_eq!(code, 0);
    assert!(out.contains("S_3\t2\t(124),(142)"), "{out}");
    assert!(out.contains("N_d subgroup\ttrue") && out.contains("N_d normal\tfalse"), "{out}");
    let (code, _, err) = drg(&["quotient", "--group", "symmetric:4", "--set", s, "--subgroup", "(124)"]);
    assert_eq!(code, 1, "{err}");
    let (code, out, _) =
        drg(&["quotient", "--group", "symmetric:4", "--set", s, "--subgroup", "(124)", "--right-cosets"]);
    assert_eq!(code, 0);
    assert!(out.contains("eigenvalues: 7^1, -1^7") && out.contains("contained in spectrum: yes"), "{out}");
}

#[test]
fn derive_and_metrics() {
    let (_, g6, _) = drg(&["build", "foster"]);
    let (code, halved, _) = drg(&["derive", "halved:0", "--g6", g6.trim()]);
    assert_eq!(code, 0);
    let (_, arr, _) = drg(&["drg-check", "--g6", halved.trim()]);
    assert!(arr.contains("{6,4,2,1;1,1,4,6}"), "{arr}");
    let (_, m, _) = drg(&["metrics", "--name", "coxeter"]);
    assert!(m.contains("girth\t7") && m.contains("even_girth\t8") && m.contains("diameter\t4"), "{m}");
    let (code, out, _) = drg(&["derive", "antipodal-quotient", "--name", "armanios-wells", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 16);
}

#[test]
fn spectrum_verbs() {
    let (code, out, _) = drg(&["spectrum", "--name", "petersen"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3\t1\n1\t5\n-2\t4\n");
    let (_, out, _) = drg(&["spectrum", "--array", "{3,2;1,1}"]);
    assert!(out.contains("1\trational") && out.contains("-2\trational"), "{out}");
}

#[test]
fn diffset_find_and_refuse() {
    let (code, out, _) = drg(&["diffset", "--group", "cyclic:13", "--k", "4", "--lambda", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("params\t(13,4,1)"), "{out}");
    let (code, out, _) = drg(&["diffset", "--group", "cyclic:7", "--set", "1,2,3"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not a difference set"), "{out}");
    let (code, g6, _) = drg(&["diffset", "--group", "cyclic:7", "--set", "1,2,4", "--incidence"]);
    assert_eq!(code, 0);
    let (_, heawood, _) = drg(&["build", "heawood"]);
    let (_, a, _) = drg(&["drg-check", "--g6", g6.trim()]);
    let (_, b, _) = drg(&["drg-check", "--g6", heawood.trim()]);
    assert_eq!(a, b);
}

#[test]
fn usage_errors() {
    assert_eq!(drg(&["census", "--table", "5"]).0, 2);
    assert_eq!(drg(&["cayley", "--group", "cyclic:5", "--set", "9"]).0, 2);
    assert_eq!(drg(&["build"]).0, 2);
    let (code, _, err) = drg(&["metrics", "--graph", "/nonexistent/file"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}
