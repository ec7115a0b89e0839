use assert_cmd::Command;
use serde_json::Value;

fn icosa(args: &[&str]) -> assert_cmd::assert::Assert {
    Command::cargo_bin("icosa").unwrap().args(args).assert()
}

fn json(args: &[&str]) -> Value {
    let out = icosa(args).success().get_output().stdout.clone();
    serde_json::from_slice(&out).unwrap()
}

#[test]
fn verify_passes() {
    let doc = json(&["verify"]);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["verification"]["passed"], true);
    let matrix = doc["payload"]["matrix"].as_object().unwrap();
    for module in ["icosa_group", "irreps", "group_algebra", "sab", "parity", "huckel"] {
        let row = matrix[module].as_object().unwrap();
        assert!(!row.is_empty());
        assert!(row.values().all(|s| s == "pass"), "{module}");
    }
}

#[test]
fn verify_with_zero_tolerance_fails() {
    icosa(&["verify", "--tol", "0"]).code(1);
}

#[test]
fn c60_ag_block() {
    let doc = json(&["huckel", "c60", "--alpha", "1", "--block", "A_g"]);
    let blocks = doc["payload"]["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0]["matrix"], serde_json::json!([[[-3.0, 0.0]]]));
    assert_eq!(doc["payload"]["dense_spectrum"].as_array().unwrap().len(), 60);
}

#[test]
fn c60_t1u_block_at_negative_alpha() {
    let doc = json(&["huckel", "c60", "--alpha", "-0.5", "--block", "T1u"]);
    assert_eq!(doc["payload"]["blocks"][0]["dim"], 2);
    assert_eq!(doc["verification"]["passed"], true);
}

#[test]
fn c240_both_arrangements() {
    for arr in ["a", "b"] {
        let doc = json(&["huckel", "c240", "--arrangement", arr, "--alpha", "2.5"]);
        assert_eq!(doc["payload"]["blocks"].as_array().unwrap().len(), 10);
        assert_eq!(doc["payload"]["block_union_spectrum"].as_array().unwrap().len(), 240);
        assert_eq!(doc["payload"]["arrangement"], arr);
    }
}

#[test]
fn character_table() {
    let doc = json(&["irreps", "characters"]);
    let a = &doc["payload"]["irreps"][0];
    assert_eq!(a["label"], "A");
    assert!(a["characters"].as_array().unwrap().iter().all(|c| c == 1.0));
    let sizes: Vec<u64> = doc["payload"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes.iter().sum::<u64>(), 60);

    let csv = icosa(&["irreps", "characters", "--format", "csv"]).success().get_output().stdout.clone();
    let text = String::from_utf8(csv).unwrap();
    assert!(text.lines().any(|l| l == "A,1.0,1.0,1.0,1.0,1.0"));
}

#[test]
fn irrep_matrix() {
    let doc = json(&["irreps", "--rep", "H", "--element", "S1"]);
    let m = doc["payload"]["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 5);
    assert!(m.iter().all(|row| row.as_array().unwrap().iter().all(|z| z.as_array().unwrap().len() == 2)));
    let p = json(&["irreps", "--rep", "T1u", "--element", "P·E"]);
    assert_eq!(p["payload"]["matrix"][0][0], serde_json::json!([-1.0, 0.0]));
}

#[test]
fn group_table_shapes() {
    let doc = json(&["group", "table"]);
    assert_eq!(doc["payload"]["table"].as_array().unwrap().len(), 60);
    assert_eq!(doc["payload"]["table"][0][1], "T0");
    let doc = json(&["group", "table", "--parity"]);
    assert_eq!(doc["payload"]["table"].as_array().unwrap().len(), 120);
    let csv = icosa(&["group", "table", "--format", "csv"]).success().get_output().stdout.clone();
    assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 61);
}

#[test]
fn bases_rows() {
    let doc = json(&["bases", "--rep", "T1"]);
    let bases = doc["payload"]["bases"].as_array().unwrap();
    assert_eq!(bases.len(), 9);
    let b00 = bases.iter().find(|b| b["mu"] == 0 && b["nu"] == 0).unwrap();
    assert_eq!(b00["normalization"], 4.0);
    assert_eq!(b00["coefficients"].as_object().unwrap().len(), 60);
    let doc = json(&["bases", "--rep", "G", "--parity", "u"]);
    assert_eq!(doc["payload"]["rep"], "Gu");
    assert_eq!(doc["payload"]["bases"][0]["coefficients"].as_object().unwrap().len(), 120);
}

#[test]
fn b12h12_report() {
    let doc = json(&["sab", "b12h12", "--quanta", "1,2,3,4,5,6,7,8,9,10,11,12"]);
    assert_eq!(doc["payload"]["total_vectors"], 60);
    assert_eq!(doc["payload"]["total_sets"], 16);
    assert!(doc["payload"].get("vectors").is_none());
    let doc = json(&["sab", "b12h12", "--quanta", "2,2,2,2,2,2,2,2,2,2,2,2", "--vectors"]);
    assert_eq!(doc["payload"]["total_vectors"], 1);
    assert_eq!(doc["payload"]["vectors"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let run = || icosa(&["huckel", "c60", "--alpha", "2.5"]).success().get_output().stdout.clone();
    assert_eq!(run(), run());
}

#[test]
fn argument_errors_exit_two() {
    icosa(&["frobnicate"]).code(2);
    icosa(&["huckel", "c60"]).code(2);
    icosa(&["huckel", "c60", "--alpha", "1", "--block", "Q9"]).code(2);
    icosa(&["irreps", "--rep", "H", "--element", "Z9"]).code(2);
    icosa(&["irreps", "--rep", "H", "--element", "PS1"]).code(2);
    icosa(&["sab", "b12h12", "--quanta", "1,2,3"]).code(2);
    icosa(&["bases", "--rep", "T1", "--format", "csv"]).code(2);
}
