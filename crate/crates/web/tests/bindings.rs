use serde_json::json;

use specht_web::{decompose_json, enumerate_json, inspect_json, MAX_ENUMERATE_N};

#[test]
fn inspect_flags_divisible_hooks() {
    let v = inspect_json("3,1", 2).unwrap();
    assert_eq!(v["hooks"], json!([[4, 2, 1], [1]]));
    assert_eq!(v["divisible"], json!([[true, true, false], [false]]));
    assert_eq!(v["conjugate"], "2,1^2");
    assert_eq!(v["core"], "-");
    assert_eq!(v["weight"], 2);
    assert_eq!(v["specht"], false);
    assert_eq!(inspect_json("2,2", 2).unwrap()["specht"], true);
}

#[test]
fn inspect_rejects_bad_input() {
    assert!(inspect_json("1,2", 3).is_err());
    assert!(inspect_json("x", 3).is_err());
    assert!(inspect_json("3,1", 6).is_err());
}

#[test]
fn decompose_labels_every_cell() {
    let v = decompose_json("5,1^5", 3).unwrap();
    assert_eq!(v["top"], "3");
    assert_eq!(v["mid"], "2,1^2");
    assert_eq!(v["bottom"], "1^3");
    assert_eq!(v["roles"], json!(["MMTTT", "M", "M", "B", "B", "B"]));
    assert!(decompose_json("4,1", 5).is_err());
}

#[test]
fn enumerate_small_block() {
    let v = enumerate_json("1", 3, 1).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["count"], 2);
    assert_eq!(v["items"][0]["lambda"], "4");
    assert_eq!(v["items"][1]["lambda"], "1^4");
}

#[test]
fn enumerate_refuses_large_and_special_blocks() {
    assert!(enumerate_json("-", 2, 2).is_err());
    assert!(enumerate_json("3", 3, 1).is_err());
    let w = MAX_ENUMERATE_N / 5 + 1;
    assert!(enumerate_json("-", 5, w).unwrap_err().contains("limit"));
}
