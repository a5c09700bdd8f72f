use serde_json::Value;
use strandlab_wasm::*;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn typea_pages() {
    let v = parse(typea_set(3, 0));
    assert_eq!(v["count"], 12);
    assert_eq!(v["strands"].as_array().unwrap().len(), 3);
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
    assert_eq!(v["path"].as_str().unwrap().len(), 10);
    assert_eq!(parse(typea_set(3, 12))["index"], 0);
    assert!(parse(typea_set(0, 0))["error"].is_string());
}

#[test]
fn affine_pages() {
    let v = parse(affine_representative(3, 5));
    assert_eq!(v["count"], 18);
    assert!(v["pathSvg"].as_str().unwrap().contains("<polyline"));
    assert!(parse(affine_representative(40, 0))["error"].is_string());
}

#[test]
fn triangulation_turns() {
    let v = parse(triangulation(3, 0, 0));
    assert_eq!(v["count"], 15);
    let turned = parse(triangulation(3, 0, 1));
    assert_ne!(turned["arcs"], v["arcs"]);
    assert_eq!(parse(triangulation(3, 0, 3))["arcs"], v["arcs"]);
    assert!(v["cluster"].as_str().unwrap().contains('+'));
}
