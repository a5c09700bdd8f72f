use serde::de::DeserializeOwned;
use serde::Serialize;
use strandlab::affine::{enumerate_representatives, label_diagram, label_to_path, Label};
use strandlab::cluster::{cluster_of, small_triangulations, Cluster};
use strandlab::io::*;
use strandlab::render::{render, Format};
use strandlab::strands::{ArcDiagram, StrandDiagram};
use strandlab::typea::{enumerate_sets, ternary_tree, tree_to_lattice_path, LatticePath, TernaryTree};

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(kind: DocKind, x: &T) {
    let prov = Provenance { command: "test".into(), args: vec!["-n".into(), "4".into()] };
    let doc = DocumentEnvelope::new(kind, x, prov).unwrap();
    let text = doc.to_json();
    assert!(text.ends_with('\n'));
    let back = DocumentEnvelope::parse(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(&back.payload::<T>(kind).unwrap(), x);
    match kind {
        DocKind::Label | DocKind::Cluster => assert!(render(&back, Format::Svg).is_err()),
        _ => assert_eq!(render(&back, Format::Svg).unwrap(), render(&doc, Format::Svg).unwrap()),
    }
}

#[test]
fn every_kind_round_trips() {
    for n in 0..=4 {
        for set in enumerate_sets(n) {
            let tree = ternary_tree(n, &set).unwrap();
            round_trip::<StrandDiagram>(DocKind::StrandDiagram, &StrandDiagram::type_a(n, set));
            round_trip::<LatticePath>(DocKind::Path, &tree_to_lattice_path(&tree));
            round_trip::<TernaryTree>(DocKind::Tree, &tree);
        }
    }
    for n in 1..=4 {
        for rep in enumerate_representatives(n) {
            let label = label_diagram(&rep).unwrap();
            round_trip::<ArcDiagram>(DocKind::ArcDiagram, &rep.arcs());
            round_trip::<LatticePath>(DocKind::Path, &label_to_path(&label));
            round_trip::<Label>(DocKind::Label, &label);
        }
        for t in small_triangulations(n) {
            round_trip::<Cluster>(DocKind::Cluster, &cluster_of(&t).unwrap());
            round_trip::<ArcDiagram>(DocKind::Triangulation, &t);
        }
    }
}

#[test]
fn bad_documents() {
    assert!(matches!(DocumentEnvelope::parse("{"), Err(IoError::Json(_))));
    let text = r#"{"schemaVersion":2,"kind":"path","payload":"UR","provenance":{"command":"x","args":[]}}"#;
    assert!(matches!(DocumentEnvelope::parse(text), Err(IoError::Schema(2))));
    let text = r#"{"schemaVersion":1,"kind":"path","payload":"UX","provenance":{"command":"x","args":[]}}"#;
    let doc = DocumentEnvelope::parse(text).unwrap();
    assert!(doc.payload::<LatticePath>(DocKind::Path).is_err());
}
