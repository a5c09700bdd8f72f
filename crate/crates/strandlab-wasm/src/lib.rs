//! Bindings for the static demo page in `www/`. Every call returns a JSON
//! object; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use strandlab::affine::{enumerate_representatives, label_diagram, label_to_path};
use strandlab::cluster::{cluster_of, outer_rotation, small_triangulations};
use strandlab::render::{render_arcs, render_path, render_strands, Format};
use strandlab::strands::StrandDiagram;
use strandlab::typea::{enumerate_sets, ternary_tree, tree_to_lattice_path};
use wasm_bindgen::prelude::*;

// keep the page responsive; the counts grow quickly past these
const MAX_TYPEA: usize = 7;
const MAX_AFFINE: usize = 6;
const MAX_CLUSTER: usize = 8;

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn in_range(n: usize, lo: usize, hi: usize) -> Result<(), String> {
    if n < lo || n > hi {
        return Err(format!("n must be between {lo} and {hi}"));
    }
    Ok(())
}

/// The index-th complete exceptional set of straight A_n, drawn on the line,
/// with its lattice path.
#[wasm_bindgen]
pub fn typea_set(n: usize, index: usize) -> String {
    respond((|| {
        in_range(n, 1, MAX_TYPEA)?;
        let sets = enumerate_sets(n);
        let set = sets[index % sets.len()].clone();
        let tree = ternary_tree(n, &set).map_err(|e| e.to_string())?;
        let path = tree_to_lattice_path(&tree);
        Ok(json!({
            "count": sets.len(),
            "index": index % sets.len(),
            "strands": set.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "svg": render_strands(&StrandDiagram::type_a(n, set), Format::Svg),
            "path": path.to_string(),
            "pathSvg": render_path(&path, Format::Svg),
        }))
    })())
}

/// The index-th outer-class representative for n outer points, with its
/// label path.
#[wasm_bindgen]
pub fn affine_representative(n: usize, index: usize) -> String {
    respond((|| {
        in_range(n, 1, MAX_AFFINE)?;
        let reps = enumerate_representatives(n);
        let rep = &reps[index % reps.len()];
        let label = label_diagram(rep).map_err(|e| e.to_string())?;
        let path = label_to_path(&label);
        let arcs = rep.arcs();
        Ok(json!({
            "count": reps.len(),
            "index": index % reps.len(),
            "arcs": arcs.to_string(),
            "svg": render_arcs(&arcs, Format::Svg),
            "path": path.to_string(),
            "pathSvg": render_path(&path, Format::Svg),
        }))
    })())
}

/// The index-th small triangulation after `turns` outer rotations, with its cluster.
#[wasm_bindgen]
pub fn triangulation(n: usize, index: usize, turns: usize) -> String {
    respond((|| {
        in_range(n, 1, MAX_CLUSTER)?;
        let ts = small_triangulations(n);
        let mut t = ts[index % ts.len()].clone();
        for _ in 0..turns % n {
            t = outer_rotation(&t);
        }
        let cluster = cluster_of(&t).map_err(|e| e.to_string())?;
        Ok(json!({
            "count": ts.len(),
            "index": ts.binary_search(&t).unwrap_or(index % ts.len()),
            "arcs": t.to_string(),
            "cluster": cluster.to_string(),
            "svg": render_arcs(&t, Format::Svg),
        }))
    })())
}
