//! Browser bindings: the demo page drives the engine through three JSON
//! calls — the orbit poset of a parameter set, the full report of a single
//! graph, and the type table of a parameter set.

use wasm_bindgen::prelude::*;

use flagorbit::poset::hasse_diagram;
use flagorbit::report::Report;
use flagorbit::steinberg::{phi_k, phi_s};
use flagorbit::{Error, OrbitGraph};

fn orbit_entry(omega: &OrbitGraph, dim: usize) -> Result<serde_json::Value, Error> {
    let pair = phi_k(omega);
    let exotic = phi_s(omega)?;
    Ok(serde_json::json!({
        "omega": omega.to_string(),
        "dim": dim,
        "p": omega.p(),
        "q": omega.q(),
        "edges": omega.edges(),
        "plus": omega.plus_marks(),
        "minus": omega.minus_marks(),
        "lambda": pair.lambda,
        "mu": pair.mu,
        "Lambda": exotic,
    }))
}

/// Poset payload: every parameter graph with its invariants and Steinberg
/// images, plus the cover relations between node indices.
pub fn orbits_payload(p: usize, q: usize, r: usize) -> Result<serde_json::Value, Error> {
    let h = hasse_diagram(p, q, r)?;
    let nodes = h
        .nodes()
        .iter()
        .map(|(w, dim)| orbit_entry(w, *dim))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(serde_json::json!({
        "nodes": nodes,
        "covers": h.cover_edges(),
    }))
}

/// Report payload for one canonical graph string.
pub fn report_payload(omega: &str) -> Result<serde_json::Value, Error> {
    let w: OrbitGraph = omega.parse()?;
    let report = Report::for_omega(&w)?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    let obj = value.as_object_mut().expect("report is an object");
    obj.insert("edges".into(), serde_json::json!(w.edges()));
    obj.insert("plus".into(), serde_json::json!(w.plus_marks()));
    obj.insert("minus".into(), serde_json::json!(w.minus_marks()));
    Ok(value)
}

fn to_js<T: ToString>(e: T) -> JsValue {
    JsValue::from_str(&e.to_string())
}

#[wasm_bindgen]
pub fn orbits(p: usize, q: usize, r: usize) -> Result<String, JsValue> {
    Ok(orbits_payload(p, q, r).map_err(to_js)?.to_string())
}

#[wasm_bindgen]
pub fn report(omega: &str) -> Result<String, JsValue> {
    Ok(report_payload(omega).map_err(to_js)?.to_string())
}

#[wasm_bindgen]
pub fn dot(p: usize, q: usize, r: usize) -> Result<String, JsValue> {
    Ok(hasse_diagram(p, q, r).map_err(to_js)?.to_dot())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits_payload_shape() {
        let v = orbits_payload(2, 2, 2).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 16);
        assert!(!v["covers"].as_array().unwrap().is_empty());
        assert!(v["nodes"][0]["Lambda"].is_array());
    }

    #[test]
    fn report_payload_contains_graph_structure() {
        let v = report_payload("5x3x4:2-3,4-1:5:2").unwrap();
        assert_eq!(v["lambda"], serde_json::json!([2, 1, 1, 1]));
        assert_eq!(v["edges"], serde_json::json!([[2, 3], [4, 1]]));
        assert!(report_payload("bogus").is_err());
    }
}
