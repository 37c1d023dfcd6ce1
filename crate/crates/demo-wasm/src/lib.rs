//! wasm-bindgen entry points for the static demo page in `www/`. Each call
//! returns a JSON string; errors become thrown JS strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use inertia::group::{canonical_key, parse_group_spec};
use inertia::kgpd::{eigen_components, inertia as inertia_of, KGpdElement};
use inertia::qfield::{parse_polynomial, spectrum_decompose, SpectrumFamily};
use inertia::torus::{orbit_partition, torus_motive, PermAction};

/// Small caps keep the page responsive.
const ORDER_CAP: usize = 720;
const FLAG_CAP: usize = 6;

pub fn torus_json(r: usize, gens: &str) -> Result<String, String> {
    if r > FLAG_CAP {
        return Err(format!("the demo accepts rank at most {FLAG_CAP}"));
    }
    let action = PermAction::parse(r, gens).map_err(|e| e.to_string())?;
    let m = torus_motive(&action, FLAG_CAP).map_err(|e| e.to_string())?;
    let out = json!({
        "group_order": action.order(),
        "orbits": orbit_partition(&action).block_sizes(),
        "motive": m.to_string(),
        "detail": serde_json::to_value(m.to_json()).expect("motive serializes"),
    });
    Ok(out.to_string())
}

fn element_json(x: &KGpdElement) -> Value {
    json!({ "text": x.to_string(), "terms": serde_json::to_value(x.to_json_terms()).expect("terms serialize") })
}

pub fn projections_json(spec: &str) -> Result<String, String> {
    let g = parse_group_spec(spec, ORDER_CAP).map_err(|e| e.to_string())?;
    let key = canonical_key(&g);
    let x = KGpdElement::class_of(key.clone());
    let projections: Vec<Value> = eigen_components(&x)
        .iter()
        .map(|(k, p)| json!({ "eigenvalue": k, "element": element_json(p) }))
        .collect();
    let out = json!({
        "group": key.label(),
        "order": key.order(),
        "inertia": element_json(&inertia_of(&x)),
        "projections": projections,
    });
    Ok(out.to_string())
}

pub fn spectrum_json(poly: &str, family: &str) -> Result<String, String> {
    let family: SpectrumFamily = family
        .parse()
        .map_err(|e: inertia::qfield::QFieldError| e.to_string())?;
    let p = parse_polynomial(poly).map_err(|e| e.to_string())?;
    let d = spectrum_decompose(&p, family).map_err(|e| e.to_string())?;
    let out = json!({
        "polynomial": p.to_string(),
        "member": d.is_some(),
        "summary": d.as_ref().map(ToString::to_string),
        "factored": d.as_ref().map(|d| d.factored()),
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn torus(r: usize, gens: &str) -> Result<String, JsValue> {
    torus_json(r, gens).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn projections(spec: &str) -> Result<String, JsValue> {
    projections_json(spec).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn spectrum(poly: &str, family: &str) -> Result<String, JsValue> {
    spectrum_json(poly, family).map_err(JsValue::from)
}
