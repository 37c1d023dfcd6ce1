use inertia_demo::{projections_json, spectrum_json, torus_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn torus_call() {
    let v = parse(torus_json(2, "(1 2)").unwrap());
    assert_eq!(v["motive"], "(q^2 - 1)[X] + (-q + 1)[X̄/1]");
    assert_eq!(v["group_order"], 2);
    assert!(torus_json(7, "").is_err());
    assert!(torus_json(2, "(1 3)").is_err());
}

#[test]
fn projections_call() {
    let v = parse(projections_json("D4").unwrap());
    assert_eq!(v["inertia"]["text"], "2*[B D4] + 2*[B Z2 x Z2] + 1*[B Z4]");
    assert_eq!(v["projections"][1]["eigenvalue"], 4);
    assert_eq!(
        v["projections"][1]["element"]["text"],
        "1*[B Z2 x Z2] + 1/2*[B Z4]"
    );
    assert!(projections_json("S7").is_err());
}

#[test]
fn spectrum_call() {
    let v = parse(spectrum_json("q^2*(q-1)", "full").unwrap());
    assert_eq!(v["factored"], "q^2*(q - 1)");
    let v = parse(spectrum_json("q^2*(q-1)", "semisimple").unwrap());
    assert_eq!(v["member"], false);
    assert!(spectrum_json("q", "other").is_err());
}
