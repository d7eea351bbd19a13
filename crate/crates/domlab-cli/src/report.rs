//! JSON shaping for the report stream. Field names here are the stable
//! CLI interface documented in the README.

use domlab::domination::{RainbowAssignment, WeakRomanAssignment};
use domlab::extremal::ExtremalClass;
use domlab::graph::VertexSet;
use domlab::reduction::Theorem2Report;
use serde_json::{json, Map, Value};

pub fn input_ref(source: &str, line: usize, graph6: Option<&str>, raw: Option<&str>) -> Value {
    let mut m = Map::new();
    m.insert("source".into(), json!(source));
    m.insert("line".into(), json!(line));
    if let Some(g6) = graph6 {
        m.insert("graph6".into(), json!(g6));
    }
    if let Some(raw) = raw {
        m.insert("raw".into(), json!(raw));
    }
    Value::Object(m)
}

pub fn error_report(command: &str, input: Value, kind: &str, message: String) -> Value {
    json!({
        "command": command,
        "input": input,
        "error_kind": kind,
        "error": message,
    })
}

pub fn vertex_set(s: VertexSet) -> Value {
    json!(s.to_vec())
}

pub fn rainbow_witness(w: &RainbowAssignment) -> Value {
    json!(w.labels().iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn weak_roman_witness(w: &WeakRomanAssignment) -> Value {
    json!(w.values())
}

/// Classification record {tag, k, added_edges, roles}. Roles map vertex
/// indices (as JSON keys) to v/w/u names; for the two-triangles case the
/// matching joins equal role letters (v1-v2 and w1-w2).
pub fn classification(class: &ExtremalClass) -> Value {
    match class {
        ExtremalClass::K2 => json!({ "tag": "k2" }),
        ExtremalClass::TwoTrianglesTwoMatching { triangles, matching } => {
            let mut roles = Map::new();
            for (t, triangle) in triangles.iter().enumerate() {
                let (va, wa) = if t == 0 {
                    (matching[0].0, matching[1].0)
                } else {
                    (matching[0].1, matching[1].1)
                };
                for &v in triangle {
                    let name = if v == va {
                        format!("v{}", t + 1)
                    } else if v == wa {
                        format!("w{}", t + 1)
                    } else {
                        format!("u{}", t + 1)
                    };
                    roles.insert(v.to_string(), json!(name));
                }
            }
            json!({ "tag": "two-triangles-two-matching", "k": 2, "roles": roles })
        }
        ExtremalClass::TriangleSystem {
            hubs,
            privates,
            added_edges,
        } => {
            let mut roles = Map::new();
            for i in 0..hubs.len() {
                roles.insert(hubs[i].to_string(), json!(format!("v{}", i + 1)));
                roles.insert(privates[i].0.to_string(), json!(format!("w{}", i + 1)));
                roles.insert(privates[i].1.to_string(), json!(format!("u{}", i + 1)));
            }
            json!({
                "tag": "triangle-system",
                "k": hubs.len(),
                "added_edges": added_edges.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "roles": roles,
            })
        }
        ExtremalClass::NotOfCharacterizedForm => json!({ "tag": "not-characterized" }),
    }
}

pub fn theorem2(report: &Theorem2Report) -> Value {
    json!({
        "num_vars": report.num_vars,
        "num_clauses": report.num_clauses,
        "order": report.order,
        "k5_free": report.k5_free,
        "gamma_r2": report.gamma_r2,
        "gamma_r2_ok": report.gamma_r2_ok,
        "gamma_r": report.gamma_r,
        "lower_bound_ok": report.lower_bound_ok,
        "satisfiable": report.satisfying,
        "equivalence_ok": report.equivalence_ok,
        "all_ok": report.all_ok(),
    })
}

pub fn elapsed_ms(start: std::time::Instant) -> Value {
    json!((start.elapsed().as_secs_f64() * 1e3 * 1000.0).round() / 1000.0)
}
