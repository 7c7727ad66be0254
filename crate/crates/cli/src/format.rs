//! Plain-text and JSON renderings of homology.

use pathtt::{ComplexRQ, ElementaryDivisors, Ring};
use serde_json::{json, Value};

/// `Z^2 + Z/(6)`, or `0`.
pub fn module<R: Ring>(ring: &R, ed: &ElementaryDivisors<R>) -> String {
    let base = ring.descriptor().to_string();
    let mut parts: Vec<String> = ed.divisors.iter().map(|d| format!("{base}/({})", ring.format_elem(d))).collect();
    match ed.free_rank {
        0 => {}
        1 => parts.push(base),
        k => parts.push(format!("{base}^{k}")),
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// One line per degree with nonzero homology: `H^n: v=M ...`.
pub fn homology_table<R: Ring>(x: &ComplexRQ<R>) -> String {
    let q = x.quiver();
    let degrees = x.homology_degrees();
    if degrees.is_empty() {
        return "  acyclic\n".into();
    }
    let mut out = String::new();
    for n in degrees {
        let h = x.homology(n);
        let cells: Vec<String> = (0..q.vertex_count())
            .map(|v| format!("{}={}", q.vertex_name(v), module(x.ring(), h.module(v).divisors())))
            .collect();
        out.push_str(&format!("  H^{n}: {}\n", cells.join(" ")));
    }
    out
}

pub fn homology_json<R: Ring>(x: &ComplexRQ<R>) -> Value {
    let q = x.quiver();
    let degrees: Vec<Value> = x
        .homology_degrees()
        .into_iter()
        .map(|n| {
            let h = x.homology(n);
            let per_vertex: serde_json::Map<String, Value> = (0..q.vertex_count())
                .map(|v| (q.vertex_name(v).to_string(), json!(module(x.ring(), h.module(v).divisors()))))
                .collect();
            json!({ "degree": n, "vertices": per_vertex })
        })
        .collect();
    Value::Array(degrees)
}
