//! Minimal compact-JSON emission.
//!
//! Output is assembled by hand because the arbitrary-precision integers used
//! throughout the workspace have no serializer, and JSON places no bound on
//! the size of a number literal. Every emitter here produces compact JSON:
//! no whitespace, keys in a fixed documented order, so that outputs are
//! byte-for-byte reproducible.

use lattice_core::Int;

/// Escape and quote a string for JSON.
pub fn jstr(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Render an integer as a JSON number literal.
pub fn jint(n: &Int) -> String {
    n.to_string()
}

/// Render a boolean.
pub fn jbool(b: bool) -> String {
    if b { "true" } else { "false" }.to_string()
}

/// Render an optional pre-rendered value, `null` when absent.
pub fn jopt(v: Option<String>) -> String {
    v.unwrap_or_else(|| "null".to_string())
}

/// Join pre-rendered values into a JSON array.
pub fn jarr<I: IntoIterator<Item = String>>(items: I) -> String {
    let body: Vec<String> = items.into_iter().collect();
    format!("[{}]", body.join(","))
}

/// Render an integer vector.
pub fn jints(v: &[Int]) -> String {
    jarr(v.iter().map(jint))
}

/// Render a matrix as an array of row arrays.
pub fn jrows(m: &[Vec<Int>]) -> String {
    jarr(m.iter().map(|row| jints(row)))
}

/// Assemble an object from (key, pre-rendered value) pairs, in order.
pub fn jobj(pairs: &[(&str, String)]) -> String {
    let body: Vec<String> = pairs
        .iter()
        .map(|(k, v)| format!("{}:{}", jstr(k), v))
        .collect();
    format!("{{{}}}", body.join(","))
}
