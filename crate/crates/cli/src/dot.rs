//! Graphviz output with a fixed statement order: vertices by id, then edges
//! in lexicographic order.

use std::fmt::Write;

use gallery_core::complex::ChamberGraph;

fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn to_dot(g: &ChamberGraph, seed: u64) -> String {
    let mut out = String::new();
    writeln!(out, "// seed {seed}").unwrap();
    writeln!(out, "graph chambers {{").unwrap();
    writeln!(
        out,
        "  graph [provenance={}, complete={}];",
        quoted(g.provenance().as_str()),
        g.is_complete()
    )
    .unwrap();
    for v in 0..g.vertex_count() {
        match g.name(v) {
            Some(name) => writeln!(out, "  {v} [label={}];", quoted(name)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for e in g.edges() {
        match e.label {
            Some(l) => writeln!(out, "  {} -- {} [label=\"{l}\"];", e.a, e.b).unwrap(),
            None => writeln!(out, "  {} -- {};", e.a, e.b).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gallery_core::complex::Provenance;

    #[test]
    fn names_are_escaped() {
        let g = ChamberGraph::from_edges(2, [(0, 1, Some(2))], Provenance::Generic)
            .unwrap()
            .with_names(vec!["a\"b".into(), "c".into()])
            .unwrap();
        let dot = to_dot(&g, 3);
        assert!(dot.contains(r#"0 [label="a\"b"];"#));
        assert!(dot.contains("0 -- 1 [label=\"2\"];"));
    }
}
