//! Graphviz output. Solid arrows are repeated once per multiplicity, dotted
//! (translation) arrows are dashed. Vertices are written in label order.

use std::fmt::Write;

/// A quiver with labelled vertices, arrow multiplicities and a partial dotted map.
pub struct DotQuiver<'a> {
    pub name: &'a str,
    pub labels: &'a [String],
    pub arrow_mult: &'a [Vec<usize>],
    pub dotted: Vec<Option<usize>>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(q: &DotQuiver<'_>) -> String {
    let mut order: Vec<usize> = (0..q.labels.len()).collect();
    order.sort_by(|&a, &b| q.labels[a].cmp(&q.labels[b]).then(a.cmp(&b)));
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(q.name)).unwrap();
    for &x in &order {
        writeln!(s, "  {};", quote(&q.labels[x])).unwrap();
    }
    for &x in &order {
        for &y in &order {
            for _ in 0..q.arrow_mult[x][y] {
                writeln!(s, "  {} -> {};", quote(&q.labels[x]), quote(&q.labels[y])).unwrap();
            }
        }
    }
    for &x in &order {
        if let Some(t) = q.dotted[x] {
            writeln!(
                s,
                "  {} -> {} [style=dashed];",
                quote(&q.labels[x]),
                quote(&q.labels[t])
            )
            .unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// Vertex, solid-edge and dashed-edge counts of DOT text written by [`to_dot`].
pub fn dot_counts(dot: &str) -> (usize, usize, usize) {
    let (mut v, mut solid, mut dashed) = (0, 0, 0);
    for line in dot.lines().map(str::trim) {
        if !line.ends_with(';') {
            continue;
        }
        if line.contains("->") {
            if line.contains("style=dashed") {
                dashed += 1;
            } else {
                solid += 1;
            }
        } else {
            v += 1;
        }
    }
    (v, solid, dashed)
}
