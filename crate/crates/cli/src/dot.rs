use std::fmt::Write;

use ramlocus_core::berkovich::{HullTree, NodeKind};
use ramlocus_core::classifier::LocusShape;

fn node_id(hull: &HullTree, k: usize) -> String {
    match &hull.nodes[k].kind {
        NodeKind::Leaf(i) => format!("\"{}\"", hull.leaves[*i].name),
        NodeKind::Junction(_) => format!("\"J{k}\""),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Whether the edge above `child` lies on the path joining leaves `i`, `j`:
/// exactly one of them hangs below it.
fn on_path(hull: &HullTree, child: usize, i: usize, j: usize) -> bool {
    let below = hull.nodes[child].below;
    ((below >> i) & 1) != ((below >> j) & 1)
}

/// The hull as an undirected DOT graph with `inf` on top; locus edges are
/// bold and every edge is labelled with the radius exponents it spans.
///
/// Node and edge order follow the hull's node order, so equal inputs print
/// identical text.
pub fn render_dot(hull: &HullTree, shape: &LocusShape) -> String {
    let mut out = String::from("graph locus {\n");
    out.push_str("  node [shape=circle, fontsize=10];\n");
    out.push_str("  \"inf\" [shape=plaintext, label=\"∞\"];\n");
    for (k, node) in hull.nodes.iter().enumerate() {
        match &node.kind {
            NodeKind::Leaf(_) => writeln!(out, "  {} [shape=box];", node_id(hull, k)).expect("string write"),
            NodeKind::Junction(d) => {
                writeln!(out, "  {} [shape=point, xlabel=\"{}\"];", node_id(hull, k), escape(&d.to_string())).expect("string write")
            }
        }
    }
    for child in hull.edges() {
        let parent = hull.nodes[child].parent.expect("edge has a parent");
        let bold = match shape {
            LocusShape::Connected => true,
            LocusShape::TwoComponents(segs) => segs.iter().any(|s| on_path(hull, child, s.ends[0], s.ends[1])),
        };
        let top = hull.nodes[parent].radius();
        let bottom = hull.nodes[child].radius();
        let style = if bold { "bold" } else { "solid" };
        writeln!(
            out,
            "  {} -- {} [style={style}, label=\"{top} .. {bottom}\"];",
            node_id(hull, parent),
            node_id(hull, child)
        )
        .expect("string write");
    }
    let root = hull.root();
    writeln!(out, "  \"inf\" -- {} [style=dashed, label=\"{}\"];", node_id(hull, root), hull.nodes[root].radius())
        .expect("string write");
    out.push_str("}\n");
    out
}
