//! DOT (Graphviz) export: undirected graphs, vertices in element-index
//! order, edges in sorted index-pair order, so identical inputs produce
//! byte-identical files.

use rough_cayley::graph::Graph;
use rough_cayley::group::FiniteGroup;

pub fn render(name: &str, group: &FiniteGroup, graph: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {name} {{\n"));
    for v in graph.vertices().iter() {
        out.push_str(&format!("  \"{}\";\n", group.label(v)));
    }
    for &(a, b) in graph.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            group.label(a),
            group.label(b)
        ));
    }
    out.push_str("}\n");
    out
}
