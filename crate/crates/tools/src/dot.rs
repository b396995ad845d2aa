//! Graphviz output for Hasse diagrams.

use bousfield_core::ideal::IdealSet;
use bousfield_core::{BousfieldLattice, CMonoid0, ElemSet, Poset};

/// `digraph` with bottom-to-top ranks; `edges` are cover pairs `(lower, upper)`.
pub fn render_dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = format!(
        "digraph \"{}\" {{\n  rankdir=BT;\n  node [shape=plaintext];\n",
        escape(name)
    );
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(l)));
    }
    for &(a, b) in edges {
        out.push_str(&format!("  n{a} -> n{b} [arrowhead=none];\n"));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn poset_dot(name: &str, p: &Poset) -> String {
    render_dot(name, p.names(), &p.covers())
}

/// Bousfield classes, bottom `T` to top `⟨0⟩`.
pub fn bousfield_dot(name: &str, bl: &BousfieldLattice) -> String {
    let labels: Vec<String> = (0..bl.len()).map(|i| bl.class_name(i)).collect();
    render_dot(name, &labels, &bl.to_lattice().covers())
}

pub fn set_label(m: &CMonoid0, s: ElemSet) -> String {
    let names: Vec<&str> = s.iter().map(|x| m.name(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// A family of ideals ordered by inclusion.
pub fn ideals_dot(name: &str, m: &CMonoid0, ideals: &[IdealSet]) -> String {
    let labels: Vec<String> = ideals.iter().map(|i| set_label(m, i.members)).collect();
    let p = Poset::from_fn(labels.clone(), |a, b| ideals[a].members.is_subset(ideals[b].members))
        .expect("inclusion is a partial order");
    render_dot(name, &labels, &p.covers())
}

#[cfg(test)]
mod tests {
    use super::*;
    use bousfield_core::builtin;

    #[test]
    fn chain_dot() {
        let dot = poset_dot("C3", builtin::chain(3).poset());
        assert_eq!(
            dot,
            "digraph \"C3\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"0\"];\n  n1 [label=\"a\"];\n  n2 [label=\"1\"];\n  n0 -> n1 [arrowhead=none];\n  n1 -> n2 [arrowhead=none];\n}\n"
        );
    }
}
