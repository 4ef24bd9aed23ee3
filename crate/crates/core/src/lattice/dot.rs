use std::fmt::Write;

use super::OrthoLattice;

/// Hasse diagram in DOT syntax, drawn bottom-up. Nodes carry their
/// orthocomplement as an `xlabel`; edges are the cover relation only.
pub fn export_dot(l: &OrthoLattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(l.name())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for x in l.elements() {
        writeln!(
            out,
            "  n{x} [label=\"{}\", xlabel=\"⊥ {}\"];",
            escape(l.label(x)),
            escape(l.label(l.ortho(x)))
        )
        .unwrap();
    }
    for (x, y) in l.covers() {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, mo};

    fn counts(dot: &str) -> (usize, usize) {
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn node_and_edge_counts() {
        assert_eq!(counts(&export_dot(&boolean(1).unwrap())), (2, 1));
        assert_eq!(counts(&export_dot(&boolean(2).unwrap())), (4, 4));
        assert_eq!(counts(&export_dot(&mo(2).unwrap())), (6, 8));
    }

    #[test]
    fn deterministic() {
        let l = mo(3).unwrap();
        assert_eq!(export_dot(&l), export_dot(&l));
        assert!(export_dot(&l).starts_with("digraph \"MO3\" {"));
    }
}
