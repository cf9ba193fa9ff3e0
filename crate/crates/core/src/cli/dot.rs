use std::fmt::Write;

use crate::error::Result;
use crate::qbg::EdgeKind;
use crate::root_datum::{join, RootDatum};

/// The quantum Bruhat graph as a DOT digraph. Nodes are canonical words;
/// quantum edges are dashed and labelled by their coroot.
pub fn qbg_dot(d: &RootDatum) -> Result<String> {
    let t = d.weyl_table()?;
    let g = d.qbg()?;
    let name = |i: usize| d.word_string(&t.elements[i]);
    let mut s = String::new();
    writeln!(s, "digraph qbg {{").unwrap();
    for i in 0..t.len() {
        writeln!(s, "  \"{}\";", name(i)).unwrap();
    }
    for u in 0..t.len() {
        let mut edges: Vec<_> = g.out_edges(u).to_vec();
        edges.sort();
        for (v, b, kind) in edges {
            match kind {
                EdgeKind::Bruhat => writeln!(s, "  \"{}\" -> \"{}\";", name(u), name(v as usize)),
                EdgeKind::Quantum => writeln!(
                    s,
                    "  \"{}\" -> \"{}\" [style=dashed, label=\"{}\"];",
                    name(u),
                    name(v as usize),
                    join(&d.coroot_coords(b as usize).0)
                ),
            }
            .unwrap();
        }
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{CartanSpec, Family};

    #[test]
    fn a1_graph() {
        let d = RootDatum::new(CartanSpec::adjoint(Family::A, 1)).unwrap();
        let s = qbg_dot(&d).unwrap();
        assert_eq!(
            s,
            "digraph qbg {\n  \"e\";\n  \"1\";\n  \"e\" -> \"1\";\n  \"1\" -> \"e\" [style=dashed, label=\"1\"];\n}\n"
        );
    }

    #[test]
    fn a2_counts() {
        let d = RootDatum::new(CartanSpec::adjoint(Family::A, 2)).unwrap();
        let s = qbg_dot(&d).unwrap();
        assert_eq!(s.matches("->").count(), 15);
        assert_eq!(s.matches("dashed").count(), 7);
        assert_eq!(s.lines().filter(|l| l.ends_with("\";") && !l.contains("->")).count(), 6);
    }
}
