//! JSON algebra files and Graphviz export.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Element, HeytingAlgebra};

/// On-disk form of an algebra: element names plus covering pairs
/// `[lower, upper]`. The order is the reflexive-transitive closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<HeytingAlgebra, AlgebraError> {
        let m = self.elements.len();
        if m == 0 {
            return Err(AlgebraError::Empty);
        }
        for (i, name) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(name) {
                return Err(AlgebraError::DuplicateElement(name.clone()));
            }
        }
        let index = |name: &str| {
            self.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| AlgebraError::UnknownElement(name.to_string()))
        };
        let mut leq = vec![vec![false; m]; m];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for [lo, hi] in &self.covers {
            leq[index(lo)?][index(hi)?] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if leq[i][k] {
                    for j in 0..m {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        HeytingAlgebra::from_order_named(self.elements.clone(), &leq)
    }

    pub fn from_algebra(h: &HeytingAlgebra) -> Self {
        AlgebraFile {
            elements: h.names().to_vec(),
            covers: h
                .covers()
                .into_iter()
                .map(|(a, b)| [h.name(a).to_string(), h.name(b).to_string()])
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Io(format!("invalid algebra file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn load(path: &Path) -> Result<HeytingAlgebra, AlgebraError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AlgebraError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)?.to_algebra()
    }

    pub fn save(h: &HeytingAlgebra, path: &Path) -> Result<(), AlgebraError> {
        std::fs::write(path, Self::from_algebra(h).to_json() + "\n")
            .map_err(|e| AlgebraError::Io(format!("{}: {e}", path.display())))
    }
}

impl HeytingAlgebra {
    /// Hasse diagram in DOT, bottom at the bottom; `highlight` elements are
    /// filled.
    pub fn to_dot(&self, highlight: &[Element]) -> String {
        let mut out = String::from("digraph algebra {\n  rankdir=BT;\n  node [shape=circle];\n");
        for a in self.elements() {
            let style = if highlight.contains(&a) { ", style=filled, fillcolor=gray" } else { "" };
            let _ = writeln!(out, "  n{a} [label=\"{}\"{style}];", self.name(a).replace('"', "\\\""));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{a} -> n{b} [arrowhead=none];");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIGURE: &str = r#"{"elements": ["0","a","b","s","1"],
        "covers": [["0","a"],["0","b"],["a","s"],["b","s"],["s","1"]]}"#;

    #[test]
    fn reads_and_writes() {
        let h = AlgebraFile::from_json(FIGURE).unwrap().to_algebra().unwrap();
        assert_eq!(h, HeytingAlgebra::figure_lc());
        let again = AlgebraFile::from_json(&AlgebraFile::from_algebra(&h).to_json()).unwrap();
        assert_eq!(again.to_algebra().unwrap(), h);
    }

    #[test]
    fn reports_bad_files() {
        let dup = r#"{"elements": ["0","0"], "covers": []}"#;
        assert_eq!(
            AlgebraFile::from_json(dup).unwrap().to_algebra(),
            Err(AlgebraError::DuplicateElement("0".into()))
        );
        let unknown = r#"{"elements": ["0","1"], "covers": [["0","x"]]}"#;
        assert_eq!(
            AlgebraFile::from_json(unknown).unwrap().to_algebra(),
            Err(AlgebraError::UnknownElement("x".into()))
        );
        assert!(matches!(AlgebraFile::from_json("{"), Err(AlgebraError::Io(_))));
        let cycle = r#"{"elements": ["0","1"], "covers": [["0","1"],["1","0"]]}"#;
        assert!(matches!(
            AlgebraFile::from_json(cycle).unwrap().to_algebra(),
            Err(AlgebraError::NotAPartialOrder { .. })
        ));
    }

    #[test]
    fn dot_output() {
        let h = HeytingAlgebra::figure_lc();
        let dot = h.to_dot(&[3, 4]);
        assert!(dot.contains("n3 [label=\"s\", style=filled"));
        assert!(dot.contains("n0 -> n1"));
        assert_eq!(dot.matches("->").count(), 5);
    }
}
