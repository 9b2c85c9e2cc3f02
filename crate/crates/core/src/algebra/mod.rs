//! Finite Heyting algebras.
//!
//! An algebra is stored as its order matrix together with precomputed meet,
//! join and implication tables. Elements are plain indices `0..size()`.
//! Constructions on algebras (products, quotients by filters, generated
//! subalgebras, embeddings) live in [`construct`]; enumeration up to
//! isomorphism goes through posets of join-irreducibles in [`poset`] and
//! [`enumerate`].

mod canon;
pub mod construct;
mod enumerate;
mod eval;
mod io;
pub mod poset;

use thiserror::Error;

pub use canon::{canonical_labeling, Labeling};
pub use construct::{product, Filter, Homomorphism};
pub use enumerate::{battery, enumerate};
pub use eval::{core, eval, fixpoint_set, is_core_generated, is_core_superalgebra, EvalError, Polynomial};
pub use io::AlgebraFile;
pub use poset::{downset_algebra, Poset};

/// An element of a finite algebra, identified by its index.
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("malformed order: {0}")]
    Malformed(String),
    #[error("not a partial order: {reason} ({left}, {right})")]
    NotAPartialOrder { left: String, right: String, reason: &'static str },
    #[error("not a lattice: {left} and {right} have no {missing}")]
    NotALattice { left: String, right: String, missing: &'static str },
    #[error("not distributive: {a} & ({b} | {c}) differs from ({a} & {b}) | ({a} & {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("not a filter: {0}")]
    NotAFilter(String),
    #[error("the chosen element is the top element")]
    ElementIsTop,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("{0}")]
    Io(String),
}

/// A finite Heyting algebra with validated order and derived operation
/// tables. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeytingAlgebra {
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Element>,
    join: Vec<Element>,
    imp: Vec<Element>,
    bottom: Element,
    top: Element,
}

impl HeytingAlgebra {
    /// Build an algebra from a partial order given as a boolean matrix
    /// (`leq[a][b]` iff `a <= b`). Checks that the order is a distributive
    /// lattice; implication is the greatest `c` with `a & c <= b`.
    pub fn from_order(size: usize, leq: &[Vec<bool>]) -> Result<Self, AlgebraError> {
        if leq.len() != size {
            return Err(AlgebraError::Malformed(format!(
                "expected {size} rows, found {}",
                leq.len()
            )));
        }
        Self::from_order_named(Vec::new(), leq)
    }

    /// Like [`HeytingAlgebra::from_order`], keeping the given element names
    /// (generated names are used when `names` is empty).
    pub fn from_order_named(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Self, AlgebraError> {
        let m = leq.len();
        if m == 0 {
            return Err(AlgebraError::Empty);
        }
        if let Some(row) = leq.iter().find(|row| row.len() != m) {
            return Err(AlgebraError::Malformed(format!(
                "row of length {} in a {m}x{m} matrix",
                row.len()
            )));
        }
        if !names.is_empty() && names.len() != m {
            return Err(AlgebraError::Malformed(format!("{} names for {m} elements", names.len())));
        }
        let label = |i: usize| if names.is_empty() { i.to_string() } else { names[i].clone() };
        for a in 0..m {
            if !leq[a][a] {
                return Err(AlgebraError::NotAPartialOrder {
                    left: label(a),
                    right: label(a),
                    reason: "not reflexive",
                });
            }
            for b in 0..m {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(AlgebraError::NotAPartialOrder {
                        left: label(a),
                        right: label(b),
                        reason: "not antisymmetric",
                    });
                }
                for c in 0..m {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(AlgebraError::NotAPartialOrder {
                            left: label(a),
                            right: label(c),
                            reason: "not transitive",
                        });
                    }
                }
            }
        }

        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let glb = (0..m).filter(|&c| leq[c][a] && leq[c][b]).find(|&g| {
                    (0..m).all(|c| !(leq[c][a] && leq[c][b]) || leq[c][g])
                });
                let lub = (0..m).filter(|&c| leq[a][c] && leq[b][c]).find(|&l| {
                    (0..m).all(|c| !(leq[a][c] && leq[b][c]) || leq[l][c])
                });
                match (glb, lub) {
                    (Some(g), Some(l)) => {
                        meet[a * m + b] = g;
                        join[a * m + b] = l;
                    }
                    (None, _) => {
                        return Err(AlgebraError::NotALattice {
                            left: label(a),
                            right: label(b),
                            missing: "greatest lower bound",
                        })
                    }
                    (_, None) => {
                        return Err(AlgebraError::NotALattice {
                            left: label(a),
                            right: label(b),
                            missing: "least upper bound",
                        })
                    }
                }
            }
        }
        let bottom = (0..m).find(|&a| (0..m).all(|b| leq[a][b])).expect("finite lattices are bounded");
        let top = (0..m).find(|&a| (0..m).all(|b| leq[b][a])).expect("finite lattices are bounded");

        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let lhs = meet[a * m + join[b * m + c]];
                    let rhs = join[meet[a * m + b] * m + meet[a * m + c]];
                    if lhs != rhs {
                        return Err(AlgebraError::NotDistributive { a: label(a), b: label(b), c: label(c) });
                    }
                }
            }
        }

        let mut imp = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                imp[a * m + b] = (0..m)
                    .filter(|&c| leq[meet[a * m + c]][b])
                    .fold(bottom, |acc, c| join[acc * m + c]);
            }
        }

        let names = if names.is_empty() { default_names(m, bottom, top) } else { names };
        let mut flat = Vec::with_capacity(m * m);
        for row in leq {
            flat.extend_from_slice(row);
        }
        Ok(HeytingAlgebra { names, leq: flat, meet, join, imp, bottom, top })
    }

    // Trusted constructor for tables already known to form a Heyting algebra
    // (restrictions to subuniverses, componentwise products).
    pub(crate) fn from_tables(
        names: Vec<String>,
        leq: Vec<bool>,
        meet: Vec<Element>,
        join: Vec<Element>,
        imp: Vec<Element>,
    ) -> Self {
        let m = names.len();
        let bottom = (0..m).find(|&a| (0..m).all(|b| leq[a * m + b])).expect("bounded");
        let top = (0..m).find(|&a| (0..m).all(|b| leq[b * m + a])).expect("bounded");
        HeytingAlgebra { names, leq, meet, join, imp, bottom, top }
    }

    /// The `n`-element chain.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "0".to_string(),
                i if i == n - 1 => "1".to_string(),
                _ if n == 3 => "m".to_string(),
                i => format!("m{i}"),
            })
            .collect();
        Self::from_order_named(names, &leq).expect("chains are Heyting algebras")
    }

    /// The four-element Boolean algebra `0 < x, y < 1`.
    pub fn diamond() -> Self {
        Self::from_covers(&["0", "x", "y", "1"], &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])
            .expect("the diamond is distributive")
    }

    /// The five-element algebra `0 < a, b < s < 1`: a diamond with a new top
    /// added above it. `s` is its unique coatom.
    pub fn figure_lc() -> Self {
        Self::from_covers(
            &["0", "a", "b", "s", "1"],
            &[("0", "a"), ("0", "b"), ("a", "s"), ("b", "s"), ("s", "1")],
        )
        .expect("the algebra is distributive")
    }

    /// Build from named elements and covering pairs `(lower, upper)`; the
    /// order is their reflexive-transitive closure.
    pub fn from_covers(elements: &[&str], covers: &[(&str, &str)]) -> Result<Self, AlgebraError> {
        let file = AlgebraFile {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            covers: covers.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        };
        file.to_algebra()
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size()
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join[a * self.size() + b]
    }

    pub fn imp(&self, a: Element, b: Element) -> Element {
        self.imp[a * self.size() + b]
    }

    pub fn neg(&self, a: Element) -> Element {
        self.imp(a, self.bottom)
    }

    pub fn name(&self, a: Element) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name)
    }

    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        let m = self.size();
        (0..m).map(|a| (0..m).map(|b| self.leq(a, b)).collect()).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.size() == 1
    }

    pub fn is_chain(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b
                    && self.leq(a, b)
                    && !self.elements().any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The greatest element strictly below top, if the non-top elements
    /// have one.
    pub fn second_greatest(&self) -> Option<Element> {
        let below: Vec<Element> = self.elements().filter(|&a| a != self.top).collect();
        below.iter().copied().find(|&s| below.iter().all(|&a| self.leq(a, s)))
    }

    /// Finite subdirect irreducibility: the non-top elements have a greatest
    /// element. The one-element algebra is not subdirectly irreducible.
    pub fn is_subdirectly_irreducible(&self) -> bool {
        self.second_greatest().is_some()
    }

    /// Elements with `~x = 0`.
    pub fn dense_elements(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.neg(x) == self.bottom).collect()
    }

    /// Fixpoints of double negation.
    pub fn regular_elements(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.neg(self.neg(x)) == x).collect()
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<Element> {
        self.elements()
            .filter(|&a| {
                let lower: Vec<Element> =
                    self.elements().filter(|&b| b != a && self.leq(b, a)).collect();
                let maximal = lower
                    .iter()
                    .filter(|&&b| lower.iter().all(|&c| c == b || !self.leq(b, c)))
                    .count();
                maximal == 1
            })
            .collect()
    }

    /// The poset of join-irreducible elements, in ascending index order.
    pub fn join_irreducible_poset(&self) -> Poset {
        let ji = self.join_irreducibles();
        let leq = ji.iter().map(|&a| ji.iter().map(|&b| self.leq(a, b)).collect()).collect();
        Poset::new(leq).expect("restriction of a partial order")
    }

    /// Does `c <= a -> b` agree with `a & c <= b` on every triple?
    pub fn satisfies_residuation(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                self.elements().all(|c| self.leq(c, self.imp(a, b)) == self.leq(self.meet(a, c), b))
            })
        })
    }

    /// Canonical labeling of the order; equal certificates mean isomorphic
    /// algebras.
    pub fn labeling(&self) -> Labeling {
        canonical_labeling(self.size(), |a, b| self.leq(a, b))
    }

    pub fn is_isomorphic(&self, other: &HeytingAlgebra) -> bool {
        self.size() == other.size() && self.labeling().certificate == other.labeling().certificate
    }

    /// The same algebra with elements reordered so that position `i` holds
    /// old element `order[i]`.
    pub fn permuted(&self, order: &[Element]) -> HeytingAlgebra {
        let m = self.size();
        let mut inverse = vec![0; m];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let table = |t: &Vec<Element>| -> Vec<Element> {
            let mut out = vec![0; m * m];
            for i in 0..m {
                for j in 0..m {
                    out[i * m + j] = inverse[t[order[i] * m + order[j]]];
                }
            }
            out
        };
        let mut leq = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                leq[i * m + j] = self.leq(order[i], order[j]);
            }
        }
        HeytingAlgebra {
            names: order.iter().map(|&o| self.names[o].clone()).collect(),
            leq,
            meet: table(&self.meet),
            join: table(&self.join),
            imp: table(&self.imp),
            bottom: inverse[self.bottom],
            top: inverse[self.top],
        }
    }

    /// Replace all element names with generated ones.
    pub fn with_default_names(mut self) -> HeytingAlgebra {
        self.names = default_names(self.size(), self.bottom, self.top);
        self
    }

    /// Render a set of elements as `{a, b}`.
    pub fn format_set(&self, set: &[Element]) -> String {
        let names: Vec<&str> = set.iter().map(|&e| self.name(e)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Bottom is `0`, top is `1`, everything else gets a letter in index order.
fn default_names(m: usize, bottom: Element, top: Element) -> Vec<String> {
    if m == 1 {
        return vec!["0".to_string()];
    }
    let mut next = 0usize;
    (0..m)
        .map(|i| {
            if i == bottom {
                "0".to_string()
            } else if i == top {
                "1".to_string()
            } else {
                let name = if next < 26 {
                    ((b'a' + next as u8) as char).to_string()
                } else {
                    format!("e{next}")
                };
                next += 1;
                name
            }
        })
        .collect()
}
