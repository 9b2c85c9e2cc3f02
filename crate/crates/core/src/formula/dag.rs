use std::collections::HashMap;
use std::sync::Arc;

use super::{Atom, Formula};

pub type NodeId = u32;

/// A hash-consed formula node. Children are ids into the owning [`Dag`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Bottom,
    Top,
    Atom(u32),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
    Implies(NodeId, NodeId),
}

/// Hash-consing arena. Structurally equal formulas get equal ids, and node
/// ids are assigned children-first, so `0..len()` is a topological order.
#[derive(Default)]
pub struct Dag {
    nodes: Vec<Node>,
    index: HashMap<Node, NodeId>,
    atoms: Vec<Atom>,
    atom_index: HashMap<Atom, u32>,
    // keeps the Arc alive so its address cannot be reused while cached
    by_ptr: HashMap<usize, (Arc<Formula>, NodeId)>,
}

impl Dag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> Node {
        self.nodes[id as usize]
    }

    pub fn atom_name(&self, slot: u32) -> &Atom {
        &self.atoms[slot as usize]
    }

    pub fn atom_slots(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn mk(&mut self, node: Node) -> NodeId {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = self.nodes.len() as NodeId;
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    pub fn mk_atom(&mut self, atom: &Atom) -> NodeId {
        let slot = match self.atom_index.get(atom) {
            Some(&s) => s,
            None => {
                let s = self.atoms.len() as u32;
                self.atoms.push(atom.clone());
                self.atom_index.insert(atom.clone(), s);
                s
            }
        };
        self.mk(Node::Atom(slot))
    }

    pub fn mk_implies(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.mk(Node::Implies(a, b))
    }

    pub fn bottom(&mut self) -> NodeId {
        self.mk(Node::Bottom)
    }

    pub fn top(&mut self) -> NodeId {
        self.mk(Node::Top)
    }

    /// Intern a formula, visiting each shared subterm once.
    pub fn intern(&mut self, f: &Formula) -> NodeId {
        match f {
            Formula::Bottom => self.mk(Node::Bottom),
            Formula::Top => self.mk(Node::Top),
            Formula::Atom(a) => self.mk_atom(a),
            Formula::And(l, r) => {
                let (l, r) = (self.intern_arc(l), self.intern_arc(r));
                self.mk(Node::And(l, r))
            }
            Formula::Or(l, r) => {
                let (l, r) = (self.intern_arc(l), self.intern_arc(r));
                self.mk(Node::Or(l, r))
            }
            Formula::Implies(l, r) => {
                let (l, r) = (self.intern_arc(l), self.intern_arc(r));
                self.mk(Node::Implies(l, r))
            }
        }
    }

    fn intern_arc(&mut self, f: &Arc<Formula>) -> NodeId {
        let key = Arc::as_ptr(f) as usize;
        if let Some((_, id)) = self.by_ptr.get(&key) {
            return *id;
        }
        let id = self.intern(f);
        self.by_ptr.insert(key, (f.clone(), id));
        id
    }

    /// Rebuild a (shared) formula from an id.
    pub fn to_formula(&self, id: NodeId) -> Formula {
        let mut built: HashMap<NodeId, Arc<Formula>> = HashMap::new();
        self.build(id, &mut built)
    }

    fn build(&self, id: NodeId, built: &mut HashMap<NodeId, Arc<Formula>>) -> Formula {
        let child = |c: NodeId, built: &mut HashMap<NodeId, Arc<Formula>>| {
            if let Some(f) = built.get(&c) {
                return f.clone();
            }
            let f = Arc::new(self.build(c, built));
            built.insert(c, f.clone());
            f
        };
        match self.node(id) {
            Node::Bottom => Formula::Bottom,
            Node::Top => Formula::Top,
            Node::Atom(s) => Formula::Atom(self.atoms[s as usize].clone()),
            Node::And(l, r) => Formula::And(child(l, built), child(r, built)),
            Node::Or(l, r) => Formula::Or(child(l, built), child(r, built)),
            Node::Implies(l, r) => Formula::Implies(child(l, built), child(r, built)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn equal_formulas_share_ids() {
        let mut dag = Dag::new();
        let a = dag.intern(&parse("(p -> q) & (p -> q)").unwrap());
        let b = dag.intern(&parse("p -> q").unwrap());
        match dag.node(a) {
            Node::And(l, r) => {
                assert_eq!(l, b);
                assert_eq!(r, b);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let f = parse("~(p | q) -> T & r").unwrap();
        let mut dag = Dag::new();
        let id = dag.intern(&f);
        assert_eq!(dag.to_formula(id), f);
    }
}
