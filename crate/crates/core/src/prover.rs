//! Decision procedures for intuitionistic and classical propositional logic.
//!
//! IPC theoremhood is decided by backward search in Dyckhoff's
//! contraction-free sequent calculus (LJT / G4ip). The implication-left rule
//! is split by the shape of the implication's antecedent:
//!
//! ```text
//!   G, p, B |- E                          G, C -> (D -> B) |- E
//!  --------------------- (p atom)        ---------------------------
//!   G, p, p -> B |- E                     G, (C & D) -> B |- E
//!
//!   G, C -> B, D -> B |- E                G, D -> B |- C -> D    G, B |- E
//!  ---------------------------           ----------------------------------
//!   G, (C | D) -> B |- E                  G, (C -> D) -> B |- E
//! ```
//!
//! Every premise is smaller than its conclusion in the multiset ordering on
//! formula weights, so the search terminates without loop checking and a
//! `false` answer means "not a theorem". All rules except right-disjunction
//! and the last implication rule are invertible and applied eagerly; the
//! remaining choices are tried left to right and memoized on the saturated
//! sequent (sorted antecedent plus succedent).
//!
//! Formulas are hash-consed into a [`Dag`] first, so iterates with massive
//! tree size but small sharing cost no more than their distinct subterms.
//!
//! Before branching on a sequent the searcher evaluates it in a few small
//! finite Heyting algebras; a sequent refuted there is unprovable, so the
//! branch is closed as failed. This only prunes, it never proves.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::algebra::{battery, Element, HeytingAlgebra, Polynomial};
use crate::formula::{Dag, Formula, Node, NodeId};
use crate::semantics::Valuation;

const MEMO_LIMIT: usize = 1 << 22;
const DAG_LIMIT: usize = 1 << 20;
// largest algebra used for pruning, and the cap on pruning valuations
const PRUNE_ALGEBRA_SIZE: usize = 5;
const PRUNE_MODELS: usize = 48;

/// A memoizing G4ip proof searcher. Reusing one instance across related
/// queries shares subgoal results; the memo is a pure cache.
pub struct Prover {
    dag: Dag,
    memo: HashMap<(Box<[NodeId]>, NodeId), bool>,
    searches: u64,
    models: Models,
}

impl Default for Prover {
    fn default() -> Self {
        Self::new()
    }
}

impl Prover {
    pub fn new() -> Self {
        Prover { dag: Dag::new(), memo: HashMap::new(), searches: 0, models: Models::new() }
    }

    /// Number of memoized branching searches performed so far.
    pub fn searches(&self) -> u64 {
        self.searches
    }

    pub fn clear(&mut self) {
        self.dag = Dag::new();
        self.memo.clear();
    }

    /// Is `phi` a theorem of intuitionistic propositional logic?
    pub fn prove(&mut self, phi: &Formula) -> bool {
        if self.memo.len() > MEMO_LIMIT || self.dag.len() > DAG_LIMIT {
            self.clear();
        }
        let goal = self.dag.intern(phi);
        let slots: Vec<u32> = phi
            .atoms()
            .iter()
            .map(|a| {
                let id = self.dag.mk_atom(a);
                match self.dag.node(id) {
                    Node::Atom(slot) => slot,
                    _ => unreachable!("atoms intern to atom nodes"),
                }
            })
            .collect();
        self.models.reset(&slots, self.dag.atom_slots().len());
        self.left(Vec::new(), Vec::new(), Vec::new(), goal)
    }

    pub fn equiv(&mut self, a: &Formula, b: &Formula) -> bool {
        if a == b {
            return true;
        }
        self.prove(&Formula::implies(a.clone(), b.clone()))
            && self.prove(&Formula::implies(b.clone(), a.clone()))
    }

    // Saturate the antecedent with the invertible left rules, split pending
    // disjunctions, then hand over to the right rules.
    fn left(
        &mut self,
        mut ctx: Vec<NodeId>,
        mut todo: Vec<NodeId>,
        mut ors: Vec<NodeId>,
        goal: NodeId,
    ) -> bool {
        while let Some(f) = todo.pop() {
            match self.dag.node(f) {
                Node::Bottom => return true,
                Node::Top => {}
                Node::Atom(_) => {
                    if insert_sorted(&mut ctx, f) {
                        let mut i = 0;
                        while i < ctx.len() {
                            if let Node::Implies(a, b) = self.dag.node(ctx[i]) {
                                if a == f {
                                    todo.push(b);
                                    ctx.remove(i);
                                    continue;
                                }
                            }
                            i += 1;
                        }
                    }
                }
                Node::And(a, b) => {
                    todo.push(a);
                    todo.push(b);
                }
                Node::Or(..) => {
                    if !ors.contains(&f) {
                        ors.push(f);
                    }
                }
                Node::Implies(a, b) => {
                    if self.dag.node(b) == Node::Top {
                        continue;
                    }
                    match self.dag.node(a) {
                        Node::Bottom => {}
                        Node::Top => todo.push(b),
                        Node::Atom(_) => {
                            if ctx.binary_search(&a).is_ok() {
                                todo.push(b);
                            } else {
                                insert_sorted(&mut ctx, f);
                            }
                        }
                        Node::And(c, d) => {
                            let db = self.dag.mk_implies(d, b);
                            todo.push(self.dag.mk_implies(c, db));
                        }
                        Node::Or(c, d) => {
                            todo.push(self.dag.mk_implies(c, b));
                            todo.push(self.dag.mk_implies(d, b));
                        }
                        Node::Implies(..) => {
                            insert_sorted(&mut ctx, f);
                        }
                    }
                }
            }
        }
        if ctx.binary_search(&goal).is_ok() || ors.contains(&goal) {
            return true;
        }
        if let Some(or) = ors.pop() {
            let Node::Or(a, b) = self.dag.node(or) else { unreachable!() };
            return self.left(ctx.clone(), vec![a], ors.clone(), goal)
                && self.left(ctx, vec![b], ors, goal);
        }
        self.right(ctx, goal)
    }

    // `ctx` is saturated: only atoms, `p -> B` with `p` absent, and
    // `(C -> D) -> B`.
    fn right(&mut self, ctx: Vec<NodeId>, goal: NodeId) -> bool {
        match self.dag.node(goal) {
            Node::Top => true,
            Node::And(a, b) => self.right(ctx.clone(), a) && self.right(ctx, b),
            Node::Implies(a, b) => self.left(ctx, vec![a], Vec::new(), b),
            _ => self.search(ctx, goal),
        }
    }

    fn search(&mut self, ctx: Vec<NodeId>, goal: NodeId) -> bool {
        if ctx.binary_search(&goal).is_ok() {
            return true;
        }
        let key = (ctx.clone().into_boxed_slice(), goal);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        self.searches += 1;
        if self.models.refutes(&self.dag, &ctx, goal) {
            self.memo.insert(key, false);
            return false;
        }
        let mut proved = false;
        if let Node::Or(a, b) = self.dag.node(goal) {
            proved = self.right(ctx.clone(), a) || self.right(ctx.clone(), b);
        }
        if !proved {
            let choices: Vec<(usize, NodeId, NodeId, NodeId)> = (0..ctx.len())
                .filter_map(|i| match self.dag.node(ctx[i]) {
                    Node::Implies(cd, b) => match self.dag.node(cd) {
                        Node::Implies(c, d) => Some((i, c, d, b)),
                        _ => None,
                    },
                    _ => None,
                })
                .collect();
            // B entails (C -> D) -> B, so each right premise `G, B |- E` is
            // necessary for the whole sequent; one failure closes it
            for &(i, c, d, b) in &choices {
                let mut rest = ctx.clone();
                rest.remove(i);
                if !self.left(rest.clone(), vec![b], Vec::new(), goal) {
                    break;
                }
                let db = self.dag.mk_implies(d, b);
                if self.left(rest, vec![db, c], Vec::new(), d) {
                    proved = true;
                    break;
                }
            }
        }
        self.memo.insert(key, proved);
        proved
    }
}

/// Valuations in small algebras used to close unprovable branches early.
/// Node values are cached per query; `epoch` invalidates them.
struct Models {
    algebras: Vec<HeytingAlgebra>,
    active: Vec<Model>,
    epoch: u32,
}

struct Model {
    algebra: usize,
    // value of each atom slot; slots outside the query map to bottom
    atoms: Vec<u8>,
    values: Vec<u8>,
    stamps: Vec<u32>,
}

impl Models {
    fn new() -> Self {
        let algebras =
            battery(PRUNE_ALGEBRA_SIZE).iter().filter(|h| h.size() > 1).cloned().collect();
        Models { algebras, active: Vec::new(), epoch: 0 }
    }

    // All valuations of `slots`, algebra by algebra, up to the model cap.
    fn reset(&mut self, slots: &[u32], slot_count: usize) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            for m in &mut self.active {
                m.stamps.iter_mut().for_each(|s| *s = 0);
            }
            self.epoch = 1;
        }
        let mut pool = std::mem::take(&mut self.active);
        'outer: for (ai, h) in self.algebras.iter().enumerate() {
            let size = h.size();
            let mut digits = vec![0usize; slots.len()];
            loop {
                if self.active.len() == PRUNE_MODELS {
                    break 'outer;
                }
                let mut model = pool.pop().unwrap_or(Model {
                    algebra: 0,
                    atoms: Vec::new(),
                    values: Vec::new(),
                    stamps: Vec::new(),
                });
                model.algebra = ai;
                model.atoms.clear();
                model.atoms.resize(slot_count, h.bottom() as u8);
                for (&slot, &d) in slots.iter().zip(&digits) {
                    model.atoms[slot as usize] = d as u8;
                }
                self.active.push(model);
                let mut pos = digits.len();
                loop {
                    if pos == 0 {
                        continue 'outer;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < size {
                        break;
                    }
                    digits[pos] = 0;
                }
            }
        }
    }

    // Is there a model where the meet of `ctx` is not below `goal`?
    fn refutes(&mut self, dag: &Dag, ctx: &[NodeId], goal: NodeId) -> bool {
        let epoch = self.epoch;
        for model in &mut self.active {
            let h = &self.algebras[model.algebra];
            let g = model.value(h, dag, goal, epoch);
            let mut m = h.top();
            for &f in ctx {
                m = h.meet(m, model.value(h, dag, f, epoch));
            }
            if !h.leq(m, g) {
                return true;
            }
        }
        false
    }
}

impl Model {
    fn value(&mut self, h: &HeytingAlgebra, dag: &Dag, id: NodeId, epoch: u32) -> Element {
        if self.stamps.len() < dag.len() {
            self.stamps.resize(dag.len(), 0);
            self.values.resize(dag.len(), 0);
        }
        let mut stack = vec![id];
        while let Some(&n) = stack.last() {
            if self.stamps[n as usize] == epoch {
                stack.pop();
                continue;
            }
            let get = |c: NodeId| (self.stamps[c as usize] == epoch).then(|| self.values[c as usize] as Element);
            let v = match dag.node(n) {
                Node::Bottom => Some(h.bottom()),
                Node::Top => Some(h.top()),
                Node::Atom(slot) => Some(self.atoms.get(slot as usize).map_or(h.bottom(), |&x| x as Element)),
                Node::And(a, b) | Node::Or(a, b) | Node::Implies(a, b) => match (get(a), get(b)) {
                    (Some(x), Some(y)) => Some(match dag.node(n) {
                        Node::And(..) => h.meet(x, y),
                        Node::Or(..) => h.join(x, y),
                        _ => h.imp(x, y),
                    }),
                    (x, y) => {
                        if x.is_none() {
                            stack.push(a);
                        }
                        if y.is_none() {
                            stack.push(b);
                        }
                        None
                    }
                },
            };
            if let Some(v) = v {
                self.values[n as usize] = v as u8;
                self.stamps[n as usize] = epoch;
                stack.pop();
            }
        }
        self.values[id as usize] as Element
    }
}

fn insert_sorted(v: &mut Vec<NodeId>, x: NodeId) -> bool {
    match v.binary_search(&x) {
        Ok(_) => false,
        Err(pos) => {
            v.insert(pos, x);
            true
        }
    }
}

thread_local! {
    static PROVER: RefCell<Prover> = RefCell::new(Prover::new());
}

/// Run `f` against this thread's shared prover.
pub fn with_prover<R>(f: impl FnOnce(&mut Prover) -> R) -> R {
    PROVER.with(|p| f(&mut p.borrow_mut()))
}

/// Is `phi` an IPC theorem? Total: the search always terminates.
pub fn prove_ipc(phi: &Formula) -> bool {
    with_prover(|p| p.prove(phi))
}

/// IPC equivalence: both implications are theorems.
pub fn equiv_ipc(a: &Formula, b: &Formula) -> bool {
    with_prover(|p| p.equiv(a, b))
}

/// Classical validity by truth tables over the atoms of `phi`.
pub fn prove_cpc(phi: &Formula) -> bool {
    let mut dag = Dag::new();
    let root = dag.intern(phi) as usize;
    let k = dag.atom_slots().len();
    assert!(k < 32, "truth tables over {k} atoms are out of reach");
    let mut values = vec![false; dag.len()];
    for row in 0u64..(1u64 << k) {
        for id in 0..dag.len() {
            values[id] = match dag.node(id as NodeId) {
                Node::Bottom => false,
                Node::Top => true,
                Node::Atom(slot) => row >> slot & 1 == 1,
                Node::And(a, b) => values[a as usize] && values[b as usize],
                Node::Or(a, b) => values[a as usize] || values[b as usize],
                Node::Implies(a, b) => !values[a as usize] || values[b as usize],
            };
        }
        if !values[root] {
            return false;
        }
    }
    true
}

/// A finite Heyting algebra and valuation under which a formula is not top.
#[derive(Debug, Clone)]
pub struct Countermodel {
    pub algebra: HeytingAlgebra,
    pub valuation: Valuation,
    pub value: Element,
}

/// Search the enumerated algebras of size at most `max_size` (by size, then
/// enumeration order) and their valuations (lexicographic, first atom most
/// significant) for a refutation of `phi`. `None` does not certify
/// theoremhood.
pub fn find_countermodel(phi: &Formula, max_size: usize) -> Option<Countermodel> {
    let poly = Polynomial::new(phi);
    let atoms = poly.atoms().to_vec();
    for algebra in battery(max_size).iter() {
        if let Some((args, value)) = poly.first_refutation(algebra) {
            let valuation = atoms.iter().cloned().zip(args).collect();
            return Some(Countermodel { algebra: algebra.clone(), valuation, value });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn basic_theorems() {
        for t in [
            "p -> p",
            "T",
            "~F",
            "p & q -> q & p",
            "p | q -> q | p",
            "(p -> q) -> (q -> r) -> p -> r",
            "~~(~~p -> p)",
            "~~(p | ~p)",
            "~p <-> ~~~p",
            "((p -> q) -> p) -> ~~p",
            "(p | ~p -> q) -> ~~q",
        ] {
            assert!(prove_ipc(&f(t)), "{t} should be provable");
        }
    }

    #[test]
    fn classical_but_not_intuitionistic() {
        for t in [
            "~~p -> p",
            "p | ~p",
            "((p -> q) -> p) -> p",
            "(p -> q) | (q -> p)",
            "~p | ~~p",
            "(~p -> q | r) -> (~p -> q) | (~p -> r)",
            "F",
            "p",
        ] {
            assert!(!prove_ipc(&f(t)), "{t} should not be provable");
        }
    }

    #[test]
    fn equivalences() {
        assert!(equiv_ipc(&f("~p"), &f("~~~p")));
        assert!(!equiv_ipc(&f("p"), &f("~~p")));
        assert!(equiv_ipc(&f("T"), &f("F -> F")));
    }

    #[test]
    fn truth_tables() {
        assert!(prove_cpc(&f("p | ~p")));
        assert!(!prove_cpc(&f("p")));
        assert!(prove_cpc(&f("(p -> q) | (q -> p)")));
        assert!(prove_cpc(&f("T")));
        assert!(!prove_cpc(&f("F")));
    }

    #[test]
    fn shared_iterates_stay_cheap() {
        let chi = crate::formula::rieger_nishimura(crate::formula::RnKind::Beta, 4);
        let p = crate::formula::Atom::new("p");
        assert!(prove_ipc(&chi.iterate(&p, 4)));
    }

    #[test]
    fn countermodels() {
        let cm = find_countermodel(&f("~~p -> p"), 3).unwrap();
        assert_eq!(cm.algebra.size(), 3);
        assert_eq!(cm.valuation.get(&"p".into()), Some(1));
        assert!(find_countermodel(&f("p -> p"), 6).is_none());
        let cm = find_countermodel(&f("~p | ~~p"), 5).unwrap();
        assert_eq!(cm.algebra.size(), 5);
        assert!(cm.algebra.is_isomorphic(&HeytingAlgebra::figure_lc()));
        let a = cm.valuation.get(&"p".into()).unwrap();
        let h = &cm.algebra;
        assert_ne!(cm.value, h.top());
        assert_eq!(cm.value, h.join(h.neg(a), h.neg(h.neg(a))));
        // the value is the unique coatom
        assert_eq!(h.second_greatest(), Some(cm.value));
    }
}
