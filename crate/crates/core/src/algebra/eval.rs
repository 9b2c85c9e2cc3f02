//! Formulas as polynomials on finite algebras, and the cores they induce.

use thiserror::Error;

use super::{Element, HeytingAlgebra};
use crate::formula::{Atom, Dag, Formula, Node, NodeId};
use crate::ruitenburg::ChiSignature;
use crate::semantics::Valuation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom `{0}` has no value")]
    UnboundAtom(Atom),
}

/// A formula compiled to a straight-line program over its distinct
/// subterms. Arguments follow the lexicographic order of the atoms.
#[derive(Debug, Clone)]
pub struct Polynomial {
    nodes: Vec<Node>,
    root: NodeId,
    atoms: Vec<Atom>,
    // argument position for each atom slot of the program
    slot_arg: Vec<usize>,
}

impl Polynomial {
    pub fn new(phi: &Formula) -> Self {
        let mut dag = Dag::new();
        let root = dag.intern(phi);
        let atoms: Vec<Atom> = phi.atoms().into_iter().collect();
        let slot_arg = dag
            .atom_slots()
            .iter()
            .map(|a| atoms.binary_search(a).expect("atom of the formula"))
            .collect();
        let nodes = (0..dag.len() as NodeId).map(|i| dag.node(i)).collect();
        Polynomial { nodes, root, atoms, slot_arg }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Value at `args`, one element per atom.
    pub fn eval(&self, h: &HeytingAlgebra, args: &[Element]) -> Element {
        let mut buf = Vec::with_capacity(self.root as usize + 1);
        self.eval_into(h, args, &mut buf)
    }

    fn eval_into(&self, h: &HeytingAlgebra, args: &[Element], buf: &mut Vec<Element>) -> Element {
        debug_assert_eq!(args.len(), self.atoms.len());
        buf.clear();
        // node ids are topological, so children are computed first
        for node in &self.nodes[..=self.root as usize] {
            let v = match *node {
                Node::Bottom => h.bottom(),
                Node::Top => h.top(),
                Node::Atom(slot) => args[self.slot_arg[slot as usize]],
                Node::And(a, b) => h.meet(buf[a as usize], buf[b as usize]),
                Node::Or(a, b) => h.join(buf[a as usize], buf[b as usize]),
                Node::Implies(a, b) => h.imp(buf[a as usize], buf[b as usize]),
            };
            buf.push(v);
        }
        buf[self.root as usize]
    }

    /// The first argument tuple (lexicographic, first atom most significant)
    /// drawn from `domain` at which the value is not top, with that value.
    pub fn first_refutation_over(
        &self,
        h: &HeytingAlgebra,
        domain: &[Element],
    ) -> Option<(Vec<Element>, Element)> {
        let k = self.atoms.len();
        if domain.is_empty() && k > 0 {
            return None;
        }
        let mut idx = vec![0usize; k];
        let mut args: Vec<Element> = vec![domain.first().copied().unwrap_or(0); k];
        let mut buf = Vec::new();
        loop {
            let v = self.eval_into(h, &args, &mut buf);
            if v != h.top() {
                return Some((args, v));
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < domain.len() {
                    args[pos] = domain[idx[pos]];
                    break;
                }
                idx[pos] = 0;
                args[pos] = domain[0];
            }
        }
    }

    pub fn first_refutation(&self, h: &HeytingAlgebra) -> Option<(Vec<Element>, Element)> {
        let all: Vec<Element> = h.elements().collect();
        self.first_refutation_over(h, &all)
    }

    pub fn is_valid_in(&self, h: &HeytingAlgebra) -> bool {
        self.first_refutation(h).is_none()
    }

    pub fn is_valid_over(&self, h: &HeytingAlgebra, domain: &[Element]) -> bool {
        self.first_refutation_over(h, domain).is_none()
    }

    /// The table `x -> value at x` of a polynomial in at most one atom.
    pub fn unary_map(&self, h: &HeytingAlgebra) -> Vec<Element> {
        assert!(self.atoms.len() <= 1, "not a unary polynomial");
        let mut buf = Vec::new();
        h.elements()
            .map(|x| {
                let args = if self.atoms.is_empty() { vec![] } else { vec![x] };
                self.eval_into(h, &args, &mut buf)
            })
            .collect()
    }
}

/// Value of `phi` under `valuation`.
pub fn eval(phi: &Formula, h: &HeytingAlgebra, valuation: &Valuation) -> Result<Element, EvalError> {
    let poly = Polynomial::new(phi);
    let args = poly
        .atoms()
        .iter()
        .map(|a| valuation.get(a).ok_or_else(|| EvalError::UnboundAtom(a.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(poly.eval(h, &args))
}

/// Image of the `n`-fold iterate `chi^n`, ascending.
pub fn core(h: &HeytingAlgebra, sig: &ChiSignature) -> Vec<Element> {
    let mut image = Polynomial::new(sig.power()).unary_map(h);
    image.sort_unstable();
    image.dedup();
    image
}

/// Fixpoints of `chi^2`, ascending.
pub fn fixpoint_set(h: &HeytingAlgebra, chi: &Formula) -> Vec<Element> {
    let square = chi.iterate(&Atom::new("p"), 2);
    let map = Polynomial::new(&square).unary_map(h);
    h.elements().filter(|&x| map[x] == x).collect()
}

/// Does the core generate the whole algebra?
pub fn is_core_generated(h: &HeytingAlgebra, sig: &ChiSignature) -> bool {
    h.generated_subalgebra(&core(h, sig)).0.size() == h.size()
}

/// Is there an embedding of `h` into `k` carrying the core of `h` exactly
/// onto the core of `k`?
pub fn is_core_superalgebra(k: &HeytingAlgebra, h: &HeytingAlgebra, sig: &ChiSignature) -> bool {
    let core_k = core(k, sig);
    let core_h = core(h, sig);
    h.embeddings_into(k).iter().any(|e| e.image(&core_h) == core_k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::ruitenburg::classify_univariate;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let c3 = HeytingAlgebra::chain(3);
        let m = c3.element("m").unwrap();
        let v: Valuation = [(Atom::new("p"), m)].into_iter().collect();
        assert_eq!(eval(&f("~p"), &c3, &v), Ok(c3.bottom()));
        assert_eq!(eval(&f("T"), &c3, &v), Ok(c3.top()));
        assert_eq!(eval(&f("q"), &c3, &v), Err(EvalError::UnboundAtom(Atom::new("q"))));
        let h = HeytingAlgebra::figure_lc();
        let v: Valuation = [(Atom::new("p"), h.element("b").unwrap())].into_iter().collect();
        assert_eq!(eval(&f("~~p -> p"), &h, &v), Ok(h.top()));
    }

    #[test]
    fn refutation_order() {
        let c3 = HeytingAlgebra::chain(3);
        let poly = Polynomial::new(&f("(q -> p) | (p -> q)"));
        assert!(poly.is_valid_in(&c3));
        let poly = Polynomial::new(&f("p | q"));
        assert_eq!(poly.first_refutation(&c3), Some((vec![0, 0], 0)));
        assert!(Polynomial::new(&f("T")).is_valid_over(&c3, &[]));
    }

    #[test]
    fn figure_lc_cores() {
        let h = HeytingAlgebra::figure_lc();
        let show = |chi: &str| h.format_set(&core(&h, &classify_univariate(&f(chi)).unwrap()));
        assert_eq!(show("F"), "{0}");
        assert_eq!(show("p"), "{0, a, b, s, 1}");
        assert_eq!(show("~p"), "{0, a, b, 1}");
        assert_eq!(show("p | ~p"), "{s, 1}");
        assert_eq!(show("T"), "{1}");
    }

    #[test]
    fn fixpoint_examples() {
        let c3 = HeytingAlgebra::chain(3);
        assert_eq!(c3.format_set(&fixpoint_set(&c3, &f("~p"))), "{0, 1}");
        let h = HeytingAlgebra::figure_lc();
        assert_eq!(h.format_set(&fixpoint_set(&h, &f("~~p -> p"))), "{s, 1}");
        assert_eq!(fixpoint_set(&h, &f("p")).len(), 5);
    }

    #[test]
    fn core_generation() {
        let em = classify_univariate(&f("p | ~p")).unwrap();
        assert!(!is_core_generated(&HeytingAlgebra::figure_lc(), &em));
        for n in 1..6 {
            assert!(is_core_generated(&HeytingAlgebra::chain(n), &em));
        }
        let id = classify_univariate(&f("p")).unwrap();
        assert!(is_core_generated(&HeytingAlgebra::diamond(), &id));
    }
}
