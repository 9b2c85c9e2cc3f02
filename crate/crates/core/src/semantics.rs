//! Validity of formulas in finite algebras, its restriction to valuations
//! into a core, and membership in the substitution-defined logics.
//!
//! Validity of a finitely axiomatized logic in an algebra reduces to
//! validity of its axioms: the set of formulas valid in an algebra is closed
//! under modus ponens and uniform substitution, and contains IPC.

use std::collections::BTreeMap;

use crate::algebra::{core, eval, Element, HeytingAlgebra, Polynomial};
use crate::formula::{parse, Atom, Formula};
use crate::prover::{prove_cpc, prove_ipc};
use crate::ruitenburg::ChiSignature;

/// An assignment of algebra elements to atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation {
    bindings: BTreeMap<Atom, Element>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, atom: Atom, value: Element) -> &mut Self {
        self.bindings.insert(atom, value);
        self
    }

    pub fn get(&self, atom: &Atom) -> Option<Element> {
        self.bindings.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, Element)> {
        self.bindings.iter().map(|(a, &e)| (a, e))
    }

    /// `p=a, q=b` using the algebra's element names.
    pub fn describe(&self, h: &HeytingAlgebra) -> String {
        let parts: Vec<String> =
            self.iter().map(|(a, e)| format!("{a}={}", h.name(e))).collect();
        parts.join(", ")
    }
}

impl FromIterator<(Atom, Element)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Atom, Element)>>(iter: I) -> Self {
        Valuation { bindings: iter.into_iter().collect() }
    }
}

/// A presentation of an intermediate logic: IPC plus finitely many axioms,
/// each classically valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSet {
    name: String,
    axioms: Vec<Formula>,
}

impl AxiomSet {
    /// `None` if some axiom is not a classical tautology.
    pub fn new(name: &str, axioms: Vec<Formula>) -> Option<Self> {
        axioms
            .iter()
            .all(prove_cpc)
            .then(|| AxiomSet { name: name.to_string(), axioms })
    }

    pub fn ipc() -> Self {
        AxiomSet { name: "IPC".into(), axioms: Vec::new() }
    }

    fn named(name: &str, axiom: &str) -> Self {
        AxiomSet::new(name, vec![parse(axiom).expect("fixed axiom")]).expect("classical axiom")
    }

    /// Weak excluded middle.
    pub fn wem() -> Self {
        Self::named("WEM", "~p | ~~p")
    }

    /// Goedel-Dummett linearity.
    pub fn lc() -> Self {
        Self::named("LC", "(p -> q) | (q -> p)")
    }

    /// Kreisel-Putnam.
    pub fn kp() -> Self {
        Self::named("KP", "(~p -> q | r) -> (~p -> q) | (~p -> r)")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn axioms(&self) -> &[Formula] {
        &self.axioms
    }
}

/// Is `phi` top under every valuation of its atoms?
pub fn validates(h: &HeytingAlgebra, phi: &Formula) -> bool {
    Polynomial::new(phi).is_valid_in(h)
}

/// First valuation (lexicographic, first atom most significant) refuting
/// `phi`, if any.
pub fn refuting_valuation(h: &HeytingAlgebra, phi: &Formula) -> Option<Valuation> {
    let poly = Polynomial::new(phi);
    poly.first_refutation(h).map(|(args, _)| poly.atoms().iter().cloned().zip(args).collect())
}

/// Is `phi` top under every valuation into the core?
pub fn chi_validates(h: &HeytingAlgebra, sig: &ChiSignature, phi: &Formula) -> bool {
    Polynomial::new(phi).is_valid_over(h, &core(h, sig))
}

pub fn chi_refuting_valuation(h: &HeytingAlgebra, sig: &ChiSignature, phi: &Formula) -> Option<Valuation> {
    let poly = Polynomial::new(phi);
    poly.first_refutation_over(h, &core(h, sig))
        .map(|(args, _)| poly.atoms().iter().cloned().zip(args).collect())
}

/// Pointwise image of `v` under the `index`-fold iterate of `chi`.
pub fn chi_variant(h: &HeytingAlgebra, v: &Valuation, sig: &ChiSignature) -> Valuation {
    let map = Polynomial::new(sig.power()).unary_map(h);
    v.iter().map(|(a, e)| (a.clone(), map[e])).collect()
}

/// Does evaluating `phi` under the variant of `v` agree with evaluating
/// the atomwise substituted formula under `v`? `v` must bind every atom.
pub fn check_substitution_bridge(
    h: &HeytingAlgebra,
    sig: &ChiSignature,
    phi: &Formula,
    v: &Valuation,
) -> bool {
    let substituted = sig.atomwise_substitution(phi).apply(phi);
    let lhs = eval(phi, h, &chi_variant(h, v, sig));
    let rhs = eval(&substituted, h, v);
    lhs.is_ok() && lhs == rhs
}

pub fn validates_logic(h: &HeytingAlgebra, logic: &AxiomSet) -> bool {
    logic.axioms().iter().all(|ax| validates(h, ax))
}

/// Membership of `phi` in the substitution-defined variant of IPC: the
/// formula obtained by replacing each atom `q` with `chi^index[q/p]` is an
/// IPC theorem.
pub fn ipc_chi_member(phi: &Formula, sig: &ChiSignature) -> bool {
    prove_ipc(&sig.atomwise_substitution(phi).apply(phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ruitenburg::classify_univariate;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn sig(s: &str) -> ChiSignature {
        classify_univariate(&f(s)).unwrap()
    }

    fn val(h: &HeytingAlgebra, pairs: &[(&str, &str)]) -> Valuation {
        pairs.iter().map(|(a, e)| (Atom::new(a), h.element(e).unwrap())).collect()
    }

    #[test]
    fn validity_examples() {
        assert!(!validates(&HeytingAlgebra::chain(3), &f("p | ~p")));
        assert!(validates(&HeytingAlgebra::chain(2), &f("p | ~p")));
        let h = HeytingAlgebra::figure_lc();
        assert!(!validates(&h, &f("~p | ~~p")));
        assert_eq!(refuting_valuation(&h, &f("~p | ~~p")).unwrap().describe(&h), "p=a");
    }

    #[test]
    fn chi_validity_examples() {
        assert!(chi_validates(&HeytingAlgebra::chain(3), &sig("~p"), &f("p | ~p")));
        let h = HeytingAlgebra::figure_lc();
        assert!(chi_validates(&h, &sig("p | ~p"), &f("(p -> q) | (q -> p)")));
        assert!(!validates(&h, &f("(p -> q) | (q -> p)")));
        assert!(chi_validates(&h, &sig("T"), &f("p")));
    }

    #[test]
    fn variants() {
        let c3 = HeytingAlgebra::chain(3);
        let v = val(&c3, &[("p", "m")]);
        assert_eq!(chi_variant(&c3, &v, &sig("~p")), val(&c3, &[("p", "0")]));
        assert_eq!(chi_variant(&c3, &v, &sig("p")), v);
        let h = HeytingAlgebra::figure_lc();
        let v = val(&h, &[("p", "s")]);
        assert_eq!(chi_variant(&h, &v, &sig("~p")), val(&h, &[("p", "0")]));
    }

    #[test]
    fn bridge_examples() {
        let c3 = HeytingAlgebra::chain(3);
        assert!(check_substitution_bridge(&c3, &sig("~p"), &f("p | ~p"), &val(&c3, &[("p", "m")])));
        let h = HeytingAlgebra::figure_lc();
        assert!(check_substitution_bridge(&h, &sig("~p"), &f("p"), &val(&h, &[("p", "s")])));
        assert!(check_substitution_bridge(&h, &sig("p"), &f("p -> q"), &val(&h, &[("p", "a"), ("q", "b")])));
        assert!(!check_substitution_bridge(&h, &sig("p"), &f("p -> q"), &val(&h, &[("p", "a")])));
    }

    #[test]
    fn logics() {
        for n in 1..6 {
            assert!(validates_logic(&HeytingAlgebra::chain(n), &AxiomSet::lc()));
        }
        assert!(!validates_logic(&HeytingAlgebra::figure_lc(), &AxiomSet::wem()));
        assert!(validates_logic(&HeytingAlgebra::figure_lc(), &AxiomSet::ipc()));
        assert!(AxiomSet::new("bad", vec![f("p")]).is_none());
        assert!(validates_logic(&HeytingAlgebra::diamond(), &AxiomSet::kp()));
    }

    #[test]
    fn membership() {
        assert!(ipc_chi_member(&f("~~p -> p"), &sig("~p")));
        assert!(!ipc_chi_member(&f("q | ~q"), &sig("p | ~p")));
        assert!(ipc_chi_member(&f("q -> q"), &sig("p | ~p")));
        assert!(!ipc_chi_member(&f("~~p -> p"), &sig("p")));
    }
}
