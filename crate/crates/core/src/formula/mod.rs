//! Intuitionistic propositional formulas.
//!
//! A [`Formula`] is an immutable tree whose children are reference counted,
//! so iterating a formula into itself produces a shared DAG rather than an
//! exponentially large copy. Every traversal in this crate that may see such
//! iterates (substitution, atom collection, interning) memoizes on node
//! addresses.

mod dag;
mod library;
mod parse;
mod print;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

pub use dag::{Dag, Node, NodeId};
pub use library::{library, rieger_nishimura, LibraryError, RnKind, LIBRARY_NAMES};
pub use parse::{parse, ParseError};
pub use print::print;

/// A propositional variable. Ordered lexicographically by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Self {
        Atom(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Whether `name` is usable as an atom identifier in the concrete syntax.
    pub fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "F" && name != "T"
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(name: &str) -> Self {
        Atom::new(name)
    }
}

/// Abstract syntax of intuitionistic propositional formulas.
///
/// Negation and the biconditional are not constructors: `~a` is
/// `Implies(a, Bottom)` and `a <-> b` is `And(Implies(a, b), Implies(b, a))`.
/// Equality is structural; `Arc` equality short-circuits on shared nodes.
#[derive(Clone, PartialEq, Eq)]
pub enum Formula {
    Bottom,
    Top,
    Atom(Atom),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Implies(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Arc::new(left), Arc::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Arc::new(left), Arc::new(right))
    }

    pub fn implies(left: Formula, right: Formula) -> Formula {
        Formula::Implies(Arc::new(left), Arc::new(right))
    }

    pub fn not(inner: Formula) -> Formula {
        Formula::implies(inner, Formula::Bottom)
    }

    pub fn iff(left: Formula, right: Formula) -> Formula {
        let l = Arc::new(left);
        let r = Arc::new(right);
        Formula::And(
            Arc::new(Formula::Implies(l.clone(), r.clone())),
            Arc::new(Formula::Implies(r, l)),
        )
    }

    /// `Some(inner)` when the formula has the shape `inner -> F`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(inner, rhs) if **rhs == Formula::Bottom => Some(inner),
            _ => None,
        }
    }

    /// The set of atoms occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        let mut seen = std::collections::HashSet::new();
        fn walk(
            f: &Formula,
            out: &mut BTreeSet<Atom>,
            seen: &mut std::collections::HashSet<*const Formula>,
        ) {
            match f {
                Formula::Bottom | Formula::Top => {}
                Formula::Atom(a) => {
                    out.insert(a.clone());
                }
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    for child in [l, r] {
                        if seen.insert(Arc::as_ptr(child)) {
                            walk(child, out, seen);
                        }
                    }
                }
            }
        }
        walk(self, &mut out, &mut seen);
        out
    }

    /// Height of the syntax tree; atoms and constants have depth 0.
    pub fn depth(&self) -> usize {
        let mut memo = HashMap::new();
        fn go(f: &Formula, memo: &mut HashMap<*const Formula, usize>) -> usize {
            match f {
                Formula::Bottom | Formula::Top | Formula::Atom(_) => 0,
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    let mut d = 0;
                    for child in [l, r] {
                        let key = Arc::as_ptr(child);
                        let cd = match memo.get(&key) {
                            Some(&v) => v,
                            None => {
                                let v = go(child, memo);
                                memo.insert(key, v);
                                v
                            }
                        };
                        d = d.max(cd);
                    }
                    d + 1
                }
            }
        }
        go(self, &mut memo)
    }

    /// Number of distinct nodes when shared subformulas are counted once.
    pub fn dag_size(&self) -> usize {
        let mut dag = Dag::new();
        dag.intern(self);
        dag.len()
    }

    pub fn substitute(&self, sigma: &Substitution) -> Formula {
        sigma.apply(self)
    }

    /// Replace the single atom `atom` by `replacement`.
    pub fn substitute_atom(&self, atom: &Atom, replacement: &Formula) -> Formula {
        Substitution::single(atom.clone(), replacement.clone()).apply(self)
    }

    /// The `k`-fold iterate of `self` in the variable `atom`: the 0th iterate
    /// is the atom itself and each further one substitutes the previous
    /// iterate for `atom`.
    pub fn iterate(&self, atom: &Atom, k: usize) -> Formula {
        let mut current = Formula::Atom(atom.clone());
        for _ in 0..k {
            current = self.substitute_atom(atom, &current);
        }
        current
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Free-function form of [`Formula::iterate`].
pub fn iterate(chi: &Formula, atom: &Atom, k: usize) -> Formula {
    chi.iterate(atom, k)
}

/// Free-function form of [`Formula::substitute`].
pub fn substitute(phi: &Formula, sigma: &Substitution) -> Formula {
    sigma.apply(phi)
}

/// A finite, simultaneous replacement of atoms by formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    bindings: BTreeMap<Atom, Formula>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(atom: Atom, replacement: Formula) -> Self {
        let mut s = Self::new();
        s.bind(atom, replacement);
        s
    }

    pub fn bind(&mut self, atom: Atom, replacement: Formula) -> &mut Self {
        self.bindings.insert(atom, replacement);
        self
    }

    pub fn get(&self, atom: &Atom) -> Option<&Formula> {
        self.bindings.get(atom)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, &Formula)> {
        self.bindings.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Apply the substitution. All lookups read the original formula, so
    /// `{p := q, q := p}` swaps the two atoms.
    pub fn apply(&self, phi: &Formula) -> Formula {
        if self.bindings.is_empty() {
            return phi.clone();
        }
        let mut cache: HashMap<*const Formula, Option<Arc<Formula>>> = HashMap::new();
        self.rewrite(phi, &mut cache).unwrap_or_else(|| phi.clone())
    }

    // `None` means the subtree is unchanged and can be shared as is.
    fn rewrite_child(
        &self,
        child: &Arc<Formula>,
        cache: &mut HashMap<*const Formula, Option<Arc<Formula>>>,
    ) -> Option<Arc<Formula>> {
        let key = Arc::as_ptr(child);
        if let Some(done) = cache.get(&key) {
            return done.clone();
        }
        let out = self.rewrite(child, cache).map(Arc::new);
        cache.insert(key, out.clone());
        out
    }

    fn rewrite(
        &self,
        phi: &Formula,
        cache: &mut HashMap<*const Formula, Option<Arc<Formula>>>,
    ) -> Option<Formula> {
        let (l, r) = match phi {
            Formula::Bottom | Formula::Top => return None,
            Formula::Atom(a) => return self.bindings.get(a).cloned(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => (l, r),
        };
        let nl = self.rewrite_child(l, cache);
        let nr = self.rewrite_child(r, cache);
        if nl.is_none() && nr.is_none() {
            return None;
        }
        let nl = nl.unwrap_or_else(|| l.clone());
        let nr = nr.unwrap_or_else(|| r.clone());
        Some(match phi {
            Formula::And(..) => Formula::And(nl, nr),
            Formula::Or(..) => Formula::Or(nl, nr),
            _ => Formula::Implies(nl, nr),
        })
    }
}

impl FromIterator<(Atom, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Atom, Formula)>>(iter: I) -> Self {
        Substitution { bindings: iter.into_iter().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn substitution_is_simultaneous() {
        let sigma: Substitution =
            [(Atom::new("p"), p("q")), (Atom::new("q"), p("p"))].into_iter().collect();
        assert_eq!(p("p -> q").substitute(&sigma), p("q -> p"));
    }

    #[test]
    fn substitution_examples() {
        let sigma = Substitution::single(Atom::new("p"), Formula::Bottom);
        assert_eq!(p("p | ~p").substitute(&sigma), p("F | ~F"));
        let sigma = Substitution::single(Atom::new("p"), Formula::Top);
        assert_eq!(p("q").substitute(&sigma), p("q"));
    }

    #[test]
    fn iterate_examples() {
        let a = Atom::new("p");
        assert_eq!(p("~p").iterate(&a, 3), p("~~~p"));
        assert_eq!(p("q -> r").iterate(&a, 0), p("p"));
        assert_eq!(p("p & q").iterate(&a, 2), p("(p & q) & q"));
    }

    #[test]
    fn iterates_share_structure() {
        let a = Atom::new("p");
        let chi = p("(p -> q) | (q -> p)");
        let big = chi.iterate(&a, 30);
        // a tree would have 2^30 copies of the base formula
        assert!(big.dag_size() < 30 * 8);
        assert_eq!(big.depth(), 60);
        assert_eq!(big.atoms().len(), 2);
    }

    #[test]
    fn atom_names() {
        assert!(Atom::is_valid_name("p_1"));
        assert!(!Atom::is_valid_name("1p"));
        assert!(!Atom::is_valid_name("T"));
        assert!(!Atom::is_valid_name(""));
    }
}
