use proptest::prelude::*;

use chilogic::algebra::{battery, eval, Filter, HeytingAlgebra, Polynomial};
use chilogic::formula::{parse, Atom, Formula, Substitution};
use chilogic::lab::canonical_signatures;
use chilogic::prover::{prove_cpc, prove_ipc};
use chilogic::semantics::{chi_validates, validates, Valuation};

fn formula(atoms: &'static [&'static str]) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Bottom),
        1 => Just(Formula::Top),
        8 => proptest::sample::select(atoms).prop_map(Formula::atom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.prop_map(Formula::not),
        ]
    })
}

fn algebra(max: usize) -> impl Strategy<Value = HeytingAlgebra> {
    let all = battery(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn algebra_with_elements(max: usize) -> impl Strategy<Value = (HeytingAlgebra, Vec<usize>)> {
    algebra(max).prop_flat_map(|h| {
        let m = h.size();
        (Just(h), proptest::collection::vec(0..m, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn printing_then_parsing_is_identity(phi in formula(&["p", "q", "r"])) {
        prop_assert_eq!(parse(&phi.to_string()).unwrap(), phi);
    }

    #[test]
    fn provable_formulas_are_valid_in_small_algebras(phi in formula(&["p", "q"])) {
        if prove_ipc(&phi) {
            prop_assert!(prove_cpc(&phi));
            for h in battery(5).iter() {
                prop_assert!(validates(h, &phi), "{} fails in an algebra of size {}", phi, h.size());
            }
        }
    }

    #[test]
    fn residuation((h, xs) in algebra_with_elements(8)) {
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(h.leq(h.meet(a, b), c), h.leq(a, h.imp(b, c)));
        prop_assert_eq!(h.meet(a, h.join(b, c)), h.join(h.meet(a, b), h.meet(a, c)));
    }

    #[test]
    fn evaluation_commutes_with_substitution(
        phi in formula(&["p", "q"]),
        sp in formula(&["p", "q"]),
        sq in formula(&["p", "q"]),
        (h, xs) in algebra_with_elements(6),
    ) {
        let sigma: Substitution = [(Atom::new("p"), sp.clone()), (Atom::new("q"), sq.clone())].into_iter().collect();
        let v: Valuation = [(Atom::new("p"), xs[0]), (Atom::new("q"), xs[1])].into_iter().collect();
        let moved: Valuation = [
            (Atom::new("p"), eval(&sp, &h, &v).unwrap()),
            (Atom::new("q"), eval(&sq, &h, &v).unwrap()),
        ].into_iter().collect();
        prop_assert_eq!(eval(&sigma.apply(&phi), &h, &v).unwrap(), eval(&phi, &h, &moved).unwrap());
    }

    #[test]
    fn chi_validity_is_validity_of_the_substituted_formula(
        phi in formula(&["p", "q"]),
        h in algebra(7),
        s in 0usize..6,
    ) {
        let sig = &canonical_signatures()[s];
        let substituted = sig.atomwise_substitution(&phi).apply(&phi);
        prop_assert_eq!(chi_validates(&h, sig, &phi), validates(&h, &substituted));
    }

    #[test]
    fn quotient_maps_are_homomorphisms((h, xs) in algebra_with_elements(8)) {
        let f = Filter::principal(&h, xs[0]);
        let (q, hom) = h.quotient(&f).unwrap();
        prop_assert!(hom.is_homomorphism(&h, &q) && hom.is_surjective());
        prop_assert_eq!(q.size(), h.elements().filter(|&x| h.leq(x, xs[0])).count());
    }

    #[test]
    fn wronski_quotients_are_irreducible((h, xs) in algebra_with_elements(8)) {
        let b = xs[0];
        prop_assume!(b != h.top());
        let (c, hom, filter) = h.wronski_quotient(b).unwrap();
        prop_assert!(c.is_subdirectly_irreducible());
        prop_assert!(!filter.contains(b));
        prop_assert_eq!(c.second_greatest(), Some(hom.apply(b)));
    }

    #[test]
    fn polynomials_agree_with_direct_evaluation(phi in formula(&["p", "q", "r"]), (h, xs) in algebra_with_elements(6)) {
        let poly = Polynomial::new(&phi);
        let args: Vec<usize> = poly.atoms().iter().map(|a| xs[(a.name().as_bytes()[0] - b'p') as usize]).collect();
        let v: Valuation = ["p", "q", "r"].iter().zip(&xs).map(|(a, &x)| (Atom::new(a), x)).collect();
        prop_assert_eq!(poly.eval(&h, &args), eval(&phi, &h, &v).unwrap());
    }
}
