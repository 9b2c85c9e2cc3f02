//! Suites driven by the prover: the lattice order of the canonical logics,
//! the substitution characterization of chi-validity, and prover calibration.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;

use super::algebraic::describe;
use super::{canonical_signatures, chi_label, fixed, FormulaGen, LabConfig, SuiteReport};
use crate::algebra::{battery, core, Element, HeytingAlgebra, Polynomial};
use crate::formula::{Atom, Formula};
use crate::prover::{equiv_ipc, find_countermodel, prove_cpc, prove_ipc, with_prover};
use crate::ruitenburg::{CanonicalClass, ChiSignature};
use crate::semantics::{check_substitution_bridge, ipc_chi_member, validates_logic, AxiomSet, Valuation};

const ORDER_REFERENCE: &str = "the canonical logics are ordered as the fixpoint conditions dictate";

/// Expected covering pairs of the induced order on equivalence classes,
/// each class named by its least canonical member.
const EXPECTED_EDGES: &[(CanonicalClass, CanonicalClass)] = &[
    (CanonicalClass::P, CanonicalClass::Neg),
    (CanonicalClass::P, CanonicalClass::Em),
    (CanonicalClass::Neg, CanonicalClass::Bot),
    (CanonicalClass::Neg, CanonicalClass::Top),
    (CanonicalClass::Em, CanonicalClass::Top),
];

/// `(theta^2 <-> p) -> (chi^2 <-> p)`.
fn order_condition(chi: &ChiSignature, theta: &ChiSignature) -> Formula {
    let p = Formula::atom("p");
    let sq = |s: &ChiSignature| s.chi.iterate(&Atom::new("p"), 2);
    Formula::implies(Formula::iff(sq(theta), p.clone()), Formula::iff(sq(chi), p))
}

fn subset(a: &[Element], b: &[Element]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn suite_order(max_size: usize) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new("order");
    let sigs = canonical_signatures();
    let algebras = battery(max_size);
    let cores: Vec<Vec<Vec<Element>>> =
        algebras.iter().map(|h| sigs.iter().map(|s| core(h, s)).collect()).collect();
    let n = sigs.len();

    let mut below = vec![vec![true; n]; n];
    let mut unconfirmed = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let provable = prove_ipc(&order_condition(&sigs[i], &sigs[j]));
            below[i][j] = provable;
            // cores of theta inside cores of chi
            let counter = (0..algebras.len()).find(|&k| !subset(&cores[k][j], &cores[k][i]));
            let id = format!("pair/{}<={}", chi_label(&sigs[i]), chi_label(&sigs[j]));
            match (provable, counter) {
                (true, None) => report.check(id, ORDER_REFERENCE, true, "condition (3) provable; (4) follows"),
                (true, Some(k)) => report.check(
                    id,
                    ORDER_REFERENCE,
                    false,
                    format!("condition (3) provable but (4) fails on {}", describe(&algebras[k])),
                ),
                (false, Some(k)) => report.check(
                    id,
                    ORDER_REFERENCE,
                    true,
                    format!("condition (3) unprovable; (4) fails on {}", describe(&algebras[k])),
                ),
                (false, None) => {
                    unconfirmed.push(format!("{} <= {}", chi_label(&sigs[i]), chi_label(&sigs[j])));
                    report.check(
                        id,
                        ORDER_REFERENCE,
                        true,
                        format!("condition (3) unprovable; (4) holds on all {} algebras", algebras.len()),
                    )
                }
            }
        }
    }
    report.check(
        "battery-adequate",
        ORDER_REFERENCE,
        unconfirmed.is_empty(),
        if unconfirmed.is_empty() {
            "every unprovable pair has a finite counterexample to (4)".to_string()
        } else {
            format!("no finite counterexample for {}", unconfirmed.join(", "))
        },
    );

    // equivalence classes, represented by their least index
    let rep: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| below[i][j] && below[j][i]).unwrap_or(i)).collect();
    let classes: BTreeSet<usize> = rep.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for &a in &classes {
        for &b in &classes {
            let strict = a != b && below[a][b];
            let covered = classes.iter().any(|&c| c != a && c != b && below[a][c] && below[c][b]);
            if strict && !covered {
                edges.insert((a, b));
            }
        }
    }
    let index = |c: CanonicalClass| sigs.iter().position(|s| s.canonical_class == c).expect("canonical");
    let expected: BTreeSet<(usize, usize)> =
        EXPECTED_EDGES.iter().map(|&(a, b)| (rep[index(a)], rep[index(b)])).collect();
    let show = |set: &BTreeSet<(usize, usize)>| {
        set.iter()
            .map(|&(a, b)| format!("{} < {}", chi_label(&sigs[a]), chi_label(&sigs[b])))
            .collect::<Vec<_>>()
            .join(", ")
    };
    report.check("hasse-diagram", ORDER_REFERENCE, edges == expected, show(&edges));
    let (neg, dneg) = (index(CanonicalClass::Neg), index(CanonicalClass::DNeg));
    report.check(
        "negation-logics-coincide",
        ORDER_REFERENCE,
        rep[neg] == rep[dneg] && classes.len() == 5,
        format!("{} classes", classes.len()),
    );

    report.elapsed = start.elapsed();
    report
}

fn lc_theorems(config: &LabConfig) -> Vec<Formula> {
    let lc = AxiomSet::lc().axioms()[0].clone();
    let mut gen = FormulaGen::new(config.seed, 5, &["p", "q", "r"]);
    let mut out = vec![lc.clone()];
    while out.len() < 21 {
        let instance = gen.substitution(2).apply(&lc);
        let rho = gen.formula(2);
        let candidate = match out.len() % 3 {
            0 => Formula::implies(Formula::implies(instance.clone(), rho.clone()), rho),
            1 => Formula::or(rho, instance.clone()),
            _ => Formula::and(instance.clone(), Formula::implies(rho.clone(), rho)),
        };
        if prove_ipc(&Formula::implies(instance, candidate.clone())) {
            out.push(candidate);
        }
    }
    out
}

pub fn suite_substitution(config: &LabConfig) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new("substitution");
    let sigs = canonical_signatures();
    let algebras = battery(config.fuzz_max_size);
    let mut gen = FormulaGen::new(config.seed, 4, &["p", "q", "r"]);
    let formulas = gen.formulas(config.fuzz_formulas, 5);
    let cores: Vec<Vec<Vec<Element>>> =
        algebras.iter().map(|h| sigs.iter().map(|s| core(h, s)).collect()).collect();

    let mut cases = 0;
    let mut bad = Vec::new();
    let mut bridge_cases = 0;
    let mut bridge_bad = Vec::new();
    let mut members = 0;
    let mut cross_bad = Vec::new();
    let mut agree_bad = Vec::new();
    let neg = sigs.iter().position(|s| s.canonical_class == CanonicalClass::Neg).expect("neg");
    let dneg = sigs.iter().position(|s| s.canonical_class == CanonicalClass::DNeg).expect("dneg");
    for phi in &formulas {
        let poly = Polynomial::new(phi);
        let atoms = poly.atoms().to_vec();
        for (s, sig) in sigs.iter().enumerate() {
            let substituted = Polynomial::new(&sig.atomwise_substitution(phi).apply(phi));
            let member = with_prover(|p| p.prove(&sig.atomwise_substitution(phi).apply(phi)));
            members += usize::from(member);
            for (k, h) in algebras.iter().enumerate() {
                cases += 1;
                let chi_valid = poly.is_valid_over(h, &cores[k][s]);
                if chi_valid != substituted.is_valid_in(h) {
                    bad.push(format!("{phi} under chi = {} on {}", chi_label(sig), describe(h)));
                }
                if member && !chi_valid {
                    cross_bad.push(format!("{phi} under chi = {} on {}", chi_label(sig), describe(h)));
                }
                if s == neg && chi_valid != poly.is_valid_over(h, &cores[k][dneg]) {
                    agree_bad.push(format!("{phi} on {}", describe(h)));
                }
                bridge_cases += 1;
                let v: Valuation =
                    atoms.iter().map(|a| (a.clone(), gen.rng().gen_range(0..h.size()))).collect();
                if !check_substitution_bridge(h, sig, phi, &v) {
                    bridge_bad.push(format!("{phi} at {} under chi = {}", v.describe(h), chi_label(sig)));
                }
            }
        }
    }
    report.tally(
        "chi-validity-is-substituted-validity",
        "chi-validity coincides with validity of the atomwise substituted formula",
        cases,
        &bad,
    );
    report.tally(
        "bridge-identity",
        "evaluation under the chi-variant of a valuation equals evaluation of the substituted formula",
        bridge_cases,
        &bridge_bad,
    );
    report.tally(
        "prover-agrees-with-algebras",
        "substitution-defined membership implies chi-validity in every algebra",
        members * algebras.len(),
        &cross_bad,
    );
    report.tally(
        "negation-cores-agree",
        "the ~p and ~~p semantics validate the same formulas",
        formulas.len() * algebras.len(),
        &agree_bad,
    );

    let lc = AxiomSet::lc();
    let theorems = lc_theorems(config);
    let mut cases = 0;
    let mut bad = Vec::new();
    for (k, h) in algebras.iter().enumerate().filter(|(_, h)| validates_logic(h, &lc)) {
        for phi in &theorems {
            let poly = Polynomial::new(phi);
            for (s, sig) in sigs.iter().enumerate() {
                cases += 1;
                if !poly.is_valid_over(h, &cores[k][s]) {
                    bad.push(format!("{phi} under chi = {} on {}", chi_label(sig), describe(h)));
                }
            }
        }
    }
    report.tally(
        "logic-validity-implies-chi-validity",
        "an algebra validating a logic chi-validates its theorems",
        cases,
        &bad,
    );

    let em_q = fixed("q | ~q");
    let em_sig = &sigs[sigs.iter().position(|s| s.canonical_class == CanonicalClass::Em).expect("em")];
    report.check(
        "example/excluded-middle-not-member",
        "the substituted excluded middle is again excluded middle",
        !ipc_chi_member(&em_q, em_sig) && ipc_chi_member(&fixed("~~p -> p"), &sigs[neg]),
        "q | ~q is not a member under p | ~p; ~~p -> p is a member under ~p",
    );

    report.elapsed = start.elapsed();
    report
}

pub fn suite_calibration(config: &LabConfig) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new("calibration");
    let mut gen = FormulaGen::new(config.seed, 6, &["p", "q", "r"]);

    let mut bad = Vec::new();
    let mut tautologies = 0;
    for phi in gen.formulas(config.glivenko_samples, 6) {
        let classical = prove_cpc(&phi);
        tautologies += usize::from(classical);
        if prove_ipc(&Formula::not(Formula::not(phi.clone()))) != classical {
            bad.push(phi.to_string());
        }
    }
    report.tally(
        "glivenko",
        "a formula is a classical tautology iff its double negation is intuitionistically provable",
        config.glivenko_samples,
        &bad,
    );
    report.check("glivenko/tautologies", "plumbing", true, format!("{tautologies} classical tautologies sampled"));

    let mut bad = Vec::new();
    let mut theorems = 0;
    for phi in gen.formulas(config.soundness_samples, 4) {
        let candidates = [phi.clone(), Formula::not(Formula::not(Formula::or(phi.clone(), Formula::not(phi))))];
        for psi in candidates {
            if prove_ipc(&psi) {
                theorems += 1;
                if let Some(cm) = find_countermodel(&psi, 8) {
                    bad.push(format!("{psi} refuted at {} on {}", cm.valuation.describe(&cm.algebra), describe(&cm.algebra)));
                }
            }
        }
    }
    report.tally(
        "soundness",
        "provable formulas have no finite countermodel",
        config.soundness_samples,
        &bad,
    );
    report.check("soundness/theorems", "plumbing", theorems > 0, format!("{theorems} theorems checked"));

    let mut bad = Vec::new();
    let mut found = 0;
    let mut draws = 0;
    while found < config.monotonicity_samples && draws < 100 * config.monotonicity_samples.max(1) {
        draws += 1;
        let phi = gen.formula(4);
        let theorem = if prove_ipc(&phi) {
            phi
        } else if prove_cpc(&phi) {
            Formula::not(Formula::not(phi))
        } else {
            continue;
        };
        found += 1;
        let instance = gen.substitution(2).apply(&theorem);
        if !prove_ipc(&instance) {
            bad.push(format!("{theorem} becomes {instance}"));
        }
    }
    if found < config.monotonicity_samples {
        bad.push(format!("only {found} theorems in {draws} draws"));
    }
    report.tally(
        "substitution-closure",
        "theorems are closed under uniform substitution",
        found,
        &bad,
    );

    let sample = FormulaGen::new(config.seed, 7, &["p", "q"]).formulas(40, 3);
    let small = battery(5);
    let polys: Vec<Polynomial> = sample.iter().map(Polynomial::new).collect();
    let n = sample.len();
    let mut eq = vec![vec![false; n]; n];
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            eq[i][j] = equiv_ipc(&sample[i], &sample[j]);
            if eq[i][j] && !same_function(&polys[i], &polys[j], &small) {
                bad.push(format!("{} and {} differ on a small algebra", sample[i], sample[j]));
            }
        }
    }
    for i in 0..n {
        if !eq[i][i] {
            bad.push(format!("{} not equivalent to itself", sample[i]));
        }
        for j in 0..n {
            if eq[i][j] != eq[j][i] {
                bad.push(format!("{} and {} asymmetric", sample[i], sample[j]));
            }
            for k in 0..n {
                if eq[i][j] && eq[j][k] && !eq[i][k] {
                    bad.push(format!("{}, {}, {} intransitive", sample[i], sample[j], sample[k]));
                }
            }
        }
    }
    report.tally("equivalence-relation", "plumbing", n * n, &bad);

    report.elapsed = start.elapsed();
    report
}

/// Same term function on every algebra, over the union of both atom sets.
fn same_function(a: &Polynomial, b: &Polynomial, algebras: &[HeytingAlgebra]) -> bool {
    let atoms: BTreeSet<Atom> = a.atoms().iter().chain(b.atoms()).cloned().collect();
    let atoms: Vec<Atom> = atoms.into_iter().collect();
    let pick = |p: &Polynomial, args: &[Element]| -> Vec<Element> {
        p.atoms().iter().map(|x| args[atoms.iter().position(|y| y == x).expect("atom")]).collect()
    };
    algebras.iter().all(|h| {
        let m = h.size();
        let total = m.pow(atoms.len() as u32);
        (0..total).all(|mut code| {
            let mut args = vec![0; atoms.len()];
            for slot in args.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            a.eval(h, &pick(a, &args)) == b.eval(h, &pick(b, &args))
        })
    })
}
