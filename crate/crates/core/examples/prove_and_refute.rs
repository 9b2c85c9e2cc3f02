//! Decide a few formulas intuitionistically and classically, and show the
//! smallest finite countermodel for those that are not provable.

use chilogic::formula::parse;
use chilogic::prover::{find_countermodel, prove_cpc, prove_ipc};

fn main() {
    for text in ["p -> p", "p | ~p", "~~(p | ~p)", "~p | ~~p", "((p -> q) -> p) -> p", "(p -> q) | (q -> p)"] {
        let phi = parse(text).expect("valid formula");
        println!("{text}");
        println!("  intuitionistic: {}, classical: {}", prove_ipc(&phi), prove_cpc(&phi));
        if let Some(cm) = find_countermodel(&phi, 6) {
            let covers: Vec<String> = cm
                .algebra
                .covers()
                .iter()
                .map(|&(a, b)| format!("{}<{}", cm.algebra.name(a), cm.algebra.name(b)))
                .collect();
            println!(
                "  refuted in the {}-element algebra [{}] at {} with value {}",
                cm.algebra.size(),
                covers.join(" "),
                cm.valuation.describe(&cm.algebra),
                cm.algebra.name(cm.value)
            );
        }
    }
}
