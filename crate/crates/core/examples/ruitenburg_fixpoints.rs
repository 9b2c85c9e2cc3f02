//! Iterate formulas in one variable until the sequence becomes periodic and
//! classify the fixpoint, including the Rieger-Nishimura formulas.

use chilogic::formula::{parse, rieger_nishimura, RnKind};
use chilogic::ruitenburg::classify_univariate;

fn main() {
    let mut named: Vec<(String, chilogic::Formula)> = ["F", "p", "~p", "~~p", "p | ~p", "T", "~p -> p", "(p -> ~p) -> p"]
        .iter()
        .map(|t| (t.to_string(), parse(t).expect("valid formula")))
        .collect();
    for n in 1..=6 {
        named.push((format!("alpha{n}"), rieger_nishimura(RnKind::Alpha, n)));
        named.push((format!("beta{n}"), rieger_nishimura(RnKind::Beta, n)));
    }
    for (name, chi) in named {
        match classify_univariate(&chi) {
            Ok(sig) => println!("{name:>16}: {}", sig.summary()),
            Err(e) => println!("{name:>16}: {e}"),
        }
    }
}
