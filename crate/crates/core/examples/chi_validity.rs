//! Validity against chi-validity: a formula may hold under every valuation
//! into a core without holding outright, and chi-validity agrees with
//! validity of the atomwise substituted formula.

use chilogic::formula::parse;
use chilogic::lab::canonical_signatures;
use chilogic::semantics::{chi_refuting_valuation, ipc_chi_member, validates};
use chilogic::HeytingAlgebra;

fn main() {
    let h = HeytingAlgebra::figure_lc();
    let phi = parse("(p -> q) | (q -> p)").expect("valid formula");
    println!("{phi} valid in the five-element algebra: {}", validates(&h, &phi));
    for sig in canonical_signatures() {
        let substituted = sig.atomwise_substitution(&phi).apply(&phi);
        let refutation = chi_refuting_valuation(&h, &sig, &phi);
        println!(
            "chi = {:<7} chi-valid: {:<5} substituted valid: {:<5} member: {:<5} {}",
            sig.chi.to_string(),
            refutation.is_none(),
            validates(&h, &substituted),
            ipc_chi_member(&phi, &sig),
            refutation.map(|v| format!("refuted at {}", v.describe(&h))).unwrap_or_default()
        );
    }
}
