//! The five-element algebra with a unique coatom separates the cores of the
//! canonical one-variable formulas. Prints each core and a DOT rendering.

use chilogic::algebra::core;
use chilogic::lab::canonical_signatures;
use chilogic::HeytingAlgebra;

fn main() {
    let h = HeytingAlgebra::figure_lc();
    for sig in canonical_signatures() {
        println!("{:>8}: {}", sig.chi.to_string(), h.format_set(&core(&h, &sig)));
    }
    let em = &canonical_signatures()[4];
    println!("{}", h.to_dot(&core(&h, em)));
}
