//! For each non-top element of a few algebras, build the subdirectly
//! irreducible quotient sending it to the second greatest element.

use chilogic::algebra::product;
use chilogic::HeytingAlgebra;

fn main() {
    let c3 = HeytingAlgebra::chain(3);
    let (grid, _) = product(&[&c3, &HeytingAlgebra::chain(2)]);
    for h in [HeytingAlgebra::diamond(), HeytingAlgebra::figure_lc(), grid] {
        println!("algebra with elements {}", h.names().join(" "));
        for b in h.elements().filter(|&b| b != h.top()) {
            let (c, hom, filter) = h.wronski_quotient(b).expect("b is not top");
            println!(
                "  {:>6}: filter {}, quotient of size {}, image {} is second greatest: {}",
                h.name(b),
                h.format_set(&filter.elements()),
                c.size(),
                c.name(hom.apply(b)),
                c.second_greatest() == Some(hom.apply(b))
            );
        }
    }
}
