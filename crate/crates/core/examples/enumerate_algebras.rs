//! Count finite Heyting algebras by size and list the subdirectly
//! irreducible ones of size at most six.

use chilogic::algebra::enumerate;

fn main() {
    let all = enumerate(10);
    for size in 1..=10 {
        let of_size: Vec<_> = all.iter().filter(|h| h.size() == size).collect();
        let si = of_size.iter().filter(|h| h.is_subdirectly_irreducible()).count();
        println!("size {size:>2}: {:>3} algebras, {si:>3} subdirectly irreducible", of_size.len());
    }
    for h in all.iter().filter(|h| h.size() <= 6 && h.is_subdirectly_irreducible()) {
        let covers: Vec<String> = h.covers().iter().map(|&(a, b)| format!("{}<{}", h.name(a), h.name(b))).collect();
        println!("{}", covers.join(" "));
    }
}
