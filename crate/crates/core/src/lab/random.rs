use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::{Atom, Formula, Substitution};

/// Seeded random formulas. Below the depth limit each node is a leaf or one
/// of the four connectives with equal probability; leaves are constants one
/// time in ten and otherwise a uniformly chosen atom.
pub struct FormulaGen {
    rng: ChaCha8Rng,
    atoms: Vec<Atom>,
}

impl FormulaGen {
    /// `stream` separates independent sequences drawn from one seed.
    pub fn new(seed: u64, stream: u64, atoms: &[&str]) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        FormulaGen { rng, atoms: atoms.iter().map(|a| Atom::new(a)).collect() }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn leaf(&mut self) -> Formula {
        if self.rng.gen_bool(0.1) {
            if self.rng.gen_bool(0.5) {
                Formula::Bottom
            } else {
                Formula::Top
            }
        } else {
            let i = self.rng.gen_range(0..self.atoms.len());
            Formula::Atom(self.atoms[i].clone())
        }
    }

    /// A formula of depth at most `depth`.
    pub fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 {
            return self.leaf();
        }
        match self.rng.gen_range(0..5) {
            0 => self.leaf(),
            1 => Formula::and(self.formula(depth - 1), self.formula(depth - 1)),
            2 => Formula::or(self.formula(depth - 1), self.formula(depth - 1)),
            3 => Formula::implies(self.formula(depth - 1), self.formula(depth - 1)),
            _ => Formula::not(self.formula(depth - 1)),
        }
    }

    pub fn formulas(&mut self, count: usize, depth: usize) -> Vec<Formula> {
        (0..count).map(|_| self.formula(depth)).collect()
    }

    /// Random replacements of depth at most `depth` for every atom.
    pub fn substitution(&mut self, depth: usize) -> Substitution {
        let atoms = self.atoms.clone();
        atoms.into_iter().map(|a| (a, self.formula(depth))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let a = FormulaGen::new(7, 0, &["p", "q"]).formulas(50, 4);
        let b = FormulaGen::new(7, 0, &["p", "q"]).formulas(50, 4);
        assert_eq!(a, b);
        assert!(a.iter().all(|f| f.depth() <= 4));
        assert!(a.iter().all(|f| f.atoms().iter().all(|x| x.name() == "p" || x.name() == "q")));
        let c = FormulaGen::new(7, 1, &["p", "q"]).formulas(50, 4);
        assert_ne!(a, c);
    }
}
