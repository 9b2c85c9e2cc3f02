//! Finite posets and their lattices of downsets.

use std::collections::HashSet;

use super::{canonical_labeling, AlgebraError, HeytingAlgebra};

/// A finite partial order on `0..size()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self, AlgebraError> {
        let n = leq.len();
        for a in 0..n {
            if leq[a].len() != n {
                return Err(AlgebraError::Malformed("order matrix is not square".into()));
            }
            if !leq[a][a] {
                return Err(AlgebraError::NotAPartialOrder {
                    left: a.to_string(),
                    right: a.to_string(),
                    reason: "not reflexive",
                });
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(AlgebraError::NotAPartialOrder {
                        left: a.to_string(),
                        right: b.to_string(),
                        reason: "not antisymmetric",
                    });
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(AlgebraError::NotAPartialOrder {
                            left: a.to_string(),
                            right: c.to_string(),
                            reason: "not transitive",
                        });
                    }
                }
            }
        }
        Ok(Poset { leq })
    }

    pub fn empty() -> Self {
        Poset { leq: Vec::new() }
    }

    pub fn antichain(n: usize) -> Self {
        Poset { leq: (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect() }
    }

    pub fn chain(n: usize) -> Self {
        Poset { leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Downward-closed subsets as bitmasks, in increasing numeric order.
    /// Stops early (returning `None`) once more than `limit` are found.
    pub fn downsets_up_to(&self, limit: usize) -> Option<Vec<u64>> {
        let n = self.size();
        assert!(n < 64, "posets are limited to 63 elements");
        let below: Vec<u64> = (0..n)
            .map(|a| (0..n).filter(|&b| b != a && self.leq[b][a]).fold(0u64, |m, b| m | 1 << b))
            .collect();
        let mut out = Vec::new();
        // elements in an order where everything below `a` precedes `a`
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| below[a].count_ones());
        fn go(
            i: usize,
            set: u64,
            order: &[usize],
            below: &[u64],
            out: &mut Vec<u64>,
            limit: usize,
        ) -> bool {
            if i == order.len() {
                out.push(set);
                return out.len() <= limit;
            }
            let a = order[i];
            if !go(i + 1, set, order, below, out, limit) {
                return false;
            }
            if below[a] & !set == 0 {
                return go(i + 1, set | 1 << a, order, below, out, limit);
            }
            true
        }
        if !go(0, 0, &order, &below, &mut out, limit) {
            return None;
        }
        out.sort_unstable();
        Some(out)
    }

    pub fn downsets(&self) -> Vec<u64> {
        self.downsets_up_to(usize::MAX).expect("unbounded")
    }

    /// A new poset with one more element, placed strictly above exactly the
    /// members of `downset` (which must be downward closed).
    pub fn extend_above(&self, downset: u64) -> Poset {
        let n = self.size();
        let mut leq: Vec<Vec<bool>> = self.leq.iter().map(|row| {
            let mut r = row.clone();
            r.push(false);
            r
        }).collect();
        for (a, row) in leq.iter_mut().enumerate() {
            row[n] = downset >> a & 1 == 1;
        }
        let mut last = vec![false; n + 1];
        last[n] = true;
        leq.push(last);
        Poset { leq }
    }

    pub fn certificate(&self) -> Vec<u8> {
        canonical_labeling(self.size(), |a, b| self.leq[a][b]).certificate
    }
}

/// The lattice of downward-closed subsets of `poset` ordered by inclusion.
/// Always a Heyting algebra; the empty poset gives the one-element algebra.
pub fn downset_algebra(poset: &Poset) -> HeytingAlgebra {
    let sets = poset.downsets();
    let leq: Vec<Vec<bool>> =
        sets.iter().map(|&a| sets.iter().map(|&b| a & !b == 0).collect()).collect();
    HeytingAlgebra::from_order_named(Vec::new(), &leq).expect("downset lattices are distributive")
}

/// One representative per isomorphism class of posets whose downset
/// lattice has at most `max_downsets` elements.
pub fn posets_with_downsets_at_most(max_downsets: usize) -> Vec<Poset> {
    let mut all = Vec::new();
    let mut layer = vec![Poset::empty()];
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(Poset::empty().certificate());
    while !layer.is_empty() {
        let mut next = Vec::new();
        for poset in &layer {
            // every poset arises by adding a maximal element to a smaller one
            for d in poset.downsets() {
                let bigger = poset.extend_above(d);
                if bigger.downsets_up_to(max_downsets).is_none() {
                    continue;
                }
                if seen.insert(bigger.certificate()) {
                    next.push(bigger);
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn downset_algebra_examples() {
        assert_eq!(downset_algebra(&Poset::empty()).size(), 1);
        let two = downset_algebra(&Poset::antichain(1));
        assert_eq!(two.size(), 2);
        let diamond = downset_algebra(&Poset::antichain(2));
        assert!(diamond.is_isomorphic(&HeytingAlgebra::diamond()));
        assert!(downset_algebra(&Poset::chain(4)).is_isomorphic(&HeytingAlgebra::chain(5)));
    }

    #[test]
    fn counts_of_small_posets() {
        // posets on n points number 1, 1, 2, 5, 16; with downsets bounded by
        // 2^n + 1 nothing is cut off for n <= 3
        let posets = posets_with_downsets_at_most(9);
        let count = |n| posets.iter().filter(|p| p.size() == n).count();
        assert_eq!((count(0), count(1), count(2), count(3)), (1, 1, 2, 5));
    }

    #[test]
    fn rejects_cycles() {
        let leq = vec![vec![true, true], vec![true, true]];
        assert!(Poset::new(leq).is_err());
    }
}
