//! Canonical labeling of finite partial orders.
//!
//! Elements are first split into classes by iterated refinement of
//! (down-degree, up-degree) and the multisets of neighbouring classes. The
//! labeling is then the class-respecting ordering whose order matrix,
//! read position by position, is lexicographically least; it is found by
//! backtracking with prefix pruning.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    /// `order[i]` is the original element placed at position `i`.
    pub order: Vec<usize>,
    /// Identical for two orders iff they are isomorphic.
    pub certificate: Vec<u8>,
}

pub fn canonical_labeling(n: usize, leq: impl Fn(usize, usize) -> bool) -> Labeling {
    let rel: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect();
    let colors = refine(&rel);

    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&e| colors[e]);
    let slot_color: Vec<usize> = slots.iter().map(|&e| colors[e]).collect();

    let mut search = Search {
        rel: &rel,
        colors: &colors,
        slot_color: &slot_color,
        best: None,
        current: Vec::with_capacity(n),
        bits: Vec::with_capacity(n * n),
        used: vec![false; n],
    };
    search.run();
    let (certificate, order) = search.best.unwrap_or_default();
    let mut cert = Vec::with_capacity(certificate.len() + n + 1);
    cert.push(n as u8);
    cert.extend(slot_color.iter().map(|&c| c as u8));
    cert.extend(certificate);
    Labeling { order, certificate: cert }
}

fn refine(rel: &[Vec<bool>]) -> Vec<usize> {
    let n = rel.len();
    let below = |a: usize| (0..n).filter(|&b| b != a && rel[b][a]).count();
    let above = |a: usize| (0..n).filter(|&b| b != a && rel[a][b]).count();
    let mut colors = recolor((0..n).map(|a| (below(a), above(a), Vec::<usize>::new(), Vec::<usize>::new())).collect());
    loop {
        let sigs = (0..n)
            .map(|a| {
                let mut lower: Vec<usize> =
                    (0..n).filter(|&b| b != a && rel[b][a]).map(|b| colors[b]).collect();
                let mut upper: Vec<usize> =
                    (0..n).filter(|&b| b != a && rel[a][b]).map(|b| colors[b]).collect();
                lower.sort_unstable();
                upper.sort_unstable();
                (colors[a], 0, lower, upper)
            })
            .collect();
        let next = recolor(sigs);
        let classes = |c: &Vec<usize>| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn recolor<K: Ord + Clone>(sigs: Vec<K>) -> Vec<usize> {
    let mut ids = BTreeMap::new();
    for s in &sigs {
        ids.entry(s.clone()).or_insert(0);
    }
    for (i, v) in ids.values_mut().enumerate() {
        *v = i;
    }
    sigs.iter().map(|s| ids[s]).collect()
}

struct Search<'a> {
    rel: &'a [Vec<bool>],
    colors: &'a [usize],
    slot_color: &'a [usize],
    best: Option<(Vec<u8>, Vec<usize>)>,
    current: Vec<usize>,
    bits: Vec<u8>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn prefix_exceeds_best(&self) -> bool {
        match &self.best {
            Some((best, _)) => self.bits[..] > best[..self.bits.len()],
            None => false,
        }
    }

    fn run(&mut self) {
        let k = self.current.len();
        let n = self.rel.len();
        if k == n {
            let better = match &self.best {
                Some((best, _)) => self.bits < *best,
                None => true,
            };
            if better {
                self.best = Some((self.bits.clone(), self.current.clone()));
            }
            return;
        }
        for x in 0..n {
            if self.used[x] || self.colors[x] != self.slot_color[k] {
                continue;
            }
            let start = self.bits.len();
            for j in 0..k {
                let y = self.current[j];
                self.bits.push(self.rel[x][y] as u8);
                self.bits.push(self.rel[y][x] as u8);
            }
            if !self.prefix_exceeds_best() {
                self.used[x] = true;
                self.current.push(x);
                self.run();
                self.current.pop();
                self.used[x] = false;
            }
            self.bits.truncate(start);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(rel: &[Vec<bool>], perm: &[usize]) -> Vec<Vec<bool>> {
        let n = rel.len();
        let mut out = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                out[perm[a]][perm[b]] = rel[a][b];
            }
        }
        out
    }

    #[test]
    fn invariant_under_relabeling() {
        // 0 < 1, 0 < 2, 1 < 3, 2 < 3, 3 < 4 plus a loose element 5 above 0
        let mut rel = vec![vec![false; 6]; 6];
        for (a, b) in [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (0, 5)] {
            rel[a][b] = true;
        }
        for a in 0..6 {
            rel[a][a] = true;
        }
        for k in 0..6 {
            for i in 0..6 {
                for j in 0..6 {
                    if rel[i][k] && rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        let base = canonical_labeling(6, |a, b| rel[a][b]);
        for perm in [[5, 4, 3, 2, 1, 0], [1, 0, 3, 2, 5, 4], [2, 3, 4, 5, 0, 1]] {
            let other = relabel(&rel, &perm);
            let l = canonical_labeling(6, |a, b| other[a][b]);
            assert_eq!(l.certificate, base.certificate);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic_orders() {
        let chain = canonical_labeling(3, |a, b| a <= b);
        let vee = canonical_labeling(3, |a, b| a == b || a == 0);
        assert_ne!(chain.certificate, vee.certificate);
    }
}
