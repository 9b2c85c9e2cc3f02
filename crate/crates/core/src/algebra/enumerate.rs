use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::poset::{downset_algebra, posets_with_downsets_at_most};
use super::HeytingAlgebra;

/// One algebra per isomorphism class with at most `max_size` elements,
/// sorted by size and then by canonical certificate. Each algebra is laid
/// out in canonical order and carries generated element names.
pub fn enumerate(max_size: usize) -> Vec<HeytingAlgebra> {
    assert!(max_size >= 1, "max_size must be positive");
    let mut seen = HashSet::new();
    let mut out: Vec<(Vec<u8>, HeytingAlgebra)> = Vec::new();
    // finite Heyting algebras are exactly the downset lattices of finite posets
    for poset in posets_with_downsets_at_most(max_size) {
        let h = downset_algebra(&poset);
        let labeling = h.labeling();
        if seen.insert(labeling.certificate.clone()) {
            out.push((labeling.certificate, h.permuted(&labeling.order).with_default_names()));
        }
    }
    out.sort_by(|(ca, a), (cb, b)| a.size().cmp(&b.size()).then_with(|| ca.cmp(cb)));
    out.into_iter().map(|(_, h)| h).collect()
}

/// Cached [`enumerate`], shared across callers.
pub fn battery(max_size: usize) -> Arc<Vec<HeytingAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<HeytingAlgebra>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&max_size) {
        return hit.clone();
    }
    let computed = Arc::new(enumerate(max_size));
    cache.lock().expect("cache lock").entry(max_size).or_insert(computed).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_size() {
        // finite distributive lattices with n elements
        let expected = [1, 1, 1, 2, 3, 5, 8, 15, 26, 47];
        let all = enumerate(10);
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all.iter().filter(|h| h.size() == i + 1).count(), want, "size {}", i + 1);
        }
        assert_eq!(all.len(), 109);
    }

    #[test]
    fn small_bounds() {
        assert_eq!(enumerate(2).len(), 2);
        let three = enumerate(3);
        assert_eq!(three.len(), 3);
        assert!(three.iter().all(|h| h.is_chain()));
    }

    #[test]
    fn contains_figure_lc_once() {
        let fig = HeytingAlgebra::figure_lc();
        assert_eq!(enumerate(5).iter().filter(|h| h.is_isomorphic(&fig)).count(), 1);
    }

    #[test]
    fn deterministic_layout() {
        assert_eq!(enumerate(7), enumerate(7));
        for h in enumerate(6) {
            assert!(h.satisfies_residuation());
            let again = h.permuted(&h.labeling().order);
            assert_eq!(again.order_matrix(), h.order_matrix());
        }
    }
}
