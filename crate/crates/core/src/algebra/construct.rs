//! Subalgebras, homomorphic images and products.

use super::{AlgebraError, Element, HeytingAlgebra};

/// A map between two finite algebras, checked to preserve the constants
/// and all three binary operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<Element>,
    target_size: usize,
}

impl Homomorphism {
    pub fn new(
        source: &HeytingAlgebra,
        target: &HeytingAlgebra,
        map: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        if map.len() != source.size() || map.iter().any(|&x| x >= target.size()) {
            return Err(AlgebraError::Malformed("map does not fit the two algebras".into()));
        }
        let hom = Homomorphism { map, target_size: target.size() };
        match hom.violation(source, target) {
            None => Ok(hom),
            Some(why) => Err(AlgebraError::Malformed(why)),
        }
    }

    fn violation(&self, source: &HeytingAlgebra, target: &HeytingAlgebra) -> Option<String> {
        let f = |x: Element| self.map[x];
        if f(source.bottom()) != target.bottom() {
            return Some("bottom is not preserved".into());
        }
        if f(source.top()) != target.top() {
            return Some("top is not preserved".into());
        }
        for a in source.elements() {
            for b in source.elements() {
                let ops: [(&str, Element, Element); 3] = [
                    ("meet", f(source.meet(a, b)), target.meet(f(a), f(b))),
                    ("join", f(source.join(a, b)), target.join(f(a), f(b))),
                    ("implication", f(source.imp(a, b)), target.imp(f(a), f(b))),
                ];
                for (op, lhs, rhs) in ops {
                    if lhs != rhs {
                        return Some(format!(
                            "{op} of {} and {} is not preserved",
                            source.name(a),
                            source.name(b)
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self, source: &HeytingAlgebra, target: &HeytingAlgebra) -> bool {
        self.map.len() == source.size()
            && self.target_size == target.size()
            && self.violation(source, target).is_none()
    }

    pub fn apply(&self, a: Element) -> Element {
        self.map[a]
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn image(&self, set: &[Element]) -> Vec<Element> {
        let mut out: Vec<Element> = set.iter().map(|&a| self.map[a]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        self.map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        for &x in &self.map {
            seen[x] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// An upward closed, meet closed set containing top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filter {
    members: Vec<bool>,
}

impl Filter {
    pub fn new(h: &HeytingAlgebra, members: &[Element]) -> Result<Self, AlgebraError> {
        let mut mask = vec![false; h.size()];
        for &a in members {
            if a >= h.size() {
                return Err(AlgebraError::UnknownElement(a.to_string()));
            }
            mask[a] = true;
        }
        if !mask[h.top()] {
            return Err(AlgebraError::NotAFilter("top is missing".into()));
        }
        for a in h.elements().filter(|&a| mask[a]) {
            for b in h.elements() {
                if h.leq(a, b) && !mask[b] {
                    return Err(AlgebraError::NotAFilter(format!(
                        "{} is above {} but missing",
                        h.name(b),
                        h.name(a)
                    )));
                }
                if mask[b] && !mask[h.meet(a, b)] {
                    return Err(AlgebraError::NotAFilter(format!(
                        "meet of {} and {} is missing",
                        h.name(a),
                        h.name(b)
                    )));
                }
            }
        }
        Ok(Filter { members: mask })
    }

    /// `{x : a <= x}`.
    pub fn principal(h: &HeytingAlgebra, a: Element) -> Self {
        Filter { members: h.elements().map(|x| h.leq(a, x)).collect() }
    }

    /// The least filter containing `set`.
    pub fn generated(h: &HeytingAlgebra, set: &[Element]) -> Self {
        let least = set.iter().fold(h.top(), |acc, &a| h.meet(acc, a));
        Filter::principal(h, least)
    }

    pub fn contains(&self, a: Element) -> bool {
        self.members[a]
    }

    pub fn elements(&self) -> Vec<Element> {
        (0..self.members.len()).filter(|&a| self.members[a]).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl HeytingAlgebra {
    /// All filters. In a finite algebra each one is principal, so there is
    /// exactly one per element, listed by generator.
    pub fn filters(&self) -> Vec<Filter> {
        self.elements().map(|a| Filter::principal(self, a)).collect()
    }

    /// Quotient by the congruence `a ~ b` iff `a -> b` and `b -> a` lie in
    /// `filter`. Each class is named after its greatest member; classes are
    /// ordered by their least index.
    pub fn quotient(&self, filter: &Filter) -> Result<(HeytingAlgebra, Homomorphism), AlgebraError> {
        if filter.members.len() != self.size() {
            return Err(AlgebraError::NotAFilter("filter belongs to another algebra".into()));
        }
        Filter::new(self, &filter.elements())?;
        let equiv = |a, b| filter.contains(self.imp(a, b)) && filter.contains(self.imp(b, a));
        let mut class_of = vec![usize::MAX; self.size()];
        let mut reps: Vec<Element> = Vec::new();
        for a in self.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for b in self.elements().filter(|&b| equiv(a, b)) {
                class_of[b] = id;
            }
        }
        let k = reps.len();
        let names = (0..k)
            .map(|c| {
                let members: Vec<Element> = self.elements().filter(|&x| class_of[x] == c).collect();
                let top = members
                    .iter()
                    .copied()
                    .find(|&g| members.iter().all(|&x| self.leq(x, g)))
                    .expect("congruence classes of a finite algebra have a greatest member");
                self.name(top).to_string()
            })
            .collect();
        let leq: Vec<Vec<bool>> = (0..k)
            .map(|i| (0..k).map(|j| filter.contains(self.imp(reps[i], reps[j]))).collect())
            .collect();
        let quotient = HeytingAlgebra::from_order_named(names, &leq)?;
        let hom = Homomorphism::new(self, &quotient, class_of)?;
        Ok((quotient, hom))
    }

    /// The least subuniverse containing `set`, bottom and top, with its
    /// inclusion map. Elements keep their names and relative order.
    pub fn generated_subalgebra(&self, set: &[Element]) -> (HeytingAlgebra, Homomorphism) {
        let mut inside = vec![false; self.size()];
        inside[self.bottom()] = true;
        inside[self.top()] = true;
        for &a in set {
            inside[a] = true;
        }
        loop {
            let current: Vec<Element> = self.elements().filter(|&a| inside[a]).collect();
            let mut grew = false;
            for &a in &current {
                for &b in &current {
                    for c in [self.meet(a, b), self.join(a, b), self.imp(a, b)] {
                        if !inside[c] {
                            inside[c] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                let sub = self.restrict(&current);
                let hom = Homomorphism { map: current, target_size: self.size() };
                return (sub, hom);
            }
        }
    }

    fn restrict(&self, universe: &[Element]) -> HeytingAlgebra {
        let m = universe.len();
        let mut index = vec![usize::MAX; self.size()];
        for (i, &a) in universe.iter().enumerate() {
            index[a] = i;
        }
        let mut leq = Vec::with_capacity(m * m);
        let mut meet = Vec::with_capacity(m * m);
        let mut join = Vec::with_capacity(m * m);
        let mut imp = Vec::with_capacity(m * m);
        for &a in universe {
            for &b in universe {
                leq.push(self.leq(a, b));
                meet.push(index[self.meet(a, b)]);
                join.push(index[self.join(a, b)]);
                imp.push(index[self.imp(a, b)]);
            }
        }
        let names = universe.iter().map(|&a| self.name(a).to_string()).collect();
        HeytingAlgebra::from_tables(names, leq, meet, join, imp)
    }

    /// Every subuniverse, each as an ascending element list.
    pub fn subuniverses(&self) -> Vec<Vec<Element>> {
        let free: Vec<Element> =
            self.elements().filter(|&a| a != self.bottom() && a != self.top()).collect();
        assert!(free.len() < 32, "too many elements to list subuniverses");
        let mut out = Vec::new();
        for bits in 0u32..(1 << free.len()) {
            let mut set: Vec<Element> = vec![self.bottom(), self.top()];
            set.extend(free.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &a)| a));
            set.sort_unstable();
            set.dedup();
            let closed = set.iter().all(|&a| {
                set.iter().all(|&b| {
                    [self.meet(a, b), self.join(a, b), self.imp(a, b)]
                        .iter()
                        .all(|c| set.binary_search(c).is_ok())
                })
            });
            if closed {
                out.push(set);
            }
        }
        out
    }

    /// Every subalgebra with its inclusion map.
    pub fn subalgebras(&self) -> Vec<(HeytingAlgebra, Homomorphism)> {
        self.subuniverses()
            .into_iter()
            .map(|u| (self.restrict(&u), Homomorphism { map: u, target_size: self.size() }))
            .collect()
    }

    /// All injective homomorphisms into `target`, found by backtracking.
    pub fn embeddings_into(&self, target: &HeytingAlgebra) -> Vec<Homomorphism> {
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; self.size()];
        let mut used = vec![false; target.size()];
        self.extend_embedding(target, 0, &mut map, &mut used, &mut out);
        out
    }

    fn extend_embedding(
        &self,
        target: &HeytingAlgebra,
        next: Element,
        map: &mut Vec<Element>,
        used: &mut Vec<bool>,
        out: &mut Vec<Homomorphism>,
    ) {
        if next == self.size() {
            out.push(Homomorphism { map: map.clone(), target_size: target.size() });
            return;
        }
        let candidates: Vec<Element> = if next == self.bottom() {
            vec![target.bottom()]
        } else if next == self.top() {
            vec![target.top()]
        } else {
            target.elements().collect()
        };
        for y in candidates {
            if used[y] {
                continue;
            }
            map[next] = y;
            // check every operation instance whose operands and result are
            // all assigned and which mentions the newly assigned element
            let consistent = (0..=next).all(|u| {
                (0..=next).all(|v| {
                    let (fu, fv) = (map[u], map[v]);
                    [
                        (self.meet(u, v), target.meet(fu, fv)),
                        (self.join(u, v), target.join(fu, fv)),
                        (self.imp(u, v), target.imp(fu, fv)),
                    ]
                    .iter()
                    .all(|&(r, fr)| {
                        r > next || (u != next && v != next && r != next) || map[r] == fr
                    })
                })
            });
            if consistent {
                used[y] = true;
                self.extend_embedding(target, next + 1, map, used, out);
                used[y] = false;
            }
            map[next] = usize::MAX;
        }
    }

    /// A subdirectly irreducible image in which `b` becomes the second
    /// greatest element. The kernel filter is grown greedily in ascending
    /// element order while it still excludes `b`, so it is maximal among
    /// filters avoiding `b`.
    pub fn wronski_quotient(
        &self,
        b: Element,
    ) -> Result<(HeytingAlgebra, Homomorphism, Filter), AlgebraError> {
        if b >= self.size() {
            return Err(AlgebraError::UnknownElement(b.to_string()));
        }
        if b == self.top() {
            return Err(AlgebraError::ElementIsTop);
        }
        let mut generator = self.top();
        for x in self.elements() {
            let candidate = self.meet(generator, x);
            if !self.leq(candidate, b) {
                generator = candidate;
            }
        }
        let filter = Filter::principal(self, generator);
        let (c, h) = self.quotient(&filter)?;
        Ok((c, h, filter))
    }
}

/// The componentwise product with its projections. Element names are
/// tuples such as `(a,1)`; a single factor is returned unchanged.
pub fn product(factors: &[&HeytingAlgebra]) -> (HeytingAlgebra, Vec<Homomorphism>) {
    assert!(!factors.is_empty(), "a product needs at least one factor");
    if factors.len() == 1 {
        let h = factors[0].clone();
        let id = Homomorphism { map: h.elements().collect(), target_size: h.size() };
        return (h, vec![id]);
    }
    let sizes: Vec<usize> = factors.iter().map(|h| h.size()).collect();
    let m: usize = sizes.iter().product();
    // tuple of element `i`, first factor most significant
    let decode = |mut i: usize| {
        let mut t = vec![0; sizes.len()];
        for k in (0..sizes.len()).rev() {
            t[k] = i % sizes[k];
            i /= sizes[k];
        }
        t
    };
    let encode = |t: &[Element]| t.iter().zip(&sizes).fold(0, |acc, (&x, &s)| acc * s + x);
    let tuples: Vec<Vec<Element>> = (0..m).map(decode).collect();
    let mut leq = Vec::with_capacity(m * m);
    let mut meet = Vec::with_capacity(m * m);
    let mut join = Vec::with_capacity(m * m);
    let mut imp = Vec::with_capacity(m * m);
    let combine = |a: &[Element], b: &[Element], op: &dyn Fn(&HeytingAlgebra, Element, Element) -> Element| {
        let t: Vec<Element> = factors.iter().enumerate().map(|(k, h)| op(h, a[k], b[k])).collect();
        encode(&t)
    };
    for a in &tuples {
        for b in &tuples {
            leq.push(factors.iter().enumerate().all(|(k, h)| h.leq(a[k], b[k])));
            meet.push(combine(a, b, &|h, x, y| h.meet(x, y)));
            join.push(combine(a, b, &|h, x, y| h.join(x, y)));
            imp.push(combine(a, b, &|h, x, y| h.imp(x, y)));
        }
    }
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = factors.iter().enumerate().map(|(k, h)| h.name(t[k])).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let prod = HeytingAlgebra::from_tables(names, leq, meet, join, imp);
    let projections = (0..factors.len())
        .map(|k| Homomorphism { map: tuples.iter().map(|t| t[k]).collect(), target_size: sizes[k] })
        .collect();
    (prod, projections)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let c2 = HeytingAlgebra::chain(2);
        let c3 = HeytingAlgebra::chain(3);
        let (d, proj) = product(&[&c2, &c2]);
        assert!(d.is_isomorphic(&HeytingAlgebra::diamond()));
        assert!(proj.iter().all(|p| p.is_homomorphism(&d, &c2) && p.is_surjective()));
        let (grid, _) = product(&[&c2, &c3]);
        assert_eq!(grid.size(), 6);
        assert!(grid.satisfies_residuation());
        let (same, _) = product(&[&c3, &HeytingAlgebra::chain(1)]);
        assert!(same.is_isomorphic(&c3));
    }

    #[test]
    fn quotients() {
        let c3 = HeytingAlgebra::chain(3);
        let m = c3.element("m").unwrap();
        let (q, h) = c3.quotient(&Filter::principal(&c3, m)).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(h.apply(m), h.apply(c3.top()));
        let (same, _) = c3.quotient(&Filter::principal(&c3, c3.top())).unwrap();
        assert!(same.is_isomorphic(&c3));
        let (one, _) = c3.quotient(&Filter::principal(&c3, c3.bottom())).unwrap();
        assert_eq!(one.size(), 1);
    }

    #[test]
    fn filter_validation() {
        let c3 = HeytingAlgebra::chain(3);
        assert!(matches!(Filter::new(&c3, &[0]), Err(AlgebraError::NotAFilter(_))));
        assert!(matches!(Filter::new(&c3, &[1]), Err(AlgebraError::NotAFilter(_))));
        assert!(Filter::new(&c3, &[1, 2]).is_ok());
        assert_eq!(c3.filters().len(), 3);
    }

    #[test]
    fn generated_subalgebras() {
        let h = HeytingAlgebra::figure_lc();
        let e = |n| h.element(n).unwrap();
        let (two, _) = h.generated_subalgebra(&[]);
        assert_eq!(two.size(), 2);
        let (sub, inc) = h.generated_subalgebra(&[e("s"), e("1")]);
        assert_eq!(h.format_set(inc.map()), "{0, s, 1}");
        assert!(inc.is_homomorphism(&sub, &h) && inc.is_injective());
        let (all, _) = h.generated_subalgebra(&[e("0"), e("a"), e("b"), e("1")]);
        assert_eq!(all.size(), 5);
    }

    #[test]
    fn embeddings() {
        let c2 = HeytingAlgebra::chain(2);
        let c3 = HeytingAlgebra::chain(3);
        let d = HeytingAlgebra::diamond();
        let maps = c2.embeddings_into(&d);
        assert_eq!(maps.len(), 1);
        assert!(c3.embeddings_into(&d).is_empty());
        let h = HeytingAlgebra::figure_lc();
        let own = h.embeddings_into(&h);
        assert!(own.iter().any(|f| f.map() == (0..5).collect::<Vec<_>>().as_slice()));
        assert!(own.iter().all(|f| f.is_homomorphism(&h, &h)));
    }

    #[test]
    fn wronski_quotients() {
        let c3 = HeytingAlgebra::chain(3);
        let m = c3.element("m").unwrap();
        let (c, h, _) = c3.wronski_quotient(m).unwrap();
        assert!(c.is_isomorphic(&c3));
        assert_eq!(Some(h.apply(m)), c.second_greatest());

        let d = HeytingAlgebra::diamond();
        let x = d.element("x").unwrap();
        let (c, h, f) = d.wronski_quotient(x).unwrap();
        assert_eq!(d.format_set(&f.elements()), "{y, 1}");
        assert_eq!(c.size(), 2);
        assert_eq!(Some(h.apply(x)), c.second_greatest());
        assert_eq!(d.wronski_quotient(d.top()).unwrap_err(), AlgebraError::ElementIsTop);
    }

    #[test]
    fn subuniverses_of_figure_lc() {
        let h = HeytingAlgebra::figure_lc();
        let subs: Vec<String> = h.subuniverses().iter().map(|s| h.format_set(s)).collect();
        assert!(subs.contains(&"{0, 1}".to_string()));
        assert!(subs.contains(&"{0, s, 1}".to_string()));
        assert!(!subs.contains(&"{0, a, 1}".to_string()));
    }
}
