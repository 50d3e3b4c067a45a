//! Isomorphism testing by backtracking over images of a generating set.

use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::group::{FiniteGroup, GroupMap};

#[derive(PartialEq, Eq, Debug)]
struct Fingerprint {
    order: usize,
    spectrum: Vec<usize>,
    class_sizes: Vec<usize>,
    center: usize,
}

fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    Fingerprint {
        order: g.order(),
        spectrum: g.order_spectrum(),
        class_sizes,
        center: g.center_set().len(),
    }
}

/// Per-element invariant preserved by any isomorphism: (element order, class size).
fn element_keys(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut keys = vec![(0, 0); g.order()];
    for class in g.conjugacy_classes() {
        for &x in &class {
            keys[x] = (g.element_order(x), class.len());
        }
    }
    keys
}

/// Returns an isomorphism `g → h` if one exists.
pub fn are_isomorphic(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Option<GroupMap> {
    find_isomorphism(g, h, None)
}

/// Searches for an isomorphism `g → h`, optionally required to carry the
/// subset `from` of `g` exactly onto the subset `to` of `h`.
pub(crate) fn find_isomorphism(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    constraint: Option<(&ElementSet, &ElementSet)>,
) -> Option<GroupMap> {
    if let Some((from, to)) = constraint {
        if from.len() != to.len() {
            return None;
        }
        let mut a: Vec<usize> = from.iter().map(|x| g.element_order(x)).collect();
        let mut b: Vec<usize> = to.iter().map(|x| h.element_order(x)).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return None;
    }
    let gens = g.greedy_generators(&ElementSet::full(g.order()));
    let gkeys = element_keys(g);
    let hkeys = element_keys(h);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            h.elements()
                .filter(|&y| hkeys[y] == gkeys[x])
                .filter(|&y| constraint.is_none_or(|(from, to)| from.contains(x) == to.contains(y)))
                .collect()
        })
        .collect();
    let mut search = Search {
        g,
        h,
        gens: &gens,
        candidates: &candidates,
        constraint,
        chosen: Vec::with_capacity(gens.len()),
    };
    let images = search.run()?;
    Some(GroupMap::from_parts_unchecked(g, h, images))
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    constraint: Option<(&'a ElementSet, &'a ElementSet)>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<Vec<usize>> {
        let level = self.chosen.len();
        if level == self.gens.len() {
            return self.extend();
        }
        for &y in &self.candidates[level] {
            self.chosen.push(y);
            if let Some(map) = self.extend() {
                if level + 1 == self.gens.len() {
                    return Some(map);
                }
                if let Some(full) = self.run() {
                    return Some(full);
                }
            }
            self.chosen.pop();
        }
        None
    }

    /// Extends the current generator assignment along the Cayley graph of
    /// the subgroup it generates; `None` on any inconsistency.
    fn extend(&self) -> Option<Vec<usize>> {
        let (g, h) = (self.g, self.h);
        let mut map = vec![usize::MAX; g.order()];
        let mut hit = vec![false; h.order()];
        map[0] = 0;
        hit[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&s, &t) in self.gens.iter().zip(&self.chosen) {
                let xs = g.mul(x, s);
                let image = h.mul(map[x], t);
                if map[xs] == usize::MAX {
                    if hit[image] {
                        return None;
                    }
                    if let Some((from, to)) = self.constraint {
                        if from.contains(xs) != to.contains(image) {
                            return None;
                        }
                    }
                    map[xs] = image;
                    hit[image] = true;
                    queue.push(xs);
                } else if map[xs] != image {
                    return None;
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin;
    use crate::group::{direct_product, GroupMap};

    fn grp(name: &str) -> Arc<FiniteGroup> {
        Arc::new(builtin(name, 64).unwrap())
    }

    fn assert_homomorphism(map: &GroupMap) {
        let (s, t) = (map.source(), map.target());
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(map.apply(s.mul(a, b)), t.mul(map.apply(a), map.apply(b)));
            }
        }
        assert!(map.is_injective() && map.is_surjective());
    }

    #[test]
    fn c4_is_not_klein() {
        assert!(are_isomorphic(&grp("C4"), &grp("E2^2")).is_none());
        assert!(are_isomorphic(&grp("D4"), &grp("E2^2")).is_some());
    }

    #[test]
    fn self_isomorphism_is_found() {
        for name in ["C1", "S3", "D8", "Q8", "A4", "S4", "D12"] {
            let g = grp(name);
            let map = are_isomorphic(&g, &g).unwrap();
            assert_homomorphism(&map);
        }
    }

    #[test]
    fn product_realizations_agree() {
        let c2 = grp("C2");
        let c3 = grp("C3");
        let (p, _, _) = direct_product(&c2, &c3, 64).unwrap();
        let map = are_isomorphic(&p, &grp("C6")).unwrap();
        assert_homomorphism(&map);
        assert!(are_isomorphic(&grp("S3"), &grp("C6")).is_none());
        assert!(are_isomorphic(&grp("D8"), &grp("Q8")).is_none());
        assert!(are_isomorphic(&grp("S3"), &grp("D6")).is_some());
    }
}
