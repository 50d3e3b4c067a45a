//! The lattice of all subgroups of a finite group and its Möbius function.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{quotient_group, FiniteGroup, GroupMap, Subgroup};
use crate::slice::SliceClasses;

/// Every subgroup of a group, sorted by `(order, member set)`, with the
/// inclusion relation and the partition into conjugacy classes.
///
/// Index `0` is the trivial subgroup and the last index is the whole group.
/// Möbius values, normalizers, quotients and re-rooted sublattices are
/// computed on first use and cached; all caches are thread safe.
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<ElementSet, usize>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// For each generator of the group, the induced permutation of subgroup indices.
    conjugation: Vec<Vec<usize>>,
    mobius: Vec<OnceLock<Vec<(u32, i64)>>>,
    normalizers: Vec<OnceLock<usize>>,
    quotients: Vec<OnceLock<Arc<Quotient>>>,
    rooted: Vec<OnceLock<Arc<RootedSubgroup>>>,
    slices: OnceLock<Arc<SliceClasses>>,
}

impl fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.label())
            .field("subgroups", &self.subgroups.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl SubgroupLattice {
    /// Enumerates all subgroups: cyclic subgroups first, then joins with
    /// cyclic subgroups until nothing new appears.
    pub fn build(group: &Arc<FiniteGroup>, cap: usize) -> Result<Self> {
        if group.order() > cap {
            return Err(Error::OrderCap {
                reached: group.order(),
                cap,
            });
        }
        let mut found: HashMap<ElementSet, Vec<usize>> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut cyclic_gens = Vec::new();
        for x in group.elements() {
            let set = group.closure(&[x]);
            if !found.contains_key(&set) {
                if x != 0 {
                    cyclic_gens.push(x);
                }
                found.insert(set.clone(), if x == 0 { vec![] } else { vec![x] });
                queue.push_back(set);
            }
        }
        while let Some(set) = queue.pop_front() {
            let gens = found[&set].clone();
            for &c in &cyclic_gens {
                if set.contains(c) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(c);
                let joined = group.join_closure(&set, &joined_gens);
                if !found.contains_key(&joined) {
                    found.insert(joined.clone(), joined_gens);
                    queue.push_back(joined);
                }
            }
        }
        Ok(Self::assemble(group, found.into_keys().collect()))
    }

    /// Rebuilds a lattice from a stored list of member sets, validating each.
    pub fn from_subgroup_sets(group: &Arc<FiniteGroup>, sets: Vec<ElementSet>) -> Result<Self> {
        for s in &sets {
            Subgroup::new(group, s.clone())?;
        }
        let mut sorted = sets.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != sets.len()
            || sorted.first().map(ElementSet::len) != Some(1)
            || sorted.last().map(ElementSet::len) != Some(group.order())
        {
            return Err(Error::Invariant("stored subgroup list is malformed".into()));
        }
        Ok(Self::assemble(group, sets))
    }

    fn assemble(group: &Arc<FiniteGroup>, mut sets: Vec<ElementSet>) -> Self {
        sets.sort();
        let n = sets.len();
        let lookup: HashMap<ElementSet, usize> = sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut up = vec![ElementSet::empty(n); n];
        let mut down = vec![ElementSet::empty(n); n];
        for i in 0..n {
            for j in i..n {
                if sets[i].is_subset(&sets[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let conjugation: Vec<Vec<usize>> = group
            .generators()
            .iter()
            .map(|&g| {
                sets.iter()
                    .map(|s| {
                        let image = ElementSet::from_indices(group.order(), s.iter().map(|x| group.conjugate(g, x)));
                        lookup[&image]
                    })
                    .collect()
            })
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let h = members[head];
                head += 1;
                for perm in &conjugation {
                    let k = perm[h];
                    if class_of[k] == usize::MAX {
                        class_of[k] = id;
                        members.push(k);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let subgroups = sets
            .into_iter()
            .map(|s| Subgroup::from_set_unchecked(group, s))
            .collect();
        SubgroupLattice {
            group: Arc::clone(group),
            subgroups,
            lookup,
            up,
            down,
            classes,
            class_of,
            conjugation,
            mobius: (0..n).map(|_| OnceLock::new()).collect(),
            normalizers: (0..n).map(|_| OnceLock::new()).collect(),
            quotients: (0..n).map(|_| OnceLock::new()).collect(),
            rooted: (0..n).map(|_| OnceLock::new()).collect(),
            slices: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.subgroups[i].order()
    }

    pub fn members(&self, i: usize) -> &ElementSet {
        self.subgroups[i].members()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn index_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    pub fn index_of(&self, s: &Subgroup) -> Result<usize> {
        if !Arc::ptr_eq(s.parent(), &self.group) {
            return Err(Error::ParentMismatch);
        }
        self.index_of_set(s.members())
            .ok_or_else(|| Error::Invariant("subgroup missing from the lattice".into()))
    }

    #[inline]
    pub fn is_leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Indices of subgroups containing `i`.
    pub fn above(&self, i: usize) -> &ElementSet {
        &self.up[i]
    }

    /// Indices of subgroups contained in `i`.
    pub fn below(&self, i: usize) -> &ElementSet {
        &self.down[i]
    }

    /// All `Z` with `x ≤ Z ≤ y`, in lattice order.
    pub fn interval(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        self.check_leq(x, y)?;
        Ok(self.up[x].intersection(&self.down[y]).to_vec())
    }

    fn check_leq(&self, x: usize, y: usize) -> Result<()> {
        if x < self.len() && y < self.len() && self.is_leq(x, y) {
            Ok(())
        } else {
            Err(Error::NotContained { lower: x, upper: y })
        }
    }

    pub fn intersection(&self, i: usize, j: usize) -> usize {
        self.lookup[&self.members(i).intersection(self.members(j))]
    }

    /// Order of the product set `H_i H_j`.
    pub fn product_order(&self, i: usize, j: usize) -> usize {
        self.order_of(i) * self.order_of(j) / self.members(i).intersection_len(self.members(j))
    }

    /// Whether `H_i H_j` is the whole group.
    pub fn product_is_whole(&self, i: usize, j: usize) -> bool {
        self.product_order(i, j) == self.group.order()
    }

    /// Index of `H_i H_n`; requires `H_n` normal.
    pub fn product(&self, i: usize, n: usize) -> Result<usize> {
        let p = self.subgroups[i].product(&self.subgroups[n])?;
        self.index_of(&p)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Representative (smallest index) of the conjugacy class of `i`.
    pub fn class_rep(&self, i: usize) -> usize {
        self.classes[self.class_of[i]][0]
    }

    pub fn conjugation_action(&self) -> &[Vec<usize>] {
        &self.conjugation
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.classes[self.class_of[i]].len() == 1
    }

    /// Normal subgroups in lattice order.
    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_normal(i)).collect()
    }

    /// Index of `N_G(H_i)`.
    pub fn normalizer(&self, i: usize) -> usize {
        *self.normalizers[i].get_or_init(|| self.lookup[self.subgroups[i].normalizer().members()])
    }

    /// `μ(x, y)`; fails unless `x ≤ y`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        self.check_leq(x, y)?;
        Ok(self.mobius_unchecked(x, y))
    }

    pub(crate) fn mobius_unchecked(&self, x: usize, y: usize) -> i64 {
        let column = self.mobius_column(y);
        let pos = column
            .binary_search_by_key(&(x as u32), |&(i, _)| i)
            .expect("x lies below y");
        column[pos].1
    }

    /// `μ(X, y)` for every `X ≤ y`, keyed by subgroup index.
    ///
    /// Filled from the top: `μ(y, y) = 1` and `μ(X, y) = −Σ μ(Z, y)` over
    /// `X < Z ≤ y`.
    pub fn mobius_column(&self, y: usize) -> &[(u32, i64)] {
        self.mobius[y].get_or_init(|| {
            let below: Vec<usize> = self.down[y].to_vec();
            let mut value = vec![0i64; self.len()];
            for &x in below.iter().rev() {
                value[x] = if x == y {
                    1
                } else {
                    -below
                        .iter()
                        .filter(|&&z| z > x && self.is_leq(x, z))
                        .map(|&z| value[z])
                        .sum::<i64>()
                };
            }
            below.into_iter().map(|x| (x as u32, value[x])).collect()
        })
    }

    /// Installs a precomputed top column `μ(·, G)`, e.g. loaded from a cache.
    /// Ignored if the column is already known.
    pub fn seed_top_mobius(&self, values: Vec<i64>) -> Result<()> {
        let top = self.top();
        if values.len() != self.len() {
            return Err(Error::Invariant("Möbius column has the wrong length".into()));
        }
        let column = values.into_iter().enumerate().map(|(i, v)| (i as u32, v)).collect();
        let _ = self.mobius[top].set(column);
        Ok(())
    }

    /// `G/H_n` with its own lattice; cached per normal subgroup.
    pub fn quotient(&self, n: usize) -> Result<Arc<Quotient>> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        if let Some(q) = self.quotients[n].get() {
            return Ok(Arc::clone(q));
        }
        let q = Arc::new(Quotient::new(self, n)?);
        Ok(Arc::clone(self.quotients[n].get_or_init(|| q)))
    }

    /// Conjugacy classes of slices `(T, S)` of the group; cached.
    pub fn slice_classes(&self) -> Arc<SliceClasses> {
        Arc::clone(self.slices.get_or_init(|| Arc::new(SliceClasses::new(self))))
    }

    /// `H_i` as a group of its own with its own lattice; cached.
    pub fn rooted(&self, i: usize) -> Arc<RootedSubgroup> {
        Arc::clone(self.rooted[i].get_or_init(|| Arc::new(RootedSubgroup::new(self, i))))
    }
}

/// A quotient `G/N` together with the projection and the image of every
/// subgroup of `G` in the lattice of `G/N`.
pub struct Quotient {
    kernel: usize,
    projection: GroupMap,
    lattice: Arc<SubgroupLattice>,
    image: Vec<usize>,
}

impl Quotient {
    fn new(parent: &SubgroupLattice, n: usize) -> Result<Self> {
        let (q, projection) = quotient_group(&parent.group, parent.subgroup(n))?;
        let lattice = Arc::new(SubgroupLattice::build(&q, usize::MAX)?);
        let image = parent
            .subgroups
            .iter()
            .map(|s| {
                let img = projection.image(s).expect("same parent");
                lattice.index_of(&img)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quotient {
            kernel: n,
            projection,
            lattice,
            image,
        })
    }

    pub fn kernel(&self) -> usize {
        self.kernel
    }

    pub fn projection(&self) -> &GroupMap {
        &self.projection
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.lattice.group()
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    /// Index in the quotient lattice of `H_i N / N`.
    pub fn image_of(&self, i: usize) -> usize {
        self.image[i]
    }
}

/// A subgroup re-rooted as a group of its own.
pub struct RootedSubgroup {
    parent_index: usize,
    inclusion: GroupMap,
    lattice: Arc<SubgroupLattice>,
    local_element: Vec<u32>,
}

impl RootedSubgroup {
    fn new(parent: &SubgroupLattice, i: usize) -> Self {
        let (group, inclusion) = parent.subgroup(i).to_group();
        let lattice = Arc::new(SubgroupLattice::build(&group, usize::MAX).expect("no cap"));
        let mut local_element = vec![u32::MAX; parent.group.order()];
        for (k, &x) in inclusion.images().iter().enumerate() {
            local_element[x] = k as u32;
        }
        RootedSubgroup {
            parent_index: i,
            inclusion,
            lattice,
            local_element,
        }
    }

    pub fn parent_index(&self) -> usize {
        self.parent_index
    }

    pub fn inclusion(&self) -> &GroupMap {
        &self.inclusion
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    /// Local lattice index of a parent subgroup contained in this one.
    pub fn local_index(&self, parent: &SubgroupLattice, j: usize) -> Option<usize> {
        let members = parent.members(j);
        if members.iter().any(|x| self.local_element[x] == u32::MAX) {
            return None;
        }
        let local = ElementSet::from_indices(
            self.lattice.group().order(),
            members.iter().map(|x| self.local_element[x] as usize),
        );
        self.lattice.index_of_set(&local)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin;

    fn lattice(name: &str) -> SubgroupLattice {
        let g = Arc::new(builtin(name, 64).unwrap());
        SubgroupLattice::build(&g, 64).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lattice("C1").len(), 1);
        assert_eq!(lattice("C2").len(), 2);
        assert_eq!(lattice("E2^2").len(), 5);
        assert_eq!(lattice("S3").len(), 6);
        assert_eq!(lattice("D8").len(), 10);
        assert_eq!(lattice("S4").len(), 30);
    }

    #[test]
    fn mobius_spot_values() {
        let s3 = lattice("S3");
        assert_eq!(s3.mobius(0, s3.top()).unwrap(), 3);
        let c4 = lattice("C4");
        assert_eq!(c4.mobius(0, c4.top()).unwrap(), 0);
        let v4 = lattice("E2^2");
        assert_eq!(v4.mobius(0, v4.top()).unwrap(), 2);
        assert_eq!(v4.mobius(2, 2).unwrap(), 1);
        assert!(matches!(v4.mobius(1, 2), Err(Error::NotContained { .. })));
    }

    #[test]
    fn conjugacy_classes_of_subgroups() {
        let s3 = lattice("S3");
        let sizes: Vec<usize> = s3.classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 1, 1]);
        assert_eq!(lattice("D8").classes().len(), 8);
        assert!(lattice("C6").classes().iter().all(|c| c.len() == 1));
        assert_eq!(s3.normal_subgroups().len(), 3);
    }

    #[test]
    fn intervals_and_normalizers() {
        let s3 = lattice("S3");
        let c2 = s3.classes()[1][0];
        assert_eq!(s3.interval(c2, s3.top()).unwrap(), vec![c2, s3.top()]);
        assert_eq!(s3.interval(c2, c2).unwrap(), vec![c2]);
        assert_eq!(s3.interval(0, s3.top()).unwrap().len(), 6);
        assert_eq!(s3.order_of(s3.normalizer(c2)), 2);
        let d8 = lattice("D8");
        let g = d8.group();
        let b = g.generators()[0];
        let idx = d8.index_of(&Subgroup::generated_by(g, &[b]).unwrap()).unwrap();
        assert_eq!(d8.order_of(d8.normalizer(idx)), 4);
    }

    #[test]
    fn cached_sets_rebuild_the_same_lattice() {
        let a = lattice("D12");
        let sets = a.subgroups().iter().rev().map(|s| s.members().clone()).collect();
        let b = SubgroupLattice::from_subgroup_sets(a.group(), sets).unwrap();
        assert!(a.subgroups().iter().zip(b.subgroups()).all(|(x, y)| x == y));
        assert_eq!(a.classes(), b.classes());
    }

    #[test]
    fn quotient_images_follow_noether() {
        let l = lattice("D8");
        for n in l.normal_subgroups() {
            let q = l.quotient(n).unwrap();
            for s in 0..l.len() {
                assert_eq!(q.lattice().order_of(q.image_of(s)), l.product_order(s, n) / l.order_of(n));
            }
        }
    }

    #[test]
    fn rooted_subgroup_lattice() {
        let l = lattice("S4");
        let top = l.top();
        let a4 = (0..l.len()).find(|&i| l.order_of(i) == 12).unwrap();
        let r = l.rooted(a4);
        assert_eq!(r.lattice().len(), 10);
        assert_eq!(r.local_index(&l, 0), Some(0));
        assert_eq!(r.local_index(&l, a4), Some(r.lattice().top()));
        assert_eq!(r.local_index(&l, top), None);
    }
}
