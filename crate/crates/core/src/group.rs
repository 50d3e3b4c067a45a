//! Finite groups as explicit multiplication tables.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest group order accepted by default by every constructor and by
/// subgroup enumeration.
pub const DEFAULT_ORDER_CAP: usize = 64;

/// A finite group given by its full Cayley table. Element `0` is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table given row-major, checking
    /// every group axiom by full scan.
    pub fn from_table(order: usize, mul: Vec<u32>, generators: Vec<usize>, label: impl Into<String>) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::Invariant(format!(
                "table of length {} does not describe a group of order {order}",
                mul.len()
            )));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::Invariant("table entry out of range".into()));
        }
        for a in 0..order {
            if mul[a] as usize != a || mul[a * order] as usize != a {
                return Err(Error::Invariant("element 0 is not a two-sided identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            let b = (0..order).find(|&b| mul[a * order + b] == 0);
            match b {
                Some(b) if mul[b * order + a] == 0 => inv[a] = b as u32,
                _ => return Err(Error::Invariant(format!("element {a} has no two-sided inverse"))),
            }
        }
        let group = FiniteGroup {
            order,
            mul,
            inv,
            generators,
            label: label.into(),
        };
        if !group.is_associative() {
            return Err(Error::Invariant("multiplication is not associative".into()));
        }
        if group.generators.iter().any(|&g| g >= order) {
            return Err(Error::Invariant("generator index out of range".into()));
        }
        if group.closure(&group.generators).len() != order {
            return Err(Error::Invariant("generators do not generate the group".into()));
        }
        Ok(group)
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            generators: Vec::new(),
            label: "C1".into(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g a g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Raw row-major table, used for hashing.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_spectrum(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| {
            let ab = self.mul(a, b);
            (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
        }))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_set(&self) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            self.elements()
                .filter(|&a| self.generators.iter().all(|&g| self.mul(a, g) == self.mul(g, a))),
        )
    }

    /// Element conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in self.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members: Vec<usize> = self.elements().map(|g| self.conjugate(g, a)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        classes
    }

    /// Subgroup generated by `seeds`, as an element set.
    pub fn closure(&self, seeds: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        set.insert(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// Extends `current` by `extra`, reusing the already closed set.
    pub(crate) fn join_closure(&self, current: &ElementSet, gens: &[usize]) -> ElementSet {
        let mut set = current.clone();
        let mut queue: VecDeque<usize> = current.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// A small generating set of the subgroup `members`, chosen greedily: at
    /// each step the element enlarging the generated subgroup the most (ties to
    /// the smallest index).
    pub fn greedy_generators(&self, members: &ElementSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = ElementSet::from_indices(self.order, [0]);
        while current.len() < members.len() {
            let mut best: Option<(usize, usize)> = None;
            for x in members.iter().filter(|&x| !current.contains(x)) {
                let size = self.join_closure(&current, &[x]).len();
                if best.is_none_or(|(_, s)| size > s) {
                    best = Some((x, size));
                }
            }
            let (x, _) = best.expect("members strictly larger than current");
            gens.push(x);
            current = self.join_closure(&current, &gens);
        }
        gens
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Closes the given permutations under composition.
///
/// Elements are numbered breadth first from the identity, multiplying on the
/// right by the generators in the order given; element `0` is the identity.
pub fn group_from_generators(gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    let degree = gens.first().map_or(0, Permutation::degree);
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: bad.degree(),
        });
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(elements[0].clone(), 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in gens {
            let y = elements[head].then(g)?;
            if !index.contains_key(&y) {
                if elements.len() == cap {
                    return Err(Error::OrderCap {
                        reached: cap + 1,
                        cap,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        head += 1;
    }
    let order = elements.len();
    let mut mul = Vec::with_capacity(order * order);
    for a in &elements {
        for b in &elements {
            mul.push(index[&a.then(b)?] as u32);
        }
    }
    let generators = gens.iter().map(|g| index[g]).collect();
    let label = if gens.is_empty() {
        "C1".to_string()
    } else {
        let body: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        format!("gens: {}", body.join(", "))
    };
    FiniteGroup::from_table(order, mul, generators, label)
}

/// Direct product `G × H` with elements numbered lexicographically by
/// `(G-index, H-index)`, together with the two factor subgroups.
pub fn direct_product(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    cap: usize,
) -> Result<(Arc<FiniteGroup>, Subgroup, Subgroup)> {
    let (m, n) = (g.order(), h.order());
    if m * n > cap {
        return Err(Error::OrderCap { reached: m * n, cap });
    }
    let order = m * n;
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let (a1, a2) = (a / n, a % n);
            let (b1, b2) = (b / n, b % n);
            mul.push((g.mul(a1, b1) * n + h.mul(a2, b2)) as u32);
        }
    }
    let generators = g
        .generators()
        .iter()
        .map(|&x| x * n)
        .chain(h.generators().iter().copied())
        .collect();
    let label = format!("{} x {}", g.label(), h.label());
    let product = Arc::new(FiniteGroup::from_table(order, mul, generators, label)?);
    let left = Subgroup::from_set_unchecked(&product, ElementSet::from_indices(order, (0..m).map(|x| x * n)));
    let right = Subgroup::from_set_unchecked(&product, ElementSet::from_indices(order, 0..n));
    Ok((product, left, right))
}

/// A subgroup of a parent group, stored as a set of parent element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: ElementSet,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({} of {}: {:?})", self.order(), self.parent.label(), self.members)
    }
}

impl Subgroup {
    /// Validates that `members` is closed under multiplication and inverses.
    pub fn new(parent: &Arc<FiniteGroup>, members: ElementSet) -> Result<Self> {
        if members.universe() != parent.order() {
            return Err(Error::ParentMismatch);
        }
        if !members.contains(0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for a in members.iter() {
            if !members.contains(parent.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for b in members.iter() {
                if !members.contains(parent.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("product of {a} and {b} missing")));
                }
            }
        }
        Ok(Self::from_set_unchecked(parent, members))
    }

    pub(crate) fn from_set_unchecked(parent: &Arc<FiniteGroup>, members: ElementSet) -> Self {
        debug_assert_eq!(parent.order() % members.len(), 0, "Lagrange");
        Subgroup {
            parent: Arc::clone(parent),
            members,
        }
    }

    pub fn generated_by(parent: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Self> {
        if let Some(&bad) = elements.iter().find(|&&e| e >= parent.order()) {
            return Err(Error::NotSubgroup(format!("element {bad} outside the group")));
        }
        Ok(Self::from_set_unchecked(parent, parent.closure(elements)))
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_set_unchecked(parent, ElementSet::from_indices(parent.order(), [0]))
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_set_unchecked(parent, ElementSet::full(parent.order()))
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> Result<bool> {
        self.same_parent(other)?;
        Ok(self.members.is_subset(&other.members))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        Ok(Self::from_set_unchecked(&self.parent, self.members.intersection(&other.members)))
    }

    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let p = &self.parent;
        Self::from_set_unchecked(p, ElementSet::from_indices(p.order(), self.members.iter().map(|x| p.conjugate(g, x))))
    }

    pub fn is_normal(&self) -> bool {
        let p = &self.parent;
        p.generators()
            .iter()
            .all(|&g| self.members.iter().all(|x| self.members.contains(p.conjugate(g, x))))
    }

    /// `N_G(H) = {g : gHg⁻¹ = H}`.
    pub fn normalizer(&self) -> Subgroup {
        let p = &self.parent;
        let set = ElementSet::from_indices(
            p.order(),
            p.elements()
                .filter(|&g| self.members.iter().all(|x| self.members.contains(p.conjugate(g, x)))),
        );
        Self::from_set_unchecked(p, set)
    }

    /// The product set `SN`. Fails unless the set is closed, which is
    /// guaranteed when `N` is normal.
    pub fn product(&self, n: &Subgroup) -> Result<Subgroup> {
        self.same_parent(n)?;
        let p = &self.parent;
        let set = ElementSet::from_indices(
            p.order(),
            self.members
                .iter()
                .flat_map(|s| n.members.iter().map(move |x| p.mul(s, x))),
        );
        if set.len() * self.members.intersection_len(&n.members) != self.order() * n.order() {
            return Err(Error::Invariant("product set has the wrong size".into()));
        }
        if p.closure(&set.to_vec()) != set {
            return Err(Error::NotSubgroup("product set is not closed".into()));
        }
        Ok(Self::from_set_unchecked(p, set))
    }

    /// Re-roots the subgroup as a group of its own. Elements keep the relative
    /// order of their parent indices, so the identity stays at `0`. Returns the
    /// new group and the inclusion map into the parent.
    pub fn to_group(&self) -> (Arc<FiniteGroup>, GroupMap) {
        let p = &self.parent;
        let members = self.members.to_vec();
        let mut local = vec![u32::MAX; p.order()];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i as u32;
        }
        let k = members.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                mul.push(local[p.mul(a, b)]);
            }
        }
        let gens: Vec<usize> = p
            .greedy_generators(&self.members)
            .into_iter()
            .map(|g| local[g] as usize)
            .collect();
        let label = format!("[{} of {}]", k, p.label());
        let group = Arc::new(
            FiniteGroup::from_table(k, mul, gens, label).expect("a subgroup table is a group table"),
        );
        let map = GroupMap::from_parts_unchecked(&group, p, members);
        (group, map)
    }
}

/// A homomorphism between two finite groups.
#[derive(Clone)]
pub struct GroupMap {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
    kernel: Subgroup,
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupMap")
            .field("source", &self.source.label())
            .field("target", &self.target.label())
            .field("images", &self.images)
            .finish()
    }
}

impl GroupMap {
    /// Checks the homomorphism equation on every pair.
    pub fn new(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(Error::Invariant("image table has the wrong shape".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::Invariant(format!(
                        "map is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self::from_parts_unchecked(source, target, images))
    }

    pub(crate) fn from_parts_unchecked(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, images: Vec<usize>) -> Self {
        let kernel = Subgroup::from_set_unchecked(
            source,
            ElementSet::from_indices(source.order(), source.elements().filter(|&x| images[x] == 0)),
        );
        GroupMap {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
            kernel,
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_surjective(&self) -> bool {
        let image = ElementSet::from_indices(self.target.order(), self.images.iter().copied());
        image.len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    /// `f(S)`; for a projection with kernel `N` this is `SN/N`.
    pub fn image(&self, s: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(s.parent(), &self.source) {
            return Err(Error::ParentMismatch);
        }
        let set = ElementSet::from_indices(self.target.order(), s.members().iter().map(|x| self.images[x]));
        Ok(Subgroup::from_set_unchecked(&self.target, set))
    }

    /// `f⁻¹(U)`.
    pub fn preimage(&self, u: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(u.parent(), &self.target) {
            return Err(Error::ParentMismatch);
        }
        let set = ElementSet::from_indices(
            self.source.order(),
            self.source.elements().filter(|&x| u.contains(self.images[x])),
        );
        Ok(Subgroup::from_set_unchecked(&self.source, set))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::ParentMismatch);
        }
        let images = self.images.iter().map(|&y| other.images[y]).collect();
        Ok(Self::from_parts_unchecked(&self.source, &other.target, images))
    }
}

/// `G/N` with cosets numbered by their smallest element index, and the
/// projection `G → G/N`.
pub fn quotient_group(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupMap)> {
    if !Arc::ptr_eq(n.parent(), g) {
        return Err(Error::ParentMismatch);
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for m in n.members().iter() {
            coset_of[g.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut mul = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            mul.push(coset_of[g.mul(a, b)] as u32);
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    for &x in g.generators() {
        let c = coset_of[x];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let label = format!("({})/[{}]", g.label(), n.order());
    let q = Arc::new(FiniteGroup::from_table(k, mul, gens, label)?);
    let map = GroupMap::from_parts_unchecked(g, &q, coset_of);
    Ok((q, map))
}
