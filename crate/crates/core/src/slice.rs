//! Slices `(T, S)`, the idempotents `ξ_{T,S}^G` of the rational slice Burnside
//! algebra, the constants `m_{G,S,N}` and `m°_{G,S,N}`, T- and T°-slices, and
//! the largest quotient T°-slice `τ°(G, S)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::bitset::ElementSet;
use crate::burnside::{m_constant, maximal_elements};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap, Subgroup};
use crate::iso::find_isomorphism;
use crate::lattice::{Quotient, SubgroupLattice};
use crate::scalar::Scalar;
use crate::Rational;

/// A pair of subgroups `S ≤ T` of an ambient group.
#[derive(Clone, PartialEq, Eq)]
pub struct Slice {
    top: Subgroup,
    bottom: Subgroup,
}

impl fmt::Debug for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Slice({} ≥ {} in {})",
            self.top.order(),
            self.bottom.order(),
            self.top.parent().label()
        )
    }
}

impl Slice {
    pub fn new(top: Subgroup, bottom: Subgroup) -> Result<Self> {
        if !bottom.is_subgroup_of(&top)? {
            return Err(Error::Invariant("slice bottom is not contained in its top".into()));
        }
        Ok(Slice { top, bottom })
    }

    /// The slice `(G, S)`.
    pub fn of_group(bottom: Subgroup) -> Self {
        Slice {
            top: Subgroup::whole(bottom.parent()),
            bottom,
        }
    }

    /// The slice `(H_t, H_s)` of a lattice.
    pub fn in_lattice(lattice: &SubgroupLattice, t: usize, s: usize) -> Result<Self> {
        Self::new(lattice.subgroup(t).clone(), lattice.subgroup(s).clone())
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        self.top.parent()
    }

    pub fn top(&self) -> &Subgroup {
        &self.top
    }

    pub fn bottom(&self) -> &Subgroup {
        &self.bottom
    }

    /// `T` as a group of its own together with `S` in that numbering.
    pub fn rooted(&self) -> (Arc<FiniteGroup>, ElementSet) {
        if self.top.is_whole() {
            return (Arc::clone(self.ambient()), self.bottom.members().clone());
        }
        let (group, inclusion) = self.top.to_group();
        let local = ElementSet::from_indices(
            group.order(),
            group.elements().filter(|&x| self.bottom.contains(inclusion.apply(x))),
        );
        (group, local)
    }
}

/// The conjugacy classes of slices of a group under simultaneous conjugation.
///
/// Slices are pairs of lattice indices `(t, s)` with `H_s ≤ H_t`. Each class is
/// listed with its representative first; the representative minimizes
/// `(|T|, |S|, T, S)` and classes are sorted by representative.
#[derive(Debug)]
pub struct SliceClasses {
    classes: Vec<Vec<(usize, usize)>>,
    lookup: HashMap<(usize, usize), usize>,
}

impl SliceClasses {
    pub fn new(lattice: &SubgroupLattice) -> Self {
        let key = |&(t, s): &(usize, usize)| (lattice.order_of(t), lattice.order_of(s), t, s);
        let mut pairs: Vec<(usize, usize)> = (0..lattice.len())
            .flat_map(|t| lattice.below(t).iter().map(move |s| (t, s)))
            .collect();
        pairs.sort_by_key(key);
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
        for &start in &pairs {
            if seen.contains_key(&start) {
                continue;
            }
            let id = classes.len();
            let mut orbit = vec![start];
            seen.insert(start, id);
            let mut head = 0;
            while head < orbit.len() {
                let (t, s) = orbit[head];
                head += 1;
                for perm in lattice.conjugation_action() {
                    let image = (perm[t], perm[s]);
                    if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(image) {
                        e.insert(id);
                        orbit.push(image);
                    }
                }
            }
            orbit.sort_by_key(key);
            classes.push(orbit);
        }
        SliceClasses {
            classes,
            lookup: seen,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<(usize, usize)>] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.classes[class][0]
    }

    pub fn class_of(&self, t: usize, s: usize) -> Option<usize> {
        self.lookup.get(&(t, s)).copied()
    }
}

/// A linear combination of basis elements `⟨V, U⟩_G`, keyed by slice class.
#[derive(Clone)]
pub struct SliceBurnsideElement<F = Rational> {
    lattice: Arc<SubgroupLattice>,
    classes: Arc<SliceClasses>,
    coeffs: BTreeMap<usize, F>,
}

impl<F: Scalar> SliceBurnsideElement<F> {
    pub fn zero(lattice: &Arc<SubgroupLattice>) -> Self {
        SliceBurnsideElement {
            lattice: Arc::clone(lattice),
            classes: lattice.slice_classes(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `⟨H_t, H_s⟩_G`.
    pub fn basis(lattice: &Arc<SubgroupLattice>, t: usize, s: usize) -> Result<Self> {
        let mut x = Self::zero(lattice);
        let class = x.class_of(t, s)?;
        x.add_term(class, F::one());
        Ok(x)
    }

    fn class_of(&self, t: usize, s: usize) -> Result<usize> {
        self.classes
            .class_of(t, s)
            .ok_or(Error::NotContained { lower: s, upper: t })
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    fn add_term(&mut self, class: usize, c: F) {
        let entry = self.coeffs.entry(class).or_insert_with(F::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&class);
        }
    }

    pub fn coefficient(&self, class: usize) -> F {
        self.coeffs.get(&class).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient of `⟨H_t, H_s⟩`.
    pub fn coefficient_of(&self, t: usize, s: usize) -> Result<F> {
        Ok(self.coefficient(self.class_of(t, s)?))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &F)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.lattice);
        for (&k, v) in &self.coeffs {
            out.add_term(k, v.clone() * c.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.lattice, &other.lattice) {
            return Err(Error::ParentMismatch);
        }
        let mut out = self.clone();
        for (&k, v) in &other.coeffs {
            out.add_term(k, v.clone());
        }
        Ok(out)
    }
}

impl<F: Scalar> PartialEq for SliceBurnsideElement<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice) && self.coeffs == other.coeffs
    }
}

impl<F: Scalar> fmt::Debug for SliceBurnsideElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Scalar> fmt::Display for SliceBurnsideElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&k, c)| {
                let (t, s) = self.classes.representative(k);
                format!("({c})<#{},#{}>", t + 1, s + 1)
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn check_slice(lattice: &SubgroupLattice, t: usize, s: usize) -> Result<()> {
    if t < lattice.len() && s < lattice.len() && lattice.is_leq(s, t) {
        Ok(())
    } else {
        Err(Error::NotContained { lower: s, upper: t })
    }
}

fn check_normal(lattice: &SubgroupLattice, n: usize) -> Result<()> {
    if lattice.is_normal(n) {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

/// `N_G(T, S) = N_G(T) ∩ N_G(S)`, the stabilizer of the slice.
pub fn slice_normalizer(lattice: &SubgroupLattice, t: usize, s: usize) -> Result<usize> {
    check_slice(lattice, t, s)?;
    Ok(lattice.intersection(lattice.normalizer(t), lattice.normalizer(s)))
}

/// `ξ_{T,S}^G = (1/|N_G(T,S)|) Σ_{U ≤ S ≤ V ≤ T} |U| μ(U,S) μ(V,T) ⟨V,U⟩_G`.
pub fn xi_idempotent<F: Scalar>(lattice: &Arc<SubgroupLattice>, t: usize, s: usize) -> Result<SliceBurnsideElement<F>> {
    let norm = F::from_usize(lattice.order_of(slice_normalizer(lattice, t, s)?)).expect("order fits");
    let mut xi = SliceBurnsideElement::zero(lattice);
    let lower: Vec<(usize, i64)> = lattice
        .mobius_column(s)
        .iter()
        .filter(|&&(_, mu)| mu != 0)
        .map(|&(u, mu)| (u as usize, mu))
        .collect();
    for &(v, mu_vt) in lattice.mobius_column(t) {
        let v = v as usize;
        if mu_vt == 0 || !lattice.is_leq(s, v) {
            continue;
        }
        for &(u, mu_us) in &lower {
            let c = F::from_int(lattice.order_of(u) as i64 * mu_us * mu_vt) / norm.clone();
            let class = xi.class_of(v, u)?;
            xi.add_term(class, c);
        }
    }
    Ok(xi)
}

/// Deflation to `G/N` on the slice basis: `⟨V, U⟩ ↦ ⟨VN/N, UN/N⟩`.
pub fn deflate_slice<F: Scalar>(x: &SliceBurnsideElement<F>, n: usize) -> Result<SliceBurnsideElement<F>> {
    let q: Arc<Quotient> = x.lattice.quotient(n)?;
    let mut out = SliceBurnsideElement::zero(q.lattice());
    for (&class, c) in &x.coeffs {
        let (v, u) = x.classes.representative(class);
        let image = out.class_of(q.image_of(v), q.image_of(u))?;
        out.add_term(image, c.clone());
    }
    Ok(out)
}

/// `m°_{G,S,N} = Σ_{S ≤ X ≤ G, XN = G} μ(X, G)`.
pub fn m_circ(lattice: &SubgroupLattice, s: usize, n: usize) -> Result<i64> {
    check_normal(lattice, n)?;
    let above = lattice.above(s);
    Ok(lattice
        .mobius_column(lattice.top())
        .iter()
        .filter(|&&(x, _)| above.contains(x as usize) && lattice.product_is_whole(x as usize, n))
        .map(|&(_, mu)| mu)
        .sum())
}

/// `|N_G(SN) : SN|`
fn normalizer_index_of_product(lattice: &SubgroupLattice, s: usize, n: usize) -> Result<usize> {
    let sn = lattice.product(s, n)?;
    Ok(lattice.order_of(lattice.normalizer(sn)) / lattice.order_of(sn))
}

/// `m_{G,S,N}` from its defining double sum over pairs `U ≤ S ≤ V ≤ G` with
/// `VN = G` and `UN = SN`.
pub fn m_slice_direct<F: Scalar>(lattice: &SubgroupLattice, s: usize, n: usize) -> Result<F> {
    check_normal(lattice, n)?;
    let top = lattice.top();
    let sn_order = lattice.product_order(s, n);
    let mut sum = 0i64;
    for &(u, mu_us) in lattice.mobius_column(s) {
        let u = u as usize;
        if lattice.product_order(u, n) != sn_order {
            continue;
        }
        for &(v, mu_vg) in lattice.mobius_column(top) {
            let v = v as usize;
            if lattice.is_leq(s, v) && lattice.product_is_whole(v, n) {
                sum += lattice.order_of(u) as i64 * mu_us * mu_vg;
            }
        }
    }
    let index = normalizer_index_of_product(lattice, s, n)?;
    let ns = lattice.order_of(lattice.normalizer(s));
    Ok(F::from_int(sum) * F::from_usize(index).expect("fits") / F::from_usize(ns).expect("fits"))
}

/// `m_{G,S,N}` in factored form
/// `(|N_G(SN):SN| / |N_G(S):S|) · m_{S, S∩N} · m°_{G,S,N}`, with `m_{S,S∩N}`
/// computed in the subgroup lattice of `S` itself.
pub fn m_slice_factored<F: Scalar>(lattice: &SubgroupLattice, s: usize, n: usize) -> Result<F> {
    check_normal(lattice, n)?;
    let rooted = lattice.rooted(s);
    let local = rooted
        .local_index(lattice, lattice.intersection(s, n))
        .ok_or_else(|| Error::Invariant("S ∩ N not found in the lattice of S".into()))?;
    let m_s: F = m_constant(rooted.lattice(), local)?;
    let circ = m_circ(lattice, s, n)?;
    let index = normalizer_index_of_product(lattice, s, n)?;
    let ns_index = lattice.order_of(lattice.normalizer(s)) / lattice.order_of(s);
    Ok(F::from_usize(index).expect("fits") / F::from_usize(ns_index).expect("fits") * m_s * F::from_int(circ))
}

/// `m_{G,S,N}`, evaluated both directly and in factored form; a disagreement
/// is reported as an internal error.
pub fn m_slice(lattice: &SubgroupLattice, s: usize, n: usize) -> Result<Rational> {
    let direct: Rational = m_slice_direct(lattice, s, n)?;
    let factored: Rational = m_slice_factored(lattice, s, n)?;
    if direct != factored {
        return Err(Error::Invariant(format!(
            "m_(G,S,N) evaluators disagree for S=#{} N=#{}: {direct} vs {factored}",
            s + 1,
            n + 1
        )));
    }
    Ok(direct)
}

/// A slice predicate with its `(N, value)` table over all normal `N`
/// (the trivial subgroup included; the predicate ignores it).
#[derive(Clone, Debug)]
pub struct SliceCertificate<V> {
    pub holds: bool,
    pub table: Vec<(usize, V)>,
}

/// `(G, S)` is a T-slice when `m_{G,S,N} = 0` for every non-trivial normal `N`.
pub fn is_t_slice(lattice: &SubgroupLattice, s: usize) -> Result<SliceCertificate<Rational>> {
    let table = lattice
        .normal_subgroups()
        .into_iter()
        .map(|n| Ok((n, m_slice(lattice, s, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let holds = table.iter().all(|(n, m)| *n == lattice.trivial() || m.is_zero());
    Ok(SliceCertificate { holds, table })
}

/// `(G, S)` is a T°-slice when `m°_{G,S,N} = 0` for every non-trivial normal `N`.
pub fn is_t_circ_slice(lattice: &SubgroupLattice, s: usize) -> Result<SliceCertificate<i64>> {
    let table = lattice
        .normal_subgroups()
        .into_iter()
        .map(|n| Ok((n, m_circ(lattice, s, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let holds = table.iter().all(|(n, m)| *n == lattice.trivial() || *m == 0);
    Ok(SliceCertificate { holds, table })
}

/// `τ°(G, S) = (G/M, SM/M)` for `M` inclusion-maximal among normal subgroups
/// with `m°_{G,S,M} ≠ 0`.
#[derive(Clone)]
pub struct TauCirc {
    /// The chosen `M`: the first maximal candidate in lattice order.
    pub kernel: usize,
    /// Every inclusion-maximal candidate.
    pub maximal: Vec<usize>,
    pub quotient: Arc<Quotient>,
    /// Index of `SM/M` in the lattice of `G/M`.
    pub bottom: usize,
}

impl TauCirc {
    pub fn slice(&self) -> Slice {
        Slice::of_group(self.quotient.lattice().subgroup(self.bottom).clone())
    }

    pub fn projection(&self) -> &GroupMap {
        self.quotient.projection()
    }
}

/// Computes `τ°(G, S)` and checks that the result is a T°-slice and that every
/// maximal choice of `M` yields an isomorphic slice.
pub fn tau_circ(lattice: &SubgroupLattice, s: usize) -> Result<TauCirc> {
    let mut candidates = Vec::new();
    for n in lattice.normal_subgroups() {
        if m_circ(lattice, s, n)? != 0 {
            candidates.push(n);
        }
    }
    let maximal = maximal_elements(lattice, &candidates);
    let kernel = *maximal
        .first()
        .ok_or_else(|| Error::Invariant("m°_(G,S,1) vanished".into()))?;
    let quotient = lattice.quotient(kernel)?;
    let bottom = quotient.image_of(s);
    let result = TauCirc {
        kernel,
        maximal: maximal.clone(),
        quotient,
        bottom,
    };
    if !is_t_circ_slice(result.quotient.lattice(), bottom)?.holds {
        return Err(Error::Invariant(format!(
            "(G/M, SM/M) for M=#{} is not a T°-slice",
            kernel + 1
        )));
    }
    let chosen = result.slice();
    for &other in &maximal[1..] {
        let q = lattice.quotient(other)?;
        let alt = Slice::of_group(q.lattice().subgroup(q.image_of(s)).clone());
        if slices_isomorphic(&chosen, &alt).is_none() {
            return Err(Error::Invariant(format!(
                "maximal kernels #{} and #{} give non-isomorphic slices",
                kernel + 1,
                other + 1
            )));
        }
    }
    Ok(result)
}

/// An isomorphism `a.T → b.T` carrying `a.S` onto `b.S`, if any.
pub fn slices_isomorphic(a: &Slice, b: &Slice) -> Option<GroupMap> {
    let (ga, sa) = a.rooted();
    let (gb, sb) = b.rooted();
    find_isomorphism(&ga, &gb, Some((&sa, &sb)))
}

/// Evidence that `b` is a quotient of `a`: a normal subgroup `M` of `a.T`
/// (numbered in `a.T` re-rooted) and an isomorphism `(a.T/M, a.S M/M) ≅ b`.
#[derive(Clone, Debug)]
pub struct QuotientWitness {
    pub kernel: Subgroup,
    pub isomorphism: GroupMap,
}

/// Decides whether `b` is a quotient of `a` by trying every normal subgroup.
pub fn is_slice_quotient(a: &Slice, b: &Slice) -> Result<Option<QuotientWitness>> {
    let (group, bottom) = a.rooted();
    let lattice = SubgroupLattice::build(&group, usize::MAX)?;
    let s = lattice
        .index_of_set(&bottom)
        .ok_or_else(|| Error::Invariant("slice bottom missing from lattice".into()))?;
    quotient_witness(&lattice, s, b)
}

/// As [`is_slice_quotient`] for `a = (G, H_s)` with the lattice of `G` at hand.
pub fn quotient_witness(lattice: &SubgroupLattice, s: usize, b: &Slice) -> Result<Option<QuotientWitness>> {
    let target_order = b.top().order();
    if !lattice.group().order().is_multiple_of(target_order) {
        return Ok(None);
    }
    for m in lattice.normal_subgroups() {
        if lattice.order_of(m) * target_order != lattice.group().order() {
            continue;
        }
        let q = lattice.quotient(m)?;
        let candidate = Slice::of_group(q.lattice().subgroup(q.image_of(s)).clone());
        if let Some(iso) = slices_isomorphic(&candidate, b) {
            return Ok(Some(QuotientWitness {
                kernel: lattice.subgroup(m).clone(),
                isomorphism: iso,
            }));
        }
    }
    Ok(None)
}

/// Value of `m°_{G,S,1}` and `m_{G,S,1}`, both always one.
pub fn unit_constants(lattice: &SubgroupLattice, s: usize) -> Result<(i64, Rational)> {
    Ok((m_circ(lattice, s, lattice.trivial())?, m_slice(lattice, s, lattice.trivial())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin;
    use num_traits::One;

    fn lattice(name: &str) -> Arc<SubgroupLattice> {
        let g = Arc::new(builtin(name, 64).unwrap());
        Arc::new(SubgroupLattice::build(&g, 64).unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn slice_class_counts() {
        assert_eq!(lattice("C1").slice_classes().len(), 1);
        assert_eq!(lattice("C2").slice_classes().len(), 3);
        assert_eq!(lattice("S3").slice_classes().len(), 9);
    }

    #[test]
    fn slice_normalizers() {
        let s3 = lattice("S3");
        let c2 = s3.classes()[1][0];
        assert_eq!(s3.order_of(slice_normalizer(&s3, c2, 0).unwrap()), 2);
        assert_eq!(slice_normalizer(&s3, s3.top(), s3.top()).unwrap(), s3.top());
        assert!(slice_normalizer(&s3, 0, c2).is_err());
    }

    #[test]
    fn xi_for_c2() {
        let c2 = lattice("C2");
        let xi: SliceBurnsideElement = xi_idempotent(&c2, 1, 1).unwrap();
        assert_eq!(xi.coefficient_of(1, 1).unwrap(), q(1, 1));
        assert_eq!(xi.coefficient_of(1, 0).unwrap(), q(-1, 2));
        assert_eq!(xi.coefficient_of(0, 0).unwrap(), q(0, 1));
        let xi: SliceBurnsideElement = xi_idempotent(&c2, 1, 0).unwrap();
        assert_eq!(xi.coefficient_of(1, 0).unwrap(), q(1, 2));
        assert_eq!(xi.coefficient_of(0, 0).unwrap(), q(-1, 2));
        let c1 = lattice("C1");
        let xi: SliceBurnsideElement = xi_idempotent(&c1, 0, 0).unwrap();
        assert_eq!(xi, SliceBurnsideElement::basis(&c1, 0, 0).unwrap());
    }

    #[test]
    fn deflating_xi_over_c2() {
        let c2 = lattice("C2");
        let ql = c2.quotient(1).unwrap().lattice().clone();
        let unit: SliceBurnsideElement = SliceBurnsideElement::basis(&ql, 0, 0).unwrap();
        let xi: SliceBurnsideElement = xi_idempotent(&c2, 1, 1).unwrap();
        assert_eq!(deflate_slice(&xi, 1).unwrap(), unit.scaled(&q(1, 2)));
        assert_eq!(m_slice(&c2, 1, 1).unwrap(), q(1, 2));
        let xi: SliceBurnsideElement = xi_idempotent(&c2, 1, 0).unwrap();
        assert!(deflate_slice(&xi, 1).unwrap().is_zero());
        assert!(m_slice(&c2, 0, 1).unwrap().is_zero());
    }

    #[test]
    fn m_circ_values() {
        let c2 = lattice("C2");
        assert_eq!(m_circ(&c2, 0, 0).unwrap(), 1);
        assert_eq!(m_circ(&c2, 0, 1).unwrap(), 0);
        let c4 = lattice("C4");
        assert_eq!(m_circ(&c4, 1, 1).unwrap(), 1);
        assert_eq!(m_circ(&c4, 1, 2).unwrap(), 0);
        let s3 = lattice("S3");
        assert_eq!(m_circ(&s3, 0, s3.classes()[1][0]), Err(Error::NotNormal));
    }

    #[test]
    fn m_slice_for_c4() {
        let c4 = lattice("C4");
        assert_eq!(m_slice_direct::<Rational>(&c4, 1, 1).unwrap(), q(1, 2));
        assert_eq!(m_slice_factored::<Rational>(&c4, 1, 1).unwrap(), q(1, 2));
        assert_eq!(m_slice_factored::<f64>(&c4, 1, 1).unwrap(), 0.5);
        for s in 0..c4.len() {
            assert_eq!(unit_constants(&c4, s).unwrap(), (1, Rational::one()));
        }
    }

    #[test]
    fn t_and_t_circ_predicates() {
        let c1 = lattice("C1");
        assert!(is_t_slice(&c1, 0).unwrap().holds);
        assert!(is_t_circ_slice(&c1, 0).unwrap().holds);
        let c2 = lattice("C2");
        assert!(is_t_circ_slice(&c2, 0).unwrap().holds);
        assert!(!is_t_circ_slice(&c2, 1).unwrap().holds);
    }

    #[test]
    fn tau_circ_examples() {
        let c4 = lattice("C4");
        let tau = tau_circ(&c4, 1).unwrap();
        assert_eq!(tau.kernel, 1);
        assert_eq!(tau.quotient.group().order(), 2);
        assert_eq!(tau.slice().bottom().order(), 1);
        let c2 = lattice("C2");
        let tau = tau_circ(&c2, 0).unwrap();
        assert_eq!(tau.kernel, 0);
        assert_eq!(tau.quotient.group().order(), 2);
        for name in ["C1", "S3", "D8"] {
            let l = lattice(name);
            let tau = tau_circ(&l, l.top()).unwrap();
            assert_eq!(tau.kernel, l.top());
            assert_eq!(tau.quotient.group().order(), 1);
        }
    }

    #[test]
    fn slice_isomorphism() {
        let v4 = lattice("E2^2");
        let a = Slice::of_group(v4.subgroup(1).clone());
        let b = Slice::of_group(v4.subgroup(3).clone());
        assert!(slices_isomorphic(&a, &b).is_some());
        assert!(slices_isomorphic(&a, &a).is_some());
        let c4 = lattice("C4");
        let c = Slice::of_group(c4.subgroup(1).clone());
        assert!(slices_isomorphic(&c, &a).is_none());
        let not_slice = Slice::of_group(v4.subgroup(0).clone());
        assert!(slices_isomorphic(&a, &not_slice).is_none());
    }

    #[test]
    fn slice_quotients() {
        let c4 = lattice("C4");
        let a = Slice::of_group(c4.subgroup(1).clone());
        assert!(is_slice_quotient(&a, &a).unwrap().is_some());
        let c2 = lattice("C2");
        let b = Slice::of_group(c2.subgroup(0).clone());
        let w = is_slice_quotient(&a, &b).unwrap().unwrap();
        assert_eq!(w.kernel.order(), 2);
        // (C2, C2) is not a quotient of (C4, C2)
        let c = Slice::of_group(c2.subgroup(1).clone());
        assert!(is_slice_quotient(&a, &c).unwrap().is_none());
    }
}
