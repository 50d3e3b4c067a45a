//! Idempotents of the rational Burnside algebra, deflation, the constants
//! `m_{G,N}`, B-groups and `β(G)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::iso::are_isomorphic;
use crate::lattice::{Quotient, SubgroupLattice};
use crate::scalar::Scalar;
use crate::Rational;

/// A linear combination of transitive `G`-sets `[G/K]`, keyed by the
/// conjugacy class of `K` in the lattice. Zero coefficients are never stored.
#[derive(Clone)]
pub struct BurnsideElement<F = Rational> {
    lattice: Arc<SubgroupLattice>,
    coeffs: BTreeMap<usize, F>,
}

impl<F: Scalar> BurnsideElement<F> {
    pub fn zero(lattice: &Arc<SubgroupLattice>) -> Self {
        BurnsideElement {
            lattice: Arc::clone(lattice),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `[G/K]` for `K` the subgroup with index `k`.
    pub fn basis(lattice: &Arc<SubgroupLattice>, k: usize) -> Self {
        let mut e = Self::zero(lattice);
        e.add_term(lattice.class_of(k), F::one());
        e
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

    /// Coefficient of the class with the given class index.
    pub fn coefficient(&self, class: usize) -> F {
        self.coeffs.get(&class).cloned().unwrap_or_else(F::zero)
    }

    /// `(class index, coefficient)` pairs in class order.
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

impl<F: Scalar> PartialEq for BurnsideElement<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice) && self.coeffs == other.coeffs
    }
}

impl<F: Scalar> fmt::Debug for BurnsideElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Scalar> fmt::Display for BurnsideElement<F> {
    /// Terms are written `c[G/#k]` with `#k` the one-based index of the class
    /// representative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&k, c)| format!("({c})[G/#{}]", self.lattice.classes()[k][0] + 1))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `e_H^G = (1/|N_G(H)|) Σ_{K ≤ H} |K| μ(K, H) [G/K]`.
pub fn idempotent_e<F: Scalar>(lattice: &Arc<SubgroupLattice>, h: usize) -> BurnsideElement<F> {
    let norm = F::from_usize(lattice.order_of(lattice.normalizer(h))).expect("order fits");
    let mut e = BurnsideElement::zero(lattice);
    for &(k, mu) in lattice.mobius_column(h) {
        let k = k as usize;
        if mu != 0 {
            let c = F::from_int(lattice.order_of(k) as i64 * mu) / norm.clone();
            e.add_term(lattice.class_of(k), c);
        }
    }
    e
}

/// `Def^G_{G/N}`: sends `[G/K]` to `[(G/N)/(KN/N)]`. The result lives on the
/// lattice of `G/N` cached in `lattice`.
pub fn deflate_burnside<F: Scalar>(x: &BurnsideElement<F>, n: usize) -> Result<BurnsideElement<F>> {
    let lattice = &x.lattice;
    let q: Arc<Quotient> = lattice.quotient(n)?;
    let mut out = BurnsideElement::zero(q.lattice());
    for (&class, c) in &x.coeffs {
        let k = lattice.classes()[class][0];
        out.add_term(q.lattice().class_of(q.image_of(k)), c.clone());
    }
    Ok(out)
}

/// `m_{G,N} = (1/|G|) Σ_{X ≤ G, XN = G} |X| μ(X, G)`.
pub fn m_constant<F: Scalar>(lattice: &SubgroupLattice, n: usize) -> Result<F> {
    if !lattice.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let sum: i64 = lattice
        .mobius_column(lattice.top())
        .iter()
        .filter(|&&(x, _)| lattice.product_is_whole(x as usize, n))
        .map(|&(x, mu)| lattice.order_of(x as usize) as i64 * mu)
        .sum();
    Ok(F::from_int(sum) / F::from_usize(lattice.group().order()).expect("order fits"))
}

/// The `(N, m_{G,N})` rows for every normal subgroup, in lattice order.
pub fn m_table(lattice: &SubgroupLattice) -> Vec<(usize, Rational)> {
    lattice
        .normal_subgroups()
        .into_iter()
        .map(|n| (n, m_constant(lattice, n).expect("normal")))
        .collect()
}

/// Outcome of the B-group test with its evidence.
#[derive(Clone, Debug)]
pub struct BGroupCertificate {
    pub is_b_group: bool,
    /// `(N, m_{G,N})` for every normal `N`, including the trivial one.
    pub table: Vec<(usize, Rational)>,
}

/// `G` is a B-group when `m_{G,N} = 0` for every non-trivial normal `N`.
pub fn is_b_group(lattice: &SubgroupLattice) -> BGroupCertificate {
    let table = m_table(lattice);
    let is_b_group = table.iter().all(|(n, m)| *n == lattice.trivial() || m.is_zero());
    BGroupCertificate { is_b_group, table }
}

/// `β(G) = G/N` for `N` maximal among normal subgroups with `m_{G,N} ≠ 0`.
#[derive(Clone)]
pub struct Beta {
    /// The chosen `N`: the first inclusion-maximal candidate in lattice order.
    pub witness: usize,
    /// All inclusion-maximal candidates.
    pub maximal: Vec<usize>,
    pub quotient: Arc<Quotient>,
    pub table: Vec<(usize, Rational)>,
}

/// Computes `β(G)`, checking that every maximal choice of `N` gives an
/// isomorphic quotient and that the result is a B-group.
pub fn beta(lattice: &SubgroupLattice) -> Result<Beta> {
    let table = m_table(lattice);
    let candidates: Vec<usize> = table.iter().filter(|(_, m)| !m.is_zero()).map(|(n, _)| *n).collect();
    let maximal = maximal_elements(lattice, &candidates);
    let witness = *maximal
        .first()
        .ok_or_else(|| Error::Invariant("m_{G,1} vanished".into()))?;
    let quotient = lattice.quotient(witness)?;
    for &other in &maximal[1..] {
        let alt = lattice.quotient(other)?;
        if are_isomorphic(quotient.group(), alt.group()).is_none() {
            return Err(Error::Invariant(format!(
                "maximal kernels #{} and #{} give non-isomorphic quotients",
                witness + 1,
                other + 1
            )));
        }
    }
    if !is_b_group(quotient.lattice()).is_b_group {
        return Err(Error::Invariant("β(G) is not a B-group".into()));
    }
    Ok(Beta {
        witness,
        maximal,
        quotient,
        table,
    })
}

/// Members of `set` not strictly contained in another member, in input order.
pub(crate) fn maximal_elements(lattice: &SubgroupLattice, set: &[usize]) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&a| !set.iter().any(|&b| b != a && lattice.is_leq(a, b)))
        .collect()
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
    fn idempotents_of_cyclic_groups() {
        let c1 = lattice("C1");
        let e: BurnsideElement = idempotent_e(&c1, 0);
        assert_eq!(e, BurnsideElement::basis(&c1, 0));

        let c2 = lattice("C2");
        let e: BurnsideElement = idempotent_e(&c2, 1);
        assert_eq!(e.coefficient(c2.class_of(1)), q(1, 1));
        assert_eq!(e.coefficient(c2.class_of(0)), q(-1, 2));

        let c4 = lattice("C4");
        let e: BurnsideElement = idempotent_e(&c4, 2);
        assert_eq!(e.coefficient(c4.class_of(2)), q(1, 1));
        assert_eq!(e.coefficient(c4.class_of(1)), q(-1, 2));
        assert_eq!(e.coefficient(c4.class_of(0)), q(0, 1));
        assert_eq!(e.terms().count(), 2);
    }

    #[test]
    fn deflation_of_c4_by_c2() {
        let c4 = lattice("C4");
        let x: BurnsideElement = BurnsideElement::basis(&c4, 1);
        let d = deflate_burnside(&x, 1).unwrap();
        let ql = c4.quotient(1).unwrap().lattice().clone();
        assert_eq!(d, BurnsideElement::basis(&ql, 0));
        let e: BurnsideElement = idempotent_e(&c4, 2);
        let d = deflate_burnside(&e, 1).unwrap();
        assert_eq!(d, idempotent_e(&ql, ql.top()));
    }

    #[test]
    fn m_constants() {
        let c2 = lattice("C2");
        assert_eq!(m_constant::<Rational>(&c2, 0).unwrap(), Rational::one());
        assert_eq!(m_constant::<Rational>(&c2, 1).unwrap(), q(1, 2));
        assert_eq!(m_constant::<f64>(&c2, 1).unwrap(), 0.5);
        let v4 = lattice("E2^2");
        for n in 1..v4.len() {
            assert!(m_constant::<Rational>(&v4, n).unwrap().is_zero());
        }
        let s3 = lattice("S3");
        let c2 = s3.classes()[1][0];
        assert_eq!(m_constant::<Rational>(&s3, c2), Err(Error::NotNormal));
    }

    #[test]
    fn b_groups_and_beta() {
        assert!(is_b_group(&lattice("C1")).is_b_group);
        assert!(is_b_group(&lattice("E2^2")).is_b_group);
        assert!(!is_b_group(&lattice("C2")).is_b_group);

        let b = beta(&lattice("C2")).unwrap();
        assert_eq!(b.quotient.group().order(), 1);
        let b = beta(&lattice("E2^2")).unwrap();
        assert_eq!(b.witness, 0);
        assert_eq!(b.quotient.group().order(), 4);
        let b = beta(&lattice("C1")).unwrap();
        assert_eq!(b.quotient.group().order(), 1);
    }
}
