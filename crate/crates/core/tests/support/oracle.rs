//! Brute-force reference computations that share nothing with the library
//! beyond reading a group's multiplication table.

#![allow(dead_code)]

use std::collections::BTreeSet;

use slicegroup::FiniteGroup;

pub type Set = Vec<usize>;

/// Every subgroup, found by testing every subset containing the identity for
/// closure. Sorted by size, then by sorted member list.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Set> {
    let n = g.order();
    assert!(n <= 16, "the subset oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set: Set = std::iter::once(0)
            .chain((1..n).filter(|i| mask & (1 << (i - 1)) != 0))
            .collect();
        let mut member = vec![false; n];
        for &x in &set {
            member[x] = true;
        }
        if set.iter().all(|&a| set.iter().all(|&b| member[g.mul(a, b)])) {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn subset(a: &Set, b: &Set) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// `mu[x][y]`, filled bottom-up: `μ(x, x) = 1`, `μ(x, y) = −Σ_{x ≤ z < y} μ(x, z)`.
pub fn mobius(subs: &[Set]) -> Vec<Vec<i64>> {
    let k = subs.len();
    let mut mu = vec![vec![0i64; k]; k];
    for x in 0..k {
        mu[x][x] = 1;
        for y in x + 1..k {
            if !subset(&subs[x], &subs[y]) {
                continue;
            }
            mu[x][y] = -(x..y)
                .filter(|&z| subset(&subs[x], &subs[z]) && subset(&subs[z], &subs[y]))
                .map(|z| mu[x][z])
                .sum::<i64>();
        }
    }
    mu
}

pub fn conjugate(g: &FiniteGroup, set: &Set, by: usize) -> Set {
    let mut out: Set = set.iter().map(|&x| g.mul(g.mul(by, x), g.inv(by))).collect();
    out.sort_unstable();
    out
}

pub fn is_normal(g: &FiniteGroup, set: &Set) -> bool {
    (0..g.order()).all(|h| conjugate(g, set, h) == *set)
}

pub fn product(g: &FiniteGroup, a: &Set, b: &Set) -> BTreeSet<usize> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| g.mul(x, y))).collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A reduced fraction with positive denominator.
pub fn frac(num: i64, den: i64) -> (i64, i64) {
    let d = gcd(num, den) * den.signum();
    (num / d, den / d)
}

/// `m_{G,N} = (1/|G|) Σ_{XN = G} |X| μ(X, G)`.
pub fn m_gn(g: &FiniteGroup, subs: &[Set], mu: &[Vec<i64>], n: &Set) -> (i64, i64) {
    let top = subs.len() - 1;
    let num: i64 = (0..subs.len())
        .filter(|&x| product(g, &subs[x], n).len() == g.order())
        .map(|x| subs[x].len() as i64 * mu[x][top])
        .sum();
    frac(num, g.order() as i64)
}

/// `m°_{G,S,N} = Σ_{S ≤ X, XN = G} μ(X, G)`.
pub fn m_circ(g: &FiniteGroup, subs: &[Set], mu: &[Vec<i64>], s: &Set, n: &Set) -> i64 {
    let top = subs.len() - 1;
    (0..subs.len())
        .filter(|&x| subset(s, &subs[x]) && product(g, &subs[x], n).len() == g.order())
        .map(|x| mu[x][top])
        .sum()
}

/// Number of orbits of `G` acting by conjugation on pairs `S ≤ T`.
pub fn slice_class_count(g: &FiniteGroup, subs: &[Set]) -> usize {
    let mut seen: BTreeSet<(Set, Set)> = BTreeSet::new();
    let mut orbits = 0;
    for t in subs {
        for s in subs.iter().filter(|s| subset(s, t)) {
            if seen.contains(&(t.clone(), s.clone())) {
                continue;
            }
            orbits += 1;
            for h in 0..g.order() {
                seen.insert((conjugate(g, t, h), conjugate(g, s, h)));
            }
        }
    }
    orbits
}

/// Inclusion-maximal normal subgroups among those with `m°_{G,S,M} ≠ 0`.
pub fn tau_kernels(g: &FiniteGroup, subs: &[Set], mu: &[Vec<i64>], s: &Set) -> Vec<Set> {
    let candidates: Vec<&Set> = subs
        .iter()
        .filter(|m| is_normal(g, m) && m_circ(g, subs, mu, s, m) != 0)
        .collect();
    candidates
        .iter()
        .filter(|m| !candidates.iter().any(|o| o.len() > m.len() && subset(m, o)))
        .map(|m| (*m).clone())
        .collect()
}
