//! Human-readable isomorphism-type names for small groups.

use std::sync::Arc;

use crate::expr::GroupExpr;
use crate::group::FiniteGroup;
use crate::iso::are_isomorphic;

/// Non-abelian groups recognised by name, tried in this order.
const NAMED: &[&str] = &[
    "S3", "D8", "Q8", "D10", "A4", "D12", "Q12", "D14", "D16", "Q16", "C2 x D8", "C2 x Q8", "D18", "C3 x S3",
    "D20", "Q20", "D22", "S4", "C2 x A4", "D24", "Q24", "C4 x S3", "C3 x Q8", "C3 x D8", "C2 x D12",
];

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of an abelian group, ascending and each dividing the next.
fn invariant_factors(g: &FiniteGroup) -> Vec<usize> {
    let mut per_prime: Vec<Vec<usize>> = Vec::new();
    for (p, e) in factorize(g.order()) {
        // r_k = #{x : x^(p^k) = 1}; the number of cyclic factors of order
        // at least p^k is log_p(r_k / r_(k-1)).
        let mut counts = vec![1usize];
        for k in 1..=e {
            let pk = p.pow(k);
            counts.push(g.elements().filter(|&x| g.power(x, pk) == 0).count());
        }
        let mut at_least = Vec::new();
        for k in 1..=e as usize {
            let mut ratio = counts[k] / counts[k - 1];
            let mut parts = 0;
            while ratio > 1 {
                ratio /= p;
                parts += 1;
            }
            at_least.push(parts);
        }
        let largest = at_least.first().copied().unwrap_or(0);
        let mut exps = vec![0u32; largest];
        for (k, &cnt) in at_least.iter().enumerate() {
            for ex in exps.iter_mut().take(cnt) {
                *ex = k as u32 + 1;
            }
        }
        per_prime.push(exps.into_iter().map(|x| p.pow(x)).collect());
    }
    let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..width)
        .map(|i| per_prime.iter().map(|ps| ps.get(i).copied().unwrap_or(1)).product())
        .collect();
    factors.sort_unstable();
    factors
}

/// A conventional name such as `C6`, `C2 x C2 x C2`, `D8` or `S4`; falls back to
/// `[order n]` when the group is not recognised.
pub fn structure_name(g: &Arc<FiniteGroup>) -> String {
    if g.order() == 1 {
        return "1".into();
    }
    if g.is_abelian() {
        let factors: Vec<String> = invariant_factors(g).iter().map(|n| format!("C{n}")).collect();
        return factors.join(" x ");
    }
    for name in NAMED {
        let expr = GroupExpr::parse(name).expect("static name parses");
        let Ok(candidate) = expr.build(usize::MAX) else { continue };
        if candidate.order() == g.order() && are_isomorphic(g, &candidate).is_some() {
            return name.to_string();
        }
    }
    format!("[order {}]", g.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(expr: &str) -> String {
        structure_name(&GroupExpr::parse(expr).unwrap().build(64).unwrap())
    }

    #[test]
    fn abelian_names() {
        assert_eq!(name("C1"), "1");
        assert_eq!(name("C6"), "C6");
        assert_eq!(name("C2 x C3"), "C6");
        assert_eq!(name("E2^3"), "C2 x C2 x C2");
        assert_eq!(name("C2 x C6"), "C2 x C6");
        assert_eq!(name("C4 x C2"), "C2 x C4");
        assert_eq!(name("D4"), "C2 x C2");
    }

    #[test]
    fn non_abelian_names() {
        assert_eq!(name("D6"), "S3");
        assert_eq!(name("S3"), "S3");
        assert_eq!(name("Q8"), "Q8");
        assert_eq!(name("D8 x C2"), "C2 x D8");
        assert_eq!(name("S4"), "S4");
        assert_eq!(name("A5"), "[order 60]");
    }
}
