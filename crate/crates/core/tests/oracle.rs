//! The library against brute-force reference computations.

mod support;

use std::sync::Arc;

use num_bigint::BigInt;
use slicegroup::verify::DEFAULT_CATALOG;
use slicegroup::{beta, m_circ, m_constant, tau_circ, FiniteGroup, GroupExpr, Rational, SubgroupLattice};
use support::oracle;

fn build(expr: &str) -> (Arc<FiniteGroup>, SubgroupLattice) {
    let g = GroupExpr::parse(expr).unwrap().build(64).unwrap();
    let l = SubgroupLattice::build(&g, 64).unwrap();
    (g, l)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn small_catalog() -> impl Iterator<Item = &'static str> {
    DEFAULT_CATALOG.iter().copied().filter(|e| build(e).0.order() <= 16)
}

#[test]
fn enumeration_matches_subset_oracle() {
    for expr in small_catalog() {
        let (g, l) = build(expr);
        let expected = oracle::all_subgroups(&g);
        let found: Vec<Vec<usize>> = l.subgroups().iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(found, expected, "{expr}");
    }
}

#[test]
fn mobius_matches_bottom_up_oracle() {
    for expr in small_catalog() {
        let (g, l) = build(expr);
        let subs = oracle::all_subgroups(&g);
        let mu = oracle::mobius(&subs);
        for x in 0..subs.len() {
            for y in 0..subs.len() {
                if oracle::subset(&subs[x], &subs[y]) {
                    assert_eq!(l.mobius(x, y).unwrap(), mu[x][y], "{expr} μ(#{}, #{})", x + 1, y + 1);
                } else {
                    assert!(l.mobius(x, y).is_err());
                }
            }
        }
    }
}

#[test]
fn deflation_constants_match_oracle() {
    for expr in small_catalog() {
        let (g, l) = build(expr);
        let subs = oracle::all_subgroups(&g);
        let mu = oracle::mobius(&subs);
        for n in l.normal_subgroups() {
            let (num, den) = oracle::m_gn(&g, &subs, &mu, &subs[n]);
            assert_eq!(m_constant::<Rational>(&l, n).unwrap(), rat(num, den), "{expr} N=#{}", n + 1);
            for s in 0..subs.len() {
                assert_eq!(m_circ(&l, s, n).unwrap(), oracle::m_circ(&g, &subs, &mu, &subs[s], &subs[n]));
            }
        }
    }
}

#[test]
fn normality_and_slice_classes_match_oracle() {
    for expr in small_catalog() {
        let (g, l) = build(expr);
        let subs = oracle::all_subgroups(&g);
        for (i, s) in subs.iter().enumerate() {
            assert_eq!(l.is_normal(i), oracle::is_normal(&g, s), "{expr}");
        }
        assert_eq!(l.slice_classes().len(), oracle::slice_class_count(&g, &subs), "{expr}");
    }
}

#[test]
fn tau_kernels_match_oracle() {
    for expr in small_catalog() {
        let (g, l) = build(expr);
        let subs = oracle::all_subgroups(&g);
        let mu = oracle::mobius(&subs);
        for s in 0..subs.len() {
            let tau = tau_circ(&l, s).unwrap();
            let expected = oracle::tau_kernels(&g, &subs, &mu, &subs[s]);
            let found: Vec<Vec<usize>> = tau.maximal.iter().map(|&m| subs[m].clone()).collect();
            assert_eq!(found, expected, "{expr} S=#{}", s + 1);
        }
    }
}

#[test]
fn spot_values() {
    let (g, l) = build("C2");
    let subs = oracle::all_subgroups(&g);
    let mu = oracle::mobius(&subs);
    assert_eq!(oracle::m_gn(&g, &subs, &mu, &subs[1]), (1, 2));
    assert_eq!(m_constant::<Rational>(&l, 1).unwrap(), rat(1, 2));
    assert_eq!(beta(&l).unwrap().quotient.group().order(), 1);

    let (g, l) = build("C2 x C2");
    let subs = oracle::all_subgroups(&g);
    let mu = oracle::mobius(&subs);
    for n in 1..subs.len() {
        assert_eq!(oracle::m_gn(&g, &subs, &mu, &subs[n]), (0, 1));
        assert_eq!(m_constant::<Rational>(&l, n).unwrap(), rat(0, 1));
    }
    assert_eq!(beta(&l).unwrap().quotient.group().order(), 4);

    let (g, l) = build("S3");
    let subs = oracle::all_subgroups(&g);
    assert_eq!(subs.len(), 6);
    assert_eq!(oracle::mobius(&subs)[0][5], 3);
    assert_eq!(l.mobius(0, l.top()).unwrap(), 3);
    assert_eq!(oracle::slice_class_count(&g, &subs), 9);

    let (g, l) = build("C4");
    let subs = oracle::all_subgroups(&g);
    assert_eq!(oracle::mobius(&subs)[0][2], 0);
    assert_eq!(l.mobius(0, 2).unwrap(), 0);
    let tau = tau_circ(&l, 1).unwrap();
    assert_eq!(tau.quotient.group().order(), 2);
    assert_eq!(tau.quotient.lattice().order_of(tau.bottom), 1);
}
