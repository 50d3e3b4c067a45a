//! Exhaustive verification of the identities relating Möbius values,
//! deflation constants and slices, over a catalog of small groups.
//!
//! Every check is an exact integer or rational equality and enumerates all
//! instances. Failures record the inputs (group expression and one-based
//! subgroup indices) together with both sides of the identity.

use std::fmt;
use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use crate::burnside::{deflate_burnside, idempotent_e, m_constant, BurnsideElement};
use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::families::Family;
use crate::group::{direct_product, FiniteGroup, Subgroup};
use crate::iso::are_isomorphic;
use crate::lattice::SubgroupLattice;
use crate::slice::{
    deflate_slice, is_t_circ_slice, is_t_slice, m_circ, m_slice, m_slice_direct, m_slice_factored,
    quotient_witness, slices_isomorphic, tau_circ, xi_idempotent, Slice, SliceBurnsideElement,
};
use crate::Rational;

/// The catalog used when none is given.
pub const DEFAULT_CATALOG: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C2 x C2", "C2 x C2 x C2", "D8",
    "D12", "Q8", "S3", "A4", "S4", "C2 x D8",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub subject: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<Assertion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl CheckReport {
    fn new(check: Check, subject: &str) -> Self {
        CheckReport {
            check: check.name().to_string(),
            subject: subject.to_string(),
            instances: 0,
            failures: Vec::new(),
            assertions: Vec::new(),
            skipped: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, inputs: impl FnOnce() -> String, lhs: T, rhs: T) {
        self.instances += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn expect(&mut self, inputs: impl FnOnce() -> String, holds: bool, what: &str) {
        self.compare(inputs, if holds { "true" } else { "false" }, "true");
        if !holds {
            self.failures.last_mut().expect("just pushed").lhs = format!("false ({what})");
        }
    }

    fn error(&mut self, inputs: String, err: &Error) {
        self.instances += 1;
        self.failures.push(Failure {
            inputs,
            lhs: format!("error: {err}"),
            rhs: "-".into(),
        });
    }

    fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

/// The individual identity families that can be checked per group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Complement expansion of `μ(X, G)` over a normal subgroup.
    Crapo,
    /// Expansion of `m°_{G,S,N}` through a second normal subgroup `M`.
    McircExpansion,
    /// `m°_{G,S,N} = m°_{G,S,M} m°_{G/M,SM/M,N/M}` for `M ≤ N`.
    McircFactorization,
    /// `τ°(G, S)` is the largest quotient T°-slice, uniquely up to isomorphism.
    LargestQuotient,
    /// Deflation of `e_G^G` and of `ξ_{G,S}^G`.
    Deflation,
    /// Direct and factored evaluations of `m_{G,S,N}` agree.
    MFactorization,
    /// `m_{T,S,1} = m°_{T,S,1} = 1` for every slice.
    UnitConstants,
    /// The idempotents sum to the identity.
    IdempotentSums,
    /// The C2 × D8 scenario showing T-slices have no largest quotient.
    TSliceCounterexample,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Crapo,
        Check::McircExpansion,
        Check::McircFactorization,
        Check::LargestQuotient,
        Check::Deflation,
        Check::MFactorization,
        Check::UnitConstants,
        Check::IdempotentSums,
        Check::TSliceCounterexample,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Crapo => "crapo",
            Check::McircExpansion => "mcirc-expansion",
            Check::McircFactorization => "mcirc-factorization",
            Check::LargestQuotient => "tau0",
            Check::Deflation => "deflation",
            Check::MFactorization => "m-factorization",
            Check::UnitConstants => "unit-constants",
            Check::IdempotentSums => "idempotent-sums",
            Check::TSliceCounterexample => "tslice-counterexample",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    fn per_group(&self) -> bool {
        *self != Check::TSliceCounterexample
    }
}

fn idx(i: usize) -> String {
    format!("#{}", i + 1)
}

/// Complement expansion of `μ(X, G)` over the normal subgroup `m`, for every `X`.
pub fn check_crapo(lattice: &SubgroupLattice, subject: &str, m: usize) -> CheckReport {
    check_crapo_with(lattice, subject, m, &|x, y| lattice.mobius_unchecked(x, y))
}

/// As [`check_crapo`] with a caller-supplied Möbius function `mu(x, y)`
/// (called only for `x ≤ y`).
pub fn check_crapo_with(lattice: &SubgroupLattice, subject: &str, m: usize, mu: &dyn Fn(usize, usize) -> i64) -> CheckReport {
    let mut report = CheckReport::new(Check::Crapo, subject);
    let top = lattice.top();
    let members_m = lattice.members(m);
    for x in 0..lattice.len() {
        let x_cap_m = lattice.members(x).intersection_len(members_m);
        let rhs: i64 = lattice
            .above(x)
            .iter()
            .filter(|&y| lattice.product_is_whole(y, m) && lattice.members(y).intersection_len(members_m) == x_cap_m)
            .map(|y| mu(x, y) * mu(y, top))
            .sum();
        report.compare(|| format!("G={subject} X={} M={}", idx(x), idx(m)), mu(x, top), rhs);
    }
    report
}

/// `m°_{G,S,N} = Σ_{Y ≥ S, YN = YM = G} μ(Y, G) m°_{G/M, SM/M, (Y∩N)M/M}`.
pub fn check_mcirc_expansion(lattice: &SubgroupLattice, subject: &str, s: usize, m: usize, n: usize) -> CheckReport {
    let mut report = CheckReport::new(Check::McircExpansion, subject);
    let inputs = || format!("G={subject} S={} M={} N={}", idx(s), idx(m), idx(n));
    let result = (|| -> Result<(i64, i64)> {
        let lhs = m_circ(lattice, s, n)?;
        let q = lattice.quotient(m)?;
        let mut rhs = 0;
        for y in lattice.above(s).iter() {
            if lattice.product_is_whole(y, n) && lattice.product_is_whole(y, m) {
                let image = q.image_of(lattice.intersection(y, n));
                rhs += lattice.mobius(y, lattice.top())? * m_circ(q.lattice(), q.image_of(s), image)?;
            }
        }
        Ok((lhs, rhs))
    })();
    match result {
        Ok((lhs, rhs)) => report.compare(inputs, lhs, rhs),
        Err(e) => report.error(inputs(), &e),
    }
    report
}

/// `m°_{G,S,N} = m°_{G,S,M} · m°_{G/M, SM/M, N/M}` for normal `M ≤ N`.
pub fn check_mcirc_factorization(lattice: &SubgroupLattice, subject: &str, s: usize, m: usize, n: usize) -> CheckReport {
    let mut report = CheckReport::new(Check::McircFactorization, subject);
    let inputs = || format!("G={subject} S={} M={} N={}", idx(s), idx(m), idx(n));
    if !lattice.is_leq(m, n) {
        report.error(inputs(), &Error::NotContained { lower: m, upper: n });
        return report;
    }
    let result = (|| -> Result<(i64, i64)> {
        let q = lattice.quotient(m)?;
        let lhs = m_circ(lattice, s, n)?;
        let rhs = m_circ(lattice, s, m)? * m_circ(q.lattice(), q.image_of(s), q.image_of(n))?;
        Ok((lhs, rhs))
    })();
    match result {
        Ok((lhs, rhs)) => report.compare(inputs, lhs, rhs),
        Err(e) => report.error(inputs(), &e),
    }
    report
}

/// For every `S ≤ G`: `τ°(G, S)` is a T°-slice and a quotient of `(G, S)`, every
/// T°-slice quotient `(G/M, SM/M)` is a quotient of it, and every quotient with
/// those two properties is isomorphic to it.
pub fn check_largest_quotient(lattice: &SubgroupLattice, subject: &str) -> CheckReport {
    let mut report = CheckReport::new(Check::LargestQuotient, subject);
    for s in 0..lattice.len() {
        if let Err(e) = largest_quotient_for(lattice, subject, s, &mut report) {
            report.error(format!("G={subject} S={}", idx(s)), &e);
        }
    }
    report
}

fn largest_quotient_for(lattice: &SubgroupLattice, subject: &str, s: usize, report: &mut CheckReport) -> Result<()> {
    let inputs = |what: &str| format!("G={subject} S={} {what}", idx(s));
    let tau = tau_circ(lattice, s)?;
    let tau_slice = tau.slice();
    report.expect(
        || inputs("τ° is a T°-slice"),
        is_t_circ_slice(tau.quotient.lattice(), tau.bottom)?.holds,
        "not a T°-slice",
    );
    report.expect(
        || inputs("τ° is a quotient of (G,S)"),
        quotient_witness(lattice, s, &tau_slice)?.is_some(),
        "not a quotient",
    );
    for &alt in &tau.maximal {
        let q = lattice.quotient(alt)?;
        let other = Slice::of_group(q.lattice().subgroup(q.image_of(s)).clone());
        report.expect(
            || inputs(&format!("maximal M={} gives an isomorphic slice", idx(alt))),
            slices_isomorphic(&tau_slice, &other).is_some(),
            "not isomorphic",
        );
    }
    // every T°-slice quotient of (G, S) has the form (G/M, SM/M)
    let mut t_circ_quotients = Vec::new();
    for m in lattice.normal_subgroups() {
        let q = lattice.quotient(m)?;
        if is_t_circ_slice(q.lattice(), q.image_of(s))?.holds {
            t_circ_quotients.push((m, q));
        }
    }
    let slices: Vec<Slice> = t_circ_quotients
        .iter()
        .map(|(_, q)| Slice::of_group(q.lattice().subgroup(q.image_of(s)).clone()))
        .collect();
    for ((m, _), target) in t_circ_quotients.iter().zip(&slices) {
        report.expect(
            || inputs(&format!("τ° dominates (G/M, SM/M) for M={}", idx(*m))),
            quotient_witness(tau.quotient.lattice(), tau.bottom, target)?.is_some(),
            "not dominated",
        );
    }
    for ((m, q), candidate) in t_circ_quotients.iter().zip(&slices) {
        let mut dominates_all = true;
        for target in &slices {
            if quotient_witness(q.lattice(), q.image_of(s), target)?.is_none() {
                dominates_all = false;
                break;
            }
        }
        if dominates_all {
            report.expect(
                || inputs(&format!("universal quotient for M={} is isomorphic to τ°", idx(*m))),
                slices_isomorphic(candidate, &tau_slice).is_some(),
                "second universal quotient",
            );
        }
    }
    Ok(())
}

/// `Def e_G^G = m_{G,N} e_{G/N}^{G/N}` for every normal `N`, and
/// `Def ξ_{G,S}^G = m_{G,S,N} ξ_{G/N,SN/N}^{G/N}` for every `S` and normal `N`.
pub fn check_deflation_identities(lattice: &Arc<SubgroupLattice>, subject: &str) -> CheckReport {
    let mut report = CheckReport::new(Check::Deflation, subject);
    let top = lattice.top();
    for n in lattice.normal_subgroups() {
        let inputs = || format!("G={subject} N={} (Burnside)", idx(n));
        let sides = (|| -> Result<(BurnsideElement, BurnsideElement)> {
            let q = lattice.quotient(n)?;
            let e: BurnsideElement = idempotent_e(lattice, top);
            let lhs = deflate_burnside(&e, n)?;
            let m: Rational = m_constant(lattice, n)?;
            let rhs = idempotent_e::<Rational>(q.lattice(), q.lattice().top()).scaled(&m);
            Ok((lhs, rhs))
        })();
        match sides {
            Ok((lhs, rhs)) => report.compare(inputs, lhs, rhs),
            Err(e) => report.error(inputs(), &e),
        }
    }
    for s in 0..lattice.len() {
        for n in lattice.normal_subgroups() {
            let inputs = || format!("G={subject} S={} N={} (slice)", idx(s), idx(n));
            let sides = (|| -> Result<(SliceBurnsideElement, SliceBurnsideElement)> {
                let q = lattice.quotient(n)?;
                let xi: SliceBurnsideElement = xi_idempotent(lattice, top, s)?;
                let lhs = deflate_slice(&xi, n)?;
                let m = m_slice(lattice, s, n)?;
                let rhs = xi_idempotent::<Rational>(q.lattice(), q.lattice().top(), q.image_of(s))?.scaled(&m);
                Ok((lhs, rhs))
            })();
            match sides {
                Ok((lhs, rhs)) => report.compare(inputs, lhs, rhs),
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report
}

/// The direct double sum for `m_{G,S,N}` equals its factored form.
pub fn check_m_factorization(lattice: &SubgroupLattice, subject: &str) -> CheckReport {
    let mut report = CheckReport::new(Check::MFactorization, subject);
    for s in 0..lattice.len() {
        for n in lattice.normal_subgroups() {
            let inputs = || format!("G={subject} S={} N={}", idx(s), idx(n));
            let sides = (|| -> Result<(Rational, Rational)> {
                Ok((m_slice_direct(lattice, s, n)?, m_slice_factored(lattice, s, n)?))
            })();
            match sides {
                Ok((lhs, rhs)) => report.compare(inputs, lhs, rhs),
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report
}

/// `m_{T,S,1} = m°_{T,S,1} = 1` for every slice `(T, S)` of `G`.
pub fn check_unit_constants(lattice: &SubgroupLattice, subject: &str) -> CheckReport {
    let mut report = CheckReport::new(Check::UnitConstants, subject);
    for t in 0..lattice.len() {
        let rooted = lattice.rooted(t);
        let local = rooted.lattice();
        for s in lattice.below(t).iter() {
            let inputs = || format!("G={subject} T={} S={}", idx(t), idx(s));
            let values = (|| -> Result<(i64, Rational)> {
                let ls = rooted
                    .local_index(lattice, s)
                    .ok_or_else(|| Error::Invariant("S missing from the lattice of T".into()))?;
                Ok((m_circ(local, ls, local.trivial())?, m_slice(local, ls, local.trivial())?))
            })();
            match values {
                Ok((circ, m)) => {
                    report.compare(|| format!("{} (m°)", inputs()), circ, 1);
                    report.compare(|| format!("{} (m)", inputs()), m, Rational::one());
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report
}

/// `Σ_[H] e_H^G = [G/G]` and `Σ_[(T,S)] ξ_{T,S}^G = ⟨G, G⟩`.
pub fn check_idempotent_sums(lattice: &Arc<SubgroupLattice>, subject: &str) -> CheckReport {
    let mut report = CheckReport::new(Check::IdempotentSums, subject);
    let top = lattice.top();
    let mut sum = BurnsideElement::<Rational>::zero(lattice);
    for class in lattice.classes() {
        sum = sum.plus(&idempotent_e(lattice, class[0])).expect("same lattice");
    }
    report.compare(|| format!("G={subject} (Burnside)"), sum, BurnsideElement::basis(lattice, top));
    let sides = (|| -> Result<(SliceBurnsideElement, SliceBurnsideElement)> {
        let mut sum = SliceBurnsideElement::<Rational>::zero(lattice);
        for class in lattice.slice_classes().classes() {
            let (t, s) = class[0];
            sum = sum.plus(&xi_idempotent(lattice, t, s)?)?;
        }
        Ok((sum, SliceBurnsideElement::basis(lattice, top, top)?))
    })();
    match sides {
        Ok((lhs, rhs)) => report.compare(|| format!("G={subject} (slice)"), lhs, rhs),
        Err(e) => report.error(format!("G={subject} (slice)"), &e),
    }
    report
}

/// Runs the selected per-group checks over every instance of one group.
pub fn check_group(lattice: &Arc<SubgroupLattice>, subject: &str, checks: &[Check]) -> Vec<CheckReport> {
    let normals = lattice.normal_subgroups();
    let mut reports = Vec::new();
    for &check in checks.iter().filter(|c| c.per_group()) {
        let report = match check {
            Check::Crapo => {
                let mut r = CheckReport::new(check, subject);
                for &m in &normals {
                    r.absorb(check_crapo(lattice, subject, m));
                }
                r
            }
            Check::McircExpansion => {
                let mut r = CheckReport::new(check, subject);
                for s in 0..lattice.len() {
                    for &m in &normals {
                        for &n in &normals {
                            r.absorb(check_mcirc_expansion(lattice, subject, s, m, n));
                        }
                    }
                }
                r
            }
            Check::McircFactorization => {
                let mut r = CheckReport::new(check, subject);
                for s in 0..lattice.len() {
                    for &m in &normals {
                        for &n in normals.iter().filter(|&&n| lattice.is_leq(m, n)) {
                            r.absorb(check_mcirc_factorization(lattice, subject, s, m, n));
                        }
                    }
                }
                r
            }
            Check::LargestQuotient => check_largest_quotient(lattice, subject),
            Check::Deflation => check_deflation_identities(lattice, subject),
            Check::MFactorization => check_m_factorization(lattice, subject),
            Check::UnitConstants => check_unit_constants(lattice, subject),
            Check::IdempotentSums => check_idempotent_sums(lattice, subject),
            Check::TSliceCounterexample => unreachable!("not a per-group check"),
        };
        reports.push(report);
    }
    reports
}

/// The named elements of the `C2 × D8` scenario.
pub struct CounterexampleSetup {
    pub lattice: Arc<SubgroupLattice>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    /// `⟨a, b⟩`
    pub s: usize,
    /// `⟨ad⟩`
    pub n: usize,
    /// `⟨d⟩`
    pub m: usize,
}

impl CounterexampleSetup {
    pub fn build() -> Result<Self> {
        let c2 = Arc::new(Family::Cyclic(2).build(usize::MAX)?);
        let d8 = Arc::new(Family::Dihedral(8).build(usize::MAX)?);
        let (g, _, _) = direct_product(&c2, &d8, usize::MAX)?;
        let g = Arc::new(Arc::unwrap_or_clone(g).with_label("C2 x D8"));
        let [a, b, c]: [usize; 3] = g
            .generators()
            .try_into()
            .map_err(|_| Error::Invariant("C2 x D8 should have three generators".into()))?;
        let d = g.mul(c, c);
        let lattice = Arc::new(SubgroupLattice::build(&g, usize::MAX)?);
        let find = |elements: &[usize]| lattice.index_of(&Subgroup::generated_by(&g, elements)?);
        Ok(CounterexampleSetup {
            a,
            b,
            c,
            d,
            s: find(&[a, b])?,
            n: find(&[g.mul(a, d)])?,
            m: find(&[d])?,
            lattice,
        })
    }
}

/// Checks that T-slices admit no largest quotient: in `G = C2 × D8` with
/// `S = ⟨a, b⟩`, `N = ⟨ad⟩`, `M = ⟨d⟩`, both `(G/N, SN/N)` and `(G/M, SM/M)` are
/// T-slice quotients of the non-T-slice `(G, S)`, and no T-slice quotient of
/// `(G, S)` has both of them as quotients.
pub fn tslice_counterexample() -> CheckReport {
    let mut report = CheckReport::new(Check::TSliceCounterexample, "C2 x D8");
    if let Err(e) = counterexample_assertions(&mut report) {
        report.error("G=C2 x D8".into(), &e);
    }
    report
}

fn counterexample_assertions(report: &mut CheckReport) -> Result<()> {
    let setup = CounterexampleSetup::build()?;
    let lattice = &setup.lattice;
    let g = lattice.group();
    let mut assert = |statement: &str, holds: bool| {
        report.expect(|| format!("G=C2 x D8: {statement}"), holds, statement);
        report.assertions.push(Assertion {
            statement: statement.to_string(),
            holds,
        });
    };
    let d8 = Arc::new(Family::Dihedral(8).build(usize::MAX)?);
    let e8 = Arc::new(Family::ElementaryAbelian { p: 2, k: 3 }.build(usize::MAX)?);
    let v4 = Arc::new(Family::ElementaryAbelian { p: 2, k: 2 }.build(usize::MAX)?);
    let center = g.center_set();

    assert("|G| = 16", g.order() == 16);
    assert(
        "a, b have order 2 and c has order 4",
        g.element_order(setup.a) == 2 && g.element_order(setup.b) == 2 && g.element_order(setup.c) == 4,
    );
    assert(
        "|N| = |M| = 2",
        lattice.order_of(setup.n) == 2 && lattice.order_of(setup.m) == 2,
    );
    assert(
        "N and M are central in G",
        lattice.members(setup.n).is_subset(&center) && lattice.members(setup.m).is_subset(&center),
    );
    let qn = lattice.quotient(setup.n)?;
    let qm = lattice.quotient(setup.m)?;
    assert("G/N ≅ D8", are_isomorphic(qn.group(), &d8).is_some());
    assert("G/M ≅ (C2)^3", are_isomorphic(qm.group(), &e8).is_some());
    let (s_group, _) = lattice.subgroup(setup.s).to_group();
    assert("S ≅ C2 x C2", are_isomorphic(&s_group, &v4).is_some());
    let tn = is_t_slice(qn.lattice(), qn.image_of(setup.s))?.holds;
    let tm = is_t_slice(qm.lattice(), qm.image_of(setup.s))?.holds;
    assert("(G/N, SN/N) and (G/M, SM/M) are T-slices", tn && tm);
    assert("(G, S) is not a T-slice", !is_t_slice(lattice, setup.s)?.holds);

    let slice_n = Slice::of_group(qn.lattice().subgroup(qn.image_of(setup.s)).clone());
    let slice_m = Slice::of_group(qm.lattice().subgroup(qm.image_of(setup.s)).clone());
    let mut universal = Vec::new();
    for l in lattice.normal_subgroups() {
        let q = lattice.quotient(l)?;
        let u = q.image_of(setup.s);
        if is_t_slice(q.lattice(), u)?.holds
            && quotient_witness(q.lattice(), u, &slice_n)?.is_some()
            && quotient_witness(q.lattice(), u, &slice_m)?.is_some()
        {
            universal.push(l);
        }
    }
    assert(
        "no T-slice quotient of (G, S) has both (G/N, SN/N) and (G/M, SM/M) as quotients",
        universal.is_empty(),
    );
    Ok(())
}

/// Outcome of a catalog run.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub reports: Vec<CheckReport>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().map(|r| r.failures.len()).sum()
    }
}

/// Builds one catalog entry and its lattice, or explains why it was skipped.
pub fn prepare(expr: &str, cap: usize) -> Result<Arc<SubgroupLattice>> {
    let group: Arc<FiniteGroup> = GroupExpr::parse(expr)?.build(cap)?;
    Ok(Arc::new(SubgroupLattice::build(&group, cap)?))
}

/// Runs the selected checks over every catalog group; groups are processed
/// concurrently and reports come back in catalog order.
pub fn run_all(catalog: &[String], checks: &[Check], cap: usize) -> Summary {
    let per_group: Vec<Vec<CheckReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = catalog
            .iter()
            .map(|expr| scope.spawn(move || run_group(expr, checks, cap)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let mut reports: Vec<CheckReport> = per_group.into_iter().flatten().collect();
    if checks.contains(&Check::TSliceCounterexample) {
        reports.push(tslice_counterexample());
    }
    Summary { reports }
}

fn run_group(expr: &str, checks: &[Check], cap: usize) -> Vec<CheckReport> {
    match prepare(expr, cap) {
        Ok(lattice) => check_group(&lattice, expr, checks),
        Err(e) => {
            let mut r = CheckReport::new(Check::Crapo, expr);
            r.check = "skipped".into();
            r.skipped = Some(e.to_string());
            vec![r]
        }
    }
}
