//! One function per subcommand; each returns the tables to print.

use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context as _, Result};
use slicegroup::burnside::m_table;
use slicegroup::verify::{self, Check};
use slicegroup::{
    beta, idempotent_e, is_b_group, is_t_circ_slice, is_t_slice, m_circ, m_slice, structure_name, tau_circ,
    xi_idempotent, BurnsideElement, FiniteGroup, GroupExpr, SliceBurnsideElement, Subgroup, SubgroupLattice,
};

use crate::cache::LatticeCache;
use crate::output::{Output, Table};
use crate::row;

/// Settings shared by every command.
pub struct Context {
    pub cap: usize,
    pub cache: LatticeCache,
}

/// A parsed and built group together with its lattice.
pub struct Loaded {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub lattice: Arc<SubgroupLattice>,
}

impl Context {
    pub fn load(&self, text: &str) -> Result<Loaded> {
        let expr = GroupExpr::parse(text).with_context(|| format!("cannot parse group expression {text:?}"))?;
        let group = expr.build(self.cap)?;
        let lattice = self.cache.lattice(&group, self.cap)?;
        Ok(Loaded {
            name: expr.to_string(),
            group,
            lattice,
        })
    }
}

fn idx(i: usize) -> String {
    format!("#{}", i + 1)
}

fn subgroup_name(lattice: &SubgroupLattice, i: usize) -> String {
    structure_name(&lattice.subgroup(i).to_group().0)
}

fn generator_list(lattice: &SubgroupLattice, i: usize) -> String {
    let gens = lattice.group().greedy_generators(lattice.members(i));
    let items: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Resolves `#k` (one-based lattice index) or `{g1,g2,...}` (the subgroup
/// generated by the listed element indices).
pub fn resolve_subgroup(lattice: &SubgroupLattice, text: &str) -> Result<usize> {
    let text = text.trim();
    if let Some(num) = text.strip_prefix('#') {
        let k: usize = num.trim().parse().map_err(|_| anyhow!("bad subgroup index {text:?}"))?;
        if k == 0 || k > lattice.len() {
            bail!("subgroup {text} not found: the group has {} subgroups", lattice.len());
        }
        return Ok(k - 1);
    }
    if let Some(body) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let group = lattice.group();
        let mut elements = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let e: usize = item.parse().map_err(|_| anyhow!("bad element {item:?} in {text:?}"))?;
            if e >= group.order() {
                bail!("element {e} not found: the group has order {}", group.order());
            }
            elements.push(e);
        }
        let sub = Subgroup::generated_by(group, &elements)?;
        return Ok(lattice.index_of(&sub)?);
    }
    bail!("cannot read subgroup {text:?}: use #k or {{g1,g2,...}}")
}

/// Resolves a pair `A,B` of subgroup addresses; commas inside braces do not split.
pub fn resolve_pair(lattice: &SubgroupLattice, text: &str) -> Result<(usize, usize)> {
    let mut depth = 0usize;
    for (pos, ch) in text.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                return Ok((resolve_subgroup(lattice, &text[..pos])?, resolve_subgroup(lattice, &text[pos + 1..])?));
            }
            _ => {}
        }
    }
    bail!("expected a pair of subgroups separated by a comma, got {text:?}")
}

fn property_table(name: &str) -> Table {
    Table::new(name, &["property", "value"])
}

pub fn info(ctx: &Context, expr: &str) -> Result<Output> {
    let g = ctx.load(expr)?;
    let group = &g.group;
    let lattice = &g.lattice;
    let mut out = Output::new(&g.name, "info");
    let mut t = property_table("info");
    t.push(row!["structure", structure_name(group)]);
    t.push(row!["order", group.order()]);
    t.push(row!["abelian", group.is_abelian()]);
    t.push(row!["center order", group.center_set().len()]);
    t.push(row!["conjugacy classes", group.conjugacy_classes().len()]);
    t.push(row!["subgroups", lattice.len()]);
    t.push(row!["subgroup classes", lattice.classes().len()]);
    t.push(row!["normal subgroups", lattice.normal_subgroups().len()]);
    out.tables.push(t);

    let mut spectrum: BTreeMap<usize, usize> = BTreeMap::new();
    for o in group.order_spectrum() {
        *spectrum.entry(o).or_default() += 1;
    }
    let mut t = Table::new("order spectrum", &["element order", "count"]);
    for (o, c) in spectrum {
        t.push(row![o, c]);
    }
    out.tables.push(t);

    let center = group.center_set();
    let mut t = Table::new("elements", &["element", "order", "central", "generator"]);
    for e in group.elements() {
        t.push(row![e, group.element_order(e), center.contains(e), group.generators().contains(&e)]);
    }
    out.tables.push(t);
    Ok(out)
}

pub fn subgroups(ctx: &Context, expr: &str) -> Result<Output> {
    let g = ctx.load(expr)?;
    let lattice = &g.lattice;
    let mut out = Output::new(&g.name, "subgroups");
    let mut t = Table::new(
        "subgroups",
        &["subgroup", "order", "structure", "class", "normal", "normalizer", "generators"],
    );
    for i in 0..lattice.len() {
        t.push(row![
            idx(i),
            lattice.order_of(i),
            subgroup_name(lattice, i),
            idx(lattice.class_of(i)),
            lattice.is_normal(i),
            idx(lattice.normalizer(i)),
            generator_list(lattice, i),
        ]);
    }
    out.tables.push(t);
    let mut t = Table::new("classes", &["class", "size", "order", "members"]);
    for (c, members) in lattice.classes().iter().enumerate() {
        let list: Vec<String> = members.iter().map(|&i| idx(i)).collect();
        t.push(row![idx(c), members.len(), lattice.order_of(members[0]), list.join(" ")]);
    }
    out.tables.push(t);
    Ok(out)
}

pub fn mobius(ctx: &Context, expr: &str, pair: Option<&str>) -> Result<Output> {
    let g = ctx.load(expr)?;
    let lattice = &g.lattice;
    let top = lattice.top();
    let mut out = Output::new(&g.name, "mobius");
    let mut t = Table::new("mobius", &["X", "order", "mu(X,G)"]);
    for x in 0..lattice.len() {
        t.push(row![idx(x), lattice.order_of(x), lattice.mobius(x, top)?]);
    }
    out.tables.push(t);
    if let Some(pair) = pair {
        let (x, y) = resolve_pair(lattice, pair)?;
        let value = lattice
            .mobius(x, y)
            .with_context(|| format!("{} is not contained in {}", idx(x), idx(y)))?;
        let mut t = Table::new("mobius pair", &["X", "Y", "mu(X,Y)"]);
        t.push(row![idx(x), idx(y), value]);
        out.tables.push(t);
    }
    Ok(out)
}

pub fn burnside(ctx: &Context, expr: &str, with_m: bool, with_beta: bool) -> Result<Output> {
    let g = ctx.load(expr)?;
    let lattice = &g.lattice;
    let mut out = Output::new(&g.name, "burnside");
    let mut t = Table::new("idempotents", &["H", "K", "coefficient"]);
    for class in lattice.classes() {
        let e: BurnsideElement = idempotent_e(lattice, class[0]);
        for (k, c) in e.terms() {
            t.push(row![idx(class[0]), idx(lattice.classes()[k][0]), c]);
        }
    }
    out.tables.push(t);
    if with_m {
        let mut t = Table::new("m-table", &["N", "m", "subgroup"]);
        for (n, m) in m_table(lattice) {
            t.push(row![subgroup_name(lattice, n), m, idx(n)]);
        }
        out.tables.push(t);
    }
    if with_beta {
        let b = beta(lattice)?;
        let cert = is_b_group(lattice);
        let maximal: Vec<String> = b.maximal.iter().map(|&n| idx(n)).collect();
        let mut t = property_table("beta");
        t.push(row!["beta", structure_name(b.quotient.group())]);
        t.push(row!["beta order", b.quotient.group().order()]);
        t.push(row!["witness N", idx(b.witness)]);
        t.push(row!["witness structure", subgroup_name(lattice, b.witness)]);
        t.push(row!["maximal choices", maximal.join(" ")]);
        t.push(row!["G is a B-group", cert.is_b_group]);
        out.tables.push(t);
    }
    Ok(out)
}

pub struct SliceOptions<'a> {
    pub xi: Option<&'a str>,
    pub m_table: Option<&'a str>,
    pub tslice: Option<&'a str>,
    pub t0slice: Option<&'a str>,
}

pub fn slices(ctx: &Context, expr: &str, opts: SliceOptions<'_>) -> Result<Output> {
    let g = ctx.load(expr)?;
    let lattice = &g.lattice;
    let mut out = Output::new(&g.name, "slices");
    let classes = lattice.slice_classes();
    let mut t = Table::new("slice classes", &["class", "T", "S", "T structure", "S structure", "size"]);
    for (c, members) in classes.classes().iter().enumerate() {
        let (top, bottom) = members[0];
        t.push(row![
            idx(c),
            idx(top),
            idx(bottom),
            subgroup_name(lattice, top),
            subgroup_name(lattice, bottom),
            members.len(),
        ]);
    }
    out.tables.push(t);
    if let Some(text) = opts.xi {
        let (top, bottom) = resolve_pair(lattice, text)?;
        let xi: SliceBurnsideElement = xi_idempotent(lattice, top, bottom)?;
        let mut t = Table::new("xi", &["V", "U", "coefficient"]);
        for (c, value) in xi.terms() {
            let (v, u) = classes.representative(c);
            t.push(row![idx(v), idx(u), value]);
        }
        out.tables.push(t);
    }
    if let Some(text) = opts.m_table {
        let s = resolve_subgroup(lattice, text)?;
        let mut t = Table::new("slice m-table", &["N", "m", "m°", "subgroup"]);
        for n in lattice.normal_subgroups() {
            t.push(row![subgroup_name(lattice, n), m_slice(lattice, s, n)?, m_circ(lattice, s, n)?, idx(n)]);
        }
        out.tables.push(t);
    }
    if let Some(text) = opts.tslice {
        let s = resolve_subgroup(lattice, text)?;
        let cert = is_t_slice(lattice, s)?;
        let mut t = Table::new("T-slice evidence", &["N", "m", "subgroup"]);
        for (n, m) in &cert.table {
            t.push(row![subgroup_name(lattice, *n), m, idx(*n)]);
        }
        out.tables.push(t);
        let mut t = property_table("T-slice");
        t.push(row!["S", idx(s)]);
        t.push(row!["T-slice", cert.holds]);
        out.tables.push(t);
    }
    if let Some(text) = opts.t0slice {
        let s = resolve_subgroup(lattice, text)?;
        let cert = is_t_circ_slice(lattice, s)?;
        let mut t = Table::new("T°-slice evidence", &["N", "m°", "subgroup"]);
        for (n, m) in &cert.table {
            t.push(row![subgroup_name(lattice, *n), *m, idx(*n)]);
        }
        out.tables.push(t);
        let mut t = property_table("T°-slice");
        t.push(row!["S", idx(s)]);
        t.push(row!["T°-slice", cert.holds]);
        out.tables.push(t);
    }
    Ok(out)
}

pub fn tau0(ctx: &Context, expr: &str, slice: &str) -> Result<Output> {
    let g = ctx.load(expr)?;
    let lattice = &g.lattice;
    let s = resolve_subgroup(lattice, slice)?;
    let tau = tau_circ(lattice, s)?;
    let q = &tau.quotient;
    let maximal: Vec<String> = tau.maximal.iter().map(|&m| idx(m)).collect();
    let mut out = Output::new(&g.name, "tau0");
    let mut t = property_table("tau0");
    t.push(row!["S", idx(s)]);
    t.push(row![
        "slice",
        format!("({}, {})", structure_name(q.group()), subgroup_name(q.lattice(), tau.bottom))
    ]);
    t.push(row!["M", subgroup_name(lattice, tau.kernel)]);
    t.push(row!["M subgroup", idx(tau.kernel)]);
    t.push(row!["maximal choices", maximal.join(" ")]);
    t.push(row!["image of S", format!("{} in G/M", idx(tau.bottom))]);
    out.tables.push(t);
    let mut t = Table::new("projection", &["element", "image"]);
    for e in g.group.elements() {
        t.push(row![e, tau.projection().apply(e)]);
    }
    out.tables.push(t);
    Ok(out)
}

/// Reads a catalog file: one group expression per line; blank lines and
/// lines starting with `//` or `;` are ignored.
pub fn read_catalog(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with("//") && !l.starts_with(';'))
        .map(str::to_string)
        .collect()
}

/// Runs the verification suite; the flag is `true` when everything passed.
pub fn verify(ctx: &Context, catalog: Option<Vec<String>>, check: Option<&str>) -> Result<(Output, bool)> {
    let checks: Vec<Check> = match check {
        None => Check::ALL.to_vec(),
        Some(name) => vec![Check::from_name(name).ok_or_else(|| {
            let names: Vec<&str> = Check::ALL.iter().map(Check::name).collect();
            anyhow!("unknown check {name:?}; available: {}", names.join(", "))
        })?],
    };
    let catalog = catalog.unwrap_or_else(|| verify::DEFAULT_CATALOG.iter().map(|s| s.to_string()).collect());
    let summary = verify::run_all(&catalog, &checks, ctx.cap);
    let mut out = Output::new("catalog", "verify");
    let mut t = Table::new("checks", &["check", "group", "instances", "failures", "status"]);
    for r in &summary.reports {
        let status = match (&r.skipped, r.passed()) {
            (Some(reason), _) => format!("SKIP ({reason})"),
            (None, true) => "PASS".into(),
            (None, false) => "FAIL".into(),
        };
        t.push(row![r.check.clone(), r.subject.clone(), r.instances as i64, r.failures.len(), status]);
    }
    out.tables.push(t);
    if !summary.passed() {
        let mut t = Table::new("failures", &["check", "inputs", "lhs", "rhs"]);
        for r in &summary.reports {
            for f in &r.failures {
                t.push(row![r.check.clone(), f.inputs.clone(), f.lhs.clone(), f.rhs.clone()]);
            }
        }
        out.tables.push(t);
    }
    let mut t = property_table("summary");
    t.push(row!["groups", catalog.len()]);
    t.push(row!["instances", summary.reports.iter().map(|r| r.instances).sum::<u64>() as i64]);
    t.push(row!["failures", summary.failures()]);
    t.push(row!["verdict", if summary.passed() { "PASS" } else { "FAIL" }]);
    out.tables.push(t);
    Ok((out, summary.passed()))
}

pub fn counterexample() -> (Output, bool) {
    let report = verify::tslice_counterexample();
    let mut out = Output::new(report.subject.clone(), "remark22");
    let mut t = Table::new("assertions", &["assertion", "holds"]);
    for a in &report.assertions {
        t.push(row![a.statement.clone(), a.holds]);
    }
    out.tables.push(t);
    if !report.passed() {
        let mut t = Table::new("failures", &["inputs", "lhs", "rhs"]);
        for f in &report.failures {
            t.push(row![f.inputs.clone(), f.lhs.clone(), f.rhs.clone()]);
        }
        out.tables.push(t);
    }
    let mut t = property_table("summary");
    t.push(row!["verdict", if report.passed() { "PASS" } else { "FAIL" }]);
    out.tables.push(t);
    (out, report.passed())
}
