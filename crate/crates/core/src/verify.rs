//! Verification pipelines for the family constructions and the
//! characterizations they realise.
//!
//! Every pipeline returns a [`VerificationReport`] listing what it checked,
//! or [`Error::VerificationFailed`] carrying the first counterexample.

use std::collections::BTreeSet;
use std::fmt;

use crate::census::{census_with, CensusOptions, CensusResult};
use crate::criticality::{classify, component_shapes, edge_set, IndecomposabilityGraph, Shape};
use crate::er::{compute_partition, find_indecomposable_extension_pair, ErClass};
use crate::error::{Error, Result};
use crate::families::{all_minus1_members, dual_isomorphism, t_family, u_family, v_family, Family, FamilySpec};
use crate::interval::{is_indecomposable, is_indecomposable_in, is_interval_in, is_trivial_in};
use crate::iso::{canonical_form, find_isomorphism, CanonicalForm};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Orders up to which the characterizations are cross-checked against a
/// full census.
pub const EXHAUSTIVE_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub lines: Vec<String>,
}

impl VerificationReport {
    fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), lines: Vec::new() }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.lines.extend(other.lines.into_iter().map(|l| format!("{}: {l}", other.suite)));
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "[{}] {l}", self.suite)?;
        }
        Ok(())
    }
}

fn fail(suite: &str, detail: impl Into<String>) -> Error {
    Error::VerificationFailed { suite: suite.into(), detail: detail.into() }
}

fn ensure(suite: &str, cond: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(suite, detail()))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub jobs: usize,
    /// Run the census cross-check when the order allows it.
    pub exhaustive: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: 1, exhaustive: true }
    }
}

/// Pairwise non-isomorphism by direct search, usable beyond the canonical
/// form limit. Returns the first isomorphic pair.
fn first_isomorphic_pair<L: fmt::Display>(items: &[(L, Tournament)]) -> Option<(&L, &L)> {
    for (i, (li, ti)) in items.iter().enumerate() {
        for (lj, tj) in &items[i + 1..] {
            if find_isomorphism(ti, tj).is_some() {
                return Some((li, lj));
            }
        }
    }
    None
}

fn canonical_set<'a>(ts: impl IntoIterator<Item = &'a Tournament>) -> Result<BTreeSet<CanonicalForm>> {
    ts.into_iter().map(canonical_form).collect()
}

fn census_classes(census: &CensusResult, k: usize) -> BTreeSet<CanonicalForm> {
    census.classes_with_k(k).iter().map(|c| c.canonical.clone()).collect()
}

/// The nontrivial interval of `W - i` exhibited for every vertex `i` other
/// than the pivot `2k+1` of a two-sided member `W`, in original labels.
pub fn removal_witness(spec: &FamilySpec, i: usize) -> Option<VertexSet> {
    let k = spec.k?;
    let n = spec.n;
    let top = 2 * n;
    if i > top || i == 2 * k + 1 {
        return None;
    }
    let lower_half = matches!(spec.family, Family::G | Family::GDual | Family::H);
    Some(match i {
        0 => VertexSet::range(2, top + 1),
        i if i == top => VertexSet::range(0, top - 1),
        i if i == 2 * k - 1 && spec.family == Family::H => VertexSet::from([i - 1, i + 2]),
        i if i == top - 1 && lower_half => VertexSet::range(0, top - 2).with(top),
        i => VertexSet::from([i - 1, i + 1]),
    })
}

/// Every vertex of every member except the pivot has its named witness as
/// a nontrivial interval of `W - i`.
pub fn verify_removal_witnesses(n: usize) -> Result<VerificationReport> {
    const SUITE: &str = "witnesses";
    let mut report = VerificationReport::new(SUITE);
    let mut checked = 0;
    for (spec, w) in all_minus1_members(n)? {
        let pivot = spec.pivot().expect("two-sided member");
        for i in w.vertices().without(pivot) {
            let scope = w.vertices().without(i);
            let x = removal_witness(&spec, i).expect("witness defined off the pivot");
            ensure(SUITE, x.is_subset(scope) && !is_trivial_in(scope, x), || {
                format!("{spec} - {i}: named set {x} is not a nontrivial subset")
            })?;
            ensure(SUITE, is_interval_in(&w, scope, x), || format!("{spec} - {i}: {x} is not an interval"))?;
            checked += 1;
        }
    }
    report.line(format!("n={n}: {checked} removal witnesses verified"));
    Ok(report)
}

/// Members are indecomposable with the pivot as sole non-critical vertex,
/// `T - pivot` is indecomposable, members are pairwise non-isomorphic and
/// there are `6(n-2) = 3(2n+1) - 15` of them. At order 7 the members are
/// compared class for class with a full census.
pub fn verify_minus1_characterization(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    const SUITE: &str = "minus1";
    let mut report = VerificationReport::new(SUITE);
    let members = all_minus1_members(n)?;
    let m = 2 * n + 1;
    for (spec, t) in &members {
        let pivot = spec.pivot().expect("two-sided member");
        ensure(SUITE, is_indecomposable(t), || format!("{spec} is decomposable"))?;
        let r = classify(t)?;
        ensure(SUITE, r.k == 1 && r.non_critical == VertexSet::singleton(pivot), || {
            format!("{spec}: non-critical set is {} (expected {{{pivot}}})", r.non_critical)
        })?;
        ensure(SUITE, is_indecomposable_in(t, t.vertices().without(pivot)), || {
            format!("{spec} - {pivot} is decomposable")
        })?;
    }
    report.line(format!("n={n}: all {} members indecomposable with single non-critical vertex 2k+1", members.len()));

    if let Some((a, b)) = first_isomorphic_pair(&members) {
        return Err(fail(SUITE, format!("{a} and {b} are isomorphic")));
    }
    report.line(format!("n={n}: members pairwise non-isomorphic"));

    let expected = 6 * (n - 2);
    ensure(SUITE, members.len() == expected && expected == 3 * m - 15, || {
        format!("member count {} differs from 6(n-2) = {expected}", members.len())
    })?;
    report.line(format!("n={n}: count {} = 6(n-2) = 3m-15 with m={m}", members.len()));

    report.absorb(verify_removal_witnesses(n)?);

    if opts.exhaustive && m <= EXHAUSTIVE_ORDER {
        let census = census_with(m, &CensusOptions { jobs: opts.jobs, relabel: None })?;
        let found = census_classes(&census, 1);
        let built = canonical_set(members.iter().map(|(_, t)| t))?;
        ensure(SUITE, found == built, || {
            format!(
                "census finds {} classes with one non-critical vertex, constructions give {}",
                found.len(),
                built.len()
            )
        })?;
        report.line(format!(
            "m={m}: census classes with k=1 coincide with the {} members ({} labeled)",
            found.len(),
            census.labeled_with_k(1)
        ));
    }
    Ok(report)
}

/// `T_{2n+1}`, `U_{2n+1}`, `V_{2n+1}` are critical and pairwise
/// non-isomorphic; at orders up to 7 they are the only critical classes.
pub fn verify_critical_characterization(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    const SUITE: &str = "critical";
    if n < 2 {
        return Err(Error::BadParams(format!("need n >= 2, got {n}")));
    }
    let mut report = VerificationReport::new(SUITE);
    let members = vec![
        (FamilySpec { family: Family::T, n, k: None }, t_family(n)?),
        (FamilySpec { family: Family::U, n, k: None }, u_family(n)?),
        (FamilySpec { family: Family::V, n, k: None }, v_family(n)?),
    ];
    for (spec, t) in &members {
        let r = classify(t).map_err(|e| fail(SUITE, format!("{spec}: {e}")))?;
        ensure(SUITE, r.is_critical(), || format!("{spec} has non-critical vertices {}", r.non_critical))?;
    }
    report.line(format!("n={n}: T, U, V of order {} are critical", 2 * n + 1));
    if let Some((a, b)) = first_isomorphic_pair(&members) {
        return Err(fail(SUITE, format!("{a} and {b} are isomorphic")));
    }
    report.line(format!("n={n}: T, U, V pairwise non-isomorphic"));

    let m = 2 * n + 1;
    if opts.exhaustive && m <= EXHAUSTIVE_ORDER {
        let census = census_with(m, &CensusOptions { jobs: opts.jobs, relabel: None })?;
        let found = census_classes(&census, 0);
        let built = canonical_set(members.iter().map(|(_, t)| t))?;
        ensure(SUITE, found == built, || {
            format!("census finds {} critical classes at order {m}, expected {}", found.len(), built.len())
        })?;
        report.line(format!(
            "m={m}: census critical classes = {{T, U, V}} ({} labeled of {} indecomposable)",
            census.labeled_with_k(0),
            census.indecomposable
        ));
    }
    Ok(report)
}

/// Expected indecomposability graph of a two-sided member.
pub fn expected_graph(spec: &FamilySpec) -> Option<IndecomposabilityGraph> {
    let k = spec.k?;
    let top = 2 * spec.n;
    let mut g = IndecomposabilityGraph::path(top + 1);
    match spec.family {
        Family::E | Family::F | Family::FDual => {}
        Family::G | Family::GDual => g.remove_edge(top - 1, top),
        Family::H => {
            g.remove_edge(top - 1, top);
            g.remove_edge(2 * k - 1, 2 * k);
            g.remove_edge(2 * k, 2 * k + 1);
            g.add_edge(2 * k - 1, 2 * k + 1);
        }
        _ => return None,
    }
    Some(g)
}

fn expected_isolated(family: Family) -> usize {
    match family {
        Family::G | Family::GDual => 1,
        Family::H => 2,
        _ => 0,
    }
}

/// Computed indecomposability graphs match the expected edits of the path
/// edge for edge.
pub fn verify_graph_shapes(n: usize) -> Result<VerificationReport> {
    const SUITE: &str = "graphs";
    let mut report = VerificationReport::new(SUITE);
    for (spec, t) in all_minus1_members(n)? {
        let r = classify(&t)?;
        let want = expected_graph(&spec).expect("two-sided member");
        ensure(SUITE, r.graph == want, || {
            format!("{spec}: I(T) = {:?}, expected {:?}", edge_set(&r.graph), edge_set(&want))
        })?;
        let isolated = r.isolated_count();
        ensure(SUITE, isolated == expected_isolated(spec.family) && isolated <= 2, || {
            format!("{spec}: {isolated} isolated vertices")
        })?;
        report.line(format!("{spec}: {} edges, {isolated} isolated", r.graph.edge_count()));
    }
    Ok(report)
}

/// Structural facts about the indecomposability graph of an indecomposable
/// tournament with exactly one non-critical vertex. Returns the first
/// violated one.
pub fn check_structure(t: &Tournament) -> std::result::Result<(), String> {
    let r = classify(t).map_err(|e| e.to_string())?;
    let all = t.vertices();
    for x in r.critical {
        let nb = r.graph.neighbours(x);
        match nb.len() {
            0 => {}
            1 => {
                let y = nb.min().unwrap();
                let rest = all.without(x).without(y);
                if !is_interval_in(t, all.without(x), rest) {
                    return Err(format!("critical {x} with sole neighbour {y}: {rest} is not an interval of T - {x}"));
                }
            }
            2 => {
                if !is_interval_in(t, all.without(x), nb) {
                    return Err(format!("critical {x}: neighbours {nb} are not an interval of T - {x}"));
                }
            }
            d => return Err(format!("critical vertex {x} has degree {d} in I(T)")),
        }
    }
    if r.k != 1 {
        return Ok(());
    }
    let big: Vec<_> = r.components.iter().filter(|c| c.vertices.len() >= 2).collect();
    if big.len() != 1 {
        return Err(format!("{} components of size >= 2", big.len()));
    }
    if big[0].shape != Shape::Path {
        return Err(format!("large component {} has shape {}", big[0].vertices, big[0].shape));
    }
    let a = r.non_critical.min().unwrap();
    if r.graph.degree(a) != 2 {
        return Err(format!("non-critical vertex {a} has degree {}", r.graph.degree(a)));
    }
    let dual = classify(&t.dual()).map_err(|e| e.to_string())?;
    if dual.non_critical != r.non_critical || dual.graph != r.graph {
        return Err("dual has different critical vertices or graph".into());
    }
    Ok(())
}

/// Degree/interval dichotomy at critical vertices, a unique component with
/// two or more vertices that is a path, and degree two at the non-critical
/// vertex, for every member of order `2n+1`.
pub fn verify_structural_lemmas(n: usize) -> Result<VerificationReport> {
    const SUITE: &str = "lemmas";
    let mut report = VerificationReport::new(SUITE);
    let members = all_minus1_members(n)?;
    for (spec, t) in &members {
        check_structure(t).map_err(|e| fail(SUITE, format!("{spec}: {e}")))?;
        // the shape facts need not hold elsewhere, but they must hold here
        let r = classify(t)?;
        ensure(SUITE, component_shapes(&r.graph).iter().any(|c| c.shape == Shape::Path), || {
            format!("{spec}: no path component")
        })?;
    }
    report.line(format!("n={n}: structure of I(T) verified on {} members", members.len()));
    Ok(report)
}

/// No tournament of order 4, 5 or 6 has exactly one non-critical vertex.
pub fn verify_no_small_minus1(opts: &VerifyOptions) -> Result<VerificationReport> {
    const SUITE: &str = "small-orders";
    let mut report = VerificationReport::new(SUITE);
    for m in 4..=6 {
        let c = census_with(m, &CensusOptions { jobs: opts.jobs, relabel: None })?;
        ensure(SUITE, c.labeled_with_k(1) == 0, || {
            format!("order {m}: {} labeled tournaments with k=1", c.labeled_with_k(1))
        })?;
        report.line(format!("m={m}: {} indecomposable, none with k=1", c.indecomposable));
    }
    Ok(report)
}

/// `apply(dual(W), σ)` equals the partner member for `E` and `H`.
pub fn verify_dual_isomorphisms(n: usize) -> Result<VerificationReport> {
    const SUITE: &str = "duals";
    let mut report = VerificationReport::new(SUITE);
    if n < 3 {
        return Err(Error::BadParams(format!("need n >= 3, got {n}")));
    }
    for k in 1..=n - 2 {
        for fam in [Family::E, Family::H] {
            let spec = FamilySpec::two_sided(fam, n, k);
            let partner = FamilySpec::two_sided(fam, n, n - k - 1);
            let sigma = dual_isomorphism(fam, n, k)?;
            let image = spec.build()?.dual().apply(&sigma)?;
            ensure(SUITE, image == partner.build()?, || {
                format!("σ = {sigma} does not carry dual({spec}) onto {partner}")
            })?;
            report.line(format!("dual({spec}) ≅ {partner} via σ = {sigma}"));
        }
    }
    Ok(report)
}

/// Counters for [`verify_er_instance`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ErTally {
    pub partitions: usize,
    pub extension_pairs: usize,
}

/// Checks one `(T, X)` instance: partition exactness, the three
/// two-vertex lemmas, and (when `T` is indecomposable and at least two
/// vertices lie outside) that an extension pair exists.
pub fn verify_er_instance(t: &Tournament, x: VertexSet, tally: &mut ErTally) -> std::result::Result<(), String> {
    let p = compute_partition(t, x).map_err(|e| format!("base {x}: {e}"))?;
    let outside = t.vertices() - x;
    let mut union = VertexSet::EMPTY;
    for b in p.blocks() {
        if !union.is_disjoint(b) {
            return Err(format!("base {x}: overlapping blocks"));
        }
        union = union | b;
    }
    if union != outside {
        return Err(format!("base {x}: blocks cover {union}, expected {outside}"));
    }
    for (&u, &attached) in &p.attached {
        for v in attached {
            if !is_interval_in(t, x.with(v), VertexSet::from([u, v])) {
                return Err(format!("base {x}: {v} ∈ X({u}) but {{{u},{v}}} is not an interval"));
            }
        }
    }
    for a in outside {
        for b in outside.iter().filter(|&b| b != a) {
            let scope = x.with(a).with(b);
            if is_indecomposable_in(t, scope) {
                continue;
            }
            let ok = match (p.class_of(a), p.class_of(b)) {
                (Some(ErClass::Attached(u)), cb) if cb != Some(ErClass::Attached(u)) => {
                    is_interval_in(t, scope, VertexSet::from([u, a]))
                }
                (Some(ErClass::Bracket), cb) if cb != Some(ErClass::Bracket) => is_interval_in(t, scope, x.with(b)),
                (Some(ErClass::Ext), Some(ErClass::Ext)) => is_interval_in(t, scope, VertexSet::from([a, b])),
                _ => true,
            };
            if !ok {
                return Err(format!("base {x}: decomposable extension by {{{a},{b}}} has the wrong interval"));
            }
        }
    }
    tally.partitions += 1;
    if outside.len() >= 2 && is_indecomposable(t) {
        find_indecomposable_extension_pair(t, x).map_err(|e| format!("base {x}: {e}"))?;
        tally.extension_pairs += 1;
    }
    Ok(())
}

/// All bases `X` with `|X| >= 3` and `T(X)` indecomposable.
pub fn indecomposable_bases(t: &Tournament) -> Vec<VertexSet> {
    (0..1u64 << t.order()).map(VertexSet::from_bits).filter(|x| x.len() >= 3 && is_indecomposable_in(t, *x)).collect()
}

/// The outside-vertex classifications used to build the members inductively.
///
/// With `S = {0, .., 2n}` and pivot `p = 2k+1`: when `n = k + 2`, for
/// `X = S - {p, p+1}` one has `p ∈ X(p+2)` and `p+1 ∈ Ext(X)`; when
/// `n > k + 2`, for `X = S - {p+1, p+2}` one has `p+1 ∈ X(p+3)` and
/// `p+2 ∈ X(p)`, and for `X' = X - {p}` one has `p+1 ∈ X'(p+3)` and
/// `p+2 ∈ Ext(X')`.
pub fn verify_construction_classes(n: usize) -> Result<VerificationReport> {
    const SUITE: &str = "er-construction";
    let mut report = VerificationReport::new(SUITE);
    for (spec, t) in all_minus1_members(n)? {
        let k = spec.k.unwrap();
        let p = 2 * k + 1;
        let all = t.vertices();
        let expect = |base: VertexSet, v: usize, class: ErClass| -> Result<()> {
            let part = compute_partition(&t, base).map_err(|e| fail(SUITE, format!("{spec}, base {base}: {e}")))?;
            ensure(SUITE, part.class_of(v) == Some(class), || {
                format!("{spec}, base {base}: {v} classified {:?}, expected {class:?}", part.class_of(v))
            })
        };
        if n == k + 2 {
            let x = all.without(p).without(p + 1);
            expect(x, p, ErClass::Attached(p + 2))?;
            expect(x, p + 1, ErClass::Ext)?;
        } else {
            let x = all.without(p + 1).without(p + 2);
            expect(x, p + 1, ErClass::Attached(p + 3))?;
            expect(x, p + 2, ErClass::Attached(p))?;
            let xp = x.without(p);
            expect(xp, p + 1, ErClass::Attached(p + 3))?;
            expect(xp, p + 2, ErClass::Ext)?;
        }
    }
    report.line(format!("n={n}: construction classifications hold for all members"));
    Ok(report)
}
