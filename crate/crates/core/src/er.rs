//! Classification of the vertices outside an indecomposable subtournament.
//!
//! For `X` with `|X| >= 3` and `T(X)` indecomposable, each `x` outside `X`
//! falls in exactly one of
//!
//! * `[X]`: `x` dominates all of `X` or is dominated by all of it;
//! * `X(u)` for one `u ∈ X`: `{u, x}` is an interval of `T(X ∪ {x})`;
//! * `Ext(X)`: `T(X ∪ {x})` is indecomposable.
//!
//! Each membership is decided by its own definition and the results are
//! cross-checked for exclusivity and coverage instead of being assumed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{is_indecomposable, is_indecomposable_in, is_interval_in};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ErClass {
    Bracket,
    Attached(usize),
    Ext,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErPartition {
    pub base: VertexSet,
    /// `[X]`
    pub bracket: VertexSet,
    /// `Ext(X)`
    pub ext: VertexSet,
    /// `u ↦ X(u)` for every `u ∈ X`, empty sets included.
    pub attached: BTreeMap<usize, VertexSet>,
}

impl ErPartition {
    pub fn attached_to(&self, u: usize) -> VertexSet {
        self.attached.get(&u).copied().unwrap_or_default()
    }

    pub fn class_of(&self, x: usize) -> Option<ErClass> {
        if self.bracket.contains(x) {
            return Some(ErClass::Bracket);
        }
        if self.ext.contains(x) {
            return Some(ErClass::Ext);
        }
        self.attached.iter().find(|(_, s)| s.contains(x)).map(|(&u, _)| ErClass::Attached(u))
    }

    /// All the blocks, in the order `[X]`, `Ext(X)`, then `X(u)` by `u`.
    pub fn blocks(&self) -> impl Iterator<Item = VertexSet> + '_ {
        [self.bracket, self.ext].into_iter().chain(self.attached.values().copied())
    }
}

fn check_base(t: &Tournament, x: VertexSet) -> Result<()> {
    t.check_set(x)?;
    if x.len() < 3 {
        return Err(Error::PreconditionViolated(format!("base set {x} has fewer than 3 vertices")));
    }
    if !is_indecomposable_in(t, x) {
        return Err(Error::PreconditionViolated(format!("subtournament on {x} is decomposable")));
    }
    Ok(())
}

/// Independent membership tests for a single outside vertex.
fn memberships(t: &Tournament, x: VertexSet, v: usize) -> Vec<ErClass> {
    let mut found = Vec::new();
    let hit = t.row(v) & x.bits();
    if hit == 0 || hit == x.bits() {
        found.push(ErClass::Bracket);
    }
    let grown = x.with(v);
    for u in x {
        if is_interval_in(t, grown, VertexSet::from([u, v])) {
            found.push(ErClass::Attached(u));
        }
    }
    if is_indecomposable_in(t, grown) {
        found.push(ErClass::Ext);
    }
    found
}

pub fn compute_partition(t: &Tournament, x: VertexSet) -> Result<ErPartition> {
    check_base(t, x)?;
    let mut part = ErPartition {
        base: x,
        bracket: VertexSet::EMPTY,
        ext: VertexSet::EMPTY,
        attached: x.iter().map(|u| (u, VertexSet::EMPTY)).collect(),
    };
    for v in t.vertices() - x {
        match memberships(t, x, v).as_slice() {
            [ErClass::Bracket] => part.bracket.insert(v),
            [ErClass::Ext] => part.ext.insert(v),
            [ErClass::Attached(u)] => part.attached.get_mut(u).expect("u in base").insert(v),
            classes => return Err(Error::PartitionConflict { vertex: v, classes: format!("{classes:?}") }),
        }
    }
    Ok(part)
}

/// First pair `x < y` outside `X`, in lexicographic order, such that
/// `T(X ∪ {x, y})` is indecomposable.
pub fn find_indecomposable_extension_pair(t: &Tournament, x: VertexSet) -> Result<(usize, usize)> {
    check_base(t, x)?;
    let outside = t.vertices() - x;
    if outside.len() < 2 {
        return Err(Error::PreconditionViolated(format!("only {} vertices outside the base set", outside.len())));
    }
    if !is_indecomposable(t) {
        return Err(Error::PreconditionViolated("tournament is decomposable".into()));
    }
    for a in outside {
        for b in outside.iter().filter(|&b| b > a) {
            if is_indecomposable_in(t, x.with(a).with(b)) {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NotFound)
}
