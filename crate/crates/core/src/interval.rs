//! Intervals (modules) and indecomposability.
//!
//! A set `X` is an interval of `T` when every vertex outside `X` either
//! dominates all of `X` or is dominated by all of `X`. With one bit row per
//! vertex this is a per-outsider test: `row(z) & X` must be empty or all of
//! `X`.
//!
//! Every predicate here also comes in a `*_in` form that works on the
//! subtournament induced by a `scope` set without relabeling it. Criticality
//! and the indecomposability graph are built on those, so `T - x` never has
//! to be materialized.

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// A nontrivial interval: `2 <= |X| <= n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntervalWitness {
    pub interval: VertexSet,
}

/// `(x, y) ≡ (u, v)`: the couples are equal, or both are arcs, or neither is.
pub fn arcs_equivalent(t: &Tournament, (x, y): (usize, usize), (u, v): (usize, usize)) -> Result<bool> {
    for (a, b) in [(x, y), (u, v)] {
        if a == b {
            return Err(Error::DegeneratePair(a));
        }
        for w in [a, b] {
            if w >= t.order() {
                return Err(Error::OutOfRange { vertex: w, order: t.order() });
            }
        }
    }
    Ok((x, y) == (u, v) || t.dominates(x, y) == t.dominates(u, v))
}

/// Whether `x` is an interval of `t`. Trivial sets always are.
pub fn is_interval(t: &Tournament, x: VertexSet) -> Result<bool> {
    t.check_set(x)?;
    Ok(is_interval_in(t, t.vertices(), x))
}

/// Whether `x` is an interval of `t(scope)`; `x` must be a subset of `scope`.
pub fn is_interval_in(t: &Tournament, scope: VertexSet, x: VertexSet) -> bool {
    debug_assert!(x.is_subset(scope));
    let xb = x.bits();
    (scope - x).iter().all(|z| {
        let hit = t.row(z) & xb;
        hit == 0 || hit == xb
    })
}

/// Smallest interval of `t` containing `seed`.
///
/// Seeds with fewer than two vertices are already intervals and are
/// returned unchanged.
pub fn interval_closure(t: &Tournament, seed: VertexSet) -> Result<VertexSet> {
    t.check_set(seed)?;
    Ok(closure_in(t, t.vertices(), seed))
}

/// Smallest interval of `t(scope)` containing `seed`.
///
/// Any vertex that splits the current set must belong to every interval
/// containing it, so all splitters of a round are absorbed together.
pub fn closure_in(t: &Tournament, scope: VertexSet, seed: VertexSet) -> VertexSet {
    debug_assert!(seed.is_subset(scope));
    let mut x = seed.bits();
    let scope = scope.bits();
    loop {
        let mut grow = 0u64;
        let mut outside = scope & !x;
        while outside != 0 {
            let z = outside.trailing_zeros();
            outside &= outside - 1;
            let hit = t.row(z as usize) & x;
            if hit != 0 && hit != x {
                grow |= 1 << z;
            }
        }
        if grow == 0 {
            return VertexSet::from_bits(x);
        }
        x |= grow;
    }
}

/// Some nontrivial interval of `t`, if one exists.
///
/// Scans pairs `a < b` lexicographically and returns the closure of the
/// first pair whose closure is a proper subset.
pub fn find_nontrivial_interval(t: &Tournament) -> Option<IntervalWitness> {
    nontrivial_interval_in(t, t.vertices())
}

pub fn nontrivial_interval_in(t: &Tournament, scope: VertexSet) -> Option<IntervalWitness> {
    if scope.len() <= 2 {
        return None;
    }
    for a in scope {
        let rest = VertexSet::from_bits(scope.bits() & !((2u64 << a) - 1));
        for b in rest {
            let c = closure_in(t, scope, VertexSet::from([a, b]));
            if c != scope {
                return Some(IntervalWitness { interval: c });
            }
        }
    }
    None
}

/// Tournaments of order at most 2 count as indecomposable: all their
/// subsets are trivial.
pub fn is_indecomposable(t: &Tournament) -> bool {
    is_indecomposable_in(t, t.vertices())
}

pub fn is_indecomposable_in(t: &Tournament, scope: VertexSet) -> bool {
    nontrivial_interval_in(t, scope).is_none()
}

/// Upper bound on the order accepted by [`enumerate_intervals`].
pub const ENUMERATION_LIMIT: usize = 20;

/// Every interval of `t`, trivial ones included, by scanning all subsets.
///
/// Exponential; only meant as an independent reference.
pub fn enumerate_intervals(t: &Tournament) -> Result<Vec<VertexSet>> {
    let n = t.order();
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { order: n, limit: ENUMERATION_LIMIT });
    }
    let all = t.vertices();
    Ok((0..1u64 << n)
        .map(VertexSet::from_bits)
        .filter(|&x| match x.min() {
            None => true,
            // (a, z) ≡ (f, z) for every member a and outsider z
            Some(f) => (all - x).iter().all(|z| x.iter().all(|a| t.dominates(a, z) == t.dominates(f, z))),
        })
        .collect())
}

/// Whether `x` is trivial in a tournament on `scope`: empty, a singleton, or
/// the whole scope.
pub fn is_trivial_in(scope: VertexSet, x: VertexSet) -> bool {
    x.len() <= 1 || x == scope
}
