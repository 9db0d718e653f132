//! Brute-force reference implementations, written against the adjacency
//! matrix only, used to check the library's fast paths.
#![allow(dead_code)]

use itertools::Itertools;
use tournaments::Tournament;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(t: &Tournament) -> Matrix {
    let n = t.order();
    (0..n).map(|i| (0..n).map(|j| t.dominates(i, j)).collect()).collect()
}

/// Every vertex of `scope` outside `set` sees all of `set` the same way.
pub fn is_interval(a: &Matrix, scope: &[usize], set: &[usize]) -> bool {
    scope.iter().filter(|z| !set.contains(z)).all(|&z| {
        let first = a[z][set[0]];
        set.iter().all(|&x| a[z][x] == first)
    })
}

/// No subset of `scope` with between 2 and `|scope| - 1` elements is an
/// interval of the induced subtournament.
pub fn is_indecomposable(a: &Matrix, scope: &[usize]) -> bool {
    let s = scope.len();
    if s <= 2 {
        return true;
    }
    (1u64..(1 << s) - 1).all(|mask| {
        let size = mask.count_ones() as usize;
        if size < 2 {
            return true;
        }
        let set: Vec<usize> = (0..s).filter(|b| mask >> b & 1 == 1).map(|b| scope[b]).collect();
        !is_interval(a, scope, &set)
    })
}

pub fn without(n: usize, drop: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !drop.contains(v)).collect()
}

/// Vertices whose removal keeps the tournament indecomposable.
pub fn non_critical(a: &Matrix) -> Vec<usize> {
    let n = a.len();
    (0..n).filter(|&x| is_indecomposable(a, &without(n, &[x]))).collect()
}

pub fn graph_edges(a: &Matrix) -> Vec<(usize, usize)> {
    let n = a.len();
    (0..n).tuple_combinations().filter(|&(x, y)| is_indecomposable(a, &without(n, &[x, y]))).collect()
}

fn relabeled_bits(a: &Matrix, p: &[usize]) -> Vec<bool> {
    // p[v] is the new label of v; read the relabeled matrix row by row
    let n = a.len();
    let mut inv = vec![0; n];
    for (v, &q) in p.iter().enumerate() {
        inv[q] = v;
    }
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a[inv[i]][inv[j]]).collect()
}

/// Minimum relabeled matrix over all `n!` permutations.
pub fn canonical(a: &Matrix) -> Vec<bool> {
    let n = a.len();
    (0..n).permutations(n).map(|p| relabeled_bits(a, &p)).min().unwrap_or_default()
}

pub fn automorphisms(a: &Matrix) -> usize {
    let n = a.len();
    let id = relabeled_bits(a, &(0..n).collect::<Vec<_>>());
    (0..n).permutations(n).filter(|p| relabeled_bits(a, p) == id).count()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
