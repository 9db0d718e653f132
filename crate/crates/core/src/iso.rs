//! Isomorphism testing and canonical forms for small tournaments.
//!
//! The canonical form is the lexicographically least adjacency matrix, read
//! row by row, over the relabelings reachable by a refine-and-individualize
//! search. Refinement splits vertices by out-degree and then by the number
//! of out-neighbours in each current cell until the ordered partition is
//! stable; since every choice is label-independent the set of reachable
//! relabelings is the same for isomorphic inputs.
//!
//! For a tournament the first difference between two row-major matrices
//! always lies above the diagonal, so only the strict upper triangle is
//! encoded.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::{Permutation, Tournament};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 12;

/// Key identifying an isomorphism class: the order followed by the packed
/// strict upper triangle of the canonical matrix, most significant bit
/// first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn from_triangle(n: usize, tri: u128) -> Self {
        let bits = n * n.saturating_sub(1) / 2;
        let nbytes = bits.div_ceil(8);
        let mut out = Vec::with_capacity(1 + nbytes);
        out.push(n as u8);
        // left-align so the first pair sits in the top bit
        let aligned = if bits == 0 { 0 } else { tri << (128 - bits) };
        out.extend_from_slice(&aligned.to_be_bytes()[..nbytes]);
        CanonicalForm(out)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The canonical representative itself.
    pub fn tournament(&self) -> Tournament {
        let n = self.order();
        let bits = n * n.saturating_sub(1) / 2;
        let mut buf = [0u8; 16];
        buf[..self.0.len() - 1].copy_from_slice(&self.0[1..]);
        let tri = if bits == 0 { 0 } else { u128::from_be_bytes(buf) >> (128 - bits) };
        let mut p = bits;
        Tournament::from_fn(n, |_, _| {
            p -= 1;
            tri >> p & 1 == 1
        })
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Upper triangle of `t` relabeled by `pos` (vertex `v` goes to `pos[v]`),
/// first pair in the most significant position.
fn relabeled_triangle(t: &Tournament, pos: &[usize]) -> u128 {
    let n = t.order();
    let mut inv = [0usize; CANONICAL_LIMIT];
    for (v, &p) in pos.iter().enumerate() {
        inv[p] = v;
    }
    let mut tri = 0u128;
    for i in 0..n {
        let row = t.row(inv[i]);
        for &vj in &inv[i + 1..n] {
            tri = tri << 1 | (row >> vj & 1) as u128;
        }
    }
    tri
}

/// Ordered partition as a vertex sequence plus cell boundaries.
#[derive(Clone)]
struct Partition {
    order: Vec<usize>,
    /// start index of each cell, ascending; cell i is order[starts[i]..starts[i+1]]
    starts: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { order: (0..n).collect(), starts: vec![0] }
    }

    fn cell(&self, i: usize) -> &[usize] {
        let end = self.starts.get(i + 1).copied().unwrap_or(self.order.len());
        &self.order[self.starts[i]..end]
    }

    fn cells(&self) -> usize {
        self.starts.len()
    }

    fn is_discrete(&self) -> bool {
        self.starts.len() == self.order.len()
    }

    fn cell_mask(&self, i: usize) -> u64 {
        self.cell(i).iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Splits every cell by the out-degree profile of its vertices towards
    /// the current cells, until stable.
    fn refine(&mut self, t: &Tournament) {
        loop {
            let masks: Vec<u64> = (0..self.cells()).map(|i| self.cell_mask(i)).collect();
            let mut order = Vec::with_capacity(self.order.len());
            let mut starts = Vec::with_capacity(self.order.len());
            for i in 0..self.cells() {
                let mut keyed: Vec<(Vec<u32>, usize)> = self
                    .cell(i)
                    .iter()
                    .map(|&v| (masks.iter().map(|m| (t.row(v) & m).count_ones()).collect(), v))
                    .collect();
                keyed.sort();
                for (j, (key, v)) in keyed.iter().enumerate() {
                    if j == 0 || *key != keyed[j - 1].0 {
                        starts.push(order.len());
                    }
                    order.push(*v);
                }
            }
            let changed = starts.len() != self.starts.len();
            self.order = order;
            self.starts = starts;
            if !changed {
                return;
            }
        }
    }

    /// Moves `v` (in cell `i`) into a singleton cell placed just before the
    /// rest of its cell.
    fn individualize(&self, i: usize, v: usize) -> Partition {
        let mut next = self.clone();
        let start = next.starts[i];
        let at = next.order[start..].iter().position(|&w| w == v).unwrap() + start;
        next.order[start..=at].rotate_right(1);
        next.starts.insert(i + 1, start + 1);
        next
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

struct Search<'a> {
    t: &'a Tournament,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut part: Partition) {
        part.refine(self.t);
        if part.is_discrete() {
            let pos = part.positions();
            let tri = relabeled_triangle(self.t, &pos);
            if self.best.as_ref().is_none_or(|(b, _)| tri < *b) {
                self.best = Some((tri, pos));
            }
            return;
        }
        let target = (0..part.cells()).find(|&i| part.cell(i).len() > 1).unwrap();
        for &v in part.cell(target).to_vec().iter() {
            self.descend(part.individualize(target, v));
        }
    }
}

/// Canonical form together with a relabeling `p` such that
/// `t.apply(p)` is the canonical representative.
pub fn canonical_labeling(t: &Tournament) -> Result<(CanonicalForm, Permutation)> {
    let n = t.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge { order: n, limit: CANONICAL_LIMIT });
    }
    let mut search = Search { t, best: None };
    search.descend(Partition::unit(n));
    let (tri, pos) = search.best.expect("search reaches at least one leaf");
    let perm = Permutation::new(pos).expect("leaf positions form a bijection");
    Ok((CanonicalForm::from_triangle(n, tri), perm))
}

pub fn canonical_form(t: &Tournament) -> Result<CanonicalForm> {
    canonical_labeling(t).map(|(c, _)| c)
}

/// A permutation `p` with `t1.apply(p) == t2`, if the two are isomorphic.
///
/// Backtracking over vertices of `t1` in order, restricted to targets with
/// the same score and consistent with every arc already mapped.
pub fn find_isomorphism(t1: &Tournament, t2: &Tournament) -> Option<Permutation> {
    let n = t1.order();
    if n != t2.order() || t1.score_sequence() != t2.score_sequence() {
        return None;
    }
    // Map high-constraint vertices first: rarest score class.
    let mut freq = BTreeMap::new();
    for v in 0..n {
        *freq.entry(t1.score(v)).or_insert(0usize) += 1;
    }
    let mut seq: Vec<usize> = (0..n).collect();
    seq.sort_by_key(|&v| (freq[&t1.score(v)], t1.score(v), v));

    fn extend(
        t1: &Tournament,
        t2: &Tournament,
        seq: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut u64,
    ) -> bool {
        let Some(&v) = seq.get(depth) else {
            return true;
        };
        for w in VertexSet::from_bits(!*used & VertexSet::full(t2.order()).bits()) {
            if t1.score(v) != t2.score(w) {
                continue;
            }
            let consistent = seq[..depth].iter().all(|&u| t1.dominates(v, u) == t2.dominates(w, map[u]));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if extend(t1, t2, seq, depth + 1, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(t1, t2, &seq, 0, &mut map, &mut used) {
        Some(Permutation::new(map).expect("complete map is a bijection"))
    } else {
        None
    }
}

/// One isomorphism class of a grouped list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub canonical: CanonicalForm,
    pub count: usize,
    /// The canonical relabeling, independent of input order.
    pub representative: Tournament,
}

/// Groups tournaments by isomorphism class, ordered by canonical form.
pub fn group_classes<'a>(ts: impl IntoIterator<Item = &'a Tournament>) -> Result<Vec<IsoClass>> {
    let mut counts: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    let mut order = None;
    for t in ts {
        match order {
            None => order = Some(t.order()),
            Some(n) if n != t.order() => {
                return Err(Error::DimensionMismatch(format!("cannot group orders {n} and {} together", t.order())))
            }
            _ => {}
        }
        *counts.entry(canonical_form(t)?).or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(canonical, count)| IsoClass { representative: canonical.tournament(), canonical, count })
        .collect())
}
