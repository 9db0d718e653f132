//! Tournament representation.
//!
//! A tournament on `{0, .., n-1}` stores one bit row per vertex: bit `j` of
//! row `i` is set iff the arc `i -> j` is present. Rows never have the
//! diagonal bit set and for every `i != j` exactly one of `i -> j`, `j -> i`
//! holds; every constructor enforces this.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    rows: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament from a boolean adjacency matrix.
    pub fn from_matrix<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::DimensionMismatch(format!("order must lie in 1..={MAX_ORDER}, got {n}")));
        }
        let mut bits = vec![0u64; n];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, &b) in row.iter().enumerate() {
                if b {
                    bits[i] |= 1 << j;
                }
            }
        }
        Self::from_rows(bits)
    }

    /// Builds a tournament from bit rows, validating the tournament axioms.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::DimensionMismatch(format!("order must lie in 1..={MAX_ORDER}, got {n}")));
        }
        let full = VertexSet::full(n).bits();
        for i in 0..n {
            if rows[i] >> i & 1 == 1 {
                return Err(Error::NotATournament { i, j: i });
            }
            if rows[i] & !full != 0 {
                return Err(Error::DimensionMismatch(format!("row {i} has bits beyond column {}", n - 1)));
            }
            for j in i + 1..n {
                let ij = rows[i] >> j & 1;
                let ji = rows[j] >> i & 1;
                if ij == ji {
                    return Err(Error::NotATournament { i, j });
                }
            }
        }
        Ok(Tournament { n, rows })
    }

    /// Builds the tournament on `{0, .., n-1}` where, for `i < j`, the arc is
    /// `i -> j` iff `forward(i, j)`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        assert!((1..=MAX_ORDER).contains(&n), "order {n} out of range");
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    rows[i] |= 1 << j;
                } else {
                    rows[j] |= 1 << i;
                }
            }
        }
        Tournament { n, rows }
    }

    /// Decodes the tournament whose strict upper triangle is packed into
    /// `code`: pairs `(0,1), (0,2), .., (0,n-1), (1,2), ..` occupy bits
    /// `0, 1, 2, ..` and a set bit means `i -> j`.
    pub fn from_code(n: usize, code: u64) -> Self {
        debug_assert!(n * (n.saturating_sub(1)) / 2 <= 64);
        let mut p = 0;
        Self::from_fn(n, |_, _| {
            let b = code >> p & 1 == 1;
            p += 1;
            b
        })
    }

    /// Inverse of [`Tournament::from_code`]; requires `n(n-1)/2 <= 64`.
    pub fn code(&self) -> u64 {
        assert!(self.n * (self.n - 1) / 2 <= 64, "order too large for a u64 code");
        let mut code = 0u64;
        let mut p = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.dominates(i, j) {
                    code |= 1 << p;
                }
                p += 1;
            }
        }
        code
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `true` iff the arc `i -> j` is present.
    #[inline]
    pub fn dominates(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Out-degree of `v`.
    #[inline]
    pub fn score(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn score_sequence(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.n).map(|v| self.score(v)).collect();
        s.sort_unstable();
        s
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange { vertex: v, order: self.n })
        }
    }

    pub(crate) fn check_set(&self, x: VertexSet) -> Result<()> {
        match x.max() {
            Some(v) if v >= self.n => Err(Error::OutOfRange { vertex: v, order: self.n }),
            _ => Ok(()),
        }
    }

    /// Vertices dominated by `v`.
    pub fn out_set(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.rows[v]))
    }

    /// Vertices dominating `v`.
    pub fn in_set(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.vertices() - VertexSet::from_bits(self.rows[v]).with(v))
    }

    /// Tournament with every arc reversed.
    pub fn dual(&self) -> Tournament {
        let full = VertexSet::full(self.n).bits();
        let rows = self.rows.iter().enumerate().map(|(i, &r)| !r & full & !(1 << i)).collect();
        Tournament { n: self.n, rows }
    }

    /// Subtournament induced by `x`, relabeled `0..|x|` in increasing order
    /// of the original labels.
    pub fn induced(&self, x: VertexSet) -> Result<Induced> {
        self.check_set(x)?;
        if x.is_empty() {
            return Err(Error::PreconditionViolated("cannot induce on the empty set".into()));
        }
        let labels = x.to_vec();
        let rows = labels
            .iter()
            .map(|&u| {
                labels.iter().enumerate().filter(|&(_, &w)| self.dominates(u, w)).fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Induced { tournament: Tournament { n: labels.len(), rows }, labels })
    }

    /// `T - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Induced> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// Transports the tournament along `p`: the result has `p(i) -> p(j)`
    /// iff `i -> j` here.
    pub fn apply(&self, p: &Permutation) -> Result<Tournament> {
        if p.len() != self.n {
            return Err(Error::NotABijection(self.n));
        }
        let mut rows = vec![0u64; self.n];
        for i in 0..self.n {
            let mut r = 0u64;
            for j in VertexSet::from_bits(self.rows[i]) {
                r |= 1 << p.image(j);
            }
            rows[p.image(i)] = r;
        }
        Ok(Tournament { n: self.n, rows })
    }

    /// `true` iff the tournament is transitive (a chain).
    pub fn is_chain(&self) -> bool {
        let mut s = self.score_sequence();
        s.dedup();
        s.len() == self.n
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tournament({})", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                f.write_str(if self.dominates(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An induced subtournament together with the original label of each new
/// vertex: new vertex `i` was `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub tournament: Tournament,
    pub labels: Vec<usize>,
}

impl Induced {
    /// Maps a set of original labels into the relabeled vertex set; members
    /// that were not kept are dropped.
    pub fn relabel(&self, x: VertexSet) -> VertexSet {
        self.labels.iter().enumerate().filter(|&(_, &l)| x.contains(l)).map(|(i, _)| i).collect()
    }

    pub fn original(&self, x: VertexSet) -> VertexSet {
        x.iter().map(|i| self.labels[i]).collect()
    }
}

/// A bijection of `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection(n));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ inner`, i.e. `v ↦ self(inner(v))`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        assert_eq!(self.len(), inner.len());
        Permutation(inner.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn map_set(&self, x: VertexSet) -> VertexSet {
        x.iter().map(|v| self.0[v]).collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
