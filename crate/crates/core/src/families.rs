//! Constructors for the tournament families.
//!
//! All families live on `{0, .., 2n}` except chains. For the two-sided
//! families (`E`, `F`, `G`, `H`) the vertex `2k+1` is the pivot: the
//! in-side `{0, .., 2k}` dominates it and it dominates the out-side
//! `{2k+2, .., 2n}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::{Permutation, Tournament};
use crate::vertex_set::MAX_ORDER;

/// The transitive tournament `0 < 1 < .. < m-1`.
pub fn chain(m: usize) -> Result<Tournament> {
    if !(1..=MAX_ORDER).contains(&m) {
        return Err(Error::BadParams(format!("chain length must lie in 1..={MAX_ORDER}, got {m}")));
    }
    Ok(Tournament::from_fn(m, |_, _| true))
}

fn check_odd_order(n: usize) -> Result<usize> {
    if n == 0 || 2 * n + 1 > MAX_ORDER {
        return Err(Error::BadParams(format!("n must lie in 1..={}, got {n}", (MAX_ORDER - 1) / 2)));
    }
    Ok(2 * n + 1)
}

/// Circulant tournament on `Z/(2n+1)`: `i -> j` iff `j - i ∈ {1, .., n}`.
pub fn t_family(n: usize) -> Result<Tournament> {
    let m = check_odd_order(n)?;
    Ok(Tournament::from_fn(m, |i, j| j - i <= n))
}

#[inline]
fn u_arc(i: usize, j: usize) -> bool {
    // i < j: forward unless both ends are even
    i % 2 == 1 || j % 2 == 1
}

#[inline]
fn v_arc(special: usize, i: usize, j: usize) -> bool {
    // i < j on a chain 0..special-1 followed by `special`, which dominates
    // exactly the even chain positions
    if j == special {
        i % 2 == 1
    } else {
        true
    }
}

/// The chain `L_{2n+1}` with every arc between two even vertices reversed.
pub fn u_family(n: usize) -> Result<Tournament> {
    let m = check_odd_order(n)?;
    Ok(Tournament::from_fn(m, u_arc))
}

/// The chain `0 < .. < 2n-1` plus a vertex `2n` dominating exactly the even
/// chain vertices.
pub fn v_family(n: usize) -> Result<Tournament> {
    let m = check_odd_order(n)?;
    Ok(Tournament::from_fn(m, |i, j| v_arc(m - 1, i, j)))
}

fn check_two_sided(n: usize, k: usize) -> Result<()> {
    if n < 3 || k < 1 || k > n.saturating_sub(2) {
        return Err(Error::BadParams(format!("need n >= 3 and 1 <= k <= n-2, got n={n}, k={k}")));
    }
    check_odd_order(n).map(|_| ())
}

#[derive(Clone, Copy)]
enum Side {
    Chain,
    U,
    V,
}

#[derive(Clone, Copy)]
enum Cross {
    /// `x -> y` iff both even.
    BothEven,
    /// `x -> y` iff `x = 2n` and `y` even.
    TopToEven,
    /// The single arc `2n -> 2k`.
    TopToPivotBelow,
}

/// Assembles a two-sided member. `x` ranges over the out-side and `y` over
/// the in-side in the cross rule.
fn two_sided(n: usize, k: usize, inner: Side, outer: Side, cross: Cross) -> Result<Tournament> {
    check_two_sided(n, k)?;
    let pivot = 2 * k + 1;
    let top = 2 * n;
    let side_arc = |side: Side, base: usize, last: usize, i: usize, j: usize| -> bool {
        match side {
            Side::Chain => true,
            Side::U => u_arc(i - base, j - base),
            Side::V => v_arc(last - base, i - base, j - base),
        }
    };
    Ok(Tournament::from_fn(top + 1, |i, j| {
        // i < j throughout
        if j == pivot {
            return true;
        }
        if i == pivot {
            return true;
        }
        match (i < pivot, j < pivot) {
            (true, true) => side_arc(inner, 0, 2 * k, i, j),
            (false, false) => side_arc(outer, pivot + 1, top, i, j),
            (true, false) => {
                let (y, x) = (i, j);
                let out_to_in = match cross {
                    Cross::BothEven => x % 2 == 0 && y % 2 == 0,
                    Cross::TopToEven => x == top && y % 2 == 0,
                    Cross::TopToPivotBelow => x == top && y == 2 * k,
                };
                !out_to_in
            }
            (false, true) => unreachable!(),
        }
    }))
}

/// `E_{2n+1}^{2k+1}`: chains on both sides, cross arcs out-side to in-side
/// exactly between even vertices.
pub fn e_family(n: usize, k: usize) -> Result<Tournament> {
    two_sided(n, k, Side::Chain, Side::Chain, Cross::BothEven)
}

/// `F_{2n+1}^{2k+1}`: as `E` but the in-side carries `U_{2k+1}`.
pub fn f_family(n: usize, k: usize) -> Result<Tournament> {
    two_sided(n, k, Side::U, Side::Chain, Cross::BothEven)
}

/// `G_{2n+1}^{2k+1}`: in-side `U_{2k+1}`, out-side a copy of
/// `V_{2n-2k-1}` with chain `2k+2 < .. < 2n-1` and special vertex `2n`;
/// the only out-to-in arcs leave `2n` towards even vertices.
pub fn g_family(n: usize, k: usize) -> Result<Tournament> {
    two_sided(n, k, Side::U, Side::V, Cross::TopToEven)
}

/// `H_{2n+1}^{2k+1}`: in-side `V_{2k+1}`, out-side as in `G`; the single
/// out-to-in arc is `2n -> 2k`.
pub fn h_family(n: usize, k: usize) -> Result<Tournament> {
    two_sided(n, k, Side::V, Side::V, Cross::TopToPivotBelow)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    L,
    T,
    U,
    V,
    E,
    F,
    FDual,
    G,
    GDual,
    H,
}

impl Family {
    /// The six classes whose members make up the (-1)-critical
    /// tournaments, in the order used by [`all_minus1_members`].
    pub const MINUS1: [Family; 6] = [Family::E, Family::F, Family::FDual, Family::G, Family::GDual, Family::H];

    pub fn takes_offset(self) -> bool {
        !matches!(self, Family::L | Family::T | Family::U | Family::V)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::L => "L",
            Family::T => "T",
            Family::U => "U",
            Family::V => "V",
            Family::E => "E",
            Family::F => "F",
            Family::FDual => "F*",
            Family::G => "G",
            Family::GDual => "G*",
            Family::H => "H",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "L" | "l" => Family::L,
            "T" | "t" => Family::T,
            "U" | "u" => Family::U,
            "V" | "v" => Family::V,
            "E" | "e" => Family::E,
            "F" | "f" => Family::F,
            "F*" | "f*" | "Fdual" | "fdual" => Family::FDual,
            "G" | "g" => Family::G,
            "G*" | "g*" | "Gdual" | "gdual" => Family::GDual,
            "H" | "h" => Family::H,
            _ => return Err(Error::BadParams(format!("unknown family {s:?}"))),
        })
    }
}

/// A family tag with its parameters. For `L` the parameter `n` is the chain
/// length; for the others the order is `2n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: Option<usize>) -> Result<Self> {
        let spec = FamilySpec { family, n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn two_sided(family: Family, n: usize, k: usize) -> Self {
        FamilySpec { family, n, k: Some(k) }
    }

    pub fn validate(&self) -> Result<()> {
        match (self.family.takes_offset(), self.k) {
            (true, Some(k)) => check_two_sided(self.n, k),
            (true, None) => Err(Error::BadParams(format!("family {} needs an offset k", self.family))),
            (false, Some(_)) => Err(Error::BadParams(format!("family {} takes no offset", self.family))),
            (false, None) if self.family == Family::L => chain(self.n).map(|_| ()),
            (false, None) => check_odd_order(self.n).map(|_| ()),
        }
    }

    pub fn build(&self) -> Result<Tournament> {
        self.validate()?;
        let k = self.k.unwrap_or(0);
        match self.family {
            Family::L => chain(self.n),
            Family::T => t_family(self.n),
            Family::U => u_family(self.n),
            Family::V => v_family(self.n),
            Family::E => e_family(self.n, k),
            Family::F => f_family(self.n, k),
            Family::FDual => f_family(self.n, k).map(|t| t.dual()),
            Family::G => g_family(self.n, k),
            Family::GDual => g_family(self.n, k).map(|t| t.dual()),
            Family::H => h_family(self.n, k),
        }
    }

    /// The pivot `2k+1` of a two-sided member.
    pub fn pivot(&self) -> Option<usize> {
        self.k.map(|k| 2 * k + 1)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.k) {
            (Family::L, _) => write!(f, "L_{}", self.n),
            (fam, None) => write!(f, "{fam}_{}", 2 * self.n + 1),
            (fam, Some(k)) => write!(f, "{fam}_{}^{}", 2 * self.n + 1, 2 * k + 1),
        }
    }
}

/// Isomorphism from the dual of `E_{2n+1}^{2k+1}` (resp. `H`) onto
/// `E_{2n+1}^{2(n-k-1)+1}` (resp. `H`), as a permutation `σ` with
/// `apply(dual(member), σ) = partner`.
pub fn dual_isomorphism(family: Family, n: usize, k: usize) -> Result<Permutation> {
    check_two_sided(n, k)?;
    let top = 2 * n;
    let image: Vec<usize> = match family {
        Family::E => (0..=top).map(|q| top - q).collect(),
        Family::H => (0..=top)
            .map(|q| match q {
                q if q == top => 2 * (n - k - 1),
                q if q == 2 * k => top,
                q if q == 2 * k + 1 => 2 * (n - k - 1) + 1,
                q => top - q - 1,
            })
            .collect(),
        other => return Err(Error::BadParams(format!("no explicit dual isomorphism for family {other}"))),
    };
    Permutation::new(image)
}

/// The `6(n-2)` members on `2n+1` vertices, ordered by `k` ascending then
/// `E, F, F*, G, G*, H`.
pub fn all_minus1_members(n: usize) -> Result<Vec<(FamilySpec, Tournament)>> {
    if n < 3 {
        return Err(Error::BadParams(format!("need n >= 3, got {n}")));
    }
    check_odd_order(n)?;
    let mut out = Vec::with_capacity(6 * (n - 2));
    for k in 1..=n - 2 {
        for fam in Family::MINUS1 {
            let spec = FamilySpec::two_sided(fam, n, k);
            out.push((spec, spec.build()?));
        }
    }
    Ok(out)
}
