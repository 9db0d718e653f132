//! Builds every family at a small size and prints its score sequence and
//! criticality.
//!
//! cargo run --example families -- 4

use tournaments::families::all_minus1_members;
use tournaments::{classify, Family, FamilySpec};

fn main() -> tournaments::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse()).expect("n must be a number");

    for family in [Family::T, Family::U, Family::V] {
        let spec = FamilySpec::new(family, n, None)?;
        let t = spec.build()?;
        let r = classify(&t)?;
        println!("{spec:<8} scores {:?}  k={}", t.score_sequence(), r.k);
    }
    for (spec, t) in all_minus1_members(n)? {
        let r = classify(&t)?;
        println!("{spec:<8} scores {:?}  non-critical {}", t.score_sequence(), r.non_critical);
    }
    Ok(())
}
