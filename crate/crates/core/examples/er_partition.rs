//! Classifies the vertices outside an indecomposable subtournament and
//! finds a pair that extends it.

use tournaments::families::e_family;
use tournaments::verify::indecomposable_bases;
use tournaments::{compute_partition, find_indecomposable_extension_pair, VertexSet};

fn main() -> tournaments::Result<()> {
    let e = e_family(3, 1)?;
    let x = VertexSet::from([0, 1, 2, 5, 6]);
    let p = compute_partition(&e, x)?;
    println!("base X = {x}");
    println!("[X]    = {}", p.bracket);
    println!("Ext(X) = {}", p.ext);
    for (u, set) in &p.attached {
        if !set.is_empty() {
            println!("X({u})   = {set}");
        }
    }

    // the first 3-cycle of E_7^3
    let smaller = indecomposable_bases(&e).into_iter().find(|b| b.len() == 3).expect("a 3-cycle");
    let (a, b) = find_indecomposable_extension_pair(&e, smaller)?;
    println!("{smaller} grows to an indecomposable set with {a} and {b}");
    Ok(())
}
