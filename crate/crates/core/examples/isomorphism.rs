//! Canonical forms and explicit isomorphisms between members and duals.

use tournaments::families::{all_minus1_members, dual_isomorphism, e_family};
use tournaments::iso::group_classes;
use tournaments::{canonical_form, find_isomorphism, Family};

fn main() -> tournaments::Result<()> {
    let e = e_family(3, 1)?;
    println!("canonical form of E_7^3: {}", canonical_form(&e)?);
    println!("E_7^3 -> dual: {:?}", find_isomorphism(&e, &e.dual()).map(|p| p.to_string()));
    println!("σ for the dual of H_9^3: {}", dual_isomorphism(Family::H, 4, 1)?);

    let members = all_minus1_members(4)?;
    let duals: Vec<_> = members.iter().map(|(_, t)| t.dual()).collect();
    let classes = group_classes(members.iter().map(|(_, t)| t).chain(&duals))?;
    println!("{} members of order 9 and their duals fall in {} classes", members.len(), classes.len());
    Ok(())
}
