//! Interval tests, closures and decomposability witnesses.

use tournaments::families::{chain, e_family};
use tournaments::interval::{enumerate_intervals, interval_closure, is_interval};
use tournaments::{find_nontrivial_interval, VertexSet};

fn main() -> tournaments::Result<()> {
    let l5 = chain(5)?;
    println!("in L_5, {{1,2,3}} is an interval: {}", is_interval(&l5, VertexSet::from([1, 2, 3]))?);
    println!("in L_5, {{0,2}} is an interval: {}", is_interval(&l5, VertexSet::from([0, 2]))?);
    println!("closure of {{0,2}} in L_5: {}", interval_closure(&l5, VertexSet::from([0, 2]))?);
    println!("witness for L_5: {:?}", find_nontrivial_interval(&l5).map(|w| w.interval));

    let e = e_family(3, 1)?;
    println!("E_7^3 witness: {:?}", find_nontrivial_interval(&e).map(|w| w.interval));
    let minus = e.remove_vertex(4)?;
    let w = find_nontrivial_interval(&minus.tournament).expect("E_7^3 - 4 is decomposable");
    let original = minus.original(w.interval);
    println!("E_7^3 - 4 has the interval {original}");
    println!("all intervals of E_7^3 - 4: {}", enumerate_intervals(&minus.tournament)?.len());
    Ok(())
}
