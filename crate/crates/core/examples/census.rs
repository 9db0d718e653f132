//! Exhaustive census at a given order (default 6), optionally sharded.
//!
//! cargo run --release --example census -- 7 4

use std::time::Instant;

use tournaments::{census_with, CensusOptions};

fn main() -> tournaments::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("numeric argument"));
    let m = args.next().unwrap_or(6);
    let jobs = args.next().unwrap_or(1);
    let start = Instant::now();
    let result = census_with(m, &CensusOptions { jobs, relabel: None })?;
    print!("{}", result.summary());
    for rec in result.classes_with_k(1) {
        println!("k=1 class {} ({} labeled)", rec.canonical, rec.labeled);
    }
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
