//! Runs every verification pipeline for one n (default 3).

use tournaments::verify::{
    verify_construction_classes, verify_critical_characterization, verify_dual_isomorphisms, verify_graph_shapes,
    verify_minus1_characterization, verify_structural_lemmas, VerifyOptions,
};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(3, |s| s.parse().expect("n must be a number"));
    let opts = VerifyOptions::default();
    let reports = [
        verify_minus1_characterization(n, &opts),
        verify_critical_characterization(n, &opts),
        verify_graph_shapes(n),
        verify_structural_lemmas(n),
        verify_dual_isomorphisms(n),
        verify_construction_classes(n),
    ];
    for r in reports {
        match r {
            Ok(report) => print!("{report}"),
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(1);
            }
        }
    }
}
