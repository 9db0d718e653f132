//! Prints I(T) for the members of order 7 and writes the one of H as DOT.

use tournaments::classify;
use tournaments::families::all_minus1_members;
use tournaments::format::graph_to_dot;

fn main() -> tournaments::Result<()> {
    for (spec, t) in all_minus1_members(3)? {
        let r = classify(&t)?;
        let shapes: Vec<String> = r.components.iter().map(|c| format!("{} {}", c.shape, c.vertices)).collect();
        println!("{spec:<8} edges {:?}  components: {}", r.graph.edges(), shapes.join(", "));
        if spec.to_string() == "H_7^3" {
            let path = std::env::temp_dir().join("h7.dot");
            std::fs::write(&path, graph_to_dot(&r.graph, r.non_critical, "I(H_7^3)"))?;
            println!("         written to {}", path.display());
        }
    }
    Ok(())
}
