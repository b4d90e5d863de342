//! Random trees, complete bipartite multigraphs and paths all have
//! 2-homogeneous colorings.

use hecolor::constructions::{color_complete_bipartite, color_path, color_tree};
use hecolor::homogeneity::verify;
use hecolor::multigraph::{complete_bipartite, path, random_tree};

fn main() -> hecolor::Result<()> {
    for seed in 0..5 {
        let t = random_tree(15, seed)?;
        let r = color_tree(&t)?;
        let ones = r.coloring.colors().iter().filter(|&&c| c == 1).count();
        println!(
            "tree seed {seed}: {} edges, {ones} of color 1, ok = {}",
            t.edge_count(),
            verify(&t, &r.coloring)?.ok
        );
    }

    for (a, b, lambda) in [(2, 3, 1), (3, 5, 2), (4, 4, 3)] {
        let g = complete_bipartite(a, b, lambda)?;
        let r = color_complete_bipartite(a, b, lambda)?;
        println!("{lambda}K{a},{b}: ok = {}", verify(&g, &r.coloring)?.ok);
    }

    let r = color_path(6)?;
    println!(
        "P6: {:?}, ok = {}",
        r.coloring.colors(),
        verify(&path(6)?, &r.coloring)?.ok
    );
    Ok(())
}
