//! In any 2-coloring of an odd cycle the number of vertices whose two edges
//! share a color is odd, so odd cycles need three colors.

use hecolor::constructions::color_cycle;
use hecolor::homogeneity::count_monochromatic_vertices;
use hecolor::multigraph::cycle;
use hecolor::solver::{all_colorings_property, DEFAULT_EXHAUSTIVE_BOUND};

fn main() -> hecolor::Result<()> {
    for n in (3..=15).step_by(2) {
        let g = cycle(n)?;
        let check = all_colorings_property(&g, DEFAULT_EXHAUSTIVE_BOUND, |c| {
            count_monochromatic_vertices(&g, c).is_ok_and(|k| k % 2 == 1)
        })?;
        println!(
            "C{n:<2}: {} colorings, parity holds: {}",
            check.colorings_checked, check.holds
        );
    }
    let r = color_cycle(7)?;
    println!(
        "C7 with {} colors: {:?}",
        r.coloring.m(),
        r.coloring.colors()
    );
    Ok(())
}
