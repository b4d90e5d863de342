//! Homogeneous colorings of K_n for each residue class of n, including every
//! available construction variant.

use hecolor::constructions::{
    color_complete_1mod4, color_complete_3mod4, color_complete_even, variants_1mod4,
    variants_3mod4, ConstructionResult,
};
use hecolor::homogeneity::{spectrum, verify};
use hecolor::multigraph::complete;
use hecolor::VertexId;

fn report(n: usize, r: &ConstructionResult) -> hecolor::Result<()> {
    let g = complete(n, 1)?;
    let ok = verify(&g, &r.coloring)?.ok;
    let shape = spectrum(&g, &r.coloring, VertexId(1))?.shape(r.coloring.m());
    println!(
        "K{n:<3} {:<15} {:<10} m = {}  counts at x1 {:?}  ok = {ok}",
        r.theorem.name(),
        r.variant.name(),
        r.coloring.m(),
        shape
    );
    Ok(())
}

fn main() -> hecolor::Result<()> {
    for n in 4..=19 {
        match n % 4 {
            0 | 2 => report(n, &color_complete_even(n)?)?,
            1 => {
                for &v in variants_1mod4() {
                    report(n, &color_complete_1mod4(n, v)?)?;
                }
            }
            _ => {
                for &v in variants_3mod4(n) {
                    report(n, &color_complete_3mod4(n, v)?)?;
                }
            }
        }
    }
    Ok(())
}
