//! Delta/2-homogeneous colorings of eulerian graphs, and a graph that has
//! none.

use hecolor::constructions::color_eulerian;
use hecolor::homogeneity::verify;
use hecolor::multigraph::{complete, random_eulerian};
use hecolor::Multigraph;

fn show(name: &str, g: &Multigraph) -> hecolor::Result<()> {
    let degrees: Vec<usize> = g
        .vertices()
        .map(|x| g.degree(x))
        .collect::<Result<_, _>>()?;
    match color_eulerian(g) {
        Ok(r) => println!(
            "{name}: degrees {degrees:?}, m = {}, ok = {}",
            r.coloring.m(),
            verify(g, &r.coloring)?.ok
        ),
        Err(e) => println!("{name}: degrees {degrees:?}, {e}"),
    }
    Ok(())
}

fn main() -> hecolor::Result<()> {
    show("K9", &complete(9, 1)?)?;
    for seed in 0..6 {
        let g = random_eulerian(5, 10, seed)?;
        if g.max_degree() >= 4 {
            show(&format!("random seed {seed}"), &g)?;
        }
    }
    // Every color's counts must sum to an even number; here they are forced
    // to sum to 9.
    let chain = Multigraph::from_pairs(
        7,
        &[
            (1, 2),
            (2, 3),
            (3, 1),
            (3, 4),
            (4, 5),
            (5, 3),
            (5, 6),
            (6, 7),
            (7, 5),
        ],
    )?;
    show("triangle chain", &chain)
}
