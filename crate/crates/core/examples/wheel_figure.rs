//! Color the wheel W_5 and print the color counts at every vertex.

use hecolor::constructions::color_wheel;
use hecolor::homogeneity::{spectrum, verify};
use hecolor::multigraph::wheel;

fn main() -> hecolor::Result<()> {
    let g = wheel(5)?;
    let r = color_wheel(5)?;
    for e in g.edges() {
        println!("{} -- {}  color {}", e.u, e.v, r.coloring.color(e.id));
    }
    for x in g.vertices() {
        let s = spectrum(&g, &r.coloring, x)?;
        println!("{x}: degree {} counts {:?}", s.d, s.shape(r.coloring.m()));
    }
    println!("homogeneous: {}", verify(&g, &r.coloring)?.ok);
    Ok(())
}
