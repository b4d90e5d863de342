//! Write a colored K_7 as Graphviz DOT. Pipe into `dot -Tsvg` to render.

use hecolor::constructions::{color_complete_3mod4, Variant};
use hecolor::dot::to_dot;
use hecolor::multigraph::complete;

fn main() -> hecolor::Result<()> {
    let g = complete(7, 1)?;
    let r = color_complete_3mod4(7, Variant::Circulant)?;
    print!("{}", to_dot(&g, Some(&r.coloring))?);
    Ok(())
}
