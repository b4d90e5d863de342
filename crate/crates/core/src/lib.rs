//! Homogeneous edge-colorings of loopless multigraphs.
//!
//! An `m`-coloring of the edges is *homogeneous* when every vertex sees each
//! color either `floor(d/m)` or `ceil(d/m)` times. This crate provides
//!
//! - [`multigraph`]: the multigraph type and family generators,
//! - [`homogeneity`]: the verifier and per-vertex color spectra,
//! - [`constructions`]: closed-form colorings for complete (multi)graphs,
//!   complete bipartite multigraphs, trees, paths, cycles, wheels and
//!   eulerian graphs,
//! - [`decompositions`]: Walecki's Hamiltonian decomposition of K_n,
//! - [`solver`]: exact feasibility search and the homogeneous chromatic
//!   index,
//! - [`dot`] and [`cli`]: Graphviz export and the command line.
//!
//! ```
//! use hecolor::{constructions, homogeneity, multigraph};
//!
//! let g = multigraph::wheel(5)?;
//! let built = constructions::color_wheel(5)?;
//! assert!(homogeneity::verify(&g, &built.coloring)?.ok);
//! # Ok::<(), hecolor::Error>(())
//! ```

pub mod cli;
pub mod constructions;
pub mod decompositions;
pub mod dot;
pub mod error;
pub mod homogeneity;
pub mod multigraph;
pub mod solver;

pub use error::{Error, Result};
pub use homogeneity::{EdgeColoring, HomogeneityReport, VertexSpectrum};
pub use multigraph::{Edge, FamilyKind, FamilySpec, Multigraph, VertexId};
