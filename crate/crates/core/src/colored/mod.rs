//! The colored configuration model.
//!
//! A color is a pair `(i, j)` of elements of a finite base set `F`; its
//! conjugate is `(j, i)`. A colored multigraph is a multiset of arcs in which
//! every arc `u → v` of color `c` is matched by an arc `v → u` of color `c̄`.
//! The coloring `C(G)` of a marked graph uses as base set the pairs
//! `(ξ(u, v), depth-(k−1) class of v once the edge is removed)`.

mod cm;
mod colors;
mod coloring;
mod multigraph;
mod sequence;

pub use cm::{estimate_alpha_h, girth_at_most, is_colored_graph, sample_cm, AlphaEstimate};
pub use colors::{Color, ColorSet, EdgeType};
pub use coloring::{color_graph, edge_type, mcb};
pub use multigraph::{Arc, ColorblindMultigraph, ColoredMultigraph};
pub use sequence::{parse_cds, write_cds, ColoredDegreeSequence};
