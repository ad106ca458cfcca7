//! Marked graphs, rooted truncation, canonical forms and the local metric.

mod canon;
mod degrees;
mod distance;
mod io;
mod marked;
mod marks;

pub use canon::{canonicalize, canonicalize_doubly_rooted, CanonicalClass, CodeKind};
pub use degrees::DegreeSequence;
pub use distance::{distance_from_radius, first_disagreement, local_distance, RadiusProfile};
pub use io::infer_alphabets;
pub use io::{parse_graph, write_graph};
pub use marked::{truncate, MarkedEdge, MarkedGraph, Neighbor, RootedMarkedGraph};
pub use marks::{Mark, MarkAlphabets};
