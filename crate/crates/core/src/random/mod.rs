//! Seeded generation of G(n, p) and Y(n, p).

pub mod gen;
pub mod rng;

pub use gen::{gen_graph, gen_y, gen_y_coupled, face_arrivals, link_pair_statistics, LinkPairStats};
pub use rng::{Probability, RngSpec, Stream};

/// Stream purpose used by the command-line generator and the pinned
/// snapshot.
pub const GEN_PURPOSE: &str = "gen";
