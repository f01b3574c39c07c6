//! Random 2-complexes in the Linial–Meshulam model `Y(n, p)`.
//!
//! The crate covers generation, Betti numbers and integral `H_1`, exact
//! densest-subcomplex densities and sparsity searches, certificates for
//! and against simple connectivity, homotopy classification of admissible
//! complexes, and a reproducible Monte Carlo sweep harness.

pub mod classify;
pub mod complex;
pub mod density;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod homology;
pub mod loopword;
pub mod pi1;
pub mod random;
pub mod ratio;
pub mod sc2;
pub mod stats;
pub mod sweep;
#[cfg(test)]
mod testutil;

pub use complex::{Complex2, Edge, Face, Relabeled, Skeleton};
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::{betti, boundary_matrices, h1_integral, BettiProfile, Coeff, H1Integral};
pub use random::{gen_graph, gen_y, Probability, RngSpec};
pub use density::{check_sparse, check_sparse3, density_e, density_e_w, DensityReport, SparsityVerdict};
pub use ratio::{parse_rational, Rational};
pub use loopword::LoopWord;
pub use pi1::{area_search, certify_id3_noncontractible, certify_simply_connected, presentation, ScCertificate};
pub use classify::{collapse_core, homotopy_type, popped_bound_check, HomotopyType, WedgeCounts};
pub use sweep::{run_sweep, SweepConfig, TrialRecord};
