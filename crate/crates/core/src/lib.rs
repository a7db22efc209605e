//! Edge-Wiener and edge-hyper-Wiener indices of partial cubes.
//!
//! The crate computes the edge-Wiener index `W_e` and the edge-hyper-Wiener
//! index `WW_e` of connected graphs three ways:
//!
//! * a brute-force oracle that enumerates all edge pairs by BFS distance,
//! * the cut method over Djoković–Winkler Θ-classes for certified partial
//!   cubes (with a specialized fast path for trees), and
//! * a dedicated pipeline for benzenoid systems built from elementary cuts
//!   and weighted quotient trees.
//!
//! All index arithmetic is 64-bit and overflow-checked; every report is
//! validated against the structural identities relating `W_e`, `Ŵ_e`,
//! `WW_e*`, and `WW_e` before it is returned.
//!
//! ```
//! use hyperwiener::benzenoid::edge_hyper_wiener_benzenoid;
//! use hyperwiener::polyacene::generate_polyacene;
//!
//! // Anthracene is the linear polyacene with three hexagons.
//! let anthracene = generate_polyacene(3)?;
//! let report = edge_hyper_wiener_benzenoid(&anthracene)?;
//! assert_eq!(report.edge_wiener, 350);
//! assert_eq!(report.edge_hyper_wiener, 812);
//! # Ok::<(), hyperwiener::Error>(())
//! ```

pub mod benzenoid;
pub mod bits;
pub mod cut;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod polyacene;
pub mod report;
pub mod theta;

pub use error::{Error, Rejection, Result};
pub use graph::{DistanceMatrix, DistanceRow, Graph};
pub use report::{IndexReport, Method};
