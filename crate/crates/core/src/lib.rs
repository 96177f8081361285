//! Metric-geometry kernel for probing how much any map from a round sphere
//! into a Euclidean space must distort distances.
//!
//! The crate is organized around a chain of small, certifiable pieces:
//!
//! - [`geom`] — points, simplices, regular-simplex construction, and the
//!   geodesic metric on round spheres.
//! - [`circumsphere`] — equidistant circumcenters, smallest enclosing balls,
//!   and Jung's bound.
//! - [`lp`] / [`intersect`] — convex-hull intersection as LP feasibility,
//!   Carathéodory witness extraction, and dimension reduction of an
//!   intersecting simplex pair until the dimensions sum to at most the
//!   ambient dimension.
//! - [`bounds`] — the closed-form vertex-gap and distortion bounds together
//!   with the extremal pair of regular simplices that attains the gap bound.
//! - [`distortion`] — the distortion functional on sampled maps and a
//!   combinatorial certifier for circle-to-line samples.
//! - [`search`] — randomized fuzz generators, an adversarial hill climb on
//!   the vertex gap, a minimax distortion search, and a finite-scale
//!   antipodal hull scan.
//!
//! All operations are deterministic: randomized routines take explicit seeds
//! and never touch global RNG state.

pub mod bounds;
pub mod circumsphere;
pub mod distortion;
pub mod error;
pub mod geom;
pub mod intersect;
pub(crate) mod linalg;
pub mod lp;
pub mod oracle;
pub mod search;

pub use bounds::{
    circumradius_gap_bound, optimal_split, pair_dimension_bound, sharp_pair,
    sphere_distortion_bound, vertex_gap_bound, BoundSpec, Parity, Scale,
};
pub use circumsphere::{
    diameter, equidistant_circumcenter, jung_bound, min_enclosing_ball,
    min_enclosing_ball_with_support, CircumSphere, Flavor,
};
pub use distortion::{
    certify_circle_values, distortion_with, projection_map_sample, sharp_circle_map, Certificate,
    CertifiedBound, PathConfig, Relation,
};
pub use error::{Error, Result};
pub use geom::{
    affine_dimension, affinely_independent, sample_sphere, sphere_distance, BarycentricCoords,
    Point, Simplex, SpherePoint,
};
pub use intersect::{
    caratheodory_reduce, hull_intersection, min_vertex_distance, reduce_to_complementary_dims,
    simplex_intersection, IntersectionWitness, DEFAULT_LP_TOL,
};
pub use search::{
    adversarial_vertex_gap_search, granas_scan, hill_climb_from, hull_at_scale,
    minimax_distortion_search, random_intersecting_pair, random_intersecting_pair_with,
    AdversarialReport, GranasReport, GranasWitness, HullAtScale, MinimaxReport,
};

/// Version string embedded in every machine-readable report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
