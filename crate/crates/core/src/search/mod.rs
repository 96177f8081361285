//! Randomized probes and optimization harnesses around the bounds.
//!
//! Three harnesses, all deterministic under an explicit seed:
//!
//! - [`adversarial_vertex_gap_search`] tries to push the minimum vertex
//!   distance of an intersecting pair *up*, towards (never past) the sharp
//!   gap bound;
//! - [`minimax_distortion_search`] tries to push the sampled distortion of
//!   a map *down*, towards (never past) the certified floor;
//! - [`granas_scan`] realizes the antipodal-hull argument at a finite
//!   scale: it finds a direction whose image hull meets the antipodal one,
//!   extracts an intersecting simplex pair from the witness, and checks the
//!   resulting distance chain.
//!
//! Together they squeeze the bounds from both sides at desk scale.

mod adversarial;
mod granas;
mod minimax;
mod pair_gen;

pub use adversarial::{adversarial_vertex_gap_search, hill_climb_from, AdversarialReport};
pub use granas::{granas_scan, hull_at_scale, GranasReport, GranasWitness, HullAtScale};
pub use minimax::{minimax_distortion_search, MinimaxReport};
pub use pair_gen::{random_intersecting_pair, random_intersecting_pair_with};
