//! Adversarial probing of the vertex-gap bound.
//!
//! The climb maximizes the scale-invariant ratio
//! `min vertex distance / longest edge` over intersecting pairs of the
//! optimal dimension split. Moves that break the intersection are rejected
//! after an LP re-solve; accepted states therefore always satisfy the
//! hypotheses of the bound, so the best value found can approach but never
//! exceed it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{optimal_split, vertex_gap_bound};
use crate::error::{Error, Result};
use crate::geom::{standard_normal, Point, Simplex};
use crate::intersect::{min_vertex_distance, simplex_intersection, DEFAULT_LP_TOL};
use crate::search::pair_gen::{random_intersecting_pair_with, rescale_about};

/// Outcome of [`adversarial_vertex_gap_search`].
#[derive(Debug, Clone, Serialize)]
pub struct AdversarialReport {
    pub version: String,
    /// Ambient dimension probed.
    pub n: usize,
    /// Edge-length budget.
    pub edge: f64,
    pub trials: usize,
    pub climb_steps: usize,
    pub seed: u64,
    /// The theoretical ceiling `vertex_gap_bound(n, edge)`.
    pub bound: f64,
    /// Best minimum vertex distance reached (at the edge budget).
    pub best_gap: f64,
    /// The pair attaining `best_gap`, rescaled to the edge budget.
    pub best_pair: (Simplex, Simplex),
    /// Best value per trial, in trial order.
    pub trace: Vec<f64>,
}

/// Hill-climbs `trials` random intersecting pairs in `R^n` for
/// `climb_steps` sweeps each, maximizing the vertex gap under the edge
/// budget. Deterministic for fixed inputs.
pub fn adversarial_vertex_gap_search(
    n: usize,
    edge: f64,
    trials: usize,
    climb_steps: usize,
    seed: u64,
) -> Result<AdversarialReport> {
    if trials == 0 || climb_steps == 0 {
        return Err(Error::invalid("trials and climb_steps must be >= 1"));
    }
    let bound = vertex_gap_bound(n, edge)?.value;
    let dims = optimal_split(n)?;

    let mut best_ratio = -1.0f64;
    let mut best_pair: Option<(Simplex, Simplex)> = None;
    let mut trace = Vec::with_capacity(trials);

    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
        let start = random_intersecting_pair_with(&mut rng, n, edge, dims)?;
        let (ratio, a, b) = hill_climb(start, climb_steps, &mut rng)?;
        trace.push(ratio * edge);
        if ratio > best_ratio {
            best_ratio = ratio;
            best_pair = Some((a, b));
        }
    }

    let (a, b) = best_pair.expect("at least one trial ran");
    let (a, b, gap) = normalize_to_edge(&a, &b, edge)?;
    assert!(
        gap <= bound + 1e-7,
        "gap {gap} exceeded the bound {bound}; the climb produced an invalid pair"
    );
    Ok(AdversarialReport {
        version: crate::VERSION.to_string(),
        n,
        edge,
        trials,
        climb_steps,
        seed,
        bound,
        best_gap: gap,
        best_pair: (a, b),
        trace,
    })
}

/// Climbs from a given intersecting pair; exposed so callers can warm-start
/// from explicit constructions. Returns the reached gap at the edge budget
/// together with the final pair.
pub fn hill_climb_from(
    a: &Simplex,
    b: &Simplex,
    edge: f64,
    climb_steps: usize,
    seed: u64,
) -> Result<(f64, Simplex, Simplex)> {
    if simplex_intersection(a, b, DEFAULT_LP_TOL)?.is_none() {
        return Err(Error::invalid("warm-start pair does not intersect"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (ratio, a, b) = hill_climb((a.clone(), b.clone()), climb_steps, &mut rng)?;
    let (a, b, gap) = normalize_to_edge(&a, &b, edge)?;
    debug_assert!((gap - ratio * edge).abs() <= 1e-9 * edge.max(1.0));
    Ok((gap, a, b))
}

/// Scale-invariant objective: min cross vertex distance over longest edge.
fn ratio_of(a: &Simplex, b: &Simplex) -> f64 {
    let gap = min_vertex_distance(a, b).2;
    let longest = a.max_edge().max(b.max_edge());
    if longest > 0.0 {
        gap / longest
    } else {
        0.0
    }
}

fn hill_climb<R: Rng>(
    start: (Simplex, Simplex),
    sweeps: usize,
    rng: &mut R,
) -> Result<(f64, Simplex, Simplex)> {
    let (mut a, mut b) = start;
    let mut ratio = ratio_of(&a, &b);
    let mut eta = 0.25f64; // move scale relative to the longest edge

    for _ in 0..sweeps {
        let mut improved = false;

        // greedy pattern sweep: every vertex, axis, and sign, accepting
        // improvements as they come
        for side in 0..2 {
            let vertex_count = if side == 0 { a.dim() + 1 } else { b.dim() + 1 };
            for vi in 0..vertex_count {
                for axis in 0..a.ambient_dim() {
                    for sign in [1.0f64, -1.0] {
                        let step = sign * eta * a.max_edge().max(b.max_edge()).max(1e-9);
                        let (na, nb) = moved(&a, &b, side, vi, axis, step);
                        if let Some(r) = feasible_ratio(&na, &nb)? {
                            if r > ratio + 1e-12 {
                                a = na;
                                b = nb;
                                ratio = r;
                                improved = true;
                            }
                        }
                    }
                }
            }
        }

        if !improved {
            // random kicks before shrinking the move scale
            for _ in 0..3 {
                let scale = 0.5 * eta * a.max_edge().max(b.max_edge()).max(1e-9);
                let (na, nb) = jitter(&a, &b, scale, rng);
                if let Some(r) = feasible_ratio(&na, &nb)? {
                    if r > ratio + 1e-12 {
                        a = na;
                        b = nb;
                        ratio = r;
                        improved = true;
                        break;
                    }
                }
            }
        }
        if !improved {
            eta *= 0.5;
            if eta < 1e-7 {
                break;
            }
        }
    }
    Ok((ratio, a, b))
}

/// Ratio after an LP feasibility re-check; `None` when the move broke the
/// intersection (the move is then rejected).
fn feasible_ratio(a: &Simplex, b: &Simplex) -> Result<Option<f64>> {
    Ok(simplex_intersection(a, b, DEFAULT_LP_TOL)?.map(|_| ratio_of(a, b)))
}

fn moved(
    a: &Simplex,
    b: &Simplex,
    side: usize,
    vertex: usize,
    axis: usize,
    step: f64,
) -> (Simplex, Simplex) {
    let shift = |s: &Simplex| {
        let mut verts = s.vertices().to_vec();
        let mut c = verts[vertex].coords().to_vec();
        c[axis] += step;
        verts[vertex] = Point::new(c);
        Simplex::new_unchecked(verts)
    };
    if side == 0 {
        (shift(a), b.clone())
    } else {
        (a.clone(), shift(b))
    }
}

fn jitter<R: Rng>(a: &Simplex, b: &Simplex, scale: f64, rng: &mut R) -> (Simplex, Simplex) {
    let mut move_all = |s: &Simplex| {
        Simplex::new_unchecked(
            s.vertices()
                .iter()
                .map(|v| {
                    Point::new(
                        v.coords()
                            .iter()
                            .map(|c| c + scale * standard_normal(rng))
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    let na = move_all(a);
    let nb = move_all(b);
    (na, nb)
}

/// Rescales the pair about an intersection witness so the longest edge
/// equals `edge` exactly, and returns the resulting gap.
fn normalize_to_edge(a: &Simplex, b: &Simplex, edge: f64) -> Result<(Simplex, Simplex, f64)> {
    let w = simplex_intersection(a, b, DEFAULT_LP_TOL)?
        .ok_or_else(|| Error::invalid("pair lost its intersection"))?;
    let longest = a.max_edge().max(b.max_edge());
    let (a, b) = if longest > 0.0 {
        let f = edge / longest;
        (rescale_about(a, &w.point, f), rescale_about(b, &w.point, f))
    } else {
        (a.clone(), b.clone())
    };
    let gap = min_vertex_distance(&a, &b).2;
    Ok((a, b, gap))
}
