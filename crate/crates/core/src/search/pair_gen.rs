//! Random generation of nontrivially intersecting simplex pairs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{standard_normal, Point, Simplex};
use crate::intersect::{simplex_intersection, DEFAULT_LP_TOL};

/// Draws a pair of simplices of dimensions `dims = (k, m)` in `R^n` that
/// share a point, with all edges at most `edge` (the longest edge lands on
/// `edge` exactly unless both simplices are points).
///
/// A common point is sampled with random hull weights in each simplex, the
/// second simplex is translated so the weighted combinations agree, and the
/// whole configuration is rescaled about the common point. Degenerate draws
/// are rejected and resampled; the intersection is re-verified through the
/// LP before returning.
pub fn random_intersecting_pair(
    n: usize,
    edge: f64,
    dims: (usize, usize),
    seed: u64,
) -> Result<(Simplex, Simplex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_intersecting_pair_with(&mut rng, n, edge, dims)
}

/// Same as [`random_intersecting_pair`] but drawing from a caller-owned
/// generator, for use inside fuzz loops.
pub fn random_intersecting_pair_with<R: Rng>(
    rng: &mut R,
    n: usize,
    edge: f64,
    dims: (usize, usize),
) -> Result<(Simplex, Simplex)> {
    let (k, m) = dims;
    if k > n || m > n {
        return Err(Error::invalid(
            "simplex dimension exceeds ambient dimension",
        ));
    }
    if !edge.is_finite() || edge <= 0.0 {
        return Err(Error::invalid("edge bound must be positive"));
    }

    for _ in 0..1000 {
        let a = match random_simplex(rng, k, n) {
            Some(s) => s,
            None => continue,
        };
        let b_raw = match random_simplex(rng, m, n) {
            Some(s) => s,
            None => continue,
        };
        let x = hull_sample(rng, &a);
        let y = hull_sample(rng, &b_raw);
        let shift = x.sub(&y);
        let b = Simplex::new_unchecked(b_raw.vertices().iter().map(|v| v.add(&shift)).collect());

        // rescale about the common point so the longest edge is exactly `edge`
        let longest = a.max_edge().max(b.max_edge());
        let (a, b) = if longest > 0.0 {
            let f = edge / longest;
            (rescale_about(&a, &x, f), rescale_about(&b, &x, f))
        } else {
            (a, b)
        };

        if simplex_intersection(&a, &b, DEFAULT_LP_TOL)?.is_some() {
            return Ok((a, b));
        }
    }
    Err(Error::invalid("failed to draw an intersecting pair"))
}

fn random_simplex<R: Rng>(rng: &mut R, dim: usize, ambient: usize) -> Option<Simplex> {
    let verts: Vec<Point> = (0..=dim)
        .map(|_| {
            let mut c = Vec::with_capacity(ambient);
            for _ in 0..ambient {
                c.push(standard_normal(rng));
            }
            Point::new(c)
        })
        .collect();
    Simplex::new(verts).ok()
}

/// A hull point with Dirichlet(1, ..., 1) weights.
fn hull_sample<R: Rng>(rng: &mut R, s: &Simplex) -> Point {
    let mut w: Vec<f64> = (0..=s.dim())
        .map(|_| -(rng.gen::<f64>().max(f64::MIN_POSITIVE)).ln())
        .collect();
    let sum: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= sum);
    let mut out = vec![0.0; s.ambient_dim()];
    for (wi, v) in w.iter().zip(s.vertices()) {
        for (o, c) in out.iter_mut().zip(v.coords()) {
            *o += wi * c;
        }
    }
    Point::new(out)
}

pub(crate) fn rescale_about(s: &Simplex, center: &Point, factor: f64) -> Simplex {
    Simplex::new_unchecked(
        s.vertices()
            .iter()
            .map(|v| center.add(&v.sub(center).scale(factor)))
            .collect(),
    )
}
