//! Minimax distortion search over sampled maps.
//!
//! The sphere sample is frozen; the images move. Each iteration collects
//! the pairs within `1e-6` of the current maximum deviation and takes a
//! subgradient step on them with step size `c / sqrt(t)`. Restarts explore
//! independent initializations; for circle-to-line searches the first
//! restart warm-starts from the distortion-sharp circle map, and the best
//! value found is reported together with the certified floor of its own
//! values, which it can never undercut.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distortion::{certify_circle_values, sharp_circle_map, CertifiedBound};
use crate::error::{Error, Result};
use crate::geom::{sample_sphere, standard_normal, Point, SpherePoint};

const ITERS_PER_RESTART: usize = 400;
const ACTIVE_SET_SLACK: f64 = 1e-6;

/// Outcome of [`minimax_distortion_search`].
#[derive(Debug, Clone, Serialize)]
pub struct MinimaxReport {
    pub version: String,
    /// Sphere dimension of the domain.
    pub n: usize,
    /// Dimension of the image space.
    pub image_dim: usize,
    pub radius: f64,
    pub sample_size: usize,
    pub restarts: usize,
    pub iters_per_restart: usize,
    pub seed: u64,
    /// Largest nearest-neighbor geodesic distance of the sample; the slack
    /// any finite-sample comparison carries.
    pub mesh: f64,
    /// Smallest sampled distortion found.
    pub best_distortion: f64,
    /// Certified lower bound of the best images (circle-to-line runs only).
    pub certified_floor: Option<CertifiedBound>,
    /// Best value per restart, in restart order.
    pub trace: Vec<f64>,
    /// The images attaining `best_distortion`, in sample order.
    pub images: Vec<Point>,
}

/// Minimizes the sampled distortion of maps from a fixed `count`-point
/// sample of the radius-`r` `n`-sphere into `R^image_dim`.
///
/// `count` must be odd when `n == 1` so the certified floor applies.
/// Deterministic for fixed inputs.
pub fn minimax_distortion_search(
    n: usize,
    image_dim: usize,
    r: f64,
    count: usize,
    restarts: usize,
    seed: u64,
) -> Result<MinimaxReport> {
    if image_dim == 0 || image_dim > n {
        return Err(Error::invalid("image dimension must be in 1..=n"));
    }
    if count < 3 {
        return Err(Error::invalid("need at least three sample points"));
    }
    if n == 1 && count.is_multiple_of(2) {
        return Err(Error::invalid("circle searches need an odd sample size"));
    }
    if restarts == 0 {
        return Err(Error::invalid("need at least one restart"));
    }

    let sample = sample_sphere(n, r, count, seed)?;
    let dx = pairwise_sphere_distances(&sample)?;
    let mesh = mesh_of(&dx, count);

    let mut best = f64::INFINITY;
    let mut best_images: Vec<Vec<f64>> = Vec::new();
    let mut trace = Vec::with_capacity(restarts);

    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart as u64));
        let mut images = initial_images(restart, n, image_dim, r, &sample, &mut rng)?;
        let mut local_best = eval_distortion(&dx, &images, count);
        let mut local_images = images.clone();

        let step0 = 0.3 * r;
        for t in 1..=ITERS_PER_RESTART {
            let (value, grad) = deviation_subgradient(&dx, &images, count);
            if value < local_best {
                local_best = value;
                local_images = images.clone();
            }
            let step = step0 / (t as f64).sqrt();
            for (img, g) in images.iter_mut().zip(&grad) {
                for (c, gc) in img.iter_mut().zip(g) {
                    *c -= step * gc;
                }
            }
        }
        let final_value = eval_distortion(&dx, &images, count);
        if final_value < local_best {
            local_best = final_value;
            local_images = images;
        }

        trace.push(local_best);
        if local_best < best {
            best = local_best;
            best_images = local_images;
        }
    }

    let certified_floor = if n == 1 && image_dim == 1 {
        let values: Vec<f64> = best_images.iter().map(|img| img[0]).collect();
        let floor = certify_circle_values(&values, r)?;
        debug_assert!(best >= floor.value - 1e-12);
        Some(floor)
    } else {
        None
    };

    Ok(MinimaxReport {
        version: crate::VERSION.to_string(),
        n,
        image_dim,
        radius: r,
        sample_size: count,
        restarts,
        iters_per_restart: ITERS_PER_RESTART,
        seed,
        mesh,
        best_distortion: best,
        certified_floor,
        trace,
        images: best_images.into_iter().map(Point::new).collect(),
    })
}

/// Upper-triangular pairwise geodesic distances, row-major.
fn pairwise_sphere_distances(sample: &[SpherePoint]) -> Result<Vec<f64>> {
    let n = sample.len();
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let dist = sample[i].distance(&sample[j])?;
            d[i * n + j] = dist;
            d[j * n + i] = dist;
        }
    }
    Ok(d)
}

fn mesh_of(dx: &[f64], n: usize) -> f64 {
    let mut mesh = 0.0f64;
    for i in 0..n {
        let mut nearest = f64::INFINITY;
        for j in 0..n {
            if j != i {
                nearest = nearest.min(dx[i * n + j]);
            }
        }
        mesh = mesh.max(nearest);
    }
    mesh
}

fn initial_images<R: Rng>(
    restart: usize,
    n: usize,
    image_dim: usize,
    r: f64,
    sample: &[SpherePoint],
    rng: &mut R,
) -> Result<Vec<Vec<f64>>> {
    if restart == 0 {
        if n == 1 && image_dim == 1 {
            // warm start from the sharp circle map on the grid
            let m = sample.len();
            return (0..m)
                .map(|k| {
                    let theta = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                    Ok(vec![sharp_circle_map(theta, r)?])
                })
                .collect();
        }
        // coordinate projection start
        return Ok(sample
            .iter()
            .map(|x| x.coords().coords()[..image_dim].to_vec())
            .collect());
    }
    Ok(sample
        .iter()
        .map(|_| (0..image_dim).map(|_| r * standard_normal(rng)).collect())
        .collect())
}

fn eval_distortion(dx: &[f64], images: &[Vec<f64>], n: usize) -> f64 {
    let mut best = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max((image_dist(&images[i], &images[j]) - dx[i * n + j]).abs());
        }
    }
    best
}

/// Max deviation together with the summed subgradient over the active set.
fn deviation_subgradient(dx: &[f64], images: &[Vec<f64>], n: usize) -> (f64, Vec<Vec<f64>>) {
    let mut value = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            value = value.max((image_dist(&images[i], &images[j]) - dx[i * n + j]).abs());
        }
    }
    let dim = images[0].len();
    let mut grad = vec![vec![0.0; dim]; n];
    let mut active = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            let dy = image_dist(&images[i], &images[j]);
            let dev = dy - dx[i * n + j];
            if dev.abs() >= value - ACTIVE_SET_SLACK {
                active += 1;
                if dy > 1e-12 {
                    let s = dev.signum() / dy;
                    for c in 0..dim {
                        let u = s * (images[i][c] - images[j][c]);
                        grad[i][c] += u;
                        grad[j][c] -= u;
                    }
                }
                // coincident images with dev < 0 have no useful direction;
                // skipping them keeps the step well-defined
            }
        }
    }
    if active > 0 {
        let inv = 1.0 / active as f64;
        for g in &mut grad {
            for c in g.iter_mut() {
                *c *= inv;
            }
        }
    }
    (value, grad)
}

fn image_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}
