//! Circumcenters, smallest enclosing balls, and Jung's bound.
//!
//! Two distinct "circumscribed sphere" notions coexist and agree only for
//! acute simplices:
//!
//! - the **equidistant** sphere: the unique point of the affine hull
//!   equidistant from all vertices, found by solving the linear system
//!   `d(x, v_i)^2 = d(x, v_last)^2`;
//! - the **minimum enclosing** ball: the smallest closed ball containing
//!   the vertex set (and hence, by convexity, the whole simplex).
//!
//! For an obtuse triangle the two differ, so both are provided and callers
//! pick the flavor their inequality needs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, Simplex};
use crate::linalg;

/// Reciprocal-condition cutoff below which the equidistance system is
/// reported as degenerate instead of solved.
pub const DEGENERACY_RCOND: f64 = 1e-12;

/// Which circumscribed sphere a [`CircumSphere`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Equidistant,
    MinEnclosing,
}

/// A center/radius pair in one of the two flavors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircumSphere {
    pub center: Point,
    pub radius: f64,
    pub flavor: Flavor,
}

/// Center of the equidistance system of a simplex, solved within its affine
/// hull.
///
/// Fails with [`Error::Degenerate`] when the reciprocal condition estimate
/// of the system drops below [`DEGENERACY_RCOND`] or the solved center does
/// not reproduce equal vertex distances to 1e-9 relative.
pub fn equidistant_circumcenter(s: &Simplex) -> Result<CircumSphere> {
    let verts = s.vertices();
    let k = s.dim();
    if k == 0 {
        return Ok(CircumSphere {
            center: verts[0].clone(),
            radius: 0.0,
            flavor: Flavor::Equidistant,
        });
    }
    let (center, rcond) = equidistant_point(&verts.iter().collect::<Vec<_>>(), 0.0)
        .ok_or(Error::Degenerate { rcond: 0.0 })?;
    if rcond < DEGENERACY_RCOND {
        return Err(Error::Degenerate { rcond });
    }
    let dists: Vec<f64> = verts.iter().map(|v| v.dist(&center)).collect();
    let radius = dists.iter().sum::<f64>() / dists.len() as f64;
    let spread = dists
        .iter()
        .map(|d| (d - radius).abs())
        .fold(0.0f64, f64::max);
    if spread > 1e-9 * radius.max(f64::MIN_POSITIVE) {
        return Err(Error::Degenerate { rcond });
    }
    Ok(CircumSphere {
        center,
        radius,
        flavor: Flavor::Equidistant,
    })
}

/// Solves `d(x, v_i)^2 = d(x, v_last)^2` for `x` in the affine hull of the
/// given points. With `rel_threshold > 0` nearly dependent directions are
/// dropped (minimum-norm center), which keeps the boundary solves of the
/// enclosing-ball recursion stable.
fn equidistant_point(verts: &[&Point], rel_threshold: f64) -> Option<(Point, f64)> {
    let k = verts.len() - 1;
    let last = verts[k];
    if k == 0 {
        return Some((last.clone(), 1.0));
    }
    let diffs: Vec<Point> = verts[..k].iter().map(|v| v.sub(last)).collect();
    let mut gram = vec![vec![0.0; k]; k];
    let mut rhs = vec![0.0; k];
    for i in 0..k {
        for j in i..k {
            let g = diffs[i].dot(&diffs[j]);
            gram[i][j] = g;
            gram[j][i] = g;
        }
        rhs[i] = 0.5 * diffs[i].norm_sq();
    }
    let (y, rcond) = linalg::sym_solve(gram, rhs, rel_threshold)?;
    let mut center = last.clone();
    for (yi, d) in y.iter().zip(&diffs) {
        center = center.translate(d, *yi);
    }
    Some((center, rcond))
}

/// Smallest enclosing ball of a point set.
pub fn min_enclosing_ball(points: &[Point], seed: u64) -> Result<CircumSphere> {
    min_enclosing_ball_with_support(points, seed).map(|(s, _)| s)
}

/// Smallest enclosing ball together with the support set that determines
/// it: at most `dim + 1` input indices whose own enclosing ball equals the
/// result, all lying on its boundary.
///
/// Move-to-front Welzl recursion over a seeded shuffle; deterministic for a
/// fixed `(points, seed)` pair.
pub fn min_enclosing_ball_with_support(
    points: &[Point],
    seed: u64,
) -> Result<(CircumSphere, Vec<usize>)> {
    if points.is_empty() {
        return Err(Error::invalid("need >= 1 point"));
    }
    let dim = points[0].dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        if !p.is_finite() {
            return Err(Error::invalid("non-finite coordinate"));
        }
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let mut support = Vec::new();
    let ball = welzl_mtf(points, &mut order, points.len(), &mut support, dim);
    let mut support = ball.support;
    support.sort_unstable();
    Ok((
        CircumSphere {
            center: ball.center,
            radius: ball.radius.max(0.0),
            flavor: Flavor::MinEnclosing,
        },
        support,
    ))
}

struct Ball {
    center: Point,
    radius: f64, // negative while undetermined
    support: Vec<usize>,
}

fn ball_contains(ball: &Ball, p: &Point) -> bool {
    ball.radius >= 0.0 && p.dist(&ball.center) <= ball.radius + 1e-10 * (1.0 + ball.radius)
}

fn ball_of_support(points: &[Point], support: &[usize], dim: usize) -> Ball {
    match support.len() {
        0 => Ball {
            center: Point::zeros(dim),
            radius: -1.0,
            support: Vec::new(),
        },
        1 => Ball {
            center: points[support[0]].clone(),
            radius: 0.0,
            support: support.to_vec(),
        },
        _ => {
            let verts: Vec<&Point> = support.iter().map(|&i| &points[i]).collect();
            // nearly dependent boundary sets fall back to a minimum-norm
            // center in their affine hull
            let (center, _) = equidistant_point(&verts, 1e-13)
                .expect("support points coincide; ball_contains should have absorbed them");
            let radius = verts.iter().map(|v| v.dist(&center)).fold(0.0f64, f64::max);
            Ball {
                center,
                radius,
                support: support.to_vec(),
            }
        }
    }
}

fn welzl_mtf(
    points: &[Point],
    order: &mut [usize],
    end: usize,
    support: &mut Vec<usize>,
    dim: usize,
) -> Ball {
    let mut ball = ball_of_support(points, support, dim);
    if support.len() == dim + 1 {
        return ball;
    }
    let mut i = 0;
    while i < end {
        let idx = order[i];
        if !ball_contains(&ball, &points[idx]) {
            support.push(idx);
            ball = welzl_mtf(points, order, i, support, dim);
            support.pop();
            order[..=i].rotate_right(1);
        }
        i += 1;
    }
    ball
}

/// Jung's enclosing-radius bound `D * sqrt(k / (2(k+1)))` for a set of
/// diameter `D` whose affine hull has dimension `k`.
pub fn jung_bound(diameter: f64, k: usize) -> f64 {
    diameter * (k as f64 / (2.0 * (k as f64 + 1.0))).sqrt()
}

/// Largest pairwise distance; zero for a single point.
pub fn diameter(points: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max(points[i].dist(&points[j]));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{affine_dimension, BarycentricCoords, DEFAULT_AFFINE_TOL};
    use rand::Rng;

    fn p(coords: &[f64]) -> Point {
        Point::new(coords.to_vec())
    }

    #[test]
    fn segment_circumcenter() {
        let s = Simplex::new(vec![p(&[0.0]), p(&[1.0])]).unwrap();
        let c = equidistant_circumcenter(&s).unwrap();
        assert!((c.center.coords()[0] - 0.5).abs() < 1e-15);
        assert!((c.radius - 0.5).abs() < 1e-15);
    }

    #[test]
    fn right_triangle_circumcenter() {
        // Oracle: the 2x2 equidistance system by hand. With vertices
        // (0,0), (1,0), (0,1): |x|^2 = |x - (1,0)|^2 gives x1 = 1/2, and
        // |x|^2 = |x - (0,1)|^2 gives x2 = 1/2; radius = |(1/2,1/2)| =
        // sqrt(2)/2.
        let s = Simplex::new(vec![p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.0, 1.0])]).unwrap();
        let c = equidistant_circumcenter(&s).unwrap();
        assert!((c.center.coords()[0] - 0.5).abs() < 1e-12);
        assert!((c.center.coords()[1] - 0.5).abs() < 1e-12);
        assert!((c.radius - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn regular_simplex_circumcenter_is_barycenter() {
        for m in 1..=5 {
            let edge = 1.5;
            let s = Simplex::regular(m, edge, m + 1, None).unwrap();
            let c = equidistant_circumcenter(&s).unwrap();
            assert!(c.center.dist(&s.barycenter()) < 1e-12);
            let want = edge * (m as f64 / (2.0 * (m as f64 + 1.0))).sqrt();
            assert!((c.radius - want).abs() < 1e-12);
        }
    }

    #[test]
    fn single_point_ball() {
        let (ball, support) = min_enclosing_ball_with_support(&[p(&[3.0, 4.0])], 0).unwrap();
        assert_eq!(ball.radius, 0.0);
        assert_eq!(support, vec![0]);
    }

    #[test]
    fn obtuse_triangle_ball_sits_on_longest_edge() {
        // Oracle: dense grid search over candidate centers. The triangle
        // (0,0), (4,0), (1,0.1) is obtuse, so the minimum ball is the one
        // with the longest edge as diameter: center (2, 0), radius 2.
        let pts = [p(&[0.0, 0.0]), p(&[4.0, 0.0]), p(&[1.0, 0.1])];
        let ball = min_enclosing_ball(&pts, 11).unwrap();

        let mut grid_best = f64::INFINITY;
        let mut grid_center = (0.0, 0.0);
        for ix in 0..=400 {
            for iy in 0..=100 {
                let cx = ix as f64 * 0.01;
                let cy = -0.5 + iy as f64 * 0.01;
                let r = pts
                    .iter()
                    .map(|q| q.dist(&p(&[cx, cy])))
                    .fold(0.0f64, f64::max);
                if r < grid_best {
                    grid_best = r;
                    grid_center = (cx, cy);
                }
            }
        }
        assert!((grid_best - 2.0).abs() < 1e-3);
        assert!((ball.radius - 2.0).abs() < 1e-9);
        assert!(ball.center.dist(&p(&[grid_center.0, grid_center.1])) < 2e-2);

        // and it is strictly smaller than the equidistant radius here
        let s = Simplex::new(pts.to_vec()).unwrap();
        let eq = equidistant_circumcenter(&s).unwrap();
        assert!(ball.radius < eq.radius - 1.0);
    }

    #[test]
    fn regular_simplex_ball_matches_equidistant() {
        for m in 1..=4 {
            let s = Simplex::regular(m, 1.0, m + 1, None).unwrap();
            let eq = equidistant_circumcenter(&s).unwrap();
            let mb = min_enclosing_ball(s.vertices(), 5).unwrap();
            assert!((eq.radius - mb.radius).abs() < 1e-9);
            assert!(eq.center.dist(&mb.center) < 1e-7);
        }
    }

    #[test]
    fn nearly_flat_simplex_is_reported_degenerate() {
        // height 1e-8 puts the pivot ratio near 1e-16, far below the
        // reciprocal-condition cutoff
        let flat = Simplex::new_unchecked(vec![p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.5, 1e-8])]);
        match equidistant_circumcenter(&flat) {
            Err(Error::Degenerate { rcond }) => assert!(rcond < DEGENERACY_RCOND),
            other => panic!("expected a degeneracy error, got {other:?}"),
        }
        // the enclosing ball still works on the same input
        let mb = min_enclosing_ball(flat.vertices(), 0).unwrap();
        assert!((mb.radius - 0.5).abs() < 1e-9);
    }

    #[test]
    fn jung_bound_values() {
        assert!((jung_bound(1.0, 1) - 0.5).abs() < 1e-12);
        assert!((jung_bound(1.0, 2) - 0.5773502692).abs() < 1e-10);
        assert!((jung_bound(2.0, 3) - 1.2247448714).abs() < 1e-10);
        assert_eq!(jung_bound(1.0, 0), 0.0);
    }

    fn gauss_point<R: Rng>(rng: &mut R, ambient: usize) -> Point {
        let mut coords = Vec::with_capacity(ambient);
        for _ in 0..ambient {
            coords.push(crate::geom::standard_normal(rng));
        }
        Point::new(coords)
    }

    fn random_simplex<R: Rng>(rng: &mut R, dim: usize, ambient: usize) -> Simplex {
        loop {
            let verts: Vec<Point> = (0..=dim).map(|_| gauss_point(rng, ambient)).collect();
            if let Ok(s) = Simplex::new(verts) {
                return s;
            }
        }
    }

    #[test]
    fn enclosing_ball_never_beats_equidistant_sphere() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for trial in 0..200 {
            let ambient = rng.gen_range(1..=4);
            let dim = rng.gen_range(1..=ambient);
            let s = random_simplex(&mut rng, dim, ambient);
            let eq = match equidistant_circumcenter(&s) {
                Ok(c) => c,
                Err(Error::Degenerate { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            let mb = min_enclosing_ball(s.vertices(), trial).unwrap();
            assert!(mb.radius <= eq.radius + 1e-9);
            for v in s.vertices() {
                assert!(v.dist(&mb.center) <= mb.radius + 1e-9);
            }
        }
    }

    #[test]
    fn jung_bound_fuzz() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for trial in 0..300 {
            let ambient = rng.gen_range(1..=5);
            let count = rng.gen_range(1..=9);
            let pts: Vec<Point> = (0..count).map(|_| gauss_point(&mut rng, ambient)).collect();
            let dim = affine_dimension(&pts, DEFAULT_AFFINE_TOL).unwrap();
            let ball = min_enclosing_ball(&pts, trial).unwrap();
            assert!(ball.radius <= jung_bound(diameter(&pts), dim) + 1e-9);
        }
    }

    #[test]
    fn interior_points_are_covered_and_near_some_vertex() {
        // covering a simplex is covering its vertices: random hull points
        // stay inside the equidistant sphere, and are within the radius of
        // at least one vertex
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for trial in 0..150 {
            let ambient = rng.gen_range(1..=4);
            let dim = rng.gen_range(1..=ambient);
            let s = random_simplex(&mut rng, dim, ambient);
            let eq = match equidistant_circumcenter(&s) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let mb = min_enclosing_ball(s.vertices(), trial).unwrap();
            let mut raw: Vec<f64> = (0..=dim).map(|_| -rng.gen::<f64>().ln()).collect();
            let sum: f64 = raw.iter().sum();
            raw.iter_mut().for_each(|w| *w /= sum);
            let x = s.point_at(&BarycentricCoords::new(raw, 1e-12).unwrap());
            assert!(x.dist(&eq.center) <= eq.radius + 1e-9);
            let nearest = s
                .vertices()
                .iter()
                .map(|v| v.dist(&x))
                .fold(f64::INFINITY, f64::min);
            assert!(nearest <= eq.radius + 1e-9);
            assert!(nearest <= mb.radius + 1e-9);
        }
    }

    #[test]
    fn welzl_is_deterministic_per_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let pts: Vec<Point> = (0..40)
            .map(|_| Point::new((0..3).map(|_| rng.gen::<f64>()).collect()))
            .collect();
        let a = min_enclosing_ball_with_support(&pts, 9).unwrap();
        let b = min_enclosing_ball_with_support(&pts, 9).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
        // different seeds agree on the ball itself
        let c = min_enclosing_ball(&pts, 10).unwrap();
        assert!((a.0.radius - c.radius).abs() < 1e-9);
        assert!(a.0.center.dist(&c.center) < 1e-7);
        // support certifies the ball: at most dim+1 points, all on the
        // boundary, and their own enclosing ball is the same ball
        assert!(a.1.len() <= 4);
        for &i in &a.1 {
            assert!((pts[i].dist(&a.0.center) - a.0.radius).abs() < 1e-7);
        }
        let sub: Vec<Point> = a.1.iter().map(|&i| pts[i].clone()).collect();
        let again = min_enclosing_ball(&sub, 3).unwrap();
        assert!((again.radius - a.0.radius).abs() < 1e-7);
    }
}
