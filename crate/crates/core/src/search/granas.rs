//! Finite-scale antipodal hull scan.
//!
//! For a sampled map and a scale `eps`, the hull of the images over the
//! `eps`-ball at a direction `x` stands in for the map's convex essence at
//! `x`. The set-valued antipodal theorem guarantees, in the limit of fine
//! scales, a direction whose essence meets the antipodal one; the scan
//! looks for such a direction at the fixed scale, extracts an intersecting
//! simplex pair from the hull witness (pruning each side to an affinely
//! independent support, then reducing dimensions until they sum to at most
//! the image dimension), and checks the resulting vertex gap against the
//! distance chain that drives the distortion bound:
//!
//! `pi r - dist - 2 eps - mesh <= gap <= (dist + 2 eps + mesh) * q`.
//!
//! Not finding a feasible direction at a coarse scale is a legitimate
//! outcome, reported as such.

use serde::Serialize;

use crate::bounds::vertex_gap_bound;
use crate::distortion::Relation;
use crate::error::{Error, Result};
use crate::geom::{Point, Simplex, SpherePoint};
use crate::intersect::{
    caratheodory_reduce, hull_intersection, min_vertex_distance, reduce_to_complementary_dims,
    simplex_intersection, IntersectionWitness, DEFAULT_LP_TOL,
};

/// The image cloud over a geodesic ball: a finite-scale stand-in for the
/// convex essence of the sampled map at `center`.
#[derive(Debug, Clone, Serialize)]
pub struct HullAtScale {
    pub center: SpherePoint,
    /// Ball radius `eps` (geodesic).
    pub scale: f64,
    /// Image points of every sample within `scale` of `center`.
    pub cloud: Vec<Point>,
    /// Sample indices behind `cloud`, in sample order.
    pub indices: Vec<usize>,
}

/// Builds the image cloud over the geodesic `eps`-ball at `center`.
pub fn hull_at_scale(rel: &Relation, center: &SpherePoint, eps: f64) -> Result<HullAtScale> {
    let mut cloud = Vec::new();
    let mut indices = Vec::new();
    for (i, (x, y)) in rel.pairs().iter().enumerate() {
        if center.distance(x)? <= eps {
            cloud.push(y.clone());
            indices.push(i);
        }
    }
    Ok(HullAtScale {
        center: center.clone(),
        scale: eps,
        cloud,
        indices,
    })
}

/// The extracted configuration at a feasible direction.
#[derive(Debug, Clone, Serialize)]
pub struct GranasWitness {
    /// Sample index of the feasible direction.
    pub direction_index: usize,
    pub direction: SpherePoint,
    /// Sample index of the matched near-antipode.
    pub antipode_index: usize,
    /// Geodesic distance from the exact antipode to its matched sample.
    pub antipode_slack: f64,
    /// Sizes of the two image clouds.
    pub cloud_sizes: (usize, usize),
    /// Largest within-cloud image diameter (the finite-scale edge budget).
    pub cloud_diameter: f64,
    /// The reduced intersecting pair extracted from the hull witness.
    pub simplex_a: Simplex,
    pub simplex_b: Simplex,
    pub witness: IntersectionWitness,
    /// Minimum cross vertex distance of the reduced pair.
    pub vertex_gap: f64,
    /// Indices attaining the gap.
    pub gap_at: (usize, usize),
    /// `pi r - dist - 2 eps - mesh`: the chain's floor for the gap.
    pub chain_low: f64,
    /// `(dist + 2 eps + mesh) * q`: the chain's ceiling for the gap.
    pub chain_high: f64,
    /// Whether the gap landed inside `[chain_low, chain_high]` (with 1e-9
    /// slack).
    pub chain_ok: bool,
}

/// Outcome of [`granas_scan`].
#[derive(Debug, Clone, Serialize)]
pub struct GranasReport {
    pub version: String,
    /// Scale the scan ran at.
    pub eps: f64,
    /// Largest nearest-neighbor geodesic distance of the sample.
    pub mesh: f64,
    pub radius: f64,
    /// Sampled distortion of the relation.
    pub dist_sampled: f64,
    /// Gap factor `q` of the image dimension.
    pub q: f64,
    /// Directions examined before stopping.
    pub directions_scanned: usize,
    /// The first feasible direction in sample order, if any.
    pub found: Option<GranasWitness>,
}

/// Scans the sampled directions for one whose image hull at scale `eps`
/// meets the antipodal one, and extracts the certified configuration.
///
/// `eps` defaults to twice the sample mesh and must be at least the mesh,
/// so every ball is nonempty. Directions without a sampled near-antipode
/// (within the mesh of the exact antipode) are skipped.
pub fn granas_scan(rel: &Relation, eps: Option<f64>) -> Result<GranasReport> {
    let n = rel.len();
    if n < 2 {
        return Err(Error::invalid("the scan needs at least two samples"));
    }
    let mesh = sample_mesh(rel)?;
    let eps = eps.unwrap_or(2.0 * mesh);
    if eps < mesh {
        return Err(Error::invalid(format!(
            "scale eps = {eps} below the sample mesh {mesh}"
        )));
    }
    let radius = rel.radius();
    let dist_sampled = rel.distortion();
    let q = vertex_gap_bound(rel.image_dim(), 1.0)?.q;
    let slack = dist_sampled + 2.0 * eps + mesh;
    let chain_low = std::f64::consts::PI * radius - slack;
    let chain_high = slack * q;

    let mut directions_scanned = 0usize;
    let mut found = None;

    for i in 0..n {
        directions_scanned = i + 1;
        let x = &rel.pairs()[i].0;
        let anti = x.antipode();
        let (j, anti_dist) = nearest_sample(rel, &anti)?;
        if anti_dist > mesh {
            continue;
        }
        let ball_x = hull_at_scale(rel, x, eps)?;
        let ball_anti = hull_at_scale(rel, &anti, eps)?;
        if ball_x.cloud.is_empty() || ball_anti.cloud.is_empty() {
            continue;
        }
        let Some(w) = hull_intersection(&ball_x.cloud, &ball_anti.cloud, DEFAULT_LP_TOL)? else {
            continue;
        };

        let sa = caratheodory_reduce(&w.point, &ball_x.cloud, DEFAULT_LP_TOL)?;
        let sb = caratheodory_reduce(&w.point, &ball_anti.cloud, DEFAULT_LP_TOL)?;
        let Some(w2) = simplex_intersection(&sa, &sb, DEFAULT_LP_TOL)? else {
            log::debug!("direction {i}: pruned supports lost the witness, skipping");
            continue;
        };
        let (ra, rb, rw) = reduce_to_complementary_dims(&sa, &sb, &w2)?;
        let (gi, gj, gap) = min_vertex_distance(&ra, &rb);
        let cloud_diameter = crate::circumsphere::diameter(&ball_x.cloud)
            .max(crate::circumsphere::diameter(&ball_anti.cloud));
        let chain_ok = chain_low <= gap + 1e-9 && gap <= chain_high + 1e-9;

        found = Some(GranasWitness {
            direction_index: i,
            direction: x.clone(),
            antipode_index: j,
            antipode_slack: anti_dist,
            cloud_sizes: (ball_x.cloud.len(), ball_anti.cloud.len()),
            cloud_diameter,
            simplex_a: ra,
            simplex_b: rb,
            witness: rw,
            vertex_gap: gap,
            gap_at: (gi, gj),
            chain_low,
            chain_high,
            chain_ok,
        });
        break;
    }

    Ok(GranasReport {
        version: crate::VERSION.to_string(),
        eps,
        mesh,
        radius,
        dist_sampled,
        q,
        directions_scanned,
        found,
    })
}

/// Largest nearest-neighbor geodesic distance over the sample.
fn sample_mesh(rel: &Relation) -> Result<f64> {
    let pairs = rel.pairs();
    let mut mesh = 0.0f64;
    for (i, (x, _)) in pairs.iter().enumerate() {
        let mut nearest = f64::INFINITY;
        for (j, (y, _)) in pairs.iter().enumerate() {
            if i != j {
                nearest = nearest.min(x.distance(y)?);
            }
        }
        mesh = mesh.max(nearest);
    }
    Ok(mesh)
}

/// Nearest sample to `target`; ties resolve to the lowest index.
fn nearest_sample(rel: &Relation, target: &SpherePoint) -> Result<(usize, f64)> {
    let mut best = (0usize, f64::INFINITY);
    for (j, (x, _)) in rel.pairs().iter().enumerate() {
        let d = target.distance(x)?;
        if d < best.1 {
            best = (j, d);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distortion::{projection_map_sample, sharp_circle_map};
    use crate::geom::sample_sphere;
    use std::f64::consts::PI;

    #[test]
    fn constant_map_is_feasible_everywhere() {
        let sample = sample_sphere(1, 1.0, 31, 0).unwrap();
        let rel = Relation::from_map(sample, |_| Point::new(vec![0.4])).unwrap();
        let report = granas_scan(&rel, None).unwrap();
        let w = report
            .found
            .expect("constant maps collide at every direction");
        assert_eq!(w.direction_index, 0);
        assert_eq!(w.vertex_gap, 0.0);
        assert!(w.chain_ok);
        assert!((report.dist_sampled - PI * (31.0 - 1.0) / 31.0).abs() < 1e-9);
    }

    #[test]
    fn projection_on_the_sphere_has_a_feasible_pole() {
        let rel = projection_map_sample(2, 1.0, 600, 4).unwrap();
        let report = granas_scan(&rel, None).unwrap();
        let w = report
            .found
            .expect("projection hulls overlap near the poles");
        // feasible directions project near the origin: away from the poles
        // the image hulls sit on opposite sides of it
        let p = &w.direction.coords().coords();
        let planar = (p[0] * p[0] + p[1] * p[1]).sqrt();
        assert!(planar < 0.5, "direction too far from a pole: {planar}");
        assert!(w.chain_ok);
        // extracted simplices live in the image space with complementary dims
        assert!(w.simplex_a.dim() + w.simplex_b.dim() <= 2);
        assert!(
            simplex_intersection(&w.simplex_a, &w.simplex_b, DEFAULT_LP_TOL)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn sharp_circle_map_is_feasible_at_the_jump() {
        let r = 1.0;
        let m = 1001;
        let values: Vec<f64> = (0..m)
            .map(|k| sharp_circle_map(2.0 * PI * k as f64 / m as f64, r).unwrap())
            .collect();
        let rel = Relation::from_circle_values(&values, r).unwrap();
        let report = granas_scan(&rel, None).unwrap();
        let w = report
            .found
            .expect("the wrap-around jump forces an overlap");
        assert!(w.chain_ok);
        // the feasible direction hugs the jump at theta = 0 (or its antipode)
        let theta = w.direction.coords().coords()[1].atan2(w.direction.coords().coords()[0]);
        let dist_to_jump = theta.abs().min((theta.abs() - PI).abs());
        assert!(dist_to_jump < 10.0 * report.eps, "theta = {theta}");
    }

    #[test]
    fn vertices_come_from_the_clouds() {
        let rel = projection_map_sample(2, 1.0, 400, 8).unwrap();
        let report = granas_scan(&rel, None).unwrap();
        let w = report.found.unwrap();
        let ball_x = hull_at_scale(&rel, &w.direction, report.eps).unwrap();
        let ball_anti = hull_at_scale(&rel, &w.direction.antipode(), report.eps).unwrap();
        for v in w.simplex_a.vertices() {
            assert!(ball_x.cloud.iter().any(|p| p.dist(v) < 1e-9));
        }
        for v in w.simplex_b.vertices() {
            assert!(ball_anti.cloud.iter().any(|p| p.dist(v) < 1e-9));
        }
    }

    #[test]
    fn coarse_scales_may_legitimately_find_nothing() {
        // an isometric-ish embedding: images far apart at antipodes
        let sample = sample_sphere(1, 1.0, 41, 0).unwrap();
        let rel = Relation::from_map(sample, |x| x.coords().clone()).unwrap();
        let report = granas_scan(&rel, None).unwrap();
        assert!(report.found.is_none());
        assert_eq!(report.directions_scanned, 41);
    }

    #[test]
    fn eps_below_mesh_is_rejected() {
        let rel = projection_map_sample(1, 1.0, 30, 0).unwrap();
        assert!(granas_scan(&rel, Some(1e-6)).is_err());
    }
}
