//! The `sdlab verify` suites: every library invariant re-checked with fresh
//! randomness from a single seed.
//!
//! One line per check; a failing check prints the offending instance as a
//! standalone JSON object that replays the failure through the library API
//! (the instance carries the exact inputs, so feeding them back to the same
//! operation reproduces the violation).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::f64::consts::PI;

use sdlab_core::geom::DEFAULT_AFFINE_TOL;
use sdlab_core::oracle;
use sdlab_core::{
    adversarial_vertex_gap_search, affine_dimension, affinely_independent, caratheodory_reduce,
    certify_circle_values, circumradius_gap_bound, diameter, distortion_with,
    equidistant_circumcenter, granas_scan, hull_intersection, jung_bound, min_enclosing_ball,
    min_vertex_distance, minimax_distortion_search, optimal_split, pair_dimension_bound,
    projection_map_sample, random_intersecting_pair_with, reduce_to_complementary_dims,
    sample_sphere, sharp_pair, simplex_intersection, sphere_distortion_bound, vertex_gap_bound,
    Error, Point, Relation, Simplex, DEFAULT_LP_TOL,
};

struct Failure {
    message: String,
    instance: serde_json::Value,
}

type CheckResult = Result<(), Failure>;

fn fail(message: impl Into<String>, instance: serde_json::Value) -> CheckResult {
    Err(Failure {
        message: message.into(),
        instance,
    })
}

/// Library errors inside a check are reported as failures of that check.
impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            message: format!("library error: {err}"),
            instance: json!(null),
        }
    }
}

/// Runs every suite; returns `true` when all pass. Output is byte-identical
/// for a fixed seed.
pub fn run(seed: u64) -> bool {
    let checks: &[(&str, fn(u64) -> CheckResult)] = &[
        ("sphere_metric_axioms", sphere_metric_axioms),
        ("regular_simplex_geometry", regular_simplex_geometry),
        ("faces_independent", faces_independent),
        ("circle_grid_antipodes", circle_grid_antipodes),
        ("equidistant_sphere_encloses", equidistant_sphere_encloses),
        ("jung_enclosure", jung_enclosure),
        ("circumradius_gap", circumradius_gap),
        ("dimension_gap", dimension_gap),
        ("sharp_pair_construction", sharp_pair_construction),
        ("factor_consistency", factor_consistency),
        ("certifier_soundness", certifier_soundness),
        ("distortion_invariance", distortion_invariance),
        ("hull_oracle_agreement", hull_oracle_agreement),
        ("caratheodory_validity", caratheodory_validity),
        ("reduce_dims_validity", reduce_dims_validity),
        ("lp_determinism", lp_determinism),
        ("adversarial_safety", adversarial_safety),
        ("minimax_floor", minimax_floor),
        ("granas_extraction", granas_extraction),
    ];

    println!("verify: seed {seed}, {} checks", checks.len());
    let mut failures = 0usize;
    for (name, check) in checks {
        match check(seed) {
            Ok(()) => println!("ok   {name}"),
            Err(f) => {
                failures += 1;
                println!("FAIL {name}: {}", f.message);
                println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "check": name,
                        "seed": seed,
                        "instance": f.instance,
                    }))
                    .expect("instance serialization")
                );
            }
        }
    }
    if failures == 0 {
        println!("verify: all {} checks passed", checks.len());
        true
    } else {
        println!("verify: {failures} check(s) FAILED");
        false
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (salt.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn gauss_point<R: Rng>(rng: &mut R, dim: usize) -> Point {
    Point::new((0..dim).map(|_| gauss(rng)).collect())
}

fn gauss<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller
    let u: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let v: f64 = rng.gen();
    (-2.0 * u.ln()).sqrt() * (2.0 * PI * v).cos()
}

fn random_simplex<R: Rng>(rng: &mut R, dim: usize, ambient: usize) -> Simplex {
    loop {
        let verts: Vec<Point> = (0..=dim).map(|_| gauss_point(rng, ambient)).collect();
        if let Ok(s) = Simplex::new(verts) {
            return s;
        }
    }
}

fn sphere_metric_axioms(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 1);
    for n in 1..=3usize {
        let r = 0.5 + rng.gen::<f64>() * 2.0;
        let pts = sample_sphere(n, r, 40, seed ^ n as u64)?;
        for _ in 0..300 {
            let (i, j, k) = (
                rng.gen_range(0..pts.len()),
                rng.gen_range(0..pts.len()),
                rng.gen_range(0..pts.len()),
            );
            let dij = pts[i].distance(&pts[j])?;
            let dji = pts[j].distance(&pts[i])?;
            let dik = pts[i].distance(&pts[k])?;
            let dkj = pts[k].distance(&pts[j])?;
            let instance = json!({"x": pts[i], "y": pts[j], "z": pts[k]});
            if (dij - dji).abs() > 1e-12 * r {
                return fail("metric symmetry violated", instance);
            }
            if i == j && dij != 0.0 {
                return fail("identity violated", instance);
            }
            if dij > dik + dkj + 1e-9 * r {
                return fail("triangle inequality violated", instance);
            }
            if dij > PI * r + 1e-12 {
                return fail("distance above antipodal maximum", instance);
            }
        }
        // the maximum is attained exactly at antipodes
        let x = &pts[0];
        if (x.distance(&x.antipode())? - PI * r).abs() > 1e-12 * r {
            return fail("antipodal distance is not pi r", json!({"x": x}));
        }
    }
    Ok(())
}

fn regular_simplex_geometry(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 2);
    for m in 1..=6usize {
        let edge = 0.25 + rng.gen::<f64>() * 3.0;
        let ambient = m + rng.gen_range(0..=2);
        let s = Simplex::regular(m, edge, ambient, None)?;
        let instance = json!({"m": m, "edge": edge, "simplex": s});
        for i in 0..=m {
            for j in i + 1..=m {
                let d = s.vertex(i).dist(s.vertex(j));
                if (d - edge).abs() > 1e-12 * edge {
                    return fail(format!("edge {d} differs from {edge}"), instance);
                }
            }
        }
        if s.barycenter().norm() > 1e-12 * edge {
            return fail("barycenter off the origin", instance);
        }
    }
    Ok(())
}

fn faces_independent(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 3);
    for _ in 0..40 {
        let ambient = rng.gen_range(2..=5);
        let dim = rng.gen_range(1..=ambient);
        let s = random_simplex(&mut rng, dim, ambient);
        for k in 0..=dim {
            for f in s.faces(k)? {
                if !affinely_independent(f.vertices(), DEFAULT_AFFINE_TOL)? {
                    return fail("face lost independence", json!({"simplex": s, "face": f}));
                }
            }
        }
    }
    Ok(())
}

fn circle_grid_antipodes(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 4);
    for _ in 0..12 {
        let m = 2 * rng.gen_range(1..=700) + 1;
        let r = 0.5 + rng.gen::<f64>() * 2.0;
        let grid = sample_sphere(1, r, m, 0)?;
        let s = m.div_ceil(2);
        let want = PI * r * (m as f64 - 1.0) / m as f64;
        for k in (0..m).step_by(1 + m / 7) {
            let d = grid[k].distance(&grid[(k + s) % m])?;
            if (d - want).abs() > 1e-12 * r.max(1.0) {
                return fail(
                    format!("almost-antipodal distance {d} != {want}"),
                    json!({"m": m, "r": r, "k": k}),
                );
            }
        }
    }
    Ok(())
}

fn equidistant_sphere_encloses(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 5);
    for trial in 0..400u64 {
        let ambient = rng.gen_range(1..=5);
        let dim = rng.gen_range(1..=ambient);
        let s = random_simplex(&mut rng, dim, ambient);
        let eq = match equidistant_circumcenter(&s) {
            Ok(c) => c,
            Err(Error::Degenerate { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        let mb = min_enclosing_ball(s.vertices(), seed ^ trial)?;
        let instance = json!({"simplex": s});
        if mb.radius > eq.radius + 1e-9 {
            return fail(
                format!(
                    "enclosing radius {} above equidistant {}",
                    mb.radius, eq.radius
                ),
                instance,
            );
        }
        // random hull point: covered by the sphere, and near some vertex
        let mut w: Vec<f64> = (0..=dim)
            .map(|_| -(rng.gen::<f64>().max(1e-300)).ln())
            .collect();
        let sum: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= sum);
        let x = {
            let mut out = vec![0.0; ambient];
            for (wi, v) in w.iter().zip(s.vertices()) {
                for (o, c) in out.iter_mut().zip(v.coords()) {
                    *o += wi * c;
                }
            }
            Point::new(out)
        };
        if x.dist(&eq.center) > eq.radius + 1e-9 {
            return fail("hull point escaped the equidistant sphere", instance);
        }
        let nearest = s
            .vertices()
            .iter()
            .map(|v| v.dist(&x))
            .fold(f64::INFINITY, f64::min);
        if nearest > eq.radius + 1e-9 || nearest > mb.radius + 1e-9 {
            return fail("hull point too far from every vertex", instance);
        }
    }
    Ok(())
}

fn jung_enclosure(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 6);
    for trial in 0..1500u64 {
        let ambient = rng.gen_range(1..=6);
        let count = rng.gen_range(1..=12);
        let mut pts: Vec<Point> = (0..count).map(|_| gauss_point(&mut rng, ambient)).collect();
        // sometimes collapse onto a coordinate subspace to vary the
        // affine dimension
        if rng.gen::<f64>() < 0.3 && ambient > 1 {
            let keep = rng.gen_range(1..ambient);
            for p in &mut pts {
                let mut c = p.coords().to_vec();
                for v in c.iter_mut().skip(keep) {
                    *v = 0.0;
                }
                *p = Point::new(c);
            }
        }
        let dim = affine_dimension(&pts, DEFAULT_AFFINE_TOL)?;
        let ball = min_enclosing_ball(&pts, seed ^ trial)?;
        let bound = jung_bound(diameter(&pts), dim);
        if ball.radius > bound + 1e-9 {
            return fail(
                format!("enclosing radius {} above the bound {bound}", ball.radius),
                json!({"points": pts, "affine_dim": dim}),
            );
        }
    }
    Ok(())
}

fn circumradius_gap(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 7);
    for trial in 0..1200u64 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=n);
        let m = rng.gen_range(0..=n);
        let (a, b) = random_intersecting_pair_with(&mut rng, n, 1.0, (k, m))?;
        let gap = min_vertex_distance(&a, &b).2;
        let instance = json!({"a": a, "b": b});

        let ball_a = min_enclosing_ball(a.vertices(), seed ^ trial)?;
        let ball_b = min_enclosing_ball(b.vertices(), seed ^ trial ^ 1)?;
        if gap > circumradius_gap_bound(ball_a.radius, ball_b.radius) + 1e-9 {
            return fail("gap above the enclosing-radius bound", instance);
        }

        let eq = (equidistant_circumcenter(&a), equidistant_circumcenter(&b));
        if let (Ok(ra), Ok(rb)) = eq {
            if gap > circumradius_gap_bound(ra.radius, rb.radius) + 1e-9 {
                return fail("gap above the equidistant-radius bound", instance);
            }
        }
    }
    Ok(())
}

fn dimension_gap(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 8);
    for _ in 0..1200 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=n);
        let m = rng.gen_range(0..=(n - k));
        let (a, b) = random_intersecting_pair_with(&mut rng, n, 1.0, (k, m))?;
        let gap = min_vertex_distance(&a, &b).2;
        let pair_bound = pair_dimension_bound(k, m, 1.0);
        let gap_bound = vertex_gap_bound(n, 1.0)?.value;
        let instance = json!({"a": a, "b": b, "k": k, "m": m, "n": n});
        if gap > pair_bound + 1e-9 {
            return fail(
                format!("gap {gap} above the split bound {pair_bound}"),
                instance,
            );
        }
        if pair_bound > gap_bound + 1e-12 {
            return fail("split bound exceeded the dimension bound", instance);
        }
    }
    Ok(())
}

fn sharp_pair_construction(_seed: u64) -> CheckResult {
    for n in 1..=12 {
        let (a, b) = sharp_pair(n, 1.0)?;
        let bound = vertex_gap_bound(n, 1.0)?.value;
        let gap = min_vertex_distance(&a, &b).2;
        let instance = json!({"n": n, "a": a, "b": b});
        if (gap - bound).abs() > 1e-9 {
            return fail(
                format!("sharp gap {gap} misses the bound {bound}"),
                instance,
            );
        }
        let Some(w) = simplex_intersection(&a, &b, DEFAULT_LP_TOL)? else {
            return fail("sharp pair does not intersect", instance);
        };
        if w.point.norm() > 1e-9 {
            return fail("witness strayed from the origin", instance);
        }
    }
    Ok(())
}

fn factor_consistency(_seed: u64) -> CheckResult {
    for n in 1..=50usize {
        let q = vertex_gap_bound(n, 1.0)?.value;
        let best = (0..=n)
            .map(|k| pair_dimension_bound(k, n - k, 1.0))
            .fold(0.0, f64::max);
        if (q - best).abs() > 1e-12 {
            return fail(format!("factor {q} != best split {best}"), json!({"n": n}));
        }
        let split = optimal_split(n)?;
        if split != (n / 2, n - n / 2) {
            return fail("unexpected optimal split", json!({"n": n, "split": split}));
        }
        let spec = sphere_distortion_bound(n, 1.0)?;
        if (PI - spec.value - spec.value * spec.q).abs() > 1e-12 {
            return fail(
                "distortion bound violates its defining equation",
                json!({"n": n}),
            );
        }
    }
    let mut prev = f64::INFINITY;
    for n in 1..=10_000usize {
        let v = sphere_distortion_bound(n, 1.0)?.value;
        if v <= PI / 2.0 || v >= prev {
            return fail("bound not strictly decreasing above pi/2", json!({"n": n}));
        }
        prev = v;
    }
    if prev - PI / 2.0 > 1e-3 * PI {
        return fail("bound too far from pi/2 at n = 10^4", json!(null));
    }
    Ok(())
}

fn certifier_soundness(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 9);
    for _ in 0..400 {
        let m: usize = 2 * rng.gen_range(1..=150) + 1;
        let r = 0.5 + rng.gen::<f64>() * 2.0;
        let tie = rng.gen::<f64>() < 0.3;
        let mut values: Vec<f64> = (0..m).map(|_| gauss(&mut rng)).collect();
        if tie {
            let k = rng.gen_range(0..m);
            values[(k + m.div_ceil(2)) % m] = values[k];
        }
        let bound = certify_circle_values(&values, r)?;
        let rel = Relation::from_circle_values(&values, r)?;
        let instance = json!({"values": values, "r": r});
        if bound.value > rel.distortion() + 1e-12 {
            return fail("certified bound above the sampled distortion", instance);
        }
        if bound.replay() != bound.value {
            return fail("certificate replay mismatch", instance);
        }
        if !bound.certificate.holds_for(&values) {
            return fail("certificate does not hold for its own values", instance);
        }
    }
    Ok(())
}

fn distortion_invariance(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 10);
    let rel = projection_map_sample(2, 1.0, 150, seed)?;
    let d0 = rel.distortion();

    // rotate + translate the images; distortion must not move
    let dim = rel.image_dim();
    let raw: Vec<Vec<f64>> = (0..dim + 2)
        .map(|_| (0..dim).map(|_| gauss(&mut rng)).collect())
        .collect();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in &raw {
        let mut w = v.clone();
        for b in &basis {
            let proj: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= proj * bi;
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            w.iter_mut().for_each(|x| *x /= norm);
            basis.push(w);
        }
        if basis.len() == dim {
            break;
        }
    }
    if basis.len() != dim {
        return fail("failed to draw a rotation", json!(null));
    }
    let shift: Vec<f64> = (0..dim).map(|_| gauss(&mut rng)).collect();
    let moved = Relation::new(
        rel.pairs()
            .iter()
            .map(|(x, y)| {
                let img: Vec<f64> = basis
                    .iter()
                    .map(|row| row.iter().zip(y.coords()).map(|(a, b)| a * b).sum::<f64>())
                    .zip(&shift)
                    .map(|(v, s)| v + s)
                    .collect();
                (x.clone(), Point::new(img))
            })
            .collect(),
    )?;
    if (moved.distortion() - d0).abs() > 1e-12 {
        return fail("distortion moved under an isometry", json!({"before": d0}));
    }

    // subrelations never exceed the full relation
    let idx: Vec<usize> = (0..rel.len()).filter(|i| i % 3 != 0).collect();
    if rel.subrelation(&idx)?.distortion() > d0 + 1e-15 {
        return fail(
            "subrelation distortion above the full relation",
            json!(null),
        );
    }

    // the identity on any finite sample has distortion zero
    let pts = sample_sphere(2, 1.0, 25, seed)?;
    let d = |i: usize, j: usize| pts[i].distance(&pts[j]).unwrap();
    if distortion_with(pts.len(), d, d) != 0.0 {
        return fail("identity relation has nonzero distortion", json!(null));
    }
    Ok(())
}

fn hull_oracle_agreement(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 11);
    let mut checked = 0usize;
    while checked < 400 {
        let n = rng.gen_range(2..=3);
        let ca = rng.gen_range(1..=6);
        let cb = rng.gen_range(1..=6);
        let spread = if rng.gen::<f64>() < 0.5 { 0.6 } else { 2.0 };
        let a: Vec<Point> = (0..ca).map(|_| gauss_point(&mut rng, n)).collect();
        let b: Vec<Point> = (0..cb)
            .map(|_| {
                let mut p = gauss_point(&mut rng, n);
                let mut c = p.coords().to_vec();
                c[0] += spread;
                p = Point::new(c);
                p
            })
            .collect();
        let verdict = oracle::hulls_intersect_sat(&a, &b)?;
        if verdict.margin() < 1e-6 {
            continue; // margin below the comparison cutoff
        }
        checked += 1;
        let lp = hull_intersection(&a, &b, DEFAULT_LP_TOL)?;
        if lp.is_some() != verdict.intersects() {
            return fail(
                format!(
                    "LP says {}, axis oracle says {} (margin {})",
                    lp.is_some(),
                    verdict.intersects(),
                    verdict.margin()
                ),
                json!({"a": a, "b": b}),
            );
        }
    }
    Ok(())
}

fn caratheodory_validity(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 12);
    for _ in 0..400 {
        let n = rng.gen_range(1..=5);
        let count = rng.gen_range(1..=(2 * n + 4));
        let cloud: Vec<Point> = (0..count).map(|_| gauss_point(&mut rng, n)).collect();
        // a genuine hull point: random convex combination
        let mut w: Vec<f64> = (0..count).map(|_| rng.gen::<f64>()).collect();
        let sum: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= sum);
        let x = {
            let mut out = vec![0.0; n];
            for (wi, p) in w.iter().zip(&cloud) {
                for (o, c) in out.iter_mut().zip(p.coords()) {
                    *o += wi * c;
                }
            }
            Point::new(out)
        };
        let s = caratheodory_reduce(&x, &cloud, DEFAULT_LP_TOL)?;
        let instance = json!({"x": x, "cloud": cloud, "reduced": s});
        if s.vertices().len() > n + 1 {
            return fail("support larger than dimension + 1", instance);
        }
        if !affinely_independent(s.vertices(), DEFAULT_AFFINE_TOL)? {
            return fail("support affinely dependent", instance);
        }
        if !oracle::simplex_contains_barycentric(&s, &x, 1e-7)? {
            return fail("support no longer contains the point", instance);
        }
    }
    Ok(())
}

fn reduce_dims_validity(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 13);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let k = rng.gen_range(1..=n);
        let m = rng.gen_range((n + 1 - k).min(n)..=n);
        let (a, b) = random_intersecting_pair_with(&mut rng, n, 1.0, (k, m))?;
        let Some(w) = simplex_intersection(&a, &b, DEFAULT_LP_TOL)? else {
            return fail("generated pair does not intersect", json!({"a": a, "b": b}));
        };
        let (ra, rb, rw) = reduce_to_complementary_dims(&a, &b, &w)?;
        let instance = json!({"a": a, "b": b, "ra": ra, "rb": rb});
        if ra.dim() + rb.dim() > n {
            return fail("reduced dimensions still exceed the ambient", instance);
        }
        if simplex_intersection(&ra, &rb, DEFAULT_LP_TOL)?.is_none() {
            return fail("reduced faces no longer intersect", instance);
        }
        let scale = 1.0 + rw.point.norm();
        if ra.point_at(&rw.alpha).dist(&rw.point) > 1e-7 * scale
            || rb.point_at(&rw.beta).dist(&rw.point) > 1e-7 * scale
        {
            return fail("reduced witness weights are inconsistent", instance);
        }
    }
    Ok(())
}

fn lp_determinism(seed: u64) -> CheckResult {
    let mut rng = rng_for(seed, 14);
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let a: Vec<Point> = (0..4).map(|_| gauss_point(&mut rng, n)).collect();
        let b: Vec<Point> = (0..4).map(|_| gauss_point(&mut rng, n)).collect();
        let w1 = hull_intersection(&a, &b, DEFAULT_LP_TOL)?;
        let w2 = hull_intersection(&a, &b, DEFAULT_LP_TOL)?;
        if w1 != w2 {
            return fail(
                "identical inputs produced different witnesses",
                json!({"a": a, "b": b}),
            );
        }
    }
    Ok(())
}

fn adversarial_safety(seed: u64) -> CheckResult {
    for n in [1usize, 2] {
        let report = adversarial_vertex_gap_search(n, 1.0, 4, 30, seed)?;
        if report.best_gap > report.bound + 1e-7 {
            return fail(
                format!(
                    "search value {} above the bound {}",
                    report.best_gap, report.bound
                ),
                json!({"n": n, "pair": report.best_pair}),
            );
        }
        let again = adversarial_vertex_gap_search(n, 1.0, 4, 30, seed)?;
        if again.best_gap != report.best_gap || again.trace != report.trace {
            return fail("search is not reproducible under its seed", json!({"n": n}));
        }
    }
    Ok(())
}

fn minimax_floor(seed: u64) -> CheckResult {
    let report = minimax_distortion_search(1, 1, 1.0, 101, 3, seed)?;
    let floor = report
        .certified_floor
        .as_ref()
        .expect("circle run certifies");
    if report.best_distortion < floor.value - 1e-12 {
        return fail(
            format!(
                "distortion {} below its own floor {}",
                report.best_distortion, floor.value
            ),
            json!({"images": report.images}),
        );
    }
    let again = minimax_distortion_search(1, 1, 1.0, 101, 3, seed)?;
    if again.best_distortion != report.best_distortion {
        return fail("minimax search is not reproducible", json!(null));
    }
    Ok(())
}

fn granas_extraction(seed: u64) -> CheckResult {
    let rel = projection_map_sample(2, 1.0, 500, seed)?;
    let report = granas_scan(&rel, None)?;
    let Some(w) = report.found else {
        return fail(
            "no feasible direction on the projection sample",
            json!(null),
        );
    };
    let instance = json!({"direction": w.direction, "a": w.simplex_a, "b": w.simplex_b});
    if !w.chain_ok {
        return fail("distance chain failed at the extracted pair", instance);
    }
    if w.simplex_a.dim() + w.simplex_b.dim() > rel.image_dim() {
        return fail("extracted dimensions exceed the image dimension", instance);
    }
    if simplex_intersection(&w.simplex_a, &w.simplex_b, DEFAULT_LP_TOL)?.is_none() {
        return fail("extracted pair does not intersect", instance);
    }
    Ok(())
}
