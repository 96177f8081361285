//! Acceptance suite: one test per exit criterion, each printing a pass line
//! with its runtime against the stated budget (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! The heavy criteria serialize on a global lock so each one is timed
//! alone.

use std::f64::consts::PI;
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sdlab_core::geom::DEFAULT_AFFINE_TOL;
use sdlab_core::oracle;
use sdlab_core::{
    adversarial_vertex_gap_search, affine_dimension, affinely_independent, caratheodory_reduce,
    certify_circle_values, circumradius_gap_bound, diameter, equidistant_circumcenter, granas_scan,
    hull_intersection, jung_bound, min_enclosing_ball, min_vertex_distance,
    minimax_distortion_search, pair_dimension_bound, projection_map_sample,
    random_intersecting_pair_with, sharp_circle_map, sharp_pair, simplex_intersection,
    sphere_distortion_bound, vertex_gap_bound, Error, Point, Relation, Simplex, DEFAULT_LP_TOL,
};

fn lock() -> MutexGuard<'static, ()> {
    static LOCK: OnceLock<Mutex<()>> = OnceLock::new();
    LOCK.get_or_init(|| Mutex::new(()))
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn finish(index: usize, name: &str, start: Instant, budget_secs: f64) {
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        elapsed < budget_secs,
        "criterion {index} ({name}) took {elapsed:.1}s, budget {budget_secs}s"
    );
    println!("acceptance {index:02} {name}: PASS ({elapsed:.2}s / budget {budget_secs}s)");
}

fn gauss<R: Rng>(rng: &mut R) -> f64 {
    let u: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let v: f64 = rng.gen();
    (-2.0 * u.ln()).sqrt() * (2.0 * PI * v).cos()
}

/// The shared instance stream for the two gap-fuzz criteria: random
/// intersecting pairs with dimension sum at most `n` and unit edge budget.
fn gap_fuzz_stream(n: usize, count: usize) -> impl Iterator<Item = (Simplex, Simplex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5D1A_B000 + n as u64);
    (0..count).map(move |_| {
        let k = rng.gen_range(0..=n);
        let m = rng.gen_range(0..=(n - k));
        random_intersecting_pair_with(&mut rng, n, 1.0, (k, m)).expect("pair generation")
    })
}

#[test]
fn acceptance_01_bound_table_exactness() {
    let _guard = lock();
    let t0 = Instant::now();

    for r in [1.0f64, 0.25, 10.0] {
        let b = sphere_distortion_bound(1, r).unwrap().value;
        assert!((b - 2.0 * PI * r / 3.0).abs() < 1e-12 * r.max(1.0));
    }
    for n in 1..=10usize {
        let nf = n as f64;
        let hand = if n % 2 == 0 {
            (1.0 - 2.0 / (nf + 2.0)).sqrt()
        } else {
            (1.0 - 2.0 * (nf + 2.0) / ((nf + 1.0) * (nf + 3.0))).sqrt()
        };
        assert!(
            (vertex_gap_bound(n, 1.0).unwrap().value - hand).abs() < 1e-12,
            "n = {n}"
        );
    }
    for n in 1..=50usize {
        let q = vertex_gap_bound(n, 1.0).unwrap().value;
        let best = (0..=n)
            .map(|k| pair_dimension_bound(k, n - k, 1.0))
            .fold(0.0f64, f64::max);
        assert!((q - best).abs() < 1e-12, "n = {n}: {q} vs {best}");
    }

    finish(1, "bound_table_exactness", t0, 1.0);
}

#[test]
fn acceptance_02_sharpness_construction() {
    let _guard = lock();
    let t0 = Instant::now();

    for n in 1..=12usize {
        let (a, b) = sharp_pair(n, 1.0).unwrap();
        let w = simplex_intersection(&a, &b, DEFAULT_LP_TOL)
            .unwrap()
            .expect("sharp pair intersects");
        assert!(w.point.norm() < 1e-9, "witness off the origin at n = {n}");
        for wi in w.alpha.weights() {
            assert!((wi - 1.0 / (a.dim() + 1) as f64).abs() < 1e-9);
        }
        for wi in w.beta.weights() {
            assert!((wi - 1.0 / (b.dim() + 1) as f64).abs() < 1e-9);
        }
        let gap = min_vertex_distance(&a, &b).2;
        let bound = vertex_gap_bound(n, 1.0).unwrap().value;
        assert!((gap - bound).abs() < 1e-9, "n = {n}: {gap} vs {bound}");
    }

    finish(2, "sharpness_construction", t0, 1.0);
}

#[test]
fn acceptance_03_vertex_gap_fuzz() {
    let _guard = lock();
    let t0 = Instant::now();

    for n in 1..=6usize {
        let bound = vertex_gap_bound(n, 1.0).unwrap().value;
        for (a, b) in gap_fuzz_stream(n, 100_000) {
            let gap = min_vertex_distance(&a, &b).2;
            assert!(
                gap <= bound + 1e-7,
                "violation at n = {n}: gap {gap} above {bound}\na = {a:?}\nb = {b:?}"
            );
        }
    }

    finish(3, "vertex_gap_fuzz", t0, 120.0);
}

#[test]
fn acceptance_04_circumradius_gap_fuzz() {
    let _guard = lock();
    let t0 = Instant::now();

    let mut degenerate_skips = 0usize;
    for n in 1..=6usize {
        for (idx, (a, b)) in gap_fuzz_stream(n, 100_000).enumerate() {
            let gap = min_vertex_distance(&a, &b).2;

            let ball_a = min_enclosing_ball(a.vertices(), idx as u64).unwrap();
            let ball_b = min_enclosing_ball(b.vertices(), idx as u64 ^ 1).unwrap();
            assert!(
                gap <= circumradius_gap_bound(ball_a.radius, ball_b.radius) + 1e-9,
                "enclosing-radius violation at n = {n}\na = {a:?}\nb = {b:?}"
            );

            match (equidistant_circumcenter(&a), equidistant_circumcenter(&b)) {
                (Ok(ra), Ok(rb)) => {
                    assert!(
                        gap <= circumradius_gap_bound(ra.radius, rb.radius) + 1e-9,
                        "equidistant-radius violation at n = {n}\na = {a:?}\nb = {b:?}"
                    );
                }
                // the solver refuses nearly flat simplices; that is its
                // documented contract, not a bound violation
                (Err(Error::Degenerate { .. }), _) | (_, Err(Error::Degenerate { .. })) => {
                    degenerate_skips += 1;
                }
                (Err(e), _) | (_, Err(e)) => panic!("unexpected error: {e}"),
            }
        }
    }
    assert!(
        degenerate_skips < 100,
        "too many degenerate draws: {degenerate_skips}"
    );

    finish(4, "circumradius_gap_fuzz", t0, 120.0);
}

#[test]
fn acceptance_05_jung_fuzz() {
    let _guard = lock();
    let t0 = Instant::now();

    let mut rng = ChaCha8Rng::seed_from_u64(0x1A2B);
    for trial in 0..10_000u64 {
        let ambient = rng.gen_range(1..=6);
        let count = rng.gen_range(1..=12);
        let mut pts: Vec<Point> = (0..count)
            .map(|_| Point::new((0..ambient).map(|_| gauss(&mut rng)).collect()))
            .collect();
        if rng.gen::<f64>() < 0.3 && ambient > 1 {
            let keep = rng.gen_range(1..ambient);
            for p in &mut pts {
                let mut c = p.coords().to_vec();
                c[keep..].fill(0.0);
                *p = Point::new(c);
            }
        }
        let dim = affine_dimension(&pts, DEFAULT_AFFINE_TOL).unwrap();
        let ball = min_enclosing_ball(&pts, trial).unwrap();
        let bound = jung_bound(diameter(&pts), dim);
        assert!(
            ball.radius <= bound + 1e-9,
            "Jung violation: radius {} above {bound} for {pts:?}",
            ball.radius
        );
    }

    finish(5, "jung_fuzz", t0, 30.0);
}

#[test]
fn acceptance_06_adversarial_sharpness() {
    let _guard = lock();
    let t0 = Instant::now();

    for n in [2usize, 3] {
        let report = adversarial_vertex_gap_search(n, 1.0, 100, 60, 0).unwrap();
        assert!(
            report.best_gap >= 0.999 * report.bound,
            "n = {n}: best {} below 0.999 of {}",
            report.best_gap,
            report.bound
        );
        assert!(
            report.best_gap <= report.bound + 1e-7,
            "n = {n}: best {} above the bound {}",
            report.best_gap,
            report.bound
        );
    }

    finish(6, "adversarial_sharpness", t0, 120.0);
}

#[test]
fn acceptance_07_circle_certifier() {
    let _guard = lock();
    let t0 = Instant::now();

    // the sharp map on the odd 10001-point grid
    let r = 1.0;
    let m = 10_001usize;
    let values: Vec<f64> = (0..m)
        .map(|k| sharp_circle_map(2.0 * PI * k as f64 / m as f64, r).unwrap())
        .collect();
    let certified = certify_circle_values(&values, r).unwrap();
    let floor = 2.0 * PI * (m as f64 - 2.0) / (3.0 * m as f64);
    assert!(certified.value >= floor - 1e-12);
    let sampled = Relation::from_circle_values(&values, r)
        .unwrap()
        .distortion();
    assert!(sampled <= 2.0 * PI / 3.0 + 1e-9, "sampled {sampled}");
    assert!(certified.value <= sampled + 1e-12);

    // soundness fuzz across random value vectors
    let mut rng = ChaCha8Rng::seed_from_u64(0xCE27);
    for _ in 0..10_000 {
        let m: usize = 2 * rng.gen_range(1..=500) + 1; // odd in 3..=1001
        let scale = 10.0f64.powi(rng.gen_range(-2..=2));
        let tie = rng.gen::<f64>() < 0.2;
        let mut values: Vec<f64> = (0..m).map(|_| scale * gauss(&mut rng)).collect();
        if tie {
            let k = rng.gen_range(0..m);
            values[(k + m.div_ceil(2)) % m] = values[k];
        }
        let r = 0.5 + rng.gen::<f64>();
        let bound = certify_circle_values(&values, r).unwrap();
        let sampled = Relation::from_circle_values(&values, r)
            .unwrap()
            .distortion();
        assert!(
            bound.value <= sampled + 1e-12,
            "unsound certificate: {} above {sampled} (m = {m})",
            bound.value
        );
    }

    finish(7, "circle_certifier", t0, 60.0);
}

#[test]
fn acceptance_08_minimax_circle_search() {
    let _guard = lock();
    let t0 = Instant::now();

    let report = minimax_distortion_search(1, 1, 1.0, 201, 20, 0).unwrap();
    let floor = 2.0 * PI * 199.0 / 603.0;
    let ceiling = 2.0 * PI / 3.0 + 0.05 * PI;
    assert!(
        report.best_distortion >= floor - 1e-9,
        "best {} below the grid floor {floor}",
        report.best_distortion
    );
    assert!(
        report.best_distortion <= ceiling,
        "best {} above the ceiling {ceiling}",
        report.best_distortion
    );
    let certified = report
        .certified_floor
        .as_ref()
        .expect("circle run certifies");
    assert!(report.best_distortion >= certified.value - 1e-12);

    finish(8, "minimax_circle_search", t0, 120.0);
}

#[test]
fn acceptance_09_oracle_equivalence() {
    let _guard = lock();
    let t0 = Instant::now();

    // hull intersection versus the separating-axis oracle
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1);
    let mut checked = 0usize;
    let mut saw_intersecting = 0usize;
    while checked < 200 {
        let n = rng.gen_range(2..=3);
        let ca = rng.gen_range(1..=6);
        let cb = rng.gen_range(1..=6);
        let spread = if rng.gen::<f64>() < 0.5 { 0.5 } else { 2.5 };
        let a: Vec<Point> = (0..ca)
            .map(|_| Point::new((0..n).map(|_| gauss(&mut rng)).collect()))
            .collect();
        let b: Vec<Point> = (0..cb)
            .map(|_| {
                let mut c: Vec<f64> = (0..n).map(|_| gauss(&mut rng)).collect();
                c[0] += spread;
                Point::new(c)
            })
            .collect();
        let verdict = oracle::hulls_intersect_sat(&a, &b).unwrap();
        if verdict.margin() < 1e-6 {
            continue; // separation margin too small by construction
        }
        checked += 1;
        if verdict.intersects() {
            saw_intersecting += 1;
        }
        let lp = hull_intersection(&a, &b, DEFAULT_LP_TOL).unwrap();
        assert_eq!(
            lp.is_some(),
            verdict.intersects(),
            "oracle disagreement (margin {}): a = {a:?}, b = {b:?}",
            verdict.margin()
        );
    }
    assert!(
        saw_intersecting > 20,
        "stream too one-sided: {saw_intersecting}/200"
    );

    // caratheodory validity on random hull points
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let count = rng.gen_range(1..=(2 * n + 4));
        let cloud: Vec<Point> = (0..count)
            .map(|_| Point::new((0..n).map(|_| gauss(&mut rng)).collect()))
            .collect();
        let mut w: Vec<f64> = (0..count).map(|_| rng.gen::<f64>() + 1e-3).collect();
        let sum: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= sum);
        let mut x = vec![0.0; n];
        for (wi, p) in w.iter().zip(&cloud) {
            for (o, c) in x.iter_mut().zip(p.coords()) {
                *o += wi * c;
            }
        }
        let x = Point::new(x);
        let s = caratheodory_reduce(&x, &cloud, DEFAULT_LP_TOL).unwrap();
        assert!(s.vertices().len() <= n + 1);
        assert!(affinely_independent(s.vertices(), DEFAULT_AFFINE_TOL).unwrap());
        assert!(
            oracle::simplex_contains_barycentric(&s, &x, 1e-7).unwrap(),
            "containment lost: x = {x:?}, support = {s:?}"
        );
    }

    finish(9, "oracle_equivalence", t0, 60.0);
}

#[test]
fn acceptance_10_granas_scan() {
    let _guard = lock();
    let t0 = Instant::now();

    let rel = projection_map_sample(2, 1.0, 2000, 0).unwrap();
    let report = granas_scan(&rel, None).unwrap();
    assert!((report.eps - 2.0 * report.mesh).abs() < 1e-12);
    let w = report.found.expect("a feasible antipodal direction exists");

    // the finite-scale certificate chain
    let slack = report.dist_sampled + 2.0 * report.eps + report.mesh;
    assert!(
        w.vertex_gap >= PI * 1.0 - slack - 1e-9,
        "gap {} below pi r - slack {}",
        w.vertex_gap,
        PI - slack
    );
    assert!(
        w.vertex_gap <= slack * report.q + 1e-9,
        "gap {} above q * slack {}",
        w.vertex_gap,
        slack * report.q
    );
    assert!(w.chain_ok);

    // and the extracted pair re-verifies
    assert!(w.simplex_a.dim() + w.simplex_b.dim() <= 2);
    assert!(
        simplex_intersection(&w.simplex_a, &w.simplex_b, DEFAULT_LP_TOL)
            .unwrap()
            .is_some()
    );

    finish(10, "granas_scan", t0, 60.0);
}
