//! End-to-end acceptance run. Every check prints one PASS/FAIL line to
//! stderr (visible without `--nocapture`) and the test fails if any check
//! fails. Checks run sequentially so their wall-clock times are meaningful.

use std::cmp::Ordering;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use bonnesen_core::bounds::{
    full_report, full_report_3d, largest_valid_eps, lemma_delta_bound, lemma_eps_bound,
    MeasureSource,
};
use bonnesen_core::certifier::{decide_equality_projection, decide_equality_projection_3d};
use bonnesen_core::convex_core::{Point2, Point3, Polygon, Polytope3};
use bonnesen_core::graph_body::{find_shear, GraphBody, Kind, PLFunction};
use bonnesen_core::scalar::q;
use bonnesen_core::Rational;
use bonnesen_lab::gen::{gen_concave, gen_convex_polygon, gen_equality_pair, gen_polytope3};
use bonnesen_lab::{run_trials, ExperimentConfig, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn report(checks: &mut Vec<Check>, name: &'static str, pass: bool, detail: String) {
    let mut err = std::io::stderr();
    let tag = if pass { "PASS" } else { "FAIL" };
    writeln!(err, "{tag} {name}: {detail}").unwrap();
    checks.push(Check { name, pass, detail });
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pts(v: &[(i64, i64)]) -> Vec<Point2<Rational>> {
    v.iter().map(|&(x, y)| [q(x, 1), q(y, 1)]).collect()
}

fn poly(v: &[(i64, i64)]) -> Polygon<Rational> {
    Polygon::canonical_hull(&pts(v)).unwrap()
}

/// Plain shoelace over a vertex list given in counterclockwise order.
fn shoelace(v: &[Point2<Rational>]) -> Rational {
    let n = v.len();
    let twice: Rational = (0..n)
        .map(|i| {
            let (a, b) = (&v[i], &v[(i + 1) % n]);
            a[0].clone() * &b[1] - a[1].clone() * &b[0]
        })
        .sum();
    twice / q(2, 1)
}

/// Area of the hull of all pairwise vertex sums.
fn pairwise_sum_area(a: &Polygon<Rational>, b: &Polygon<Rational>) -> Rational {
    let sums: Vec<Point2<Rational>> = a
        .vertices()
        .iter()
        .flat_map(|p| b.vertices().iter().map(move |r| [p[0].clone() + &r[0], p[1].clone() + &r[1]]))
        .collect();
    let hull = Polygon::canonical_hull(&sums).unwrap();
    shoelace(hull.vertices())
}

fn hypograph(f: &PLFunction<Rational>) -> Polygon<Rational> {
    let zero = PLFunction::constant(&f.domain(), q(0, 1), Kind::Convex).unwrap();
    GraphBody::new(zero, f.clone()).unwrap().to_polygon().unwrap()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn scratch() -> PathBuf {
    std::env::temp_dir().join("bonnesen-acceptance")
}

fn chain(checks: &mut Vec<Check>) {
    let config = ExperimentConfig::new(Mode::Chain, 1, 100_000, 2, scratch());
    let (result, took) = timed(|| run_trials(&config).unwrap());
    let s = &result.summary;
    let pass = s.chain_violations == 0
        && s.errors.is_empty()
        && result.outcomes.len() == 100_000
        && took <= Duration::from_secs(120);
    report(
        checks,
        "exact inequality chain",
        pass,
        format!(
            "{} pairs, {} violations, {} errors, {:.1} s (limit 120 s)",
            result.outcomes.len(),
            s.chain_violations,
            s.errors.len(),
            took.as_secs_f64()
        ),
    );
}

fn soundness(checks: &mut Vec<Check>) {
    let mut r = rng(2);
    let ((failures, verified), took) = timed(|| {
        let mut failures = Vec::new();
        let mut verified = 0;
        for i in 0..1000 {
            let k = r.gen_range(3..=10);
            let pair = gen_equality_pair(&mut r, k, 10_000).unwrap();
            let kernel = &pair.truth.kernel;
            let gap = full_report(&pair.a, &pair.b, kernel, MeasureSource::Projection)
                .unwrap()
                .gap_bonnesen;
            let ok = match decide_equality_projection(&pair.a, &pair.b, kernel) {
                Ok(v) => {
                    let d = v.decomposition.as_ref();
                    v.equal
                        && d.is_some_and(|d| {
                            d.witness.residual == 0.0
                                && d.witness.lambda == pair.truth.lambda
                                && d.core_residual_sq() == Ok(q(0, 1))
                                && d.verify(&pair.a, &pair.b) == Ok(true)
                        })
                }
                Err(_) => false,
            };
            if gap.sign() != Ordering::Equal || !ok {
                failures.push(i);
            } else {
                verified += 1;
            }
        }
        (failures, verified)
    });
    let pass = failures.is_empty() && took <= Duration::from_secs(60);
    report(
        checks,
        "certifier soundness on constructed pairs",
        pass,
        format!(
            "{verified}/1000 with zero gap and verified witness, failures {failures:?}, {:.1} s (limit 60 s)",
            took.as_secs_f64()
        ),
    );
}

fn completeness(checks: &mut Vec<Check>) {
    let mut r = rng(3);
    let mut disagreements = Vec::new();
    let mut equal = 0;
    for i in 0..10_000 {
        // Every fourth pair is drawn on a coarse grid where equality can occur by accident.
        let (bound, k) = if i % 4 == 0 {
            (1, r.gen_range(3..=4))
        } else {
            (10_000, r.gen_range(3..=10))
        };
        let a = gen_convex_polygon(&mut r, k, bound).unwrap();
        let b = gen_convex_polygon(&mut r, k, bound).unwrap();
        let kernel = if i % 2 == 0 {
            [q(0, 1), q(1, 1)]
        } else {
            [q(r.gen_range(-3..=3), 1), q(r.gen_range(1..=3), 1)]
        };
        let gap_zero = full_report(&a, &b, &kernel, MeasureSource::Projection)
            .unwrap()
            .gap_bonnesen
            .sign()
            == Ordering::Equal;
        match decide_equality_projection(&a, &b, &kernel) {
            Ok(v) if v.equal == gap_zero => equal += usize::from(gap_zero),
            _ => disagreements.push(i),
        }
    }
    report(
        checks,
        "certifier completeness on random pairs",
        disagreements.is_empty(),
        format!(
            "10000 pairs, {equal} with zero gap, disagreements {:?}",
            &disagreements[..disagreements.len().min(10)]
        ),
    );
}

fn fixed_instances(checks: &mut Vec<Check>) {
    let up = [q(0, 1), q(1, 1)];
    let mut problems = Vec::new();

    let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
    let triangle = poly(&[(0, 0), (1, 0), (0, 1)]);
    let pentagon = shoelace(&pts(&[(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]));
    let r = full_report(&square, &triangle, &up, MeasureSource::Projection).unwrap();
    let v = decide_equality_projection(&square, &triangle, &up).unwrap();
    if !(pentagon == q(7, 2)
        && r.vol_sum == pentagon
        && r.bonnesen.as_scalar() == Some(q(3, 1))
        && r.gap_bonnesen.as_scalar() == Some(q(1, 2))
        && !v.equal)
    {
        problems.push("square + triangle");
    }

    let rect = poly(&[(0, 0), (1, 0), (1, 2), (0, 2)]);
    let r = full_report(&rect, &square, &up, MeasureSource::Projection).unwrap();
    let v = decide_equality_projection(&rect, &square, &up).unwrap();
    let d = v.decomposition.as_ref();
    if !(pairwise_sum_area(&rect, &square) == q(6, 1)
        && r.vol_sum == q(6, 1)
        && r.bonnesen.as_scalar() == Some(q(6, 1))
        && v.equal
        && d.is_some_and(|d| d.alpha == q(1, 1) && d.witness.lambda == q(1, 1)))
    {
        problems.push("rectangle + square");
    }

    let f = PLFunction::new(vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1))], Kind::Concave).unwrap();
    let g = PLFunction::new(vec![(q(0, 1), q(1, 1)), (q(1, 1), q(0, 1))], Kind::Concave).unwrap();
    let oracle = shoelace(&pts(&[(0, 0), (2, 0), (2, 1), (1, 2), (0, 1)]));
    let l = lemma_delta_bound(&f, &g).unwrap();
    let eps = largest_valid_eps(&f, &g);
    let e = eps.as_ref().map(|e| lemma_eps_bound(&f, &g, e).unwrap().bound);
    if !(oracle == q(3, 1)
        && l.delta == Some(q(1, 1))
        && l.bound == oracle
        && l.vol_sum == oracle
        && pairwise_sum_area(&hypograph(&f), &hypograph(&g)) == oracle
        && eps == Some(q(2, 1))
        && e == Some(oracle))
    {
        problems.push("f(x) = x, g(y) = 1 - y");
    }

    report(
        checks,
        "fixed instances",
        problems.is_empty(),
        if problems.is_empty() {
            "square + triangle 7/2 vs 3, rectangle + square 6 = 6, ramp pair bound 3 = 3".into()
        } else {
            format!("mismatch in {problems:?}")
        },
    );
}

fn lemma_suite(checks: &mut Vec<Check>) {
    let mut r = rng(5);
    let mut violations = Vec::new();
    let mut with_eps = 0;
    for i in 0..1000 {
        let m = q(r.gen_range(1..=16), r.gen_range(1..=4));
        let n = q(r.gen_range(1..=16), r.gen_range(1..=4));
        let f = gen_concave(&mut r, &m, -4..=16).unwrap();
        let g = gen_concave(&mut r, &n, -16..=4).unwrap();
        let vol_sum = pairwise_sum_area(&hypograph(&f), &hypograph(&g));
        let delta = lemma_delta_bound(&f, &g).unwrap();
        let mut bad = delta.vol_sum != vol_sum || vol_sum < delta.bound;
        if let Some(eps) = largest_valid_eps(&f, &g) {
            with_eps += 1;
            bad |= vol_sum < lemma_eps_bound(&f, &g, &eps).unwrap().bound;
        }
        if bad {
            violations.push(i);
        }
    }
    report(
        checks,
        "lemma base cases",
        violations.is_empty(),
        format!(
            "1000 pairs ({with_eps} meet the slope-gap hypothesis), violations {violations:?}"
        ),
    );
}

/// Length of the intersection of `p` with the x-axis, by clipping every edge.
fn chord_on_axis(p: &Polygon<Rational>) -> Rational {
    let v = p.vertices();
    let mut xs = Vec::new();
    for i in 0..v.len() {
        let (a, b) = (&v[i], &v[(i + 1) % v.len()]);
        let zero = q(0, 1);
        if a[1] == zero {
            xs.push(a[0].clone());
        }
        if (a[1] < zero && b[1] > zero) || (a[1] > zero && b[1] < zero) {
            let t = a[1].clone() / (a[1].clone() - &b[1]);
            xs.push(a[0].clone() + t * (b[0].clone() - &a[0]));
        }
    }
    let lo = xs.iter().min().unwrap();
    let hi = xs.iter().max().unwrap();
    hi.clone() - lo
}

fn lineup(checks: &mut Vec<Check>) {
    let mut r = rng(6);
    let up = [q(0, 1), q(1, 1)];
    let mut failures = Vec::new();
    for i in 0..1000 {
        let k = r.gen_range(3..=10);
        let p = gen_convex_polygon(&mut r, k, 10_000).unwrap();
        let (offset, _) = p.max_slice(&up).unwrap();
        let aligned = p.translate(&[q(0, 1), -offset]);
        let chord = chord_on_axis(&aligned);
        // the axis chord must dominate the chord at every vertex height
        let dominant = p.vertices().iter().all(|w| {
            chord_on_axis(&p.translate(&[q(0, 1), -w[1].clone()])) <= chord
        });
        let ok = dominant
            && find_shear(&aligned).is_ok_and(|s| {
                aligned.project(&s.kernel_dir).map(|iv| iv.length()) == Ok(chord.clone())
            });
        if !ok {
            failures.push(i);
        }
    }
    report(
        checks,
        "shear onto the largest chord",
        failures.is_empty(),
        format!("1000 aligned polygons, failures {failures:?}"),
    );
}

/// `sqrt(z) <= sqrt(x) + sqrt(y)` decided exactly.
fn sqrt_triangle(x: &Rational, y: &Rational, z: &Rational) -> bool {
    let r = z.clone() - x - y;
    r <= q(0, 1) || r.clone() * &r <= q(4, 1) * x * y
}

fn metric_and_transforms(checks: &mut Vec<Check>) {
    let mut r = rng(7);
    let mut violations = Vec::new();
    for i in 0..1000 {
        let mut draw = || {
            let k = r.gen_range(3..=8);
            gen_convex_polygon(&mut r, k, 64).unwrap()
        };
        let (a, b, c) = (draw(), draw(), draw());
        let zero = q(0, 1);
        let dab = a.hausdorff_distance_sq(&b);
        let dbc = b.hausdorff_distance_sq(&c);
        let dac = a.hausdorff_distance_sq(&c);
        let metric = a.hausdorff_distance_sq(&a) == zero
            && dab == b.hausdorff_distance_sq(&a)
            && (dab > zero) == (a != b)
            && sqrt_triangle(&dab, &dbc, &dac);

        let h = q(r.gen_range(0..=12), r.gen_range(1..=4));
        let g = GraphBody::from_polygon(&a).unwrap();
        let compressed = g.compression().unwrap();
        let stretched = g.stretch(&h).unwrap();
        let (base, alpha) = g.compress_to_floor();
        let (base_again, alpha_again) = stretched.compress_to_floor();
        let transforms = g.to_polygon().unwrap() == a
            && compressed.volume() == a.volume()
            && shoelace(compressed.to_polygon().unwrap().vertices()) == shoelace(a.vertices())
            && shoelace(stretched.to_polygon().unwrap().vertices())
                == shoelace(a.vertices()) + h.clone() * g.domain().length()
            && base.stretch(&alpha).unwrap() == g
            && base_again == base
            && alpha_again == alpha + &h
            && stretched.stretch(&h).unwrap() == g.stretch(&(h.clone() + &h)).unwrap();
        if !(metric && transforms) {
            violations.push(i);
        }
    }
    report(
        checks,
        "metric and transform identities",
        violations.is_empty(),
        format!("1000 triples, violations {violations:?}"),
    );
}

fn support(vs: &[Point3], u: &Point3) -> f64 {
    vs.iter()
        .map(|v| v[0] * u[0] + v[1] * u[1] + v[2] * u[2])
        .fold(f64::NEG_INFINITY, f64::max)
}

fn solid_smoke(checks: &mut Vec<Check>) {
    let up = [0.0, 0.0, 1.0];
    let cube = Polytope3::cuboid([0.0; 3], [1.0; 3]).unwrap();
    let same = decide_equality_projection_3d(&cube, &cube, &up).unwrap();
    let same_gap = same.report.gap_bonnesen.to_f64().abs();

    let mut r = rng(8);
    let simplex = loop {
        let pts: Vec<Point3> = (0..4)
            .map(|_| [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)])
            .collect();
        if let Ok(s) = Polytope3::canonical_hull(&pts) {
            if s.volume() > 0.05 {
                break s;
            }
        }
    };
    let strict = full_report_3d(&cube, &simplex, &up, MeasureSource::Projection).unwrap();
    let strict_gap = strict.gap_bonnesen.to_f64();

    let a = gen_polytope3(&mut r, 12).unwrap();
    let b = gen_polytope3(&mut r, 12).unwrap();
    let sum = a.minkowski_sum(&b).unwrap();
    // The hull must have the support function of A + B in every direction...
    let mut support_err: f64 = 0.0;
    for _ in 0..1000 {
        let u = [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)];
        let want = support(a.vertices(), &u) + support(b.vertices(), &u);
        support_err = support_err.max((support(sum.vertices(), &u) - want).abs());
    }
    // ...and its volume must match a sample count of points passing every facet test
    // against the supports of A and B.
    let planes: Vec<(Point3, f64)> = sum
        .face_planes()
        .map(|(n, _)| (n, support(a.vertices(), &n) + support(b.vertices(), &n)))
        .collect();
    let (lo, hi) = (0..3).fold(([f64::INFINITY; 3], [f64::NEG_INFINITY; 3]), |(mut lo, mut hi), i| {
        for v in sum.vertices() {
            lo[i] = lo[i].min(v[i]);
            hi[i] = hi[i].max(v[i]);
        }
        (lo, hi)
    });
    let samples = 1_000_000;
    let hits = (0..samples)
        .filter(|_| {
            let p: Point3 = std::array::from_fn(|i| r.gen_range(lo[i]..hi[i]));
            planes
                .iter()
                .all(|(n, o)| n[0] * p[0] + n[1] * p[1] + n[2] * p[2] <= *o)
        })
        .count();
    let boxed: f64 = (0..3).map(|i| hi[i] - lo[i]).product();
    let estimate = boxed * hits as f64 / samples as f64;
    let rel = (estimate - sum.volume()).abs() / sum.volume();

    let pass = same.equal
        && same_gap <= 1e-9
        && strict_gap >= 1e-6
        && support_err <= 1e-9
        && rel <= 0.01;
    report(
        checks,
        "solid smoke test",
        pass,
        format!(
            "cube pair gap {same_gap:.3e}, cube + simplex gap {strict_gap:.6}, \
             sum volume {:.6} vs sampled {estimate:.6} ({:.3}%), support error {support_err:.1e}",
            sum.volume(),
            rel * 100.0
        ),
    );
}

#[test]
fn acceptance() {
    let mut checks = Vec::new();
    chain(&mut checks);
    soundness(&mut checks);
    completeness(&mut checks);
    fixed_instances(&mut checks);
    lemma_suite(&mut checks);
    lineup(&mut checks);
    metric_and_transforms(&mut checks);
    solid_smoke(&mut checks);
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    assert!(failed.is_empty(), "failed checks: {failed:#?}");
}
