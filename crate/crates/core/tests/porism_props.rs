use std::f64::consts::TAU;

use poristic::kernel::{circle_circle_intersection, Point};
use poristic::porism::{
    check_pair, construct_triangle, euler_prime, family_sweep, fertile_arcs, make_poristic_pair,
    PoristicKind, RoundTrip,
};
use poristic::{AngleKind, Circle, GeomError, PairClassification, Triangle};
use poristic_oracles as oracle;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn euler_at(d: f64) -> Circle {
    Circle::new(Point::new(d, 0.0), 0.5).unwrap()
}

fn grid() -> Vec<f64> {
    (0..15)
        .map(|k| k as f64 * 0.1)
        .filter(|d| (d - 0.5).abs() > 1e-6)
        .collect()
}

#[test]
fn closure_over_the_grid() {
    let c = Circle::unit();
    for d in grid() {
        let e = euler_at(d);
        let arcs = fertile_arcs(&c, &e).unwrap();
        for k in 0..360 {
            let theta = k as f64 * TAU / 360.0;
            match construct_triangle(&c, &e, c.point_at(theta)) {
                Ok(t) => {
                    assert!(
                        arcs.contains(theta),
                        "d={d} θ={theta} built outside the fertile set"
                    );
                    let rt = RoundTrip::of(&t, &c, &e);
                    assert!(rt.max() <= 1e-9, "d={d} θ={theta} residual {rt:?}");
                }
                Err(GeomError::NoTriangle) => {
                    assert!(
                        !arcs.contains(theta),
                        "d={d} θ={theta} sterile inside the fertile set"
                    )
                }
                Err(other) => panic!("d={d} θ={theta}: {other}"),
            }
        }
    }
}

/// Tangent at angle θ on the unit circle is `x·(cos θ, sin θ) = 1`; it cuts
/// the circle `outer` iff its distance to the center is below the radius.
fn cuts(outer: &Circle, theta: f64) -> bool {
    let n = Point::polar(theta);
    (n.dot(outer.center()) - 1.0).abs() < outer.radius()
}

#[test]
fn arc_boundaries_match_scanned_common_tangents() {
    let c = Circle::unit();
    for d in [0.6, 0.75, 0.9, 1.0, 1.2, 1.4, 1.49] {
        let e = euler_at(d);
        let outer = *euler_prime(&c, &e).unwrap().as_circle().unwrap();
        // brute-force scan for sign changes, refined by bisection
        let steps = 20_000;
        let mut found = Vec::new();
        for k in 0..steps {
            let (mut lo, mut hi) = (
                k as f64 * TAU / steps as f64,
                (k + 1) as f64 * TAU / steps as f64,
            );
            if cuts(&outer, lo) != cuts(&outer, hi) {
                let lo_state = cuts(&outer, lo);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if cuts(&outer, mid) == lo_state {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                found.push(0.5 * (lo + hi));
            }
        }
        let boundaries = fertile_arcs(&c, &e).unwrap().boundaries();
        assert_eq!(found.len(), 2, "d={d}");
        assert_eq!(boundaries.len(), 2);
        for (f, b) in found.iter().zip(&boundaries) {
            assert!((f - b).abs() < 1e-9, "d={d}: {f} vs {b}");
        }
        // the boundary tangents touch E' as well: common tangents of C and E'
        for b in &boundaries {
            let n = Point::polar(*b);
            assert!(((n.dot(outer.center()) - 1.0).abs() - outer.radius()).abs() < 1e-9);
        }
    }
}

#[test]
fn construction_flips_across_arc_boundaries() {
    let c = Circle::unit();
    for d in [0.55, 0.75, 1.0, 1.3, 1.45] {
        let e = euler_at(d);
        let arcs = fertile_arcs(&c, &e).unwrap();
        for arc in &arcs.arcs {
            for (edge, inward) in [(arc.start, 1.0), (arc.end, -1.0)] {
                // the cut at zero of a wrapping arc is not a real boundary
                if edge == 0.0 || edge == TAU {
                    continue;
                }
                let inside = c.point_at(edge + inward * 1e-4);
                let outside = c.point_at(edge - inward * 1e-4);
                let t = construct_triangle(&c, &e, inside).unwrap();
                assert!(RoundTrip::of(&t, &c, &e).max() <= 1e-9);
                assert_eq!(
                    construct_triangle(&c, &e, outside),
                    Err(GeomError::NoTriangle)
                );
            }
        }
    }
}

#[test]
fn chapple_relations_over_the_grid() {
    let c = Circle::unit();
    for k in 0..30 {
        let d = k as f64 * 0.05;
        if k == 10 {
            continue;
        }
        let pair = make_poristic_pair(&c, &euler_at(d)).unwrap();
        let kind = if d < 0.5 {
            PoristicKind::Incircle
        } else {
            PoristicKind::Excircle
        };
        assert_eq!(pair.kind, kind);
        assert!(
            pair.chapple_residual() <= 1e-9,
            "d={d}: {}",
            pair.chapple_residual()
        );
        // closed-form check with d0 = 2d: R' = 2/|d0²-1|, center 2d0/(d0²-1)
        let d0 = 2.0 * d;
        assert!(
            (pair.outer_radius() - 2.0 / (d0 * d0 - 1.0).abs()).abs() <= 1e-9 * pair.outer_radius()
        );
        assert!(
            (pair.outer.center().x - 2.0 * d0 / (d0 * d0 - 1.0)).abs()
                <= 1e-9 * pair.outer_radius()
        );
    }
}

#[test]
fn swept_triangles_follow_the_pair_verdict() {
    let c = Circle::unit();
    for d in grid() {
        let e = euler_at(d);
        let verdict = check_pair(&c, &e);
        let family = family_sweep(&c, &e, 90).unwrap();
        assert_eq!(family.len(), 90);
        let hits = circle_circle_intersection(&c, &e).unwrap();
        for t in &family {
            assert_eq!(PairClassification::from(t.classify()), verdict, "d={d}");
            assert!(RoundTrip::of(t, &c, &e).max() <= 1e-9);
            if verdict == PairClassification::Obtuse {
                // exactly one vertex on the arc P1P2 inside E
                assert_eq!(hits.len(), 2);
                let inside: Vec<_> = t
                    .vertices()
                    .into_iter()
                    .filter(|v| v.dist(e.center()) < e.radius())
                    .collect();
                assert_eq!(inside.len(), 1, "d={d}");
                assert_eq!(inside[0], t.vertices()[t.largest_angle_vertex()]);
            }
        }
    }
}

#[test]
fn family_examples() {
    let c = Circle::unit();
    let acute = family_sweep(&c, &euler_at(0.25), 100).unwrap();
    assert_eq!(acute.len(), 100);
    for t in &acute {
        assert_eq!(t.classify(), AngleKind::Acute);
        assert!(t.nine_point_circle().center().dist(Point::new(0.25, 0.0)) <= 1e-9);
    }
    let obtuse = family_sweep(&c, &euler_at(0.75), 100).unwrap();
    assert!(obtuse.iter().all(|t| t.classify() == AngleKind::Obtuse));
    // ordered by seed angle, reproducible
    let angles: Vec<f64> = obtuse.iter().map(|t| c.angle_of(t.a())).collect();
    assert!(angles.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(obtuse, family_sweep(&c, &euler_at(0.75), 100).unwrap());
    assert_eq!(
        family_sweep(&c, &euler_at(0.5), 3),
        Err(GeomError::InvalidPair)
    );
}

#[test]
fn construction_reproduces_random_triangles() {
    let mut rng = StdRng::seed_from_u64(11);
    let (mut acute, mut obtuse) = (0, 0);
    for _ in 0..500 {
        let [a, b, cv] =
            oracle::random_vertices(&mut rng, 10.0, 1.0).map(|p| Point::new(p[0], p[1]));
        let t = Triangle::new(a, b, cv).unwrap();
        match t.classify() {
            AngleKind::Acute => acute += 1,
            AngleKind::Obtuse => obtuse += 1,
            AngleKind::Right => continue,
        }
        let (c, e) = (t.circumcircle(), t.nine_point_circle());
        let scale = c.scale().max(1.0);
        for seed in t.vertices() {
            let rebuilt = construct_triangle(&c, &e, seed).unwrap();
            for v in t.vertices() {
                let nearest = rebuilt
                    .vertices()
                    .iter()
                    .map(|w| w.dist(v))
                    .fold(f64::INFINITY, f64::min);
                assert!(nearest <= 1e-9 * scale, "{t:?} seed {seed}: {rebuilt:?}");
            }
        }
    }
    assert!(acute > 50 && obtuse > 50);
}

#[test]
fn verdicts_outside_the_compatible_range() {
    let c = Circle::unit();
    let e = euler_at(0.25);
    let seed = Point::polar(0.3);
    assert_eq!(
        construct_triangle(&c, &euler_at(1.6), seed),
        Err(GeomError::InvalidPair)
    );
    assert_eq!(
        construct_triangle(&c, &Circle::new(Point::new(0.2, 0.0), 0.4).unwrap(), seed),
        Err(GeomError::InvalidPair)
    );
    assert_eq!(
        construct_triangle(&c, &e, Point::new(2.0, 0.0)),
        Err(GeomError::SeedNotOnCircle)
    );
    assert!(!check_pair(&c, &euler_at(1.5)).is_compatible());
    assert!(check_pair(&c, &euler_at(1.5 - 1e-6)).is_compatible());
}

#[test]
fn scaled_and_translated_pairs() {
    // the construction is equivariant under similarity
    let c = Circle::new(Point::new(-3.0, 7.0), 4.0).unwrap();
    for (d, phi) in [(0.3, 0.4), (2.5, 2.0), (5.9, -1.0)] {
        let e = Circle::new(c.center() + Point::polar(phi) * d, 2.0).unwrap();
        let family = family_sweep(&c, &e, 60).unwrap();
        for t in &family {
            assert!(RoundTrip::of(t, &c, &e).max() <= 1e-9 * c.scale());
        }
    }
}
