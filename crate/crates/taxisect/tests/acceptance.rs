//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Every comparison is exact; the only tolerances
//! are the wall-clock limits below.

mod common;

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use taxisect_core::angles::{ArcParam, FULL_TURN, PI_T};
use taxisect_core::constructions::{Primitive, StepKind};
use taxisect_core::kernel::{euclidean_distance_squared, intersect_line_circle};
use taxisect_core::{
    circumference, direction_to_param, measure_angle, nsect_segment, param_to_point, section_angle, taxicab_distance,
    verify_trace, Angle, ConstructionTrace, Direction, IntersectionResult, Line, Point, Rational, TaxicabCircle,
};

const SEED: u64 = 0x7a71_5ec7;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// Numerator and denominator bounded by 10^3 in absolute value.
fn rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::frac(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000))
}

fn positive(rng: &mut ChaCha8Rng) -> Rational {
    Rational::frac(rng.gen_range(1..=1000), rng.gen_range(1..=1000))
}

fn point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(rational(rng), rational(rng))
}

/// 16 direction classes: the interior of each of the 8 octants, the 4 axis
/// directions and the 4 diagonals.
fn direction_in_class(rng: &mut ChaCha8Rng, class: usize) -> Direction {
    let (u, v) = loop {
        let (u, v) = (positive(rng), positive(rng));
        if u != v {
            break if u > v { (u, v) } else { (v, u) };
        }
    };
    let z = Rational::zero();
    let (dx, dy) = match class {
        0 => (u, v),
        1 => (v, u),
        2 => (-v, u),
        3 => (-u, v),
        4 => (-u, -v),
        5 => (-v, -u),
        6 => (v, -u),
        7 => (u, -v),
        8 => (u, z),
        9 => (z, u),
        10 => (-u, z),
        11 => (z, -u),
        12 => (u.clone(), u),
        13 => (-u.clone(), u),
        14 => (-u.clone(), -u),
        _ => (u.clone(), -u),
    };
    Direction::new(dx, dy).unwrap()
}

fn oracle(a: &Point, b: &Point, n: u32) -> Point {
    let n = Rational::from(n as i64);
    Point::new(&a.x + (&b.x - &a.x) / &n, &a.y + (&b.y - &a.y) / &n)
}

fn verified(trace: &ConstructionTrace) -> bool {
    matches!(verify_trace(trace), Ok(v) if v.is_verified())
}

fn slope_of(trace: &ConstructionTrace, id: taxisect_core::constructions::StepId) -> Option<Rational> {
    match &trace.step(id).output {
        Primitive::Line(l) => l.line.slope(),
        _ => None,
    }
}

fn c1_slope_one_values() -> Outcome {
    let mut cases = 0;
    for l in [q(1, 1), q(2, 1), q(3, 1), q(7, 3)] {
        let (a, b) = (Point::origin(), Point::new(l.clone(), l.clone()));
        for n in 3..=12u32 {
            let nn = Rational::from(n as i64);
            let ns = nsect_segment(&a, &b, n).map_err(|e| format!("l={l} n={n}: {e}"))?;
            let t = &ns.trace;
            let p_id = t.steps.iter().position(|s| s.label.as_deref() == Some("P")).ok_or("no P step")?;
            let StepKind::IntersectLineCircle { line: to_b, .. } = t.steps[p_id].kind else {
                return Err("P is not a line-circle intersection".into());
            };
            let to_top = t
                .steps
                .iter()
                .rev()
                .find_map(|s| match s.kind {
                    StepKind::IntersectLines { first, .. } => Some(first),
                    _ => None,
                })
                .ok_or("no final line intersection")?;
            let x = &l / (&nn - Rational::one());
            let p = t.steps[p_id].output.as_point().cloned();
            ensure!(p == Some(Point::new(x.clone(), -x.clone())), "l={l} n={n}: P = {p:?}");
            let s1 = slope_of(t, to_b);
            ensure!(s1 == Some(&nn / (&nn - Rational::from(2))), "l={l} n={n}: first slope {s1:?}");
            let s2 = slope_of(t, to_top);
            ensure!(s2 == Some(Rational::one() - Rational::from(2) * &nn), "l={l} n={n}: second slope {s2:?}");
            // the second line is y = (1 - 2n) x + 2l
            let through_top =
                Line::from_slope_intercept(Rational::one() - Rational::from(2) * &nn, Rational::from(2) * &l);
            ensure!(t.step(to_top).output.as_line().map(|d| &d.line) == Some(&through_top), "l={l} n={n}: second line");
            ensure!(ns.point == Point::new(&l / &nn, &l / &nn), "l={l} n={n}: C = {}", ns.point);
            ensure!(taxicab_distance(&a, &ns.point) == Rational::from(2) * &l / &nn, "l={l} n={n}: d(A,C)");
            ensure!(verified(t), "l={l} n={n}: trace does not verify");
            cases += 1;
        }
    }
    Ok(format!("{cases} (l, n) cases"))
}

fn c2_oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut per_class = [0usize; 16];
    for i in 0..1000 {
        let class = i % 16;
        let a = point(&mut rng);
        let b = a.translate(&direction_in_class(&mut rng, class), &Rational::one());
        let n = rng.gen_range(2..=12u32);
        let ns = nsect_segment(&a, &b, n).map_err(|e| format!("a={a} b={b} n={n}: {e}"))?;
        ensure!(ns.point == oracle(&a, &b, n), "a={a} b={b} n={n}: got {}", ns.point);
        ensure!(verified(&ns.trace), "a={a} b={b} n={n}: trace does not verify");
        per_class[class] += 1;
    }
    Ok(format!("1000 cases over 16 direction classes ({} each minimum)", per_class.iter().min().unwrap()))
}

fn c3_bisection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for i in 0..100 {
        let a = point(&mut rng);
        let b = a.translate(&direction_in_class(&mut rng, i % 16), &Rational::one());
        let mid = nsect_segment(&a, &b, 2).map_err(|e| e.to_string())?;
        ensure!(mid.point == a.lerp(&b, &q(1, 2)), "midpoint of {a}, {b}: {}", mid.point);
        ensure!(verified(&mid.trace), "trace for {a}, {b}");
        let quarter = nsect_segment(&a, &mid.point, 2).map_err(|e| e.to_string())?.point;
        let direct = nsect_segment(&a, &b, 4).map_err(|e| e.to_string())?.point;
        ensure!(quarter == direct, "{a}, {b}: twice-halved {quarter} vs quartered {direct}");
    }
    Ok("100 segments".into())
}

fn c4_tradians() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let o = Point::origin();
    let d = |x, y| Direction::new(x, y).unwrap();
    let unit = measure_angle(&Angle::new(o.clone(), d(1, 0), d(1, 1)));
    ensure!(unit == Rational::one(), "measure((1,0),(1,1)) = {unit}");
    for i in 0..100 {
        let side = direction_in_class(&mut rng, i % 16);
        let m = measure_angle(&Angle::new(point(&mut rng), side.clone(), side.reversed()));
        ensure!(m == Rational::from(PI_T), "straight angle along {side} measures {m}");
    }
    for _ in 0..50 {
        let r = positive(&mut rng);
        let c = TaxicabCircle::new(point(&mut rng), r.clone()).unwrap();
        ensure!(circumference(&c) == Rational::from(8) * &r, "circumference for r = {r}");
    }
    let half = circumference(&TaxicabCircle::new(o, 1).unwrap()) / Rational::from(2);
    ensure!(half == Rational::from(4), "half the unit circumference is {half}");
    for _ in 0..500 {
        let t = Rational::frac(rng.gen_range(0..FULL_TURN * 1000), rng.gen_range(1..=1000)).min(Rational::from(8));
        let Ok(t) = ArcParam::new(t.clone()) else { continue };
        let p = param_to_point(&t);
        let back = direction_to_param(&Direction::new(p.x.clone(), p.y.clone()).unwrap());
        ensure!(back == t, "round trip {t} -> {p} -> {back}");
    }
    Ok("unit angle, 100 straight angles, 50 radii, 500 parameters".into())
}

fn c5_angle_sectioning() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let (mut angles, mut traced) = (0, 0);
    while angles < 200 {
        let vertex = point(&mut rng);
        let class = rng.gen_range(0..16);
        let d1 = direction_in_class(&mut rng, class);
        // every other angle keeps both sides in one quadrant so that they
        // often cut the same circle edge
        let d2 = if angles % 2 == 0 {
            let (sx, sy) = (d1.dx().signum(), d1.dy().signum());
            let (u, v) = (positive(&mut rng), positive(&mut rng));
            let fix = |s: i8, w: Rational| if s < 0 { -w } else { w };
            Direction::new(fix(sx, u), fix(sy, v)).unwrap()
        } else {
            let class = rng.gen_range(0..16);
            direction_in_class(&mut rng, class)
        };
        let angle = Angle::new(vertex.clone(), d1.clone(), d2.clone());
        let total = measure_angle(&angle);
        if total.is_zero() {
            continue;
        }
        angles += 1;
        let radius = positive(&mut rng);
        for n in 2..=8u32 {
            let s = section_angle(&angle, n, &radius).map_err(|e| format!("{angle:?} n={n}: {e}"))?;
            ensure!(s.rays.len() == n as usize - 1, "{angle:?} n={n}: {} rays", s.rays.len());
            let part = &total / Rational::from(n as i64);
            let mut sides = vec![d1.clone()];
            sides.extend(s.rays.iter().map(|r| r.dir.clone()));
            sides.push(d2.clone());
            let mut sum = Rational::zero();
            for w in sides.windows(2) {
                let m = measure_angle(&Angle::new(vertex.clone(), w[0].clone(), w[1].clone()));
                ensure!(m == part, "{angle:?} n={n}: sub-angle {m}, expected {part}");
                sum += m;
            }
            ensure!(sum == total, "{angle:?} n={n}: sub-angles sum to {sum}");
            if let Some(trace) = &s.trace {
                ensure!(verified(trace), "{angle:?} n={n}: trace does not verify");
                let marks = trace.marked_points();
                ensure!(marks.len() == s.rays.len(), "{angle:?} n={n}: {} chord points", marks.len());
                for (mark, ray) in marks.iter().zip(&s.rays) {
                    ensure!(ray.contains(mark), "{angle:?} n={n}: chord point {mark} not on its ray");
                    ensure!(taxicab_distance(&vertex, mark) == radius, "{angle:?} n={n}: chord point off circle");
                }
                traced += 1;
            }
        }
    }
    Ok(format!("200 angles x n = 2..8, {traced} with a verified chord construction"))
}

fn c6_metric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let two = Rational::from(2);
    let (mut axis, mut diagonal) = (0, 0);
    for i in 0..1000 {
        let p = point(&mut rng);
        // a quarter of the pairs are axis-aligned or diagonal
        let r = if i % 4 == 0 {
            p.translate(&direction_in_class(&mut rng, 8 + i / 4 % 8), &Rational::one())
        } else {
            point(&mut rng)
        };
        let s = point(&mut rng);
        let d = |u: &Point, v: &Point| taxicab_distance(u, v);
        ensure!(d(&p, &s) <= d(&p, &r) + d(&r, &s), "triangle inequality at {p}, {r}, {s}");
        let t2 = d(&p, &r) * d(&p, &r);
        let e2 = euclidean_distance_squared(&p, &r);
        ensure!(e2 <= t2 && t2 <= &two * &e2, "sandwich fails for {p}, {r}");
        let (dx, dy) = r.delta(&p);
        let on_axis = dx.is_zero() || dy.is_zero();
        let on_diagonal = dx.abs() == dy.abs();
        ensure!((e2 == t2) == on_axis, "lower equality iff axis-aligned: {p}, {r}");
        ensure!((t2 == &two * &e2) == on_diagonal, "upper equality iff diagonal: {p}, {r}");
        axis += on_axis as usize;
        diagonal += on_diagonal as usize;
    }
    // Two segments of Euclidean length 4: along an axis the taxicab length
    // is 4, along a diagonal it is 4*sqrt(2), i.e. 32 when squared.
    let e2 = Rational::from(16);
    let horizontal = taxicab_distance(&Point::origin(), &Point::new(4, 0));
    ensure!(euclidean_distance_squared(&Point::origin(), &Point::new(4, 0)) == e2, "horizontal length");
    ensure!(&horizontal * &horizontal == Rational::from(16), "horizontal taxicab length {horizontal}");
    let k = Point::new(1, 1);
    let ratio = {
        let t = taxicab_distance(&Point::origin(), &k);
        &t * &t / euclidean_distance_squared(&Point::origin(), &k)
    };
    ensure!(&ratio * &e2 == Rational::from(32), "diagonal squared taxicab length {}", &ratio * &e2);
    Ok(format!("1000 pairs ({axis} axis-aligned, {diagonal} diagonal); 4 vs 4*sqrt(2) reproduced"))
}

fn c7_degenerate_intersections() -> Outcome {
    let c = TaxicabCircle::new(Point::new(q(1, 2), -1), 3).unwrap();
    let (cx, cy, r) = (c.center().x.clone(), c.center().y.clone(), c.radius().clone());
    let mut counts = [0usize; 4];
    let mut overlaps = Vec::new();
    for slope in [1i64, -1] {
        for i in 0..50i64 {
            // offset of the line from the centre, from -2.5r to 2.4r in steps of r/10
            let k = &r * Rational::frac(i - 25, 10);
            let s = Rational::from(slope);
            let line = Line::from_slope_intercept(s.clone(), &cy - &s * &cx + &k);
            let res = intersect_line_circle(&line, &c);
            for p in res.points() {
                ensure!(line.contains(&p) && c.contains_point(&p), "slope {slope} k={k}: {p} off a locus");
            }
            let slot = match &res {
                IntersectionResult::Empty => 0,
                IntersectionResult::OnePoint(_) => 1,
                IntersectionResult::TwoPoints(..) => 2,
                IntersectionResult::OverlapSegment(_) => 3,
            };
            counts[slot] += 1;
            let predicted = match k.abs().cmp(&r) {
                std::cmp::Ordering::Greater => 0,
                std::cmp::Ordering::Equal => 3,
                std::cmp::Ordering::Less => 2,
            };
            ensure!(slot == predicted, "slope {slope} k={k}: {res:?}");
            if let IntersectionResult::OverlapSegment(seg) = &res {
                let vs = c.vertices();
                let ends = [seg.p(), seg.q()];
                ensure!(ends.iter().all(|e| vs.contains(e)), "overlap {seg} is not a whole edge");
                ensure!(
                    taxicab_distance(seg.p(), seg.q()) == &r * Rational::from(2),
                    "overlap {seg} is not a whole edge"
                );
                overlaps.push((slope, k.clone()));
            }
        }
    }
    ensure!(overlaps.len() == 4, "expected one overlap per edge, got {overlaps:?}");
    Ok(format!(
        "100 lines: {} empty, {} one point, {} two points, {} edge overlaps",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

fn c8_corpus_determinism() -> Outcome {
    let corpus = common::corpus();
    ensure!(corpus.len() >= 10, "corpus has {} scripts", corpus.len());
    for needed in ["slope_one_values", "bisection", "tradians", "construction_n3"] {
        ensure!(corpus.iter().any(|(n, _)| n == needed), "corpus lacks {needed}");
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, _) in &corpus {
        let script = common::corpus_dir().join(format!("{name}.taxi"));
        let mut outputs = Vec::new();
        for run in 0..2 {
            let svg = dir.path().join(format!("{name}-{run}.svg"));
            let json = dir.path().join(format!("{name}-{run}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_taxisect"))
                .arg("run")
                .arg(&script)
                .arg("--quiet")
                .arg("--svg")
                .arg(&svg)
                .arg("--json")
                .arg(&json)
                .env("TAXISECT_NO_COLOR", "1")
                .status()
                .map_err(|e| e.to_string())?;
            ensure!(status.code() == Some(0), "{name}: exit {status}");
            outputs.push((fs::read(&svg).unwrap(), fs::read(&json).unwrap()));
        }
        ensure!(outputs[0] == outputs[1], "{name}: two runs differ");
        let (svg, json) = &outputs[0];
        for (file, bytes) in [(format!("{name}.svg"), svg), (format!("{name}.json"), json)] {
            let text = String::from_utf8(bytes.clone()).map_err(|e| e.to_string())?;
            common::check_golden(&file, &text)?;
        }
    }
    Ok(format!("{} scripts, 2 runs each, SVG and JSON match goldens", corpus.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("slope-1 construction values", c1_slope_one_values, Duration::from_secs(1)),
        ("oracle equivalence (general)", c2_oracle_equivalence, Duration::from_secs(10)),
        ("bisection, n = 2", c3_bisection, Duration::from_secs(2)),
        ("t-radian suite", c4_tradians, Duration::from_secs(2)),
        ("angle sectioning", c5_angle_sectioning, Duration::from_secs(5)),
        ("metric properties", c6_metric, Duration::from_secs(2)),
        ("degenerate intersections", c7_degenerate_intersections, Duration::from_secs(1)),
        ("end-to-end determinism", c8_corpus_determinism, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(detail) if took <= *limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; too slow")),
            Err(why) => ("FAIL", why),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {verdict}: {name} -- {detail} [{:.3} s, limit {} s]",
            i + 1,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
