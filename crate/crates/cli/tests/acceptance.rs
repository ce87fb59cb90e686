use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use tricurve::plot::{render_svg, trace, Curve, PlotSpec, Viewport};
use tricurve_core::euclid::{
    cubic_add, cubic_mul, cubic_neg, from_weierstrass, is_triangle_point, params_from_sides,
    point_from_triangle, rank_positive_certificate, six_point_fan, to_weierstrass, torsion_order_cubic,
    torsion_order_weierstrass, triangle_from_point, two_torsion, weierstrass_add, weierstrass_mul,
    weierstrass_multiple, weierstrass_neg, CubicPoint, EuclidParams, EuclidTriangle, RankCertificate,
    WeierstrassPoint,
};
use tricurve_core::family::{euclid_family, hyper_family, DEFAULT_MAX_HEIGHT};
use tricurve_core::hyper::{
    self, base_point, compose, hyper_add, hyper_neg, lift_to_h, plane_for, project_to_q, pythagorean_scan,
    Branch, HyperTriangle, SpacePoint,
};
use tricurve_core::projective::proportional;
use tricurve_core::trig::{tanh_add2, tanh_add3, third_contact, third_tangent};
use tricurve_core::Rat;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

fn q(n: i64, d: i64) -> Rat {
    Rat::frac(n, d)
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn euclid_golden_chain() -> Outcome {
    let start = Instant::now();
    let t = EuclidTriangle::from_listing([q(3, 1), q(4, 1), q(5, 1)]).map_err(|e| e.to_string())?;
    let params = params_from_sides(&t).unwrap();
    ensure!(params.s() == &q(6, 1) && params.r2() == &q(1, 1), "params {params:?}");
    let p = point_from_triangle(&t).unwrap();
    ensure!(p.affine() == Some((q(1, 1), q(3, 1))), "point {p:?}");
    let w = to_weierstrass(&p);
    ensure!(w.affine() == Some((q(-6, 1), q(18, 1))), "weierstrass point {w:?}");
    let w3 = weierstrass_mul(3, &w).unwrap();
    ensure!(w3.affine() == Some((q(-35, 9), q(343, 27))), "3P = {w3:?}");
    ensure!(from_weierstrass(&w3) == weierstrass_multiple(3, &p).unwrap(), "pullback of 3P");
    let fam = euclid_family(&t, 2, DEFAULT_MAX_HEIGHT).unwrap();
    let third = fam.items.iter().find(|i| i.step == 3).ok_or("no step 3")?;
    ensure!(
        third.triangle.values() == &[q(101, 21), q(156, 35), q(41, 15)],
        "family triangle {:?}",
        third.triangle.values()
    );
    within(start, Duration::from_secs(1))
}

fn example_hyper() -> (HyperTriangle, SpacePoint) {
    let t = HyperTriangle::new([q(672, 697), q(104, 185), q(40, 41)]).unwrap();
    let p = lift_to_h(&hyper::point_from_triangle(&t).unwrap());
    (t, p)
}

fn hyper_golden_chain() -> Outcome {
    let start = Instant::now();
    let (t, p) = example_hyper();
    let params = hyper::params_from_sides(&t).unwrap();
    ensure!(params.sigma() == &q(312, 317), "sigma {:?}", params.sigma());
    ensure!(params.rho2() == &q(12544, 242201), "rho2 {:?}", params.rho2());
    let pt = hyper::point_from_triangle(&t).unwrap();
    ensure!(pt.x() == &q(1456, 1541) && pt.y() == &q(112, 517), "point {pt:?}");
    let lift = [q(163072, 796697), q(925344, 796697), q(580160, 796697)];
    ensure!(p.affine() == Some(lift), "lift {:?}", p.coords());

    let pp = compose(&p, &p, Branch::NonNegativeZ).unwrap();
    let d = "6671549185609843471";
    let expected = [
        r(&format!("157101469162847924/{d}")),
        r(&format!("-3620500406298490680/{d}")),
        r(&format!("2985897265044714172/{d}")),
    ];
    ensure!(pp.affine() == Some(expected), "compose(P,P) = {:?}", pp.coords());
    let ppp = compose(&p, &pp, Branch::NonNegativeZ).unwrap();
    let proj = project_to_q(&ppp).unwrap();
    ensure!(
        proj.x() == &r("2072869433189638375660592/2186502887201310556520693")
            && proj.y() == &r("2539325917520154646338224/7493434444816664924429305"),
        "projected pair {proj:?}"
    );
    let tri = hyper::triangle_from_point(&proj).unwrap();
    let printed = [
        r("4938503954557916283489312/5070357052721862942058853"),
        r("25089290485693528550048552/46386152087648273210954977"),
        r("1532985230928910433532726152/1583149032740594531386563797"),
    ];
    ensure!(tri.tsides() == &printed, "tsides {:?}", tri.tsides());
    let fam = hyper_family(&t, 2, DEFAULT_MAX_HEIGHT).unwrap();
    ensure!(fam.items.len() == 2 && fam.items[1].triangle.values() == &printed, "family {fam:?}");
    within(start, Duration::from_secs(5))
}

fn plane_normals() -> Outcome {
    let (_, p) = example_hyper();
    let tangent = plane_for(&p, &p).unwrap();
    let printed = [r("315005821528688640"), r("-1615149902619671040/11"), r("1807175612011392000/11")];
    ensure!(proportional(&tangent.normal(), &printed), "tangent normal {:?}", tangent.normal());
    let pp = compose(&p, &p, Branch::NonNegativeZ).unwrap();
    let secant = plane_for(&p, &pp).unwrap();
    let printed = [
        r("13252388009067818908542000/5315203221527805463815287"),
        r("-274681775539499477051700/483200292866164133074117"),
        r("208376488637078243567400/113089430245272456676921"),
    ];
    ensure!(proportional(&secant.normal(), &printed), "secant normal {:?}", secant.normal());
    Ok(())
}

fn random_triangle(rng: &mut StdRng) -> EuclidTriangle {
    loop {
        let [a, b, c] = [0; 3].map(|_| rng.gen_range(1i64..=40));
        if a < b + c && b < a + c && c < a + b && !(a == b && b == c) {
            return EuclidTriangle::new([q(a, 1), q(b, 1), q(c, 1)]).unwrap();
        }
    }
}

fn euclid_case(t: &EuclidTriangle) -> Outcome {
    let p = point_from_triangle(t).unwrap();
    let params = p.params().clone();
    ensure!(p.on_curve() && is_triangle_point(&p), "{t:?}: point off curve");
    ensure!(&triangle_from_point(&p).unwrap() == t, "{t:?}: round trip");
    ensure!(from_weierstrass(&to_weierstrass(&p)) == p, "{t:?}: model round trip");

    let fan = six_point_fan(t).unwrap();
    for f in &fan {
        ensure!(params_from_sides(&triangle_from_point(f).unwrap()).unwrap() == params, "{t:?}: fan params");
        let sum = cubic_add(&p, f).unwrap();
        ensure!(sum.on_curve(), "{t:?}: sum off curve");
        ensure!(!is_triangle_point(&sum), "{t:?}: sum of triangle points is a triangle point");
        ensure!(weierstrass_add(&to_weierstrass(&p), &to_weierstrass(f)).unwrap().on_curve(), "{t:?}: E sum");
    }

    if torsion_order_cubic(&p).unwrap().is_none() {
        for n in 1..=4 {
            let m = cubic_mul(n, &p).unwrap();
            ensure!(m.on_curve(), "{t:?}: {n}P off curve");
            ensure!(is_triangle_point(&m) == (n % 2 == 1), "{t:?}: parity of {n}P");
            ensure!(
                is_triangle_point(&weierstrass_multiple(n, &p).unwrap()) == (n % 2 == 1),
                "{t:?}: parity on E"
            );
        }
    }

    let tee = to_weierstrass(&CubicPoint::identity(params.clone()));
    let psi = |x: &CubicPoint| weierstrass_add(&to_weierstrass(x), &weierstrass_neg(&tee)).unwrap();
    let mut others = fan.clone();
    others.push(CubicPoint::infinity_x(params.clone()));
    others.push(cubic_neg(&p));
    for f in &others {
        let lhs = psi(&cubic_add(&p, f).unwrap());
        ensure!(lhs == weierstrass_add(&psi(&p), &psi(f)).unwrap(), "{t:?}: psi homomorphism");
    }

    let x = CubicPoint::infinity_x(params.clone());
    let y = CubicPoint::infinity_y(params.clone());
    ensure!(cubic_add(&x, &y).unwrap().is_identity(), "X + Y");
    ensure!(cubic_add(&x, &x).unwrap() == y, "2X = Y");
    ensure!(
        cubic_mul(3, &x).unwrap().is_identity() && cubic_mul(3, &y).unwrap().is_identity(),
        "3X = 3Y = O"
    );
    Ok(())
}

fn euclid_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7e1a);
    for _ in 0..200 {
        euclid_case(&random_triangle(&mut rng))?;
    }
    Ok(())
}

fn hyper_case(t: &HyperTriangle, perm: &[usize; 3]) -> Outcome {
    let params = hyper::params_from_sides(t).unwrap();
    let (sigma, rho2) = (params.sigma(), params.rho2());
    let [l1, l2, l3] = t.tsides();
    let double = (sigma * 2).checked_div(&(Rat::one() + sigma.square())).unwrap();
    ensure!(tanh_add3(l1, l2, l3).unwrap() == double, "{t:?}: tanh sum");

    let pt = hyper::point_from_triangle(t).unwrap();
    ensure!(pt.on_curve(), "{t:?}: off quartic");
    ensure!(&hyper::triangle_from_point(&pt).unwrap() == t, "{t:?}: round trip");
    let (a, b) = (pt.x(), pt.y());
    let c = third_contact(a, b, rho2).unwrap();
    ensure!(&(a * b * &c / (a + b + &c)) == rho2, "{t:?}: contact product");
    let p = lift_to_h(&pt);
    ensure!(p.on_curve() && project_to_q(&p).unwrap() == pt, "{t:?}: lift round trip");

    let other = HyperTriangle::new(perm.map(|i| t.tsides()[i].clone())).unwrap();
    let q2 = lift_to_h(&hyper::point_from_triangle(&other).unwrap());
    ensure!(q2.params() == p.params(), "{t:?}: permuted params");
    let o = base_point(&params).unwrap();
    ensure!(hyper_add(&p, &o).unwrap() == p, "{t:?}: identity");
    ensure!(hyper_add(&p, &hyper_neg(&p).unwrap()).unwrap().is_base_point(), "{t:?}: inverse");
    ensure!(hyper_add(&p, &q2).unwrap() == hyper_add(&q2, &p).unwrap(), "{t:?}: commutativity");
    ensure!(compose(&p, &q2, Branch::Literal).unwrap().on_curve(), "{t:?}: compose off curve");
    Ok(())
}

fn hyper_properties() -> Outcome {
    let scanned = pythagorean_scan(20).unwrap();
    let perms = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let mut rng = StdRng::seed_from_u64(0x4b9e);
    for _ in 0..120 {
        let t = scanned.choose(&mut rng).unwrap();
        let perm = perms.choose(&mut rng).unwrap();
        let t = HyperTriangle::new(perm.map(|i| t.tsides()[i].clone())).unwrap();
        hyper_case(&t, perms.choose(&mut rng).unwrap())?;
    }
    for t in scanned.choose_multiple(&mut rng, 10) {
        let p = lift_to_h(&hyper::point_from_triangle(t).unwrap());
        let q2 = compose(&p, &p, Branch::Literal).unwrap();
        let r3 = p.involution();
        let lhs = hyper_add(&hyper_add(&p, &q2).unwrap(), &r3).unwrap();
        let rhs = hyper_add(&p, &hyper_add(&q2, &r3).unwrap()).unwrap();
        ensure!(lhs == rhs, "{t:?}: associativity");
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn certificates() -> Outcome {
    let start = Instant::now();
    let mut applicable = 0;
    for m in 2..=30u64 {
        for n in (1..m).filter(|&n| gcd(m, n) == 1) {
            let cert = rank_positive_certificate(m, n).unwrap();
            if let RankCertificate::Applicable { curve, .. } = &cert {
                applicable += 1;
                let tt = two_torsion(&curve.params).unwrap();
                ensure!(tt.points.is_empty(), "({m},{n}) has 2-torsion");
            }
        }
    }
    ensure!(applicable > 0, "no applicable certificates");
    for (m, n) in [(2, 1), (27, 4)] {
        ensure!(!rank_positive_certificate(m, n).unwrap().is_applicable(), "({m},{n}) applicable");
    }
    within(start, Duration::from_secs(10))
}

fn torsion_facts() -> Outcome {
    let params = EuclidParams::new(q(1, 1), q(6, 1)).unwrap();
    let origin = WeierstrassPoint::from_affine(params.clone(), &Rat::zero(), &Rat::zero()).unwrap();
    ensure!(torsion_order_weierstrass(&origin).unwrap() == Some(3), "(0,0) order");
    let w = WeierstrassPoint::from_affine(params, &q(-6, 1), &q(18, 1)).unwrap();
    ensure!(torsion_order_weierstrass(&w).unwrap().is_none(), "(-6,18) has finite order");
    let iso = EuclidTriangle::new([q(5, 1), q(5, 1), q(6, 1)]).unwrap();
    let fan = six_point_fan(&iso).unwrap();
    let twos = fan.iter().filter(|p| torsion_order_cubic(p).unwrap() == Some(2)).count();
    ensure!(twos == 1, "fan has {twos} points of order two");
    let tt = two_torsion(&params_from_sides(&iso).unwrap()).unwrap();
    ensure!(
        tt.real_count == 3 && tt.positive_count == 2,
        "real {} positive {}",
        tt.real_count,
        tt.positive_count
    );
    Ok(())
}

fn random_unit(rng: &mut StdRng) -> Rat {
    let d = rng.gen_range(2i64..=500);
    q(rng.gen_range(1 - d..d), d)
}

fn identity_checks() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x1dea);
    for _ in 0..10_000 {
        let [a, b, c] = [0; 3].map(|_| random_unit(&mut rng));
        let iterated = tanh_add2(&tanh_add2(&a, &b).unwrap(), &c).unwrap();
        ensure!(tanh_add3(&a, &b, &c).unwrap() == iterated, "tanh sum at {a}, {b}, {c}");
    }
    let mut checked = 0;
    while checked < 10_000 {
        let t1 = q(rng.gen_range(-400i64..=400), rng.gen_range(1i64..=60));
        let t2 = q(rng.gen_range(-400i64..=400), rng.gen_range(1i64..=60));
        if &t1 * &t2 == Rat::one() {
            continue;
        }
        let t3 = third_tangent(&t1, &t2).unwrap();
        ensure!(&t1 + &t2 + &t3 == &(&t1 * &t2) * &t3, "triple tangent at {t1}, {t2}");
        checked += 1;
    }
    within(start, Duration::from_secs(5))
}

fn plot_components() -> Outcome {
    let cubic = PlotSpec::with_defaults(Curve::Cubic { s: 6.0, r2: 1.0 });
    let n = trace(&cubic).components;
    ensure!(n == 4, "cubic has {n} components");
    let quartic = PlotSpec::with_defaults(Curve::Quartic { sigma: 312.0 / 317.0, rho2: 12544.0 / 242201.0 });
    ensure!(quartic.viewport == Viewport::square(3.0), "quartic viewport");
    let n = trace(&quartic).components;
    ensure!(n == 5, "quartic has {n} components");
    let empty =
        PlotSpec::new(cubic.curve, Viewport { xmin: 100.0, xmax: 101.0, ymin: 100.0, ymax: 101.0 }, 64)
            .unwrap();
    let contour = trace(&empty);
    ensure!(contour.components == 0, "empty viewport has components");
    let svg = render_svg(&empty, &contour);
    ensure!(
        svg.contains("<svg") && svg.trim_end().ends_with("</svg>") && !svg.contains("polyline"),
        "empty svg"
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("euclidean golden chain", euclid_golden_chain),
        ("hyperbolic golden chain", hyper_golden_chain),
        ("plane normals", plane_normals),
        ("euclidean property suite", euclid_properties),
        ("hyperbolic property suite", hyper_properties),
        ("rank certificates", certificates),
        ("torsion facts", torsion_facts),
        ("identity checks", identity_checks),
        ("plot component counts", plot_components),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into()))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {}: {name}: PASS ({ms} ms)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({ms} ms): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
