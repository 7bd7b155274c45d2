//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use num::{BigInt, Zero};

use deepnodes::asymptotics::{
    fit_quadratic, limit_gap_check, ratio_table, singular_coefficient_fit,
};
use deepnodes::genfun::{gf_a, gf_a_h, gf_dg, gf_g, identity_suite, DGRoute, GRoute, Route};
use deepnodes::paths::{
    decorated_to_skew, decorated_to_tree, skew_to_decorated, tree_to_decorated, validate_skew,
    SkewDiagnostics,
};
use deepnodes::series::{rat, Rat};
use deepnodes::trees::{deepest_polynomial, generate};

fn report(criterion: &str, pass: bool) {
    println!("{} {criterion}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion failed: {criterion}");
}

fn a002212_fixture() -> Vec<BigInt> {
    include_str!("../data/a002212.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.trim().parse().expect("fixture holds integers"))
        .collect()
}

#[test]
fn criterion_01_enumeration_fidelity() {
    let a = gf_a(20);
    let small = [1i64, 1, 3, 10, 36, 137, 543, 2219];
    let mut ok = small
        .iter()
        .enumerate()
        .all(|(i, e)| a.coeff(i + 1).unwrap() == &rat(*e));
    let fixture = a002212_fixture();
    assert_eq!(fixture.len(), 20);
    ok &= fixture
        .iter()
        .enumerate()
        .all(|(i, e)| a.coeff(i + 1).unwrap() == &Rat::from_integer(e.clone()));
    report("1: [z^n]A matches the series and the A002212 fixture (n <= 20)", ok);
}

#[test]
fn criterion_02_brute_force_equivalence() {
    let order = 11;
    let a = gf_a(order);
    let g_rec = gf_g(order, GRoute::Recursive);
    let g_exp = gf_g(order, GRoute::Explicit);
    let mut ok = true;
    for n in 1..=order {
        let trees = generate(n).unwrap();
        ok &= a.coeff(n).unwrap() == &Rat::from_integer(trees.len().into());
        let oracle = deepest_polynomial(n).unwrap();
        for (route, g) in [("recursive", &g_rec), ("explicit", &g_exp)] {
            let coeff = g.coeff(n).unwrap();
            let same = oracle
                .iter()
                .enumerate()
                .all(|(d, c)| coeff.coeff(d) == Rat::from_integer(c.clone()));
            ok &= same;
            assert!(same, "G {route} route disagrees with brute force at n = {n}");
        }
    }
    report("2: brute-force equivalence for n <= 11 (A and both G routes)", ok);
}

#[test]
fn criterion_03_z4_census() {
    let g = gf_g(4, GRoute::Recursive);
    let c4 = g.coeff(4).unwrap();
    let ok = c4.coeff(0).is_zero()
        && c4.coeff(1) == rat(7)
        && c4.coeff(2) == rat(2)
        && c4.coeff(3) == rat(1)
        && c4.coeff(4).is_zero();
    report("3: [z^4]G = 7t + 2t^2 + t^3", ok);
}

#[test]
fn criterion_04_theorem1_cross_route() {
    let ok = gf_g(30, GRoute::Recursive) == gf_g(30, GRoute::Explicit);
    report("4: G recursive = G explicit to order 30", ok);
}

#[test]
fn criterion_05_derivative_triple_agreement() {
    let a = gf_dg(30, DGRoute::Derivative);
    let b = gf_dg(30, DGRoute::ClosedSum);
    let c = gf_dg(30, DGRoute::LevelRecursion);
    let mut ok = a == b && a == c && a.is_integral();
    let expected = [1i64, 1, 4, 14];
    for (i, e) in expected.iter().enumerate() {
        ok &= a.coeff(i + 1).unwrap() == &rat(*e);
    }
    report("5: three dG routes agree to order 30, integer, 1,1,4,14 at n=1..4", ok);
}

#[test]
fn criterion_06_identity_suite() {
    let rep = identity_suite(60);
    for check in &rep.checks {
        assert!(check.pass, "identity failed at order 60: {}", check.name);
    }
    report("6: all nine kernel identities hold exactly to order 60", rep.all_pass());
}

#[test]
fn criterion_07_bijection_integrity() {
    let mut ok = true;
    for n in 1..=10 {
        for t in generate(n).unwrap() {
            let dec = tree_to_decorated(&t);
            ok &= dec.steps().len() == 2 * (n - 1);
            ok &= dec.red_count() == t.stats().marks;
            ok &= decorated_to_tree(&dec).as_ref() == Ok(&t);
            let skew = decorated_to_skew(&dec).expect("image is a valid skew path");
            ok &= validate_skew(&skew) == SkewDiagnostics::Valid;
            ok &= skew_to_decorated(&skew).as_ref() == Ok(&dec);
            assert!(ok, "bijection violation at {}", t.encode());
        }
    }
    report("7: bijections are mutually inverse and valid for n <= 10", ok);
}

#[test]
fn criterion_08_ratio_convergence() {
    let table = ratio_table(200);
    let row4 = &table[3];
    let mut ok = row4.exact_ratio() == Rat::new(BigInt::from(7), BigInt::from(5));
    let gap = limit_gap_check(&table, 20, 200).unwrap();
    ok &= gap.shrinks;
    ok &= gap.gap_large >= Rat::zero() && gap.gap_small >= Rat::zero();
    report(
        "8: exact ratios approach 5/3 (gap(200) < gap(20)) and ratio(4) = 7/5",
        ok,
    );
}

// Calibration log for the c1 tolerance (criterion 9). Oracle run with
// 40-digit arithmetic and 200 000-term direct summation, quadratic fit in
// (1 - v):
//   points (0.99, 0.995, 0.999)   -> c1 = -0.3333342089, error 8.76e-7
//   points (0.998, 0.9985, 0.999) -> c1 = -0.3333334198, error 8.64e-8
// The f64 evaluation with eps = 1e-14 reproduces c1 at the same points
// to within 1e-9 of the oracle value, so the achieved error is ~8.8e-7;
// the tolerance below leaves a 5x margin.
const C1_TOLERANCE: f64 = 5e-6;

#[test]
fn criterion_09_local_expansion_fit() {
    // self-fit on the exact model polynomial recovers -1/3 to machine precision
    let points = [0.99, 0.995, 0.999];
    let model: Vec<f64> = points
        .iter()
        .map(|&v| {
            let x = 1.0 - v;
            -x / 3.0 - 2.0 * x * x / 27.0
        })
        .collect();
    let (_, c1_model, _) = fit_quadratic(&points, &model).unwrap();
    let mut ok = (c1_model + 1.0 / 3.0).abs() < 1e-9;

    let (c0, c1, c2) = singular_coefficient_fit(&points).unwrap();
    println!("  fit on F: c0 = {c0:.9}, c1 = {c1:.9}, c2 = {c2:.9}");
    ok &= (c1 + 1.0 / 3.0).abs() < C1_TOLERANCE;
    report("9: singular fit recovers c1 = -1/3 within calibrated tolerance", ok);
}

#[test]
fn criterion_10_height_bounded_counts() {
    let order = 9;
    let a = gf_a(order);
    // brute-force counts by (n, height)
    let mut by_height = vec![vec![0usize; 10]; 10]; // [n][h] = count of height exactly h
    for n in 1..=order {
        for t in generate(n).unwrap() {
            by_height[n][t.stats().height] += 1;
        }
    }
    let mut ok = true;
    for h in 1..=9 {
        let ah = gf_a_h(h, order, Route::Recursive);
        for n in 1..=order {
            let count: usize = (1..=h.min(n)).map(|k| by_height[n][k]).sum();
            ok &= ah.coeff(n).unwrap() == &Rat::from_integer(count.into());
            if n <= h {
                ok &= ah.coeff(n).unwrap() == a.coeff(n).unwrap();
            }
            assert!(ok, "A_h mismatch at h = {h}, n = {n}");
        }
    }
    report("10: [z^n]A_h = brute-force height counts (n, h <= 9)", ok);
}
