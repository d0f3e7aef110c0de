use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sheaf_strata::blowup::{blowdown, fiber_consistency, Variant};
use sheaf_strata::builders::{
    hilbert_burch, hilbert_burch_minors, ideal_generators, same_span, sextic_sheaf,
    twisted_ideal_sheaf, x5_normal_form, x6_normal_form, PointSet,
};
use sheaf_strata::cohomology::cohomology_table;
use sheaf_strata::forms::{int, span_dimension, Form};
use sheaf_strata::gradedmat::{compose, determinant, dualize, Presentation};
use sheaf_strata::io::{presentation_from_json, presentation_to_json};
use sheaf_strata::strata::{
    classify, classify_with_report, sample, sample_batch, verify_w, CheckOptions, StratumId,
    WStatus,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn f(s: &str) -> Form {
    Form::parse(s, None).unwrap()
}

fn six() -> PointSet {
    let pts = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, 2, 3],
        [3, 1, 2],
    ];
    PointSet::new(pts.iter().map(|p| p.map(int)).collect()).unwrap()
}

fn sextic_through(z: &PointSet, seed: u64) -> Form {
    let mut r = rng(seed);
    ideal_generators(z, 3).iter().fold(Form::zero(6), |acc, g| {
        acc.add(&g.mul(&Form::random(3, &mut r, 3))).unwrap()
    })
}

#[test]
fn hilbert_burch_on_six_points() {
    let z = six();
    let (g, m) = hilbert_burch(&z).unwrap();
    assert_eq!(g.len(), 4);
    let row = Presentation::new(vec![0; 4], vec![3], vec![g.clone()]).unwrap();
    assert!(compose(&row, &m).unwrap().is_zero());
    let minors = hilbert_burch_minors(&m);
    assert_eq!(span_dimension(&minors).unwrap(), 4);
    assert!(same_span(&minors, &g).unwrap());
}

#[test]
fn ideal_sheaf_dualizes_into_the_dual_stratum() {
    let z = six();
    let p = twisted_ideal_sheaf(&z, &sextic_through(&z, 1)).unwrap();
    assert_eq!(classify(&p).unwrap(), StratumId::X3);
    assert!(verify_w(&p, StratumId::X3).unwrap().passed());
    let d = dualize(&p, 1);
    assert_eq!(classify(&d).unwrap(), StratumId::X3D);
    assert_eq!(cohomology_table(&d).unwrap(), StratumId::X3D.triple());
}

#[test]
fn normal_form_examples() {
    let mut r = rng(1);
    let x5 = x5_normal_form(&f("Y*Z"), &f("X"), &f("X*Y"), &f("Z"), None, &mut r, 5).unwrap();
    assert_eq!(classify(&x5).unwrap(), StratumId::X5);
    assert!(verify_w(&x5, StratumId::X5).unwrap().passed());

    let x6 = x6_normal_form(
        &[int(1), int(0), int(0)],
        &[int(0), int(0), int(1)],
        None,
        &mut r,
        5,
    )
    .unwrap();
    assert_eq!(classify(&x6).unwrap(), StratumId::X6);
    assert!(verify_w(&x6, StratumId::X6).unwrap().passed());
}

#[test]
fn reducible_sextic_is_x7() {
    let p = sextic_sheaf(&f("X*Y^5")).unwrap();
    assert_eq!(classify(&p).unwrap(), StratumId::X7);
    assert_eq!(determinant(&p).unwrap(), f("X*Y^5"));
    let smooth = sextic_sheaf(&f("X^6+Y^6+Z^6")).unwrap();
    assert_eq!(classify(&smooth).unwrap(), StratumId::X7);
}

#[test]
fn batches_are_deterministic() {
    for s in [StratumId::X0, StratumId::X4, StratumId::X7] {
        let a = sample_batch(s, 4, 99, 5).unwrap();
        let b = sample_batch(s, 4, 99, 5).unwrap();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
        assert_ne!(a, sample_batch(s, 4, 100, 5).unwrap());
    }
    assert_eq!(
        sample(StratumId::X2, &mut rng(5), 5).unwrap(),
        sample(StratumId::X2, &mut rng(5), 5).unwrap()
    );
}

#[test]
fn json_round_trip_preserves_classification() {
    let mut r = rng(6);
    for s in StratumId::ALL {
        let p = sample(s, &mut r, 5).unwrap();
        let back = presentation_from_json(&presentation_to_json(&p)).unwrap();
        assert_eq!(back, p);
        assert_eq!(classify(&back).unwrap(), s);
    }
}

#[test]
fn reports_are_stable_across_runs() {
    let p = sample(StratumId::X1, &mut rng(7), 5).unwrap();
    let opts = CheckOptions::default();
    let a = classify_with_report(&p, &opts).unwrap();
    assert_eq!(a, classify_with_report(&p, &opts).unwrap());
    assert_eq!(a.stratum, StratumId::X1);
    assert!(matches!(
        a.status(),
        WStatus::Pass | WStatus::ProbabilisticPass
    ));
}

#[test]
fn blowdown_of_samples() {
    let mut r = rng(8);
    let x5 = sample(StratumId::X5, &mut r, 5).unwrap();
    let (image, c) = blowdown(&x5, Variant::Seven).unwrap();
    if !num_traits::Zero::is_zero(&c) {
        assert!(StratumId::X4.matches_shape(&image));
        assert!(fiber_consistency(&x5, Variant::Seven).unwrap().consistent);
    }
    let x1 = sample(StratumId::X1, &mut r, 5).unwrap();
    let (image, _) = blowdown(&x1, Variant::Ten).unwrap();
    assert!(StratumId::X0.matches_shape(&image));
}
