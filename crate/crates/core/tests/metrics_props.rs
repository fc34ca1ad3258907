use oscinfo::coupled::{steady_state_exponent, CoupledParams};
use oscinfo::gaussian::exponent_to_covariance;
use oscinfo::metrics::{
    circuit_depth, field_dominated_depth, gate_apply, mutual_information, pearson, synchronization, Gate,
};
use oscinfo::GaussianExponent;
use proptest::prelude::*;

fn steady(w1: f64, w2: f64, g: f64, wc: f64, wr: f64) -> GaussianExponent {
    steady_state_exponent(&CoupledParams::new(w1, w2, g, wc, wr).unwrap()).unwrap().0
}

#[test]
fn mutual_information_rises_and_synchronization_falls_with_coupling() {
    let gs: Vec<f64> = (0..=80).map(|k| 0.001 + 0.799 * k as f64 / 80.0).collect();
    let mut prev: Option<(f64, f64)> = None;
    for g in gs {
        let sigma = exponent_to_covariance(&steady(1.0, 1.0, g, 0.0, 1.0)).unwrap();
        let mi = mutual_information(&sigma).unwrap();
        let sc = synchronization(&sigma).unwrap();
        if let Some((mi0, sc0)) = prev {
            assert!(mi > mi0, "MI not increasing at g = {g}");
            assert!(sc <= sc0, "S_c increased at g = {g}");
        }
        prev = Some((mi, sc));
    }
}

#[test]
fn depth_is_sum_of_scalings_for_product_targets() {
    for (a1, a2, wr) in [(2.0, 3.5, 1.0), (1.3, 1.1, 0.9), (5.0, 1.0, 0.5)] {
        let target = GaussianExponent::real(a1, a2, 0.0).unwrap();
        let (e1, e2) = (0.5 * (a1 / wr).ln(), 0.5 * (a2 / wr).ln());
        let built = gate_apply(&gate_apply(&GaussianExponent::vacuum(wr), Gate::Scale(1), e1).unwrap(), Gate::Scale(2), e2).unwrap();
        assert!((built.a1 - target.a1).norm() < 1e-13 && (built.a2 - target.a2).norm() < 1e-13);
        assert!((circuit_depth(&target, wr).unwrap() - (e1 + e2)).abs() < 1e-13);
    }
}

#[test]
fn strong_field_suppresses_depth_to_log() {
    for wc in [60.0, 100.0, 300.0] {
        for (w1, w2, g, wr) in [(1.0, 1.2, 0.5, 1.0), (0.8, 1.5, 1.0, 1.2)] {
            let d = circuit_depth(&steady(w1, w2, g, wc, wr), wr).unwrap();
            let est = field_dominated_depth(wc, wr).unwrap();
            assert!((d - est).abs() / d < 0.05, "ω_c = {wc}: {d} vs {est}");
        }
    }
}

#[test]
fn uncoupled_reference_has_zero_depth_everywhere() {
    for w in [0.3, 1.0, 4.0] {
        let exp = steady(w, w, 0.0, 0.0, w);
        assert!(circuit_depth(&exp, w).unwrap().abs() < 1e-12);
    }
}

proptest! {
    #[test]
    fn pearson_is_bounded(a in prop::collection::vec(-100.0..100.0f64, 3..50), seed in 0u64..1000) {
        let b: Vec<f64> = a.iter().enumerate().map(|(i, x)| x * 0.37 + (i as f64 + seed as f64).sin() * 10.0).collect();
        if let Ok(r) = pearson(&a, &b) {
            prop_assert!(r.abs() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn product_states_have_no_mutual_information(a1 in 0.1..10.0f64, a2 in 0.1..10.0f64) {
        let sigma = exponent_to_covariance(&GaussianExponent::real(a1, a2, 0.0).unwrap()).unwrap();
        prop_assert_eq!(mutual_information(&sigma).unwrap(), 0.0);
    }
}
