mod common;

use bpa_integrity::apen::{chebyshev, correlation_count, embed, phi};
use bpa_integrity::{
    apen, logical_degrees, parse_bpa, slide, sweep_simplex, ui, FocalElement, FrameOfDiscernment,
    MassFunction,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_case(seed: u64, nodes: usize) -> (ChaCha8Rng, MassFunction) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bpa = common::random_bpa(&mut rng, nodes);
    (rng, bpa)
}

/// Same BPA with hypotheses renamed and the frame and assignments shuffled.
fn relabel_and_shuffle(bpa: &MassFunction, rng: &mut ChaCha8Rng) -> MassFunction {
    let old = bpa.frame().hypotheses();
    let mut renamed: Vec<String> = old.iter().map(|h| format!("q_{h}")).collect();
    renamed.shuffle(rng);
    let rename = |h: &String| {
        let pos = old.iter().position(|o| o == h).unwrap();
        renamed[pos].clone()
    };
    let mut frame_order = renamed.clone();
    frame_order.shuffle(rng);
    let mut entries: Vec<(FocalElement, f64)> = bpa
        .assignments()
        .iter()
        .map(|(e, m)| (FocalElement::new(e.members().iter().map(rename)), *m))
        .collect();
    entries.shuffle(rng);
    MassFunction::new(FrameOfDiscernment::new(frame_order).unwrap(), entries).unwrap()
}

proptest! {
    #[test]
    fn embed_length(u in prop::collection::vec(-5.0f64..5.0, 1..40), m in 1usize..40) {
        prop_assume!(m <= u.len());
        prop_assert_eq!(embed(&u, m).unwrap().len(), u.len() - m + 1);
    }

    #[test]
    fn chebyshev_is_a_metric(
        (a, b, c) in (1usize..8).prop_flat_map(|n| (
            prop::collection::vec(-10.0f64..10.0, n),
            prop::collection::vec(-10.0f64..10.0, n),
            prop::collection::vec(-10.0f64..10.0, n),
        ))
    ) {
        let ab = chebyshev(&a, &b).unwrap();
        prop_assert!(ab >= 0.0);
        prop_assert_eq!(ab, chebyshev(&b, &a).unwrap());
        prop_assert_eq!(chebyshev(&a, &a).unwrap(), 0.0);
        prop_assert_eq!(ab == 0.0, a == b);
        let ac = chebyshev(&a, &c).unwrap();
        let cb = chebyshev(&c, &b).unwrap();
        prop_assert!(ab <= ac + cb + 1e-12);
    }

    #[test]
    fn correlation_count_permutation_invariant(
        u in prop::collection::vec(0.0f64..1.0, 3..24),
        r in 0.01f64..0.5,
        seed in any::<u64>(),
    ) {
        let windows = embed(&u, 2).unwrap();
        let mut order: Vec<usize> = (0..windows.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let shuffled: Vec<&[f64]> = order.iter().map(|&k| windows[k]).collect();
        for (new_i, &old_i) in order.iter().enumerate() {
            prop_assert_eq!(
                correlation_count(&shuffled, new_i, r),
                correlation_count(&windows, old_i, r)
            );
        }
    }

    #[test]
    fn self_match_floor_and_phi_sign(
        u in prop::collection::vec(0.0f64..1.0, 3..32),
        m in 1usize..3,
        r in 1e-6f64..1.0,
    ) {
        let windows = embed(&u, m).unwrap();
        for i in 0..windows.len() {
            prop_assert!(correlation_count(&windows, i, r) >= 1.0 / windows.len() as f64);
        }
        prop_assert!(phi(&u, m, r).unwrap() >= 0.0);
    }

    #[test]
    fn apen_shift_invariant(
        u in prop::collection::vec(0.0f64..1.0, 4..32),
        shift in prop::sample::select(vec![-2.0, -0.5, 1.0, 4.0]),
        r in 0.05f64..0.3,
    ) {
        // power-of-two-friendly shifts keep differences representable;
        // compare at a tolerance that survives rounding of the shifted values
        let shifted: Vec<f64> = u.iter().map(|v| v + shift).collect();
        let margin_ok = {
            let w = embed(&u, 2).unwrap();
            w.iter().all(|a| w.iter().all(|b| (chebyshev(a, b).unwrap() - r).abs() > 1e-9))
                && {
                    let w3 = embed(&u, 3).unwrap();
                    w3.iter().all(|a| w3.iter().all(|b| (chebyshev(a, b).unwrap() - r).abs() > 1e-9))
                }
        };
        prop_assume!(margin_ok);
        let a = apen(&u, 2, r).unwrap();
        let b = apen(&shifted, 2, r).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn slide_is_sorted_permutation(seed in any::<u64>(), nodes in 2usize..=16) {
        let (_, bpa) = random_case(seed, nodes);
        let s = slide(&bpa);
        prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
        let mut degrees: Vec<f64> = logical_degrees(&bpa).entries().iter().map(|(_, d)| *d).collect();
        degrees.sort_by(|a, b| b.total_cmp(a));
        prop_assert_eq!(s.values(), degrees.as_slice());
        prop_assert_eq!(s.len(), nodes);
        prop_assert!((s.values().iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ui_invariant_under_relabel_and_reorder(seed in any::<u64>(), nodes in 3usize..=16) {
        let (mut rng, bpa) = random_case(seed, nodes);
        let other = relabel_and_shuffle(&bpa, &mut rng);
        let a = ui(&bpa).unwrap();
        let b = ui(&other).unwrap();
        prop_assert_eq!(a.ui, b.ui);
        prop_assert_eq!(a.signed_apen, b.signed_apen);
        prop_assert!(a.ui >= 0.0);
    }

    #[test]
    fn ui_is_deterministic(seed in any::<u64>(), nodes in 3usize..=16) {
        let (_, bpa) = random_case(seed, nodes);
        prop_assert_eq!(ui(&bpa).unwrap(), ui(&bpa).unwrap());
    }

    #[test]
    fn bpa_document_round_trip(seed in any::<u64>(), nodes in 2usize..=16) {
        let (_, bpa) = random_case(seed, nodes);
        prop_assert_eq!(parse_bpa(&bpa.to_json()).unwrap(), bpa);
    }

    #[test]
    fn mass_of_is_total_over_subsets(seed in any::<u64>(), nodes in 2usize..=12) {
        let (_, bpa) = random_case(seed, nodes);
        let frame = bpa.frame().hypotheses().to_vec();
        for bits in 0..(1usize << frame.len()) {
            let members: Vec<&String> =
                (0..frame.len()).filter(|b| bits & (1 << b) != 0).map(|b| &frame[b]).collect();
            let e = FocalElement::new(members.iter().map(|s| s.as_str()));
            let declared = bpa.assignments().iter().find(|(d, _)| d.members() == e.members());
            let got = bpa.mass_of(&e).unwrap();
            match declared {
                Some((_, m)) => prop_assert_eq!(got, *m),
                None => prop_assert_eq!(got, 0.0),
            }
        }
    }
}

#[test]
fn identical_mass_multisets_share_ui() {
    // x2 over {A,B,C} and the relabelled {∅:0.7, A, B, AB} over {A,B}
    let other = common::load("x_unassigned.json");
    assert_eq!(ui(&common::x2()).unwrap().ui, ui(&other).unwrap().ui);
}

#[test]
fn sweep_symmetry_at_resolution_200() {
    let recs = sweep_simplex(200).unwrap();
    let k = 200usize;
    // records are x-major: row i starts at offset(i)
    let offset = |i: usize| i * (k + 1) - i * (i.saturating_sub(1)) / 2;
    for i in 0..=k {
        for j in 0..=(k - i) {
            let a = &recs[offset(i) + j];
            let b = &recs[offset(j) + i];
            assert_eq!((a.x, a.y), (i as f64 / k as f64, j as f64 / k as f64));
            assert_eq!(a.ui, b.ui, "asymmetry at ({}, {})", a.x, a.y);
            assert!(a.ui.unwrap().is_finite());
        }
    }
}
