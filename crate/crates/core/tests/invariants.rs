use proptest::prelude::*;
use shapekit::geom::{
    height_at, lemma34_bound, lemma34_witness, max_height_gap, omega, scaled_height, scaled_omega, scaled_unit_height,
    sup_profile_distance, HeightProfile,
};
use shapekit::oracles::{corner_height, verify_lemma15};
use shapekit::{lds, lis, schensted_shape, Permutation, YoungDiagram};

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n).prop_flat_map(|n| {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_zero_based(v).unwrap())
    })
}

fn diagram(max_n: usize) -> impl Strategy<Value = YoungDiagram> {
    perm(max_n).prop_map(|p| schensted_shape(&p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cycle_stats_are_class_functions(p in perm(40), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut r: Vec<u32> = (0..p.len() as u32).collect();
        r.shuffle(&mut rng);
        let r = Permutation::from_zero_based(r).unwrap();
        prop_assert_eq!(p.conjugate(&r).unwrap().cycle_stats(), p.cycle_stats());
    }

    #[test]
    fn fixed_points_of_square(p in perm(60)) {
        let s = p.cycle_stats();
        prop_assert_eq!(s.fixed_points_of_square, s.fixed_points + 2 * s.two_cycles);
        prop_assert_eq!(p.square().cycle_stats().fixed_points, s.fixed_points_of_square);
    }

    #[test]
    fn split_round_trips(p in perm(60)) {
        let split = p.remove_fixed_points();
        prop_assert_eq!(split.reduced.cycle_stats().fixed_points, 0);
        prop_assert_eq!(split.fixed_set.len() + split.reduced.len(), p.len());
        prop_assert_eq!(split.reconstruct().unwrap(), p);
    }

    #[test]
    fn shape_basics(p in perm(80)) {
        let d = schensted_shape(&p);
        prop_assert_eq!(d.size(), p.len());
        prop_assert_eq!(&schensted_shape(&p.inverse()), &d);
        prop_assert_eq!(&schensted_shape(&p.reversed()), &d.conjugate());
        prop_assert_eq!(lis(&p), d.first_part());
        prop_assert_eq!(lds(&p), d.num_rows());
        prop_assert_eq!(&d.conjugate().conjugate(), &d);
    }

    #[test]
    fn profile_area_and_parity(d in diagram(80)) {
        let profile = HeightProfile::new(d.clone());
        let (lo, hi) = profile.support();
        let mut area = 0;
        for t in lo - 3..=hi + 3 {
            let excess = profile.at(t) - t.abs();
            prop_assert!(excess >= 0 && excess % 2 == 0);
            prop_assert_eq!(profile.at(t), corner_height(&d, t));
            area += excess / 2;
        }
        prop_assert_eq!(area as usize, d.size());
        prop_assert_eq!(height_at(&d, hi + 1), hi + 1);
    }

    #[test]
    fn lemma34_holds_exactly(a in diagram(120), b in diagram(120)) {
        prop_assert!(lemma34_witness(&a, &b).is_some());
        prop_assert!(lemma34_bound(&a, &b) + 1e-9 >= sup_profile_distance(&a, &b));
        prop_assert_eq!(max_height_gap(&a, &b), max_height_gap(&b, &a));
    }

    #[test]
    fn lemma15_holds(p in perm(60)) {
        prop_assert!(verify_lemma15(&p).is_ok());
    }

    #[test]
    fn conventions_agree(d in diagram(200), s in -3.0f64..3.0) {
        let n = d.size().max(1);
        let profile = HeightProfile::new(d);
        let a = scaled_height(&profile, n, s);
        let b = scaled_unit_height(&profile, n, s);
        prop_assert!((a - b).abs() <= 1e-12, "{} vs {}", a, b);
    }

    #[test]
    fn omega_is_one_lipschitz(s in -3.0f64..3.0, h in -1.0f64..1.0, p in 0.0f64..1.0) {
        prop_assert!((omega(s + h) - omega(s)).abs() <= h.abs() + 1e-12);
        prop_assert!((scaled_omega(s + h, p) - scaled_omega(s, p)).abs() <= h.abs() + 1e-12);
        prop_assert!(omega(s) >= s.abs());
    }
}
