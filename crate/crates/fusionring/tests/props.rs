//! Property tests: parser round-trips, Weyl-fold involutivity, tensor
//! commutativity, and exact phase arithmetic, on randomly drawn small
//! inputs.

use fusionring::affine::AffineType;
use fusionring::config::Config;
use fusionring::level::LevelData;
use fusionring::root_system::RootSystem;
use proptest::prelude::*;

/// Names covering every family and both twists at small ranks.
fn type_names() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "A1~1", "A2~1", "A3~1", "B3~1", "C2~1", "C3~1", "D4~1", "F4~1",
        "G2~1", "A4~2", "A6~2", "A5~2", "D4~2", "D5~2", "E6~2", "D4~3",
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn type_display_parses_back(name in type_names()) {
        let t = AffineType::parse(name).unwrap();
        let round = AffineType::parse(&t.to_string()).unwrap();
        prop_assert_eq!(t, round);
        // the verbose spelling parses to the same type
        let verbose = format!(
            "{}_{}^({})",
            t.family, t.subscript, t.twist
        );
        prop_assert_eq!(AffineType::parse(&verbose).unwrap(), t);
    }

    #[test]
    fn folding_a_reflected_weight_recovers_it(
        name in type_names(),
        coords in prop::collection::vec(1i64..4, 4),
        word in prop::collection::vec(0usize..4, 0..8),
    ) {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        // strictly dominant x, reflected by an arbitrary short word, must
        // fold back to x with the parity of the word's net sign
        let x: Vec<i64> = coords.into_iter().take(rs.rank).collect();
        let mut y = x.clone();
        let mut reflections = 0i64;
        for s in word {
            let i = s % rs.rank;
            let before = y.clone();
            rs.simple_reflect_weight(&mut y, i);
            if y != before {
                reflections += 1;
            }
        }
        let fold = rs.fold_dominant(&y);
        prop_assert!(!fold.on_wall);
        prop_assert_eq!(fold.weight, x);
        // parity is (-1)^(length of the reduced word); reflections counted
        // above may not be reduced, but parity mod 2 is invariant
        prop_assert_eq!(fold.parity, if reflections % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn tensor_product_is_commutative(
        name in prop::sample::select(vec!["A2~1", "C2~1", "G2~1"]),
        a in 0i64..3, b in 0i64..3, c in 0i64..3, d in 0i64..3,
    ) {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        let cfg = Config::default();
        let lam = vec![a, b];
        let mu = vec![c, d];
        let left = rs.tensor_decompose(&lam, &mu, cfg.group_cap).unwrap();
        let right = rs.tensor_decompose(&mu, &lam, cfg.group_cap).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn integer_phase_numerators_match_exact_phases(
        name in type_names(),
        k in 1i64..4,
    ) {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        let cfg = Config::default();
        let ld = LevelData::new(&rs, k, &cfg).unwrap();
        // the integer numerators reproduce every exact phase
        for (t, point) in ld.points.iter().enumerate() {
            for (j, q) in point.phases.iter().enumerate() {
                let num = ld.nums[t][j];
                prop_assert_eq!(
                    fusionring::root_system::Rat::new(num, ld.phase_denom),
                    *q
                );
            }
            // and the phase of a weight is the integer dot product mod 1
            for (w_idx, w) in ld.weights.iter().enumerate().take(3) {
                let via_index = ld.phase_index(t, w);
                let exact = point.eval(w);
                let denom = ld.phase_denom;
                prop_assert_eq!(
                    fusionring::root_system::Rat::new(via_index, denom),
                    exact,
                    "type {} point {} weight {}", name, t, w_idx
                );
            }
        }
    }
}
