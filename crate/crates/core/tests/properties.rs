mod common;

use std::collections::BTreeSet;

use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;
use supercup_core::*;

use common::*;

// Match arcs in a random admissible order; must agree with the stack matcher.
fn random_order_arcs(w: &SuperWeight, seed: u64) -> Vec<Arc> {
    let mut rng = rng(seed);
    let d = weight_to_diagram(w);
    let Some((lo, _)) = d.extent() else { return vec![] };
    let cores = (d.crosses.len() + d.circles.len()) as i64;
    let hi = d.vees.iter().next_back().map_or(lo, |v| v + 2 * d.vees.len() as i64 + cores + 1);
    let mut free: Vec<i64> = (lo..=hi).filter(|p| !d.is_core(*p)).collect();
    let mut arcs = vec![];
    loop {
        let cand: Vec<usize> = (0..free.len().saturating_sub(1))
            .filter(|&i| d.vees.contains(&free[i]) && !d.vees.contains(&free[i + 1]))
            .collect();
        if cand.is_empty() {
            break;
        }
        let i = cand[rng.gen_range(0..cand.len())];
        arcs.push(Arc { left: free[i], right: free[i + 1] });
        free.drain(i..=i + 1);
    }
    arcs.sort();
    arcs
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (0usize..4, 1usize..4).prop_map(|(r, n)| (n + r, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weight_diagram_round_trip(seed: u64, m in 0usize..5, n in 0usize..5) {
        let w = any_weight(&mut rng(seed), m, n, 5);
        let d = weight_to_diagram(&w);
        prop_assert_eq!(d.vees.len() + d.crosses.len(), m);
        prop_assert_eq!(d.vees.len() + d.circles.len(), n);
        prop_assert_eq!(diagram_to_weight(&d).unwrap(), w);
    }

    #[test]
    fn ber_translates_diagram(seed: u64, m in 0usize..4, n in 0usize..4, k in -3i64..4) {
        let w = any_weight(&mut rng(seed), m, n, 4);
        let (d, e) = (weight_to_diagram(&w), weight_to_diagram(&w.twist(k)));
        prop_assert_eq!(e.vees, d.vees.iter().map(|p| p + k).collect::<BTreeSet<_>>());
        prop_assert_eq!(atypicality(&w), atypicality(&w.twist(k)));
    }

    #[test]
    fn cup_matching_is_confluent(seed: u64, (m, n) in shape(), order: u64) {
        let w = max_atypical(&mut rng(seed), m, n, 6);
        prop_assert_eq!(cup_diagram(&w).arcs, random_order_arcs(&w, order));
    }

    #[test]
    fn dual_is_involution(seed: u64, m in 0usize..4, n in 0usize..4) {
        let w = any_weight(&mut rng(seed), m, n, 4);
        let d = dual(&w);
        prop_assert_eq!(atypicality(&d), atypicality(&w));
        prop_assert_eq!(dual(&d), w);
    }

    #[test]
    fn forest_round_trip_and_mirror(seed: u64, m in 1usize..5, n in 1usize..4, k in 0usize..4) {
        let k = k.min(m).min(n);
        let w = with_atypicality(&mut rng(seed), m, n, k, 5);
        let cd = cup_diagram(&w);
        let f = to_spaced_forest(&cd);
        prop_assert_eq!(&from_spaced_forest(&f).unwrap(), &cd);
        prop_assert_eq!(forest_mirror(&forest_mirror(&f)), f.clone());
        prop_assert_eq!(to_spaced_forest(&cup_diagram(&dual(&w))), forest_mirror(&f));
    }

    #[test]
    fn ds_has_one_summand_per_sector(seed: u64, (m, n) in shape()) {
        let w = max_atypical(&mut rng(seed), m, n, 6);
        let out = ds(&w).unwrap();
        prop_assert_eq!(out.len(), sectors(&cup_diagram(&w)).len());
        for s in &out {
            prop_assert!(is_maximal_atypical(&s.weight));
            prop_assert_eq!(block_label(&s.weight).crosses, block_label(&w).crosses);
            prop_assert_eq!(s.parity_shift, (parity(&w) + parity(&s.weight)) % 2);
        }
    }

    #[test]
    fn ds_commutes_with_ber(seed: u64, (m, n) in shape(), k in -2i64..3) {
        let w = max_atypical(&mut rng(seed), m, n, 5);
        let a: Vec<_> = ds(&w).unwrap().into_iter().map(|s| s.weight.twist(k)).collect();
        let mut b: Vec<_> = ds(&w.twist(k)).unwrap().into_iter().map(|s| s.weight).collect();
        let mut a = a;
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn pi_shift_laws(seed: u64, r in 1usize..4, n in 1usize..4) {
        let w = max_atypical(&mut rng(seed), n + r, n, 5);
        let s = pi_shift(&w).unwrap();
        prop_assert_eq!(pi_unshift(&s).unwrap(), w.clone());
        prop_assert_eq!(eta0_reduce(&s).unwrap(), eta0_reduce(&w).unwrap().twist(-1));
        prop_assert_eq!(block_label(&s), block_label(&w));
        let (x, _) = stabilize(&w).unwrap();
        prop_assert!(is_negatively_stable(&x));
    }

    #[test]
    fn splice_reassembles(seed: u64, (m, n) in shape()) {
        let w = max_atypical(&mut rng(seed), m, n, 6);
        let s = splice(&w).unwrap();
        prop_assert_eq!(s.reassemble().unwrap(), w.clone());
        let im = image(&w).unwrap();
        prop_assert_eq!(&im.principal, &eta0_reduce(&w).unwrap());
        prop_assert_eq!(compose_image(&im.classical, &im.principal).unwrap(), w);
    }

    #[test]
    fn sdim_matches_paths(seed: u64, (m, n) in shape()) {
        let w = max_atypical(&mut rng(seed), m, n, 6);
        let p = ds_paths(&w).unwrap();
        let core = ClassicalWeight(block_label(&w).classical_core());
        prop_assert_eq!(sdim(&w).unwrap().abs(), num_bigint::BigInt::from(p.count.clone() * weyl_dim(&core)));
        let (x, _) = stabilize(&w).or_else(|_| Ok::<_, Error>((w.clone(), 0))).unwrap();
        prop_assert_eq!(ds_paths(&eta0_reduce(&x).unwrap()).unwrap().count, p.count);
    }

    #[test]
    fn negligible_sdim_vanishes(seed: u64, n in 2usize..4, r in 0usize..3) {
        let mut g = rng(seed);
        let k = g.gen_range(0..n);
        let w = with_atypicality(&mut g, n + r, n, k, 5);
        prop_assert!(is_negligible_irreducible(&w));
        prop_assert_eq!(sdim(&w).unwrap(), 0.into());
    }

    #[test]
    fn lr_matches_oracle(seed: u64, r in 1usize..4) {
        let mut g = rng(seed);
        let (a, b) = (classical(&mut g, r, -2, 3), classical(&mut g, r, -2, 3));
        prop_assert_eq!(lr_coefficients(&a, &b).unwrap(), schur_product_oracle(&a, &b).unwrap());
    }

    #[test]
    fn lr_preserves_dimension(seed: u64, r in 1usize..5) {
        let mut g = rng(seed);
        let (a, b) = (classical(&mut g, r, -3, 3), classical(&mut g, r, -3, 3));
        let out = lr_coefficients(&a, &b).unwrap();
        let total: num_bigint::BigUint = out.iter().map(|(nu, c)| weyl_dim(nu) * *c).sum();
        prop_assert_eq!(total, weyl_dim(&a) * weyl_dim(&b));
        prop_assert_eq!(out, lr_coefficients(&b, &a).unwrap());
    }

    #[test]
    fn ground_state_fusion_conserves_sdim(seed: u64, r in 0usize..3, n in 1usize..3, l1 in 0u32..3, l2 in 0u32..3) {
        let mut g = rng(seed);
        let (m, c1, c2) = (n + r, classical(&mut g, r, -2, 3), classical(&mut g, r, -2, 3));
        let crosses = |c: &ClassicalWeight| c.0.iter().enumerate().map(|(j, x)| x - j as i64).collect();
        let b = |c| BlockLabel { m, n, crosses: crosses(c), circles: BTreeSet::new() };
        let w1 = ground_state(&b(&c1), l1, m, n).unwrap();
        let w2 = ground_state(&b(&c2), l2, m, n).unwrap();
        let out = tensor_ground_states(&w1, &w2).unwrap();
        let lhs = sdim(&w1).unwrap().abs() * sdim(&w2).unwrap().abs();
        prop_assert_eq!(num_bigint::BigInt::from(out.dimension().unwrap()), lhs);
    }

    #[test]
    fn translation_e_undoes_f(seed: u64, m in 1usize..4, n in 1usize..4, i in -4i64..4) {
        let w = any_weight(&mut rng(seed), m, n, 4);
        let d = weight_to_diagram(&w);
        let vee_wedge = d.label(i) == Label::Vee && d.label(i + 1) == Label::Wedge;
        if let TranslationResult::Irreducible(y) = translate_f(i, &w) {
            if !vee_wedge {
                prop_assert_eq!(translate_e(i, &y), TranslationResult::Irreducible(w));
            } else {
                prop_assert_eq!(atypicality(&y) + 1, atypicality(&w));
            }
        }
    }

    #[test]
    fn kac_window_is_large_enough(seed: u64, m in 1usize..4, n in 1usize..4) {
        let mut g = rng(seed);
        let k = g.gen_range(0..=m.min(n));
        let w = with_atypicality(&mut g, m, n, k, 4);
        let f = kac_composition_factors(&w);
        prop_assert!(f.contains(&w));
        if let Some((lo, hi)) = kac_window(&w) {
            let width = hi - lo;
            prop_assert_eq!(kac_composition_factors_in(&w, lo - width - 2, hi + width + 2), f);
        }
    }
}

#[test]
fn kac_count_is_power_of_two_for_separated_cups() {
    let mut g = rng(7);
    for _ in 0..300 {
        let n = g.gen_range(1..4);
        let w = max_atypical(&mut g, n, n, 6);
        let cd = cup_diagram(&w);
        let f = to_spaced_forest(&cd);
        if sectors(&cd).len() == cd.arcs.len() && f.gaps.iter().all(|g| *g > 0) {
            assert_eq!(kac_composition_factors(&w).len(), 1 << n, "{w}");
        }
    }
}

