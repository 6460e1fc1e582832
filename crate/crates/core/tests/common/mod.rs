//! Random weights for property tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use supercup_core::{diagram_to_weight, ClassicalWeight, SuperWeight, WeightDiagram};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn distinct(rng: &mut StdRng, pool: &[i64], k: usize) -> BTreeSet<i64> {
    pool.choose_multiple(rng, k).copied().collect()
}

/// Maximal atypical weight of GL(m|n), m >= n, with symbols in `[-spread, spread]`.
pub fn max_atypical(rng: &mut StdRng, m: usize, n: usize, spread: i64) -> SuperWeight {
    let pool: Vec<i64> = (-spread..=spread).collect();
    let all = distinct(rng, &pool, m);
    let mut v: Vec<i64> = all.into_iter().collect();
    v.shuffle(rng);
    let d = WeightDiagram {
        m,
        n,
        vees: v[..n].iter().copied().collect(),
        crosses: v[n..].iter().copied().collect(),
        circles: BTreeSet::new(),
    };
    diagram_to_weight(&d).unwrap()
}

/// Weight of GL(m|n) with atypicality `k`.
pub fn with_atypicality(rng: &mut StdRng, m: usize, n: usize, k: usize, spread: i64) -> SuperWeight {
    let pool: Vec<i64> = (-spread..=spread).collect();
    let mut v: Vec<i64> = distinct(rng, &pool, m + n - k).into_iter().collect();
    v.shuffle(rng);
    let d = WeightDiagram {
        m,
        n,
        vees: v[..k].iter().copied().collect(),
        crosses: v[k..m].iter().copied().collect(),
        circles: v[m..].iter().copied().collect(),
    };
    diagram_to_weight(&d).unwrap()
}

fn decreasing(rng: &mut StdRng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Arbitrary dominant weight.
pub fn any_weight(rng: &mut StdRng, m: usize, n: usize, spread: i64) -> SuperWeight {
    SuperWeight::new(m, n, decreasing(rng, m, -spread, spread), decreasing(rng, n, -spread, spread))
        .unwrap()
}

pub fn classical(rng: &mut StdRng, r: usize, lo: i64, hi: i64) -> ClassicalWeight {
    ClassicalWeight(decreasing(rng, r, lo, hi))
}
