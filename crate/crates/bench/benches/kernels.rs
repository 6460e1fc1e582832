use std::collections::BTreeSet;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use supercup_core::*;

fn w(m: usize, n: usize, t: &[i64], b: &[i64]) -> SuperWeight {
    SuperWeight::new(m, n, t.to_vec(), b.to_vec()).unwrap()
}

fn lr(c: &mut Criterion) {
    let mut g = c.benchmark_group("lr_coefficients");
    for r in [3usize, 5, 7] {
        let a = ClassicalWeight((0..r as i64).rev().map(|i| 2 * i + 1).collect());
        let b = ClassicalWeight((0..r as i64).rev().collect());
        g.bench_with_input(BenchmarkId::from_parameter(r), &(a, b), |bn, (a, b)| {
            bn.iter(|| lr_coefficients(black_box(a), black_box(b)).unwrap())
        });
    }
    g.finish();
}

fn paths(c: &mut Criterion) {
    let mut g = c.benchmark_group("ds_paths");
    for n in [3usize, 5, 7] {
        // Unnested cups: n! paths.
        let top: Vec<i64> = (0..n as i64).map(|i| 2 * (n as i64 - i)).collect();
        let bottom: Vec<i64> = top.iter().rev().map(|x| -x).collect();
        let x = w(n, n, &top, &bottom);
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |bn, x| bn.iter(|| ds_paths(black_box(x)).unwrap()));
    }
    g.finish();
}

fn kac(c: &mut Criterion) {
    let mut g = c.benchmark_group("kac_composition_factors");
    for n in [2usize, 3, 4] {
        let top: Vec<i64> = (0..n as i64).map(|i| 2 * (n as i64 - i)).collect();
        let bottom: Vec<i64> = top.iter().rev().map(|x| -x).collect();
        let x = w(n, n, &top, &bottom);
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |bn, x| {
            bn.iter(|| kac_composition_factors(black_box(x)))
        });
    }
    g.finish();
}

fn fusion(c: &mut Criterion) {
    let a = w(6, 3, &[3, 2, 1, -2, -3, -4], &[4, 3, 2]);
    let b = w(6, 3, &[4, 2, 1, 0, -1, -2], &[2, 1, 0]);
    let spec = PrincipalFusionSpec { family: GroupFamily::GSp, degree: 6, twist: 1, realization: Realization::Standard };
    c.bench_function("tensor_mod_negligible/gl63", |bn| {
        bn.iter(|| tensor_mod_negligible(black_box(&a), black_box(&b), Some(&spec), Some(&spec)).unwrap())
    });
    let block = BlockLabel { m: 5, n: 3, crosses: [2, 0].into(), circles: BTreeSet::new() };
    let x = ground_state(&block, 2, 5, 3).unwrap();
    let y = ground_state(&block, 1, 5, 3).unwrap();
    c.bench_function("tensor_ground_states/gl53", |bn| {
        bn.iter(|| tensor_ground_states(black_box(&x), black_box(&y)).unwrap())
    });
}

criterion_group!(benches, lr, paths, kac, fusion);
criterion_main!(benches);
