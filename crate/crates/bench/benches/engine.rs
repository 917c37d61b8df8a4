use bqkz_core::cocycle::{connection_matrix, symbolic_t, ExactEval, LaurentEval};
use bqkz_core::hcsolver::{solve_gauged, NumericParams, PhiEvaluator};
use bqkz_core::macpoly::{macdonald_e, q_lambda};
use bqkz_core::weyl::TorusMonomialPoint;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64 as C64;

fn cocycle(c: &mut Criterion) {
    let mut g = c.benchmark_group("connection matrix");
    for n in [2usize, 3, 4] {
        let t = TorusMonomialPoint::from_exponents(&(0..n as i64).collect::<Vec<_>>(), &(0..n as i64).map(|i| 3 * i).collect::<Vec<_>>());
        let y = TorusMonomialPoint::from_exponents(&vec![1; n], &(0..n as i64).map(|i| -3 * i).collect::<Vec<_>>());
        let lam: Vec<i64> = (0..n as i64).rev().collect();
        g.bench_with_input(BenchmarkId::new("exact rho", n), &n, |b, _| {
            b.iter(|| connection_matrix(&ExactEval::default(), &lam, &vec![0; n], &t, &y).unwrap())
        });
    }
    g.bench_function("laurent rho, N = 3", |b| {
        let gamma = TorusMonomialPoint::q_k_delta(&[2, 1, 0], -1);
        b.iter(|| connection_matrix(&LaurentEval::default(), &[0, 0, 0], &[-2, -1, 0], &symbolic_t(3), &gamma).unwrap())
    });
    g.finish();
}

fn macdonald(c: &mut Criterion) {
    let mut g = c.benchmark_group("macdonald");
    g.sample_size(10);
    for lam in [vec![2i64, 1, 0], vec![3, 1, 0], vec![2, 1, 1, 0]] {
        g.bench_with_input(BenchmarkId::new("Q_lambda", format!("{lam:?}")), &lam, |b, l| b.iter(|| q_lambda(l).unwrap()));
        g.bench_with_input(BenchmarkId::new("E_lambda", format!("{lam:?}")), &lam, |b, l| b.iter(|| macdonald_e(l).unwrap()));
    }
    g.finish();
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    g.sample_size(10);
    for (n, d) in [(2usize, 4u32), (2, 6), (3, 2)] {
        g.bench_with_input(BenchmarkId::new("solve", format!("N={n} D={d}")), &(n, d), |b, &(n, d)| b.iter(|| solve_gauged(n, d).unwrap()));
    }
    let sol = solve_gauged(2, 8).unwrap();
    let ev = PhiEvaluator::from_exact(&sol.series, 2, NumericParams::new(C64::new(0.3, 0.0), C64::new(0.7, 0.0), C64::new(0.9, 0.1)));
    let t = [C64::new(1.0, 0.1), C64::new(0.7, 0.3)];
    let y = [C64::new(0.5, 0.1), C64::new(0.9, -0.2)];
    g.bench_function("phi with continuation, N = 2, D = 8", |b| b.iter(|| ev.phi(&t, &y).unwrap()));
    g.finish();
}

criterion_group!(benches, cocycle, macdonald, series);
criterion_main!(benches);
