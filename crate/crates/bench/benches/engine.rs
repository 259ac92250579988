use criterion::{black_box, criterion_group, criterion_main, Criterion};
use maxsusy_core::builders::{osp_k_4, osp_r_2c_real};
use maxsusy_core::contraction::{run, ContractionParams};
use maxsusy_core::superalg::{json, super_jacobi_residual};

fn jacobi(c: &mut Criterion) {
    let osp = osp_k_4(4, false);
    c.bench_function("jacobi osp(4;4)", |b| b.iter(|| super_jacobi_residual(black_box(&osp))));
    let real = osp_r_2c_real(3);
    c.bench_function("jacobi osp_R(3;2|C)", |b| {
        b.iter(|| super_jacobi_residual(black_box(&real)))
    });
}

fn contraction(c: &mut Criterion) {
    let mut g = c.benchmark_group("contract");
    g.sample_size(10);
    for (n, k) in [(1, 2), (2, 1), (3, 0)] {
        let p = ContractionParams::new(n, k);
        g.bench_function(format!("N={n} k={k}"), |b| b.iter(|| run(black_box(&p)).unwrap()));
    }
    g.finish();
}

fn serialization(c: &mut Criterion) {
    let alg = run(&ContractionParams::new(2, 2)).unwrap().limit;
    let text = json::to_json_string(&alg);
    c.bench_function("json round trip N=2 k=2", |b| {
        b.iter(|| json::from_json_str(black_box(&text)).unwrap())
    });
}

criterion_group!(benches, jacobi, contraction, serialization);
criterion_main!(benches);
