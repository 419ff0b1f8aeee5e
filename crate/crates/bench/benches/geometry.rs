use criterion::{criterion_group, criterion_main, Criterion};
use lexlift::{chirotope_of, in_sphere, orientation, Point};
use lexlift_bench::moment_curve;

fn bench_orientation(c: &mut Criterion) {
    let config = moment_curve(4, 5);
    let refs: Vec<&Point> = config.iter().map(|lp| &lp.point).collect();
    c.bench_function("orientation_r4", |b| b.iter(|| orientation(&refs).unwrap()));
}

fn bench_in_sphere(c: &mut Criterion) {
    let config = moment_curve(3, 5);
    let refs: Vec<&Point> = config.iter().map(|lp| &lp.point).collect();
    c.bench_function("in_sphere_r3", |b| b.iter(|| in_sphere(&refs[..4], refs[4]).unwrap()));
}

fn bench_chirotope(c: &mut Criterion) {
    let config = moment_curve(2, 7);
    c.bench_function("chirotope_r2_7pts", |b| b.iter(|| chirotope_of(&config).unwrap()));
}

criterion_group!(benches, bench_orientation, bench_in_sphere, bench_chirotope);
criterion_main!(benches);
