use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sl2vir::characters::{ch_admissible_sub, ch_minimal};
use sl2vir::params::Sign;
use sl2vir::qseries::{fs_inverse, fs_mul, poch};
use sl2vir::rat::int;
use sl2vir::theta::{theta_prod, theta_sum, ThetaSpec};
use sl2vir::verifier::verify_admissible;

fn series(c: &mut Criterion) {
    let qq = poch(&int(1), 0, &int(1), &int(60)).unwrap();
    c.bench_function("fs_mul/(q;q)^2 to 60", |b| b.iter(|| fs_mul(black_box(&qq), black_box(&qq))));
    c.bench_function("fs_inverse/(q;q) to 60", |b| b.iter(|| fs_inverse(black_box(&qq)).unwrap()));
}

fn theta(c: &mut Criterion) {
    let cut = int(40);
    c.bench_function("theta_sum/t11 to 40", |b| b.iter(|| theta_sum(&ThetaSpec::t11(), black_box(&cut))));
    c.bench_function("theta_prod/t11 to 40", |b| b.iter(|| theta_prod(&ThetaSpec::t11(), black_box(&cut)).unwrap()));
}

fn characters(c: &mut Criterion) {
    let cut = int(30);
    c.bench_function("ch_admissible_sub/(5,2,1,1) to 30", |b| {
        b.iter(|| ch_admissible_sub(5, 2, 1, 1, Sign::Plus, black_box(&cut)).unwrap())
    });
    c.bench_function("ch_minimal/(5,6,1,2) to 30", |b| b.iter(|| ch_minimal(5, 6, 1, 2, black_box(&cut)).unwrap()));
    c.bench_function("verify_admissible/(7,2,2,1) at 30", |b| {
        b.iter(|| verify_admissible(7, 2, 2, 1, Sign::Minus, black_box(30)))
    });
}

criterion_group!(benches, series, theta, characters);
criterion_main!(benches);
