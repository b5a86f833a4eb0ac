use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cotame_core::objects::{base_polys, phi, phi_prime, pi_map};
use cotame_core::pclass::{certify_image, random_class_element, ClassIndex};
use cotame_core::verify::lemma::numeric_instance;
use cotame_core::verify::{lookup, run_symbolic};
use cotame_core::Rational;

fn arithmetic(c: &mut Criterion) {
    let (f, r, g) = base_polys::<Rational>();
    c.bench_function("mul g*g*f*r", |b| {
        b.iter(|| &(&g * &g) * &(&f * black_box(&r)))
    });
    let u = Rational::new(3, 2);
    c.bench_function("exp flow", |b| b.iter(|| phi(black_box(&u))));
    c.bench_function("exp lifted flow", |b| b.iter(|| phi_prime(black_box(&u))));
}

fn classes(c: &mut Criterion) {
    let p = random_class_element(ClassIndex::new(4, 4), 7, 6).unwrap();
    let pi = pi_map::<Rational>();
    c.bench_function("pi on P(4,4)", |b| {
        b.iter(|| pi.apply(black_box(&p)).unwrap())
    });

    let (_, lift, u, _) = numeric_instance("L2.A", 1).unwrap();
    let psi = phi_prime(&u).compose(&lift).unwrap();
    let q = random_class_element(ClassIndex::new(3, 3), 7, 6).unwrap();
    c.bench_function("certify image P(3,3)", |b| {
        b.iter(|| certify_image(&psi, black_box(&q)).unwrap())
    });
}

fn cases(c: &mut Criterion) {
    let spec = lookup("L6.viii").unwrap().remove(0);
    let mut group = c.benchmark_group("cases");
    group.sample_size(10);
    group.bench_function("symbolic L6.viii", |b| {
        b.iter(|| run_symbolic(black_box(&spec)))
    });
    group.finish();
}

criterion_group!(benches, arithmetic, classes, cases);
criterion_main!(benches);
