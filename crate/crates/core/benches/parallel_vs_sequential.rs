use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cqg_core::algebra::Presentation;
use cqg_core::cocycle::solve_cocycles_with;
use cqg_core::functional::{default_word_pool, Functional};
use cqg_core::par::{self, Execution};
use cqg_core::representation::Representation;
use cqg_core::sampling;

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn cocycle_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_cocycles");
    group.sample_size(10);
    for p in [Presentation::u_plus(3).unwrap(), Presentation::o_plus(4).unwrap()] {
        let rep = Representation::counit(&p, 2);
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, p.to_string()), &rep, |b, rep| {
                b.iter(|| solve_cocycles_with(exec, &p, rep).unwrap())
            });
        }
    }
    group.finish();
}

fn word_evaluation(c: &mut Criterion) {
    let p = Presentation::u_plus(3).unwrap();
    let eta = cqg_core::cocycle::Cocycle::gaussian_scalar(&p, &sampling::random_selfadjoint(&mut sampling::rng(1), 3, 4)).unwrap();
    let psi = Functional::schurmann(&eta, None).unwrap();
    let pool = default_word_pool(3, 3);
    let mut group = c.benchmark_group("evaluate_pool");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| par::map_with(exec, &pool, |w| psi.evaluate_word(w))));
    }
    group.finish();
}

criterion_group!(benches, cocycle_solve, word_evaluation);
criterion_main!(benches);
