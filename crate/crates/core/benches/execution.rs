use std::hint::black_box;

use coloredjones::braid::BraidWord;
use coloredjones::skein::kauffman_bracket;
use coloredjones::verma::word_trace;
use coloredjones::{colored_jones, Execution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn jones(c: &mut Criterion) {
    let mut group = c.benchmark_group("colored_jones");
    group.sample_size(10);
    let cases = [
        ("figure-eight N=3", BraidWord::from_signed(3, &[1, -2, 1, -2]).unwrap(), 3),
        ("5_2 N=3", BraidWord::from_signed(3, &[1, 1, 1, 2, -1, 2]).unwrap(), 3),
        ("trefoil N=6", BraidWord::from_signed(2, &[1, 1, 1]).unwrap(), 6),
    ];
    for (name, w, color) in &cases {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), w, |b, w| {
                b.iter(|| colored_jones(black_box(w), *color, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn block_trace(c: &mut Criterion) {
    let mut group = c.benchmark_group("word_trace");
    group.sample_size(10);
    let w = BraidWord::from_signed(4, &[1, -2, 3, 1, -2, 3]).unwrap();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "n=4 r=5"), |b| b.iter(|| word_trace(black_box(&w), 5, exec).unwrap()));
    }
    group.finish();
}

fn bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("kauffman_bracket");
    group.sample_size(10);
    let w = BraidWord::from_signed(3, &[1, -2, 1, -2, 1, -2, 1, -2, 1, 1, -2, 1, 2, 2, -1, 2]).unwrap();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "16 crossings"), |b| {
            b.iter(|| kauffman_bracket(black_box(&w), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, jones, block_trace, bracket);
criterion_main!(benches);
