use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use hrnorm_core::fixtures::data_dir;
use hrnorm_core::{expand_cardinal, MorphTag, Normalizer, RunConfig};

fn corpus_texts() -> Vec<(String, String)> {
    let dir = data_dir().join("corpus/texts");
    let mut texts: Vec<_> = std::fs::read_dir(dir)
        .expect("corpus texts")
        .map(|e| {
            let path = e.expect("dir entry").path();
            let id = path.file_stem().unwrap().to_string_lossy().into_owned();
            (id, std::fs::read_to_string(&path).expect("utf-8 text"))
        })
        .collect();
    texts.sort();
    texts
}

fn normalize_corpus(c: &mut Criterion) {
    let normalizer = Normalizer::new(&RunConfig::default()).expect("bundled resources");
    let texts = corpus_texts();
    let all: String = texts.iter().map(|(_, t)| t.as_str()).collect::<Vec<_>>().join("\n\n");

    let mut group = c.benchmark_group("normalize");
    group.throughput(Throughput::Bytes(all.len() as u64));
    group.bench_function("whole corpus", |b| b.iter(|| normalizer.normalize(black_box(&all)).unwrap()));
    group.bench_function("segment only", |b| b.iter(|| normalizer.segment(black_box(&all)).token_count()));
    group.finish();

    let mut group = c.benchmark_group("normalize text");
    for (id, text) in texts.iter().filter(|(id, _)| id.ends_with("-01")) {
        group.throughput(Throughput::Bytes(text.len() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(id), text, |b, t| {
            b.iter(|| normalizer.normalize(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn spell_numbers(c: &mut Criterion) {
    let mut group = c.benchmark_group("cardinal");
    for n in [7u64, 1_848, 210_837, 999_999_999_999_999] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| expand_cardinal(black_box(n), MorphTag::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, normalize_corpus, spell_numbers);
criterion_main!(benches);
