//! Sequential against rayon-parallel execution of the heavy kernels.
//! Without the `parallel` feature both rows run the sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skeinkit::cli::fixtures::{load_fixtures, BUNDLED};
use skeinkit::jones::{colored_jones_chebyshev, for_colors};
use skeinkit::par::Exec;
use skeinkit::skein::state_sum::DEFAULT_STATE_SUM_CAP;
use skeinkit::skein::{bracket_state_sum, SweepConfig};
use skeinkit::Diagram;

fn fixture(name: &str) -> Diagram {
    let set = load_fixtures(BUNDLED.as_bytes()).unwrap();
    set.records.iter().find(|r| r.name == name).unwrap().diagram().unwrap()
}

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn state_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("state_sum");
    g.sample_size(10);
    let double = fixture("4_1").whitehead_double(-1, true).unwrap();
    for (label, d) in [("8_19", fixture("8_19")), ("W-(4_1)", double)] {
        for (name, exec) in EXECS {
            g.bench_with_input(BenchmarkId::new(name, label), &d, |b, d| {
                b.iter(|| bracket_state_sum(d, DEFAULT_STATE_SUM_CAP, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("chebyshev_sweep");
    g.sample_size(10);
    for label in ["6_2", "8_18"] {
        let d = fixture(label);
        for (name, exec) in EXECS {
            let cfg = SweepConfig {
                exec,
                ..SweepConfig::default()
            };
            g.bench_with_input(BenchmarkId::new(name, format!("{label} n=4")), &d, |b, d| {
                b.iter(|| colored_jones_chebyshev(d, 4, &cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn colours(c: &mut Criterion) {
    let mut g = c.benchmark_group("colours_2_to_4");
    g.sample_size(10);
    let d = fixture("7_4");
    for (name, exec) in EXECS {
        let cfg = SweepConfig {
            exec,
            ..SweepConfig::default()
        };
        g.bench_function(name, |b| {
            b.iter(|| for_colors(exec, &[2, 3, 4], |n| colored_jones_chebyshev(&d, n, &cfg)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, state_sum, sweep, colours);
criterion_main!(benches);
