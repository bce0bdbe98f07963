// Copyright 2026 The fpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fpmine::apriori::{frequent_one, join, mine_with, prune, SupportThreshold};
use fpmine::counting::{count_support, Execution};
use fpmine::synth::{generate, GenParams};
use fpmine::Fraction;

fn counting(c: &mut Criterion) {
    let params = GenParams::from_shape("T10I4D10K", 42).expect("valid shape");
    let db = generate(&params).expect("generator");
    let minsup: Fraction = "0.01".parse().unwrap();
    let t = SupportThreshold::from_relative(minsup, db.len()).unwrap();
    let l1 = frequent_one(&db, t);
    let c2 = prune(join(&l1), &l1);

    let mut group = c.benchmark_group("count_support_c2");
    group.sample_size(20);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| count_support(&db, &c2, exec))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("mine_t10i4d10k");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| mine_with(&db, t, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, counting);
criterion_main!(benches);
