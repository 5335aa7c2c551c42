// Copyright 2026 The cmep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <exception>

#include "cmep/eulerian.hpp"
#include "cmep/identities.hpp"
#include "cmep/real_roots.hpp"

namespace {

using namespace cmep;

MultisetSpec bench_spec(int n) { return MultisetSpec::uniform(std::vector<int>(static_cast<std::size_t>(n), 2), 2); }

void BM_Enumeration(benchmark::State& state) {
  const auto spec = bench_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_by_enumeration(spec));
}
BENCHMARK(BM_Enumeration)->DenseRange(1, 3);

void BM_Transform(benchmark::State& state) {
  const auto spec = bench_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_by_transform(spec));
}
BENCHMARK(BM_Transform)->DenseRange(1, 6);

void BM_VerifyIdentity(benchmark::State& state) {
  const auto kind = all_identity_kinds()[static_cast<std::size_t>(state.range(0))];
  auto spec = MultisetSpec::uniform({2, 1}, 2);
  try {
    check_kind_applies(kind, spec);
  } catch (const std::exception&) {
    spec = MultisetSpec::uniform({2, 1}, 1);
  }
  state.SetLabel(to_string(kind));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(kind, spec, TruncationCaps{3, 12}));
}
BENCHMARK(BM_VerifyIdentity)->DenseRange(0, static_cast<int>(all_identity_kinds().size()) - 1);

void BM_RootCertificate(benchmark::State& state) {
  const auto p = eulerian_by_transform(bench_spec(static_cast<int>(state.range(0)))).poly;
  for (auto _ : state) benchmark::DoNotOptimize(real_root_certificate(p));
}
BENCHMARK(BM_RootCertificate)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
