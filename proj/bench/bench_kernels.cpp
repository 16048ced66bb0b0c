/* Copyright 2026 The wildgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <bit>

#include "generators.hpp"
#include "wildgraph/kernels.hpp"

using namespace wildgraph;

namespace {

std::vector<StokesCircle> circles(std::size_t n) {
  testing::Gen g(n);
  return g.irregular_class(n, 1, true, 6, 4).circles();
}

// Highest differing bit: acute isosceles, so the scan visits every triple.
IntMatrix ultrametric(std::size_t n) {
  IntMatrix B(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) B[i][j] = B[j][i] = static_cast<std::int64_t>(std::bit_width(i ^ j));
  }
  return B;
}

// Prime quadrilateral plus pendant vertices: no decoration exists, so the
// search covers the whole box.
IntMatrix infeasible(std::size_t n) {
  IntMatrix B(n, std::vector<std::int64_t>(n, 1));
  IntMatrix quad{{0, 2, 11, 7}, {2, 0, 3, 13}, {11, 3, 0, 5}, {7, 13, 5, 0}};
  for (std::size_t i = 0; i < n; ++i) B[i][i] = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) B[i][j] = quad[i][j];
  }
  return B;
}

void BM_MultiplicitySerial(benchmark::State& state) {
  auto cs = circles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplicity_matrix_serial(cs));
}

void BM_MultiplicityOmp(benchmark::State& state) {
  auto cs = circles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplicity_matrix_omp(cs));
}

void BM_TriangleScanSerial(benchmark::State& state) {
  auto B = ultrametric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_non_ultrametric_serial(B));
}

void BM_TriangleScanOmp(benchmark::State& state) {
  auto B = ultrametric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_non_ultrametric_omp(B));
}

void BM_BoundedSearchSerial(benchmark::State& state) {
  auto B = infeasible(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bounded_decoration_search_serial(B, 6));
}

void BM_BoundedSearchOmp(benchmark::State& state) {
  auto B = infeasible(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bounded_decoration_search_omp(B, 6));
}

}  // namespace

BENCHMARK(BM_MultiplicitySerial)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicityOmp)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriangleScanSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriangleScanOmp)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundedSearchSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundedSearchOmp)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
