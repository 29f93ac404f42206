/*
   Copyright 2026 The polymod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "polymod/linalg.hpp"
#include "polymod/nonclosed.hpp"

using namespace polymod;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = CoeffQ(Rational(num(gen), den(gen)), Rational(num(gen), den(gen)));
    return m;
}

void row_reduce_bench(benchmark::State& state, Exec exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(n, n + 4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m, exec));
    state.SetComplexityN(state.range(0));
}

void sweep_bench(benchmark::State& state, Exec exec) {
    for (auto _ : state) benchmark::DoNotOptimize(nonclosed::sweep(2, static_cast<int>(state.range(0)), exec));
}

}  // namespace

BENCHMARK_CAPTURE(row_reduce_bench, serial, Exec::serial)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(row_reduce_bench, parallel, Exec::parallel)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, serial, Exec::serial)->Arg(15)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, parallel, Exec::parallel)->Arg(15)->Arg(28)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
