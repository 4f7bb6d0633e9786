#include <benchmark/benchmark.h>

#include "invar/gbasis.hpp"
#include "invar/hilbert.hpp"
#include "invar/nakajima.hpp"

using namespace invar;

namespace {

GroupTable shift_group(std::uint32_t p, std::size_t m) {
  auto k = field_create(p);
  const std::size_t n = 2 * m;
  std::vector<Coeff> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  for (std::size_t i = 0; i < m; ++i) e[(m + i) * n + i] = 1;
  return group_closure(std::vector{GroupElement(k, n, e)});
}

std::vector<GroupElement> order27_gens() {
  auto k = field_create(3);
  return {GroupElement(k, linalg::Dense{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 1}}),
          GroupElement(k, linalg::Dense{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}})};
}

void BM_PolyMul(benchmark::State& state) {
  auto r = Ring::create(field_create(static_cast<std::uint32_t>(state.range(0))), 4);
  auto f = parse_polynomial(r, "(x1 + 2*x2 + x3 - x4)^6");
  auto g = parse_polynomial(r, "(x1*x2 - x3 + x4^2)^4");
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(101);

void BM_Groebner(benchmark::State& state) {
  auto r = Ring::create(field_create(7), 4);
  std::vector<Polynomial> ideal{parse_polynomial(r, "x1^3 - x2*x3*x4 + x1^2*x4"),
                                parse_polynomial(r, "x2^3 + x1*x3^2 - x4^3"),
                                parse_polynomial(r, "x3^3 - x1*x2*x4 + x1^2*x3"), parse_polynomial(r, "x4^3 + x1*x2*x3")};
  for (auto _ : state) benchmark::DoNotOptimize(groebner(r, ideal));
}
BENCHMARK(BM_Groebner);

void BM_Closure(benchmark::State& state) {
  const auto gens = order27_gens();
  for (auto _ : state) benchmark::DoNotOptimize(group_closure(gens));
}
BENCHMARK(BM_Closure);

void BM_Invariants(benchmark::State& state) {
  const auto G = group_closure(order27_gens());
  auto r = Ring::create(G.field(), 4);
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants_of_degree(r, G, d));
}
BENCHMARK(BM_Invariants)->DenseRange(3, 9, 3);

void BM_Bruteforce(benchmark::State& state) {
  const auto G = shift_group(static_cast<std::uint32_t>(state.range(0)), 2);
  auto r = Ring::create(G.field(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_ideal_bruteforce(r, G));
}
BENCHMARK(BM_Bruteforce)->Arg(2)->Arg(3)->Arg(5);

void BM_Constructive(benchmark::State& state) {
  const auto G = shift_group(static_cast<std::uint32_t>(state.range(0)), 2);
  auto r = Ring::create(G.field(), 4);
  const auto s = find_sequence(G);
  ConstructiveOptions opts;
  opts.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(ci_generators(r, G, *s, opts));
}
BENCHMARK(BM_Constructive)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
