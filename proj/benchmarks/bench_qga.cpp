// Microbenchmarks for the hot paths: parsing, quotient construction,
// grading lattices, Smith reduction, and automorphism enumeration.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "qga/algebra.hpp"
#include "qga/autos.hpp"
#include "qga/gradings.hpp"
#include "qga/parser.hpp"
#include "qga/presentation.hpp"
#include "qga/snf.hpp"

namespace {

using namespace qga;

const std::string kTwoVertexText =
    "algebra bench_line\n"
    "vertices: u, v\n"
    "arrows: x : u -> v, y : v -> u\n"
    "relations: x*y; y*x\n";

void bm_parse(benchmark::State& state) {
  for (auto _ : state) {
    Presentation p = parse_presentation(kTwoVertexText);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bm_parse);

void bm_serialize(benchmark::State& state) {
  Presentation p = builtin("q1e", {2});
  for (auto _ : state) {
    std::string s = serialize(p);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_serialize);

void bm_build_quotient(benchmark::State& state) {
  Presentation p = builtin("q1e", {state.range(0)});
  for (auto _ : state) {
    QuotientAlgebra a = build_quotient(p);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(bm_build_quotient)->Arg(2)->Arg(3)->Arg(4);

void bm_multiply(benchmark::State& state) {
  Presentation p = builtin("q1e", {2});
  QuotientAlgebra a = build_quotient(p);
  Element x, y;
  for (const auto& w : a.basis()) {
    x.add_term(p.field, w, p.field.one());
    y.add_term(p.field, w, p.field.from_integer(2));
  }
  for (auto _ : state) {
    Element z = a.multiply(x, y);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(bm_multiply);

void bm_grading_lattice(benchmark::State& state) {
  Presentation p = builtin("q1e", {state.range(0)});
  for (auto _ : state) {
    GradingLattice lat = grading_lattice(p);
    benchmark::DoNotOptimize(lat);
  }
}
BENCHMARK(bm_grading_lattice)->Arg(2)->Arg(8);

void bm_smith_normal_form(benchmark::State& state) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-9, 9);
  const int n = static_cast<int>(state.range(0));
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  }
  for (auto _ : state) {
    SNFResult s = smith_normal_form(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8);

void bm_enumerate_automorphisms(benchmark::State& state) {
  Presentation p = builtin("truncated_poly", {3});
  Field k = Field::gf4();
  p.field = k;
  for (auto& rel : p.relations) {
    Element re;
    for (const auto& [w, c] : rel.terms) {
      re.add_term(k, w, k.from_rational(c.v));
    }
    rel = re;
  }
  QuotientAlgebra a = build_quotient(p);
  for (auto _ : state) {
    EnumerationResult res = enumerate_automorphisms(a);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(bm_enumerate_automorphisms);

}  // namespace

BENCHMARK_MAIN();
