#include <benchmark/benchmark.h>

#include "singcurve/contact/intersection.hpp"
#include "singcurve/exact/cyclotomic.hpp"
#include "singcurve/invariants/characteristic.hpp"
#include "singcurve/invariants/semigroup.hpp"
#include "singcurve/knots/alexander.hpp"
#include "singcurve/puiseux/branch.hpp"
#include "singcurve/puiseux/newton.hpp"

using namespace singcurve;

namespace {

exact::BiPoly quartic() {
  // x^4 + 3 x^2 y + x^2 - y^3
  exact::BiPoly f;
  f.add_term(4, 0, exact::FieldElem(1L));
  f.add_term(2, 1, exact::FieldElem(3L));
  f.add_term(2, 0, exact::FieldElem(1L));
  f.add_term(0, 3, exact::FieldElem(-1L));
  return f;
}

exact::UniPoly mono(int k) {
  std::vector<exact::FieldElem> c(k + 1, exact::FieldElem(0L));
  c[k] = exact::FieldElem(1L);
  return exact::UniPoly(c);
}

void BM_Expand(benchmark::State& st) {
  auto f = quartic();
  for (auto _ : st) {
    exact::FieldContext ctx;
    benchmark::DoNotOptimize(puiseux::expand(ctx, f));
  }
}
BENCHMARK(BM_Expand);

void BM_Characteristic(benchmark::State& st) {
  auto y = mono(6) + mono(12).scaled(exact::FieldElem(9L)) + mono(27).scaled(exact::FieldElem(2L)) -
           mono(81).scaled(exact::FieldElem(4L)) + mono(83);
  for (auto _ : st) {
    exact::FieldContext ctx;
    auto b = puiseux::from_parametrization(ctx, mono(6), y);
    benchmark::DoNotOptimize(invariants::characteristic(ctx, b));
  }
}
BENCHMARK(BM_Characteristic);

void BM_Intersection(benchmark::State& st) {
  for (auto _ : st) {
    exact::FieldContext ctx;
    auto a = puiseux::from_parametrization(ctx, mono(2), mono(3));
    auto b = puiseux::from_parametrization(ctx, mono(4), mono(6) + mono(7));
    benchmark::DoNotOptimize(contact::intersection(ctx, a, b));
  }
}
BENCHMARK(BM_Intersection);

void BM_Cyclotomic(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(exact::cyclotomic_int(d));
}
BENCHMARK(BM_Cyclotomic)->Arg(60)->Arg(210)->Arg(720);

void BM_Alexander(benchmark::State& st) {
  auto c = invariants::make_char(12, {18, 20, 21});
  for (auto _ : st) {
    auto s = knots::alexander_symbol(c);
    benchmark::DoNotOptimize(knots::expand_symbol(s));
  }
}
BENCHMARK(BM_Alexander);

void BM_Semigroup(benchmark::State& st) {
  auto c = invariants::make_char(12, {18, 20, 121});
  for (auto _ : st) benchmark::DoNotOptimize(invariants::semigroup_of(c));
}
BENCHMARK(BM_Semigroup);

}  // namespace

BENCHMARK_MAIN();
