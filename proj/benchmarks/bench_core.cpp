// Microbenchmarks for the hot paths of orbit enumeration: free-word
// reduction, cyclotomic multiplication and inversion, canonical forms, and
// small breadth-first orbit closures.

#include <benchmark/benchmark.h>

#include <random>

#include "mcgorbit/classify.hpp"
#include "mcgorbit/cyclo.hpp"
#include "mcgorbit/orbit.hpp"
#include "mcgorbit/reps.hpp"
#include "mcgorbit/words.hpp"

using namespace mcgorbit;

namespace {

std::vector<Letter> random_letters(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Letter> raw;
  raw.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int kind = static_cast<int>(rng() % 3);
    const int index = static_cast<int>(rng() % 2) + 1;
    const int sign = rng() % 2 ? 1 : -1;
    switch (kind) {
      case 0: raw.push_back(alpha(index, sign)); break;
      case 1: raw.push_back(beta(index, sign)); break;
      default: raw.push_back(gamma(index, sign)); break;
    }
  }
  return raw;
}

AffineRep mu_c_rep(const FieldPtr& f) {
  AffineRep rep{1, 1, f, {}};
  const CycloElt mu = CycloElt::zeta_pow(f, 1);
  const CycloElt one = CycloElt::one(f);
  rep.values = {{mu, CycloElt::zero(f)},
                {one, -(mu - one).inverse()},
                {one, one}};
  return rep;
}

void BM_word_reduce(benchmark::State& state) {
  const auto raw = random_letters(static_cast<std::size_t>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(raw));
  }
}
BENCHMARK(BM_word_reduce)->Arg(64)->Arg(1024);

void BM_cyclo_mul(benchmark::State& state) {
  const FieldPtr f = make_field(state.range(0));
  CycloElt a = CycloElt::zero(f);
  for (std::int64_t j = 0; j < f->degree(); ++j) {
    a = a + CycloElt::from_rational(f, mpq_class(j + 2, 3)) * CycloElt::zeta_pow(f, j);
  }
  CycloElt b = a + CycloElt::one(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_cyclo_mul)->Arg(4)->Arg(12)->Arg(36);

void BM_cyclo_inverse(benchmark::State& state) {
  const FieldPtr f = make_field(state.range(0));
  CycloElt a = CycloElt::one(f);
  for (std::int64_t j = 0; j < f->degree(); ++j) {
    a = a + CycloElt::from_rational(f, mpq_class(2 * j + 1, 5)) * CycloElt::zeta_pow(f, j);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_cyclo_inverse)->Arg(4)->Arg(12)->Arg(36);

void BM_canon_affine(benchmark::State& state) {
  const FieldPtr f = make_field(4);
  const AffineRep rep = conjugate_rep(
      mu_c_rep(f), {CycloElt::from_int(f, 3), CycloElt::from_rational(f, mpq_class("5/7"))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(canon_affine(rep));
  }
}
BENCHMARK(BM_canon_affine);

void BM_orbit_mu_c(benchmark::State& state) {
  const FieldPtr f = make_field(state.range(0));
  const AffineRep rep = mu_c_rep(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(rep, OrbitGroup::Pure, 100000));
  }
}
BENCHMARK(BM_orbit_mu_c)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_classify_mu_c(benchmark::State& state) {
  const FieldPtr f = make_field(4);
  const AffineRep rep = mu_c_rep(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(rep));
  }
}
BENCHMARK(BM_classify_mu_c);

}  // namespace

BENCHMARK_MAIN();
