#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "gridfary/pythagorean.h"

using namespace gridfary;

namespace {

// Independent oracle: collect primitive triples by sweeping generator
// pairs in the same (m, n, form) order the module is specified to use,
// but written from the definition, with no shared code.
std::vector<PythTriple> oracle_first_k(int k) {
  std::vector<PythTriple> out;
  for (long long m = 2; static_cast<int>(out.size()) < k; ++m) {
    for (long long n = 1; n < m && static_cast<int>(out.size()) < k; ++n) {
      long long x = m * m - n * n, y = 2 * m * n, ell = m * m + n * n;
      if (std::gcd(std::gcd(x, y), ell) != 1) continue;
      out.push_back({x, y, ell});
      if (static_cast<int>(out.size()) < k) out.push_back({y, x, ell});
    }
  }
  return out;
}

// Independent oracle: all primitive triples with every component <= limit,
// found by a plain coprime leg sweep (no generator formula involved).
std::set<std::tuple<long long, long long, long long>> oracle_leg_sweep(long long limit) {
  std::set<std::tuple<long long, long long, long long>> out;
  for (long long x = 1; x <= limit; ++x) {
    for (long long y = 1; y <= limit; ++y) {
      if (std::gcd(x, y) != 1) continue;
      uint64_t root = 0;
      if (!is_perfect_square(static_cast<uint128>(x) * x + static_cast<uint128>(y) * y, &root))
        continue;
      if (static_cast<long long>(root) <= limit) out.insert({x, y, static_cast<long long>(root)});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("euclid_triple evaluates the generator") {
  CHECK(euclid_triple({2, 1, TripleForm::Standard}) == PythTriple{3, 4, 5});
  CHECK(euclid_triple({2, 1, TripleForm::Mirrored}) == PythTriple{4, 3, 5});
  CHECK(euclid_triple({3, 1, TripleForm::Standard}) == PythTriple{8, 6, 10});
  CHECK_THROWS_AS(euclid_triple({1, 1, TripleForm::Standard}), std::invalid_argument);
  CHECK_THROWS_AS(euclid_triple({2, 0, TripleForm::Standard}), std::invalid_argument);
  CHECK_THROWS_AS(euclid_triple({1, 2, TripleForm::Standard}), std::invalid_argument);
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive({3, 4, 5}));
  CHECK_FALSE(is_primitive({8, 6, 10}));
  CHECK(is_primitive({5, 12, 13}));
}

TEST_CASE("first_primitive_triples matches frozen prefixes") {
  auto seq = first_primitive_triples(8);
  const std::vector<PythTriple> expected = {
      {3, 4, 5},  {4, 3, 5},  {5, 12, 13}, {12, 5, 13},
      {15, 8, 17}, {8, 15, 17}, {7, 24, 25}, {24, 7, 25},
  };
  CHECK(seq.triples == expected);
  CHECK(seq.params[0] == GeneratorParams{2, 1, TripleForm::Standard});
  CHECK(seq.params[1] == GeneratorParams{2, 1, TripleForm::Mirrored});
  CHECK(seq.params[2] == GeneratorParams{3, 2, TripleForm::Standard});

  auto one = first_primitive_triples(1);
  CHECK(one.triples == std::vector<PythTriple>{{3, 4, 5}});
  CHECK(one.params[0] == GeneratorParams{2, 1, TripleForm::Standard});
}

TEST_CASE("first_primitive_triples agrees with the sweep oracle") {
  const int k = 200;
  auto seq = first_primitive_triples(k);
  auto oracle = oracle_first_k(k);
  REQUIRE(seq.size() == k);
  for (int i = 0; i < k; ++i) CHECK(seq.triples[i] == oracle[i]);
}

TEST_CASE("generation-order soundness, primitivity and parity") {
  auto seq = first_primitive_triples(2000);
  for (int i = 0; i < seq.size(); ++i) {
    const auto& t = seq.triples[i];
    CHECK(t.x > 0);
    CHECK(t.y > 0);
    CHECK(static_cast<uint128>(t.x) * t.x + static_cast<uint128>(t.y) * t.y ==
          static_cast<uint128>(t.ell) * t.ell);
    CHECK(is_primitive(t));
    CHECK((t.x + t.y) % 2 == 1);  // exactly one leg odd
    CHECK(euclid_triple(seq.params[i]) == t);
  }
  // Strictly increasing generation key (m, n, form).
  for (int i = 1; i < seq.size(); ++i) {
    auto key = [](const GeneratorParams& p) {
      return std::tuple(p.m, p.n, p.form == TripleForm::Mirrored ? 1 : 0);
    };
    CHECK(key(seq.params[i - 1]) < key(seq.params[i]));
  }
}

TEST_CASE("completeness up to a component limit, both orientations") {
  const long long limit = 120;
  auto oracle = oracle_leg_sweep(limit);
  // Anything beyond generator value m with m^2 + 1 > limit has ell > limit.
  TripleEnumerator enumerator;
  std::set<std::tuple<long long, long long, long long>> produced;
  for (;;) {
    auto [t, params] = enumerator.next();
    if (params.m * params.m + 1 > limit) break;
    if (t.ell <= limit) produced.insert({t.x, t.y, t.ell});
  }
  CHECK(produced == oracle);
}

TEST_CASE("slope_compare is exact") {
  CHECK(slope_compare({4, 3, 5}, {3, 4, 5}) == std::strong_ordering::less);
  CHECK(slope_compare({3, 4, 5}, {3, 4, 5}) == std::strong_ordering::equal);
  CHECK(slope_compare({12, 5, 13}, {4, 3, 5}) == std::strong_ordering::less);
  CHECK(slope_compare({3, 4, 5}, {4, 3, 5}) == std::strong_ordering::greater);
  // Proportional triples compare equal.
  CHECK(slope_compare({3, 4, 5}, {6, 8, 10}) == std::strong_ordering::equal);
}

TEST_CASE("angle_sorted_prefix matches frozen orders") {
  CHECK(angle_sorted_prefix(1) == std::vector<PythTriple>{{3, 4, 5}});
  CHECK(angle_sorted_prefix(4) ==
        std::vector<PythTriple>{{12, 5, 13}, {4, 3, 5}, {3, 4, 5}, {5, 12, 13}});
  CHECK(angle_sorted_prefix(8) ==
        std::vector<PythTriple>{{24, 7, 25},
                                {12, 5, 13},
                                {15, 8, 17},
                                {4, 3, 5},
                                {3, 4, 5},
                                {8, 15, 17},
                                {5, 12, 13},
                                {7, 24, 25}});
}

TEST_CASE("angle order is strictly increasing and float-consistent") {
  auto sorted = angle_sorted_prefix(500);
  for (size_t i = 1; i < sorted.size(); ++i) {
    CHECK(slope_compare(sorted[i - 1], sorted[i]) == std::strong_ordering::less);
  }
  std::vector<PythTriple> by_float = first_primitive_triples(500).triples;
  std::sort(by_float.begin(), by_float.end(), [](const PythTriple& a, const PythTriple& b) {
    return atan2l(static_cast<long double>(a.y), static_cast<long double>(a.x)) <
           atan2l(static_cast<long double>(b.y), static_cast<long double>(b.x));
  });
  CHECK(by_float == sorted);
}

TEST_CASE("prefix of a sequence equals a fresh generation") {
  auto big = first_primitive_triples(64);
  auto cut = big.prefix(10);
  auto fresh = first_primitive_triples(10);
  CHECK(cut.triples == fresh.triples);
  CHECK(cut.angle_rank_to_index == fresh.angle_rank_to_index);
}

TEST_CASE("determinism") {
  auto a = first_primitive_triples(300);
  auto b = first_primitive_triples(300);
  CHECK(a.triples == b.triples);
  CHECK(a.angle_rank_to_index == b.angle_rank_to_index);
}

TEST_CASE("size bound audit") {
  auto one = audit_size_bounds(first_primitive_triples(1));
  CHECK(one.pass);  // max component 5 <= ceil(2 pi^2 / 3) = 7

  auto four = audit_size_bounds(first_primitive_triples(4));
  CHECK(four.pass);  // max component 13 <= ceil(8 pi^2 / 3) = 27

  auto big = audit_size_bounds(first_primitive_triples(5000));
  CHECK(big.pass);
  CHECK(big.max_component_slack <= 1.0);
  // The raw ratio may exceed 1 for tiny k (the ceiling absorbs it);
  // it must stay within one grid unit of the bound.
  CHECK(big.max_param_slack <= 1.2);

  // A doctored sequence with an oversized entry is reported, not thrown.
  auto seq = first_primitive_triples(4);
  seq.triples[0] = {20, 99, 101};
  auto bad = audit_size_bounds(seq);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_violation.has_value());
  CHECK(bad.first_violation->index == 1);
}
