#include "gridfary/pythagorean.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gridfary {

const char* to_string(TripleForm form) {
  return form == TripleForm::Standard ? "standard" : "mirrored";
}

PythTriple euclid_triple(const GeneratorParams& params) {
  const long long m = params.m;
  const long long n = params.n;
  if (n <= 0 || m <= n) {
    throw std::invalid_argument("euclid_triple: requires m > n > 0");
  }
  if (m > 3037000499LL) {  // m^2 + n^2 must fit in 63 bits
    throw std::invalid_argument("euclid_triple: generator parameter too large");
  }
  const long long diff = m * m - n * n;
  const long long twice = 2 * m * n;
  const long long hyp = m * m + n * n;
  if (params.form == TripleForm::Standard) return {diff, twice, hyp};
  return {twice, diff, hyp};
}

bool is_primitive(const PythTriple& t) {
  return std::gcd(t.x, t.y) == 1;
}

std::strong_ordering slope_compare(const PythTriple& a, const PythTriple& b) {
  const int128 lhs = static_cast<int128>(a.y) * b.x;
  const int128 rhs = static_cast<int128>(b.y) * a.x;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GeneratorParams TripleEnumerator::advance() {
  GeneratorParams cur{m_, n_, form_};
  if (form_ == TripleForm::Standard) {
    form_ = TripleForm::Mirrored;
  } else {
    form_ = TripleForm::Standard;
    if (++n_ == m_) {
      ++m_;
      n_ = 1;
    }
  }
  return cur;
}

std::pair<PythTriple, GeneratorParams> TripleEnumerator::next() {
  for (;;) {
    GeneratorParams params = advance();
    PythTriple t = euclid_triple(params);
    if (is_primitive(t)) return {t, params};
  }
}

TripleSequence first_primitive_triples(int k) {
  if (k < 0) throw std::invalid_argument("first_primitive_triples: k < 0");
  TripleSequence seq;
  seq.triples.reserve(k);
  seq.params.reserve(k);
  TripleEnumerator enumerator;
  for (int i = 0; i < k; ++i) {
    auto [t, params] = enumerator.next();
    seq.triples.push_back(t);
    seq.params.push_back(params);
  }
  seq.angle_rank_to_index.resize(k);
  for (int i = 0; i < k; ++i) seq.angle_rank_to_index[i] = i;
  std::sort(seq.angle_rank_to_index.begin(), seq.angle_rank_to_index.end(),
            [&](int a, int b) {
              return slope_compare(seq.triples[a], seq.triples[b]) ==
                     std::strong_ordering::less;
            });
  return seq;
}

TripleSequence TripleSequence::prefix(int k) const {
  if (k > size()) throw std::invalid_argument("TripleSequence::prefix: k too large");
  TripleSequence out;
  out.triples.assign(triples.begin(), triples.begin() + k);
  out.params.assign(params.begin(), params.begin() + k);
  out.angle_rank_to_index.resize(k);
  for (int i = 0; i < k; ++i) out.angle_rank_to_index[i] = i;
  std::sort(out.angle_rank_to_index.begin(), out.angle_rank_to_index.end(),
            [&](int a, int b) {
              return slope_compare(out.triples[a], out.triples[b]) ==
                     std::strong_ordering::less;
            });
  return out;
}

std::vector<PythTriple> TripleSequence::angle_sorted() const {
  std::vector<PythTriple> out;
  out.reserve(triples.size());
  for (int idx : angle_rank_to_index) out.push_back(triples[idx]);
  return out;
}

std::vector<PythTriple> angle_sorted_prefix(int k) {
  return first_primitive_triples(k).angle_sorted();
}

SizeBoundAudit audit_size_bounds(const TripleSequence& seq) {
  SizeBoundAudit audit;
  audit.min_component_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < seq.size(); ++i) {
    const long long k = i + 1;
    const PythTriple& t = seq.triples[i];
    const GeneratorParams& p = seq.params[i];

    // Component bound: max(x, y, ell) <= ceil(2 pi^2 k / 3), evaluated
    // with the rational over-approximation of pi^2.
    const uint128 bound_num = static_cast<uint128>(2) * kPi2Num * k;
    const uint128 bound_den = static_cast<uint128>(3) * kPi2Den;
    const uint128 comp_bound = (bound_num + bound_den - 1) / bound_den;
    const long long comp = std::max({t.x, t.y, t.ell});
    if (static_cast<uint128>(comp) > comp_bound) {
      audit.pass = false;
      if (!audit.first_violation) {
        audit.first_violation = {static_cast<int>(k),
                                 "component exceeds (2 pi^2 / 3) k"};
      }
    }

    // Generator bound: v <= ceil((pi / sqrt 3) sqrt(k)), i.e.
    // 3 (v-1)^2 < pi^2 k.
    for (long long v : {p.m, p.n}) {
      const uint128 lhs = static_cast<uint128>(3) * (v - 1) * (v - 1) * kPi2Den;
      const uint128 rhs = static_cast<uint128>(kPi2Num) * k;
      if (lhs >= rhs) {
        audit.pass = false;
        if (!audit.first_violation) {
          audit.first_violation = {static_cast<int>(k),
                                   "generator parameter exceeds (pi / sqrt 3) sqrt(k)"};
        }
      }
    }

    const long double comp_slack =
        static_cast<long double>(comp) * 3.0L * kPi2Den /
        (2.0L * kPi2Num * static_cast<long double>(k));
    audit.max_component_slack =
        std::max(audit.max_component_slack, static_cast<double>(comp_slack));
    const long double param_slack =
        static_cast<long double>(std::max(p.m, p.n)) /
        (1.8137993642342178L * sqrtl(static_cast<long double>(k)));
    audit.max_param_slack =
        std::max(audit.max_param_slack, static_cast<double>(param_slack));
    audit.min_component_ratio =
        std::min(audit.min_component_ratio,
                 static_cast<double>(t.ell) / static_cast<double>(k));
  }
  return audit;
}

}  // namespace gridfary
