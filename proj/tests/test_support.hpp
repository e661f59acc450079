#pragma once

#include <random>
#include <vector>

#include "glm1/laurent.hpp"
#include "glm1/partition.hpp"

namespace glm1::testing {

/// Deterministic generator helpers; tests must not depend on library
/// distribution internals, so ranges come from plain modulo.
struct Rng {
  std::mt19937 engine;
  explicit Rng(unsigned seed) : engine(seed) {}
  int between(int lo, int hi) {
    return lo + static_cast<int>(engine() % static_cast<unsigned>(hi - lo + 1));
  }
};

inline LaurentPoly random_poly(Rng& rng, int m, int max_terms = 4,
                               int exp_range = 3, int coef_range = 5) {
  std::vector<Term> terms;
  const int n = rng.between(0, max_terms);
  for (int t = 0; t < n; ++t) {
    Exponents e(m + 1);
    for (int i = 0; i <= m; ++i) e[i] = rng.between(-exp_range, exp_range);
    terms.push_back({std::move(e), Int(rng.between(-coef_range, coef_range))});
  }
  return LaurentPoly::from_terms(m, std::move(terms));
}

/// All partitions with at most `max_len` parts, each part <= `max_part`.
inline std::vector<Partition> partitions_up_to(int max_part, int max_len) {
  std::vector<Partition> out{Partition{}};
  std::vector<int> parts;
  auto rec = [&](auto&& self, int hi) -> void {
    if (static_cast<int>(parts.size()) == max_len) return;
    for (int v = std::min(hi, max_part); v >= 1; --v) {
      parts.push_back(v);
      out.emplace_back(parts);
      self(self, v);
      parts.pop_back();
    }
  };
  rec(rec, max_part);
  return out;
}

}  // namespace glm1::testing
