#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "glm1/partition.hpp"

namespace glm1 {

/// Integral dominant gl(m|1) weight (lambda_1,...,lambda_m; mu). The
/// lambda block is validated weakly decreasing on construction.
class SuperWeight {
 public:
  SuperWeight(std::vector<int> lambda, int mu);

  int m() const { return static_cast<int>(lambda_.size()); }
  const std::vector<int>& lambda() const { return lambda_; }
  /// 1-based access to lambda_i.
  int lambda_entry(int i) const { return lambda_.at(i - 1); }
  int mu() const { return mu_; }
  DominantWeight lambda_weight() const { return DominantWeight(lambda_); }

  bool operator==(const SuperWeight&) const = default;

 private:
  std::vector<int> lambda_;
  int mu_;
};

/// Weight vector with doubled integer entries, so the half-integral
/// rho-vectors stay exact: doubled[0..m-1] = 2*(epsilon coefficients),
/// doubled[m] = 2*(delta coefficient).
struct HalfWeight {
  std::vector<int> doubled;
  bool operator==(const HalfWeight&) const = default;
};

HalfWeight rho0(int m);
HalfWeight rho1(int m);
HalfWeight rho(int m);
HalfWeight eps(int i, int m);
HalfWeight delta1(int m);
HalfWeight to_half_weight(const SuperWeight& w);
HalfWeight add(const HalfWeight& a, const HalfWeight& b);
HalfWeight subtract(const HalfWeight& a, const HalfWeight& b);

/// The invariant form: (eps_i, eps_j) = delta_ij, (eps_i, delta_1) = 0,
/// (delta_1, delta_1) = -1. Values are half-integral for the weights that
/// occur here; returned exactly.
boost::rational<long long> bilinear_form(const HalfWeight& a, const HalfWeight& b);

/// Indices i with lambda_i + m + 1 - i = 1 - mu, i.e. the odd roots
/// eps_i - delta_1 orthogonal to Lambda + rho. Holds 0 or 1 elements for
/// dominant input.
std::vector<int> atypical_roots(const SuperWeight& w);
bool is_typical(const SuperWeight& w);

/// k such that mu = -k, 0 <= k <= m and lambda_{m-k} >= 0 >= lambda_{m-k+1}
/// (with lambda_0 = +inf, lambda_{m+1} = -inf); absent if the weight is
/// not special.
std::optional<int> special_kind(const SuperWeight& w);

/// Special weight -> m-standard composite partition:
/// mu = (lambda_1..lambda_{m-k}) normalized, nu = (1-lambda_m,...,1-lambda_{m-k+1}).
CompositePartition phi(const SuperWeight& w);

/// Inverse of phi: (mu_1..mu_{m-k}, 1-nu_k,...,1-nu_1; -l(nu)).
SuperWeight phi_inv(const CompositePartition& cp, int m);

/// The super-determinantal weight (1,...,1; -1).
SuperWeight sigma(int m);

SuperWeight add_sigma(const SuperWeight& w, int j);

struct Reduction {
  int j;
  SuperWeight special;
};

/// The unique j with w + j*sigma special, found by scanning the m+1
/// candidates mu <= j <= mu+m. Zero or multiple hits would contradict the
/// uniqueness of the reduction and throw std::logic_error.
Reduction reduce_to_special(const SuperWeight& w);

/// All special weights for the given m with |lambda_i| <= bound, in
/// lexicographic order over lambda (largest first) then k ascending.
std::vector<SuperWeight> enumerate_special_weights(int m, int bound);

/// CLI weight grammar: "l1,l2,...,lm;mu", whitespace-insensitive.
SuperWeight parse_super_weight(std::string_view text, int m);
std::string format_super_weight(const SuperWeight& w);

}  // namespace glm1
