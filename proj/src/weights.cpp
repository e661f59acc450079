#include "glm1/weights.hpp"

#include <stdexcept>

namespace glm1 {

SuperWeight::SuperWeight(std::vector<int> lambda, int mu)
    : lambda_(std::move(lambda)), mu_(mu) {
  if (lambda_.empty())
    throw std::invalid_argument("weight must have m >= 1");
  for (size_t i = 0; i + 1 < lambda_.size(); ++i)
    if (lambda_[i] < lambda_[i + 1])
      throw std::invalid_argument("not dominant: lambda must be weakly decreasing");
}

HalfWeight rho0(int m) {
  HalfWeight h{std::vector<int>(m + 1, 0)};
  for (int i = 1; i <= m; ++i) h.doubled[i - 1] = m + 1 - 2 * i;
  return h;
}

HalfWeight rho1(int m) {
  HalfWeight h{std::vector<int>(m + 1, 1)};
  h.doubled[m] = -m;
  return h;
}

HalfWeight rho(int m) {
  HalfWeight h{std::vector<int>(m + 1, 0)};
  for (int i = 1; i <= m; ++i) h.doubled[i - 1] = 2 * (m + 1 - i);
  h.doubled[m] = -2;
  return h;
}

HalfWeight eps(int i, int m) {
  if (i < 1 || i > m) throw std::invalid_argument("eps index out of range");
  HalfWeight h{std::vector<int>(m + 1, 0)};
  h.doubled[i - 1] = 2;
  return h;
}

HalfWeight delta1(int m) {
  HalfWeight h{std::vector<int>(m + 1, 0)};
  h.doubled[m] = 2;
  return h;
}

HalfWeight to_half_weight(const SuperWeight& w) {
  HalfWeight h{std::vector<int>(w.m() + 1, 0)};
  for (int i = 0; i < w.m(); ++i) h.doubled[i] = 2 * w.lambda()[i];
  h.doubled[w.m()] = 2 * w.mu();
  return h;
}

namespace {
void check_half_lengths(const HalfWeight& a, const HalfWeight& b) {
  if (a.doubled.size() != b.doubled.size())
    throw std::invalid_argument("weight length mismatch");
}
}  // namespace

HalfWeight add(const HalfWeight& a, const HalfWeight& b) {
  check_half_lengths(a, b);
  HalfWeight r(a);
  for (size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] += b.doubled[i];
  return r;
}

HalfWeight subtract(const HalfWeight& a, const HalfWeight& b) {
  check_half_lengths(a, b);
  HalfWeight r(a);
  for (size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] -= b.doubled[i];
  return r;
}

boost::rational<long long> bilinear_form(const HalfWeight& a, const HalfWeight& b) {
  check_half_lengths(a, b);
  const size_t n = a.doubled.size();
  long long num = 0;
  for (size_t i = 0; i + 1 < n; ++i)
    num += static_cast<long long>(a.doubled[i]) * b.doubled[i];
  num -= static_cast<long long>(a.doubled[n - 1]) * b.doubled[n - 1];
  return {num, 4};
}

std::vector<int> atypical_roots(const SuperWeight& w) {
  std::vector<int> roots;
  for (int i = 1; i <= w.m(); ++i)
    if (w.lambda_entry(i) + w.m() + 1 - i == 1 - w.mu()) roots.push_back(i);
  return roots;
}

bool is_typical(const SuperWeight& w) { return atypical_roots(w).empty(); }

std::optional<int> special_kind(const SuperWeight& w) {
  const int m = w.m();
  const int k = -w.mu();
  if (k < 0 || k > m) return std::nullopt;
  // Boundary conventions lambda_0 = +inf, lambda_{m+1} = -inf.
  const bool left_ok = (m - k == 0) || w.lambda_entry(m - k) >= 0;
  const bool right_ok = (m - k == m) || w.lambda_entry(m - k + 1) <= 0;
  if (!left_ok || !right_ok) return std::nullopt;
  return k;
}

CompositePartition phi(const SuperWeight& w) {
  auto kind = special_kind(w);
  if (!kind) throw std::invalid_argument("weight is not special");
  const int m = w.m();
  const int k = *kind;
  std::vector<int> mu_parts(w.lambda().begin(), w.lambda().begin() + (m - k));
  std::vector<int> nu_parts;
  for (int i = m; i >= m - k + 1; --i) nu_parts.push_back(1 - w.lambda_entry(i));
  return {Partition(std::move(nu_parts)), Partition(std::move(mu_parts))};
}

SuperWeight phi_inv(const CompositePartition& cp, int m) {
  if (!is_m_standard(cp, m))
    throw std::invalid_argument("composite partition is not m-standard");
  const int k = cp.nu.length();
  std::vector<int> lambda;
  lambda.reserve(m);
  for (int v : cp.mu.parts()) lambda.push_back(v);
  lambda.resize(m - k, 0);
  for (int i = k; i >= 1; --i) lambda.push_back(1 - cp.nu.part(i));
  return SuperWeight(std::move(lambda), -k);
}

SuperWeight sigma(int m) { return SuperWeight(std::vector<int>(m, 1), -1); }

SuperWeight add_sigma(const SuperWeight& w, int j) {
  std::vector<int> lambda(w.lambda());
  for (int& v : lambda) v += j;
  return SuperWeight(std::move(lambda), w.mu() - j);
}

Reduction reduce_to_special(const SuperWeight& w) {
  // mu - j = -k with 0 <= k <= m forces mu <= j <= mu + m.
  std::optional<Reduction> hit;
  int hits = 0;
  for (int j = w.mu(); j <= w.mu() + w.m(); ++j) {
    SuperWeight shifted = add_sigma(w, j);
    if (special_kind(shifted)) {
      ++hits;
      if (!hit) hit = Reduction{j, shifted};
    }
  }
  if (hits != 1)
    throw std::logic_error("reduction to a special weight is not unique (" +
                           std::to_string(hits) + " candidates)");
  return *hit;
}

std::vector<SuperWeight> enumerate_special_weights(int m, int bound) {
  if (m < 1 || bound < 0) throw std::invalid_argument("invalid sweep bounds");
  std::vector<SuperWeight> result;
  std::vector<int> lambda(m);
  auto emit = [&]() {
    for (int k = 0; k <= m; ++k) {
      SuperWeight w(lambda, -k);
      if (special_kind(w)) result.push_back(std::move(w));
    }
  };
  // Weakly decreasing tuples in [-bound, bound]^m, largest first.
  auto rec = [&](auto&& self, int pos, int hi) -> void {
    if (pos == m) {
      emit();
      return;
    }
    for (int v = hi; v >= -bound; --v) {
      lambda[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, bound);
  return result;
}

SuperWeight parse_super_weight(std::string_view text, int m) {
  std::string clean = detail::strip_spaces(text);
  size_t semi = clean.find(';');
  if (semi == std::string::npos || clean.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("weight must have the form \"l1,...,lm;mu\"");
  std::vector<int> lambda = detail::parse_int_list(clean.substr(0, semi));
  std::vector<int> mu = detail::parse_int_list(clean.substr(semi + 1));
  if (static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) +
                                " lambda entries, expected m=" + std::to_string(m));
  if (mu.size() != 1)
    throw std::invalid_argument("weight must have a single mu entry");
  return SuperWeight(std::move(lambda), mu.front());
}

std::string format_super_weight(const SuperWeight& w) {
  std::string out;
  for (int i = 1; i <= w.m(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(w.lambda_entry(i));
  }
  out += ";" + std::to_string(w.mu());
  return out;
}

}  // namespace glm1
