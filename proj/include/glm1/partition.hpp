#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace glm1 {

/// Weakly decreasing tuple of positive integers, trailing zeros stripped
/// on construction (so (1,0) and (1) are the same partition).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  long long contents() const;
  /// 1-based part access; 0 beyond the length.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing integer m-tuple; entries may be negative.
class DominantWeight {
 public:
  explicit DominantWeight(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-based entry access.
  int entry(int i) const { return entries_.at(i - 1); }
  const std::vector<int>& entries() const { return entries_; }
  long long contents() const;

  bool operator==(const DominantWeight&) const = default;
  auto operator<=>(const DominantWeight&) const = default;

 private:
  std::vector<int> entries_;
};

/// Ordered pair (nu; mu) of partitions. m-standardness is a predicate,
/// not an invariant of the type.
struct CompositePartition {
  Partition nu;
  Partition mu;
  bool operator==(const CompositePartition&) const = default;
  auto operator<=>(const CompositePartition&) const = default;
};

bool is_m_standard(const CompositePartition& cp, int m);

/// m-composition (mu1,...,mu_p, 0,...,0, -nu_q,...,-nu_1) of total length
/// m. Requires l(mu) + l(nu) <= m.
DominantWeight cup_m(const Partition& mu, const Partition& nu, int m);

/// The opposite weight (0,...,0,-p_q,...,-p_1) of length m.
DominantWeight opposite(const Partition& p, int m);

DominantWeight add_weights(const DominantWeight& a, const DominantWeight& b);

/// CLI partition grammar: comma-separated parts, empty string for the
/// empty partition. Whitespace-insensitive.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

namespace detail {
/// Strict comma-separated integer list (no stray characters allowed).
std::vector<int> parse_int_list(std::string_view text);
std::string strip_spaces(std::string_view text);
}  // namespace detail

}  // namespace glm1
