#include "glm1/partition.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace glm1 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw std::invalid_argument("partition parts must be non-negative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::contents() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("partition part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

DominantWeight::DominantWeight(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("dominant weight must have length >= 1");
  for (size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i] < entries_[i + 1])
      throw std::invalid_argument("weight entries must be weakly decreasing");
}

long long DominantWeight::contents() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool is_m_standard(const CompositePartition& cp, int m) {
  return cp.nu.length() + cp.mu.length() <= m;
}

DominantWeight cup_m(const Partition& mu, const Partition& nu, int m) {
  if (mu.length() + nu.length() > m)
    throw std::invalid_argument("composite partition is not m-standard");
  std::vector<int> entries;
  entries.reserve(m);
  for (int v : mu.parts()) entries.push_back(v);
  entries.resize(m - nu.length(), 0);
  for (int i = nu.length(); i >= 1; --i) entries.push_back(-nu.part(i));
  return DominantWeight(std::move(entries));
}

DominantWeight opposite(const Partition& p, int m) {
  return cup_m(Partition{}, p, m);
}

DominantWeight add_weights(const DominantWeight& a, const DominantWeight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weight length mismatch");
  std::vector<int> entries(a.entries());
  for (int i = 0; i < b.size(); ++i) entries[i] += b.entries()[i];
  return DominantWeight(std::move(entries));
}

namespace detail {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

namespace {
int parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("cannot parse integer '" + std::string(token) + "'");
  return value;
}
}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string_view token = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    values.push_back(parse_int(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace detail

Partition parse_partition(std::string_view text) {
  std::string clean = detail::strip_spaces(text);
  if (clean.empty()) return Partition{};
  return Partition(detail::parse_int_list(clean));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p.part(i));
  }
  return out;
}

}  // namespace glm1
