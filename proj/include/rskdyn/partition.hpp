#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rskdyn/errors.hpp"
#include "rskdyn/permutation.hpp"

namespace rskdyn {

/// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidValue("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw InvalidValue("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw InvalidValue("partition parts must be weakly decreasing");
      size_ += static_cast<std::size_t>(parts_[i]);
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  std::size_t size_ = 0;
};

/// Part i of the result counts the parts of lambda that are >= i.
inline Partition conjugate_partition(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

inline bool is_self_conjugate(const Partition& lambda) {
  return conjugate_partition(lambda) == lambda;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(std::size_t n) {
  if (n == 0) throw InvalidValue("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_rec(static_cast<int>(n), static_cast<int>(n), prefix, out);
  return out;
}

/// Partitions of n into pairwise distinct odd parts, in the same order as
/// partitions_of.
inline std::vector<Partition> partitions_distinct_odd(std::size_t n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < p.length() && ok; ++i) {
      if (p[i] % 2 == 0) ok = false;
      if (i && p[i] == p[i - 1]) ok = false;
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

inline std::string to_string(const Partition& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  return os << to_string(lambda);
}

inline Partition parse_partition(std::string_view text) {
  auto parts = detail::parse_int_list(text, ',', "partition");
  try {
    return Partition(std::move(parts));
  } catch (const InvalidValue& e) {
    throw ParseError(e.what());
  }
}

}  // namespace rskdyn
