#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rskdyn/errors.hpp"

namespace rskdyn {

/// A permutation of {1, ..., n} in one-line notation, n >= 1.
///
/// entries()[i] is the image of position i + 1. Construction validates the
/// rearrangement invariant, so every live Permutation is well formed.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidValue("permutation must be non-empty");
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
      if (v < 1 || static_cast<std::size_t>(v) > entries_.size())
        throw InvalidValue("permutation value " + std::to_string(v) +
                           " out of range 1.." + std::to_string(entries_.size()));
      if (seen[v])
        throw InvalidValue("duplicate value " + std::to_string(v) +
                           " in permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<int>& entries() const { return entries_; }
  std::span<const int> view() const { return entries_; }

  // 1-based position lookup, matching the usual pi_i notation.
  int operator()(std::size_t position) const { return entries_[position - 1]; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

inline Permutation inverse_permutation(const Permutation& p) {
  std::vector<int> inv(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    inv[p.entries()[j] - 1] = static_cast<int>(j + 1);
  return Permutation(std::move(inv));
}

inline bool is_involution(const Permutation& p) {
  const auto& e = p.entries();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (static_cast<std::size_t>(e[e[j] - 1]) != j + 1) return false;
  return true;
}

inline Permutation reversed(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.entries()[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, char sep,
                                       std::string_view what) {
  std::vector<int> values;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    throw ParseError("empty " + std::string(what));
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      throw ParseError("expected a number in " + std::string(what) + " '" +
                       std::string(text) + "'");
    if (i - start > 9)
      throw ParseError("number too large in " + std::string(what));
    values.push_back(std::stoi(std::string(text.substr(start, i - start))));
    skip_ws();
    if (i == text.size()) break;
    if (sep == ' ') continue;
    if (text[i] != sep)
      throw ParseError("unexpected character '" + std::string(1, text[i]) +
                       "' in " + std::string(what) + " '" + std::string(text) +
                       "'");
    ++i;
  }
  return values;
}

}  // namespace detail

/// Parses comma-separated one-line notation; whitespace around values is
/// tolerated ("2, 4, 7, 3" and "2,4,7,3" are equivalent).
inline Permutation parse_permutation(std::string_view text) {
  auto values = detail::parse_int_list(text, ',', "permutation");
  try {
    return Permutation(std::move(values));
  } catch (const InvalidValue& e) {
    throw ParseError(e.what());
  }
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Lexicographic rank of p among all permutations of its size.
inline std::uint64_t rank_of(const Permutation& p) {
  const auto& e = p.entries();
  const std::size_t n = e.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (e[j] < e[i]) ++smaller_after;
    rank += smaller_after * factorial(n - 1 - i);
  }
  return rank;
}

/// Inverse of rank_of: the permutation of size n with the given rank.
inline Permutation unrank(std::size_t n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    e.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(e));
}

/// All n! permutations of size n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

template <class Rng>
Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  // Fisher-Yates on rng() directly: output depends only on the engine.
  for (std::size_t i = n; i > 1; --i) {
    std::uint64_t j = rng() % i;
    std::swap(e[i - 1], e[j]);
  }
  return Permutation(std::move(e));
}

}  // namespace rskdyn
