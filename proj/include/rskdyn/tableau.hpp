#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rskdyn/errors.hpp"
#include "rskdyn/partition.hpp"
#include "rskdyn/permutation.hpp"

namespace rskdyn {

/// A Young tableau in French notation: rows()[0] is the bottom row.
///
/// Every Tableau has a partition shape, strictly increasing rows (left to
/// right) and columns (bottom to top), and distinct positive entries. It is
/// *standard* when its entries are exactly 1..size(). Intermediate tableaux
/// during insertion are valid but generally not standard.
class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau() = default;

  explicit Tableau(Rows rows) : rows_(std::move(rows)) { validate(); }

  const Rows& rows() const { return rows_; }
  std::size_t height() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  int at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

  /// Shape as row lengths, bottom to top. Empty for the empty tableau.
  std::vector<int> shape_parts() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(static_cast<int>(r.size()));
    return out;
  }

  Partition shape() const { return Partition(shape_parts()); }

  bool contains(int value) const {
    for (const auto& r : rows_)
      if (std::binary_search(r.begin(), r.end(), value)) return true;
    return false;
  }

  bool is_standard() const {
    const std::size_t n = size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : rows_)
      for (int v : r) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
        seen[v] = true;
      }
    return true;
  }

  bool operator==(const Tableau&) const = default;

 private:
  void validate() const {
    std::vector<int> all;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      if (row.empty()) throw InvalidValue("tableau rows must be non-empty");
      if (r && row.size() > rows_[r - 1].size())
        throw InvalidValue("tableau row lengths must weakly decrease upward");
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] < 1) throw InvalidValue("tableau entries must be positive");
        if (c && row[c] <= row[c - 1])
          throw InvalidValue("tableau rows must increase left to right");
        if (r && row[c] <= rows_[r - 1][c])
          throw InvalidValue("tableau columns must increase bottom to top");
        all.push_back(row[c]);
      }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw InvalidValue("tableau entries must be distinct");
  }

  Rows rows_;
};

/// Requires a standard tableau; the result is a Permutation of size n.
inline Permutation row_reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(t.size());
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return Permutation(std::move(word));
}

/// Columns left to right, each read top to bottom.
inline Permutation column_reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(t.size());
  const std::size_t width = t.empty() ? 0 : t.rows()[0].size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = t.height(); r-- > 0;)
      if (c < t.rows()[r].size()) word.push_back(t.rows()[r][c]);
  return Permutation(std::move(word));
}

inline Permutation reversed_reading_word(const Tableau& t) {
  return reversed(row_reading_word(t));
}

/// Reflects about the diagonal: result[r][c] == t[c][r].
inline Tableau transpose_tableau(const Tableau& t) {
  Tableau::Rows out;
  const std::size_t width = t.empty() ? 0 : t.rows()[0].size();
  for (std::size_t c = 0; c < width; ++c) {
    std::vector<int> row;
    for (const auto& r : t.rows()) {
      if (c >= r.size()) break;
      row.push_back(r[c]);
    }
    out.push_back(std::move(row));
  }
  return Tableau(std::move(out));
}

inline constexpr std::size_t kDefaultSytBound = 12;

namespace detail {

inline void enumerate_syt_rec(const std::vector<int>& shape, int next, int n,
                              Tableau::Rows& rows, std::vector<Tableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const auto len = rows[r].size();
    if (static_cast<int>(len) == shape[r]) continue;
    if (r && rows[r - 1].size() <= len) continue;
    rows[r].push_back(next);
    enumerate_syt_rec(shape, next + 1, n, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace detail

/// Every standard Young tableau of shape lambda, each exactly once. Order:
/// entries 1..n are placed in turn, trying rows bottom to top.
inline std::vector<Tableau> enumerate_syt(const Partition& lambda,
                                          std::size_t bound = kDefaultSytBound) {
  if (lambda.size() > bound)
    throw BoundExceeded("enumerate_syt", lambda.size(), bound);
  Tableau::Rows rows(lambda.length());
  std::vector<Tableau> out;
  detail::enumerate_syt_rec(lambda.parts(), 1, static_cast<int>(lambda.size()),
                            rows, out);
  return out;
}

/// "1 3 7 8 / 2 5 / 4 6": rows bottom to top separated by '/'.
inline std::string to_string(const Tableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.height(); ++r) {
    if (r) out += " / ";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(t.rows()[r][c]);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) {
  return os << to_string(t);
}

inline Tableau parse_tableau(std::string_view text) {
  Tableau::Rows rows;
  std::size_t start = 0;
  while (true) {
    const auto slash = text.find('/', start);
    const auto piece = text.substr(start, slash == std::string_view::npos
                                              ? std::string_view::npos
                                              : slash - start);
    rows.push_back(detail::parse_int_list(piece, ' ', "tableau row"));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  try {
    return Tableau(std::move(rows));
  } catch (const InvalidValue& e) {
    throw ParseError(e.what());
  }
}

}  // namespace rskdyn
