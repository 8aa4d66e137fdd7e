#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rskdyn/errors.hpp"
#include "rskdyn/permutation.hpp"
#include "rskdyn/tableau.hpp"

namespace rskdyn {

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const Cell&) const = default;
};

struct TableauPair {
  Tableau insertion;
  Tableau recording;
  bool operator==(const TableauPair&) const = default;
};

struct InsertResult {
  Tableau tableau;
  Cell new_cell;
};

/// One step of a bumping path: value placed into row.
struct BumpStep {
  std::size_t row;
  int value;
};

namespace detail {

// Row-inserts a, bumping upward. Rows stay sorted so the leftmost entry
// greater than the incoming value is found by binary search.
inline Cell row_insert(Tableau::Rows& rows, int a,
                       std::vector<BumpStep>* path = nullptr) {
  int carry = a;
  for (std::size_t r = 0;; ++r) {
    if (path) path->push_back({r, carry});
    if (r == rows.size()) {
      rows.push_back({carry});
      return {r, 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return {r, row.size() - 1};
    }
    std::swap(*it, carry);
  }
}

inline bool rows_form_tableau(const Tableau::Rows& rows) {
  try {
    Tableau t(rows);
  } catch (const InvalidValue&) {
    return false;
  }
  return true;
}

}  // namespace detail

/// Row-inserts a into t. Returns the new tableau and the coordinates of the
/// single cell that was added.
inline InsertResult insert_entry(const Tableau& t, int a) {
  if (t.contains(a)) throw DuplicateEntry(a);
  auto rows = t.rows();
  const Cell cell = detail::row_insert(rows, a);
  return {Tableau(std::move(rows)), cell};
}

/// Bumping path of inserting a into t, without modifying t.
inline std::vector<BumpStep> bumping_path(const Tableau& t, int a) {
  if (t.contains(a)) throw DuplicateEntry(a);
  auto rows = t.rows();
  std::vector<BumpStep> path;
  detail::row_insert(rows, a, &path);
  return path;
}

namespace detail {

template <class OnStep>
TableauPair rsk_fold(const Permutation& p, OnStep&& on_step) {
  Tableau::Rows ins;
  Tableau::Rows rec;
  int step = 0;
  for (int a : p.entries()) {
    ++step;
    const Cell cell = row_insert(ins, a);
    if (cell.row == rec.size()) rec.emplace_back();
    rec[cell.row].push_back(step);
    assert(rows_form_tableau(ins) && "insertion tableau lost its invariants");
    on_step(ins, rec);
  }
  return {Tableau(std::move(ins)), Tableau(std::move(rec))};
}

}  // namespace detail

/// The RSK image (insertion, recording) of p.
inline TableauPair rsk_forward(const Permutation& p) {
  return detail::rsk_fold(p, [](const auto&, const auto&) {});
}

/// Intermediate pairs after each insertion step; back() equals rsk_forward(p).
/// Recording labels are 1..i at step i, insertion entries are p_1..p_i.
inline std::vector<std::pair<Tableau, Tableau>> rsk_trace(const Permutation& p) {
  std::vector<std::pair<Tableau, Tableau>> steps;
  detail::rsk_fold(p, [&](const Tableau::Rows& ins, const Tableau::Rows& rec) {
    steps.emplace_back(Tableau(ins), Tableau(rec));
  });
  return steps;
}

/// Reverse row insertion, removing recording labels n, n-1, ..., 1.
inline Permutation rsk_inverse(const TableauPair& pair) {
  const auto& ins = pair.insertion;
  const auto& rec = pair.recording;
  if (!ins.is_standard() || !rec.is_standard())
    throw MalformedPair("both tableaux must be standard");
  if (ins.empty() || ins.shape_parts() != rec.shape_parts())
    throw MalformedPair("insertion and recording shapes differ");

  const std::size_t n = ins.size();
  std::vector<Cell> where(n + 1);
  for (std::size_t r = 0; r < rec.height(); ++r)
    for (std::size_t c = 0; c < rec.rows()[r].size(); ++c)
      where[rec.rows()[r][c]] = {r, c};

  auto rows = ins.rows();
  std::vector<int> word(n);
  for (std::size_t label = n; label >= 1; --label) {
    const Cell cell = where[label];
    // Label n is the last-added cell, hence a corner of the current shape.
    auto& top = rows[cell.row];
    int carry = top.back();
    top.pop_back();
    if (top.empty()) rows.pop_back();
    for (std::size_t r = cell.row; r-- > 0;) {
      auto& row = rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), carry);
      --it;  // largest entry smaller than carry; exists since columns increase
      std::swap(*it, carry);
    }
    word[label - 1] = carry;
  }
  return Permutation(std::move(word));
}

/// RSK(p^-1) == (T, S) when RSK(p) == (S, T).
inline bool check_inverse_theorem(const Permutation& p) {
  const auto forward = rsk_forward(p);
  const auto inv = rsk_forward(inverse_permutation(p));
  return inv.insertion == forward.recording && inv.recording == forward.insertion;
}

/// "S | T" with each tableau in the '/' row format.
inline std::string to_string(const TableauPair& pair) {
  return to_string(pair.insertion) + " | " + to_string(pair.recording);
}

inline TableauPair parse_tableau_pair(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("tableau pair must be 'S | T'");
  return {parse_tableau(text.substr(0, bar)), parse_tableau(text.substr(bar + 1))};
}

}  // namespace rskdyn
