#pragma once

// Slow but independent references for the exact linear algebra and LP engine.

#include "fcone/cone.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace fcone::oracle {

inline Rational det(std::vector<RationalVector> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<RationalVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      RationalVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    Rational term = a[0][c] * det(minor);
    total += c % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) c.push_back(i);
    out.push_back(c);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const std::vector<RationalVector>& m, std::size_t cols) {
  for (std::size_t k = std::min(m.size(), cols); k > 0; --k)
    for (const auto& rs : combinations(m.size(), k))
      for (const auto& cs : combinations(cols, k)) {
        std::vector<RationalVector> sub;
        for (auto r : rs) {
          RationalVector row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        if (det(sub) != 0) return k;
      }
  return 0;
}

// Unique solution of a square-or-tall system, or nullopt.
inline std::optional<RationalVector> unique_solution(std::vector<RationalVector> a, RationalVector b, std::size_t cols) {
  std::size_t rows = a.size(), r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots.size() != cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct Oracle {
  bool feasible = false;
  Rational best = 0;
};

// Equality form A x = b, x >= 0: the optimum over a bounded region is attained
// at a basic feasible solution, so enumerate supports of independent columns.
inline Oracle vertex_oracle(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c) {
  Oracle o;
  std::size_t n = c.size();
  for (std::size_t k = 0; k <= std::min(n, a.size()); ++k)
    for (const auto& support : combinations(n, k)) {
      std::vector<RationalVector> sub;
      for (const auto& row : a) {
        RationalVector r;
        for (auto j : support) r.push_back(row[j]);
        sub.push_back(r);
      }
      std::optional<RationalVector> xs;
      if (k == 0) {
        bool zero = std::all_of(b.begin(), b.end(), [](const Rational& v) { return v == 0; });
        if (zero) xs = RationalVector{};
      } else {
        xs = unique_solution(sub, b, k);
      }
      if (!xs || std::any_of(xs->begin(), xs->end(), [](const Rational& v) { return v < 0; })) continue;
      Rational val = 0;
      for (std::size_t i = 0; i < k; ++i) val += c[support[i]] * (*xs)[i];
      if (!o.feasible || val > o.best) o.best = val;
      o.feasible = true;
    }
  return o;
}

inline RationalVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace fcone::oracle
