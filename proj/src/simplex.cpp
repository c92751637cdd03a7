#include "fcone/cone.hpp"

#include <stdexcept>

namespace fcone {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, n_); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc, RationalVector& reduced) {
    Rational lead = at(pr, pc);
    for (std::size_t c = 0; c <= n_; ++c) {
      if (!at(pr, c).is_zero()) at(pr, c) /= lead;
    }
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= n_; ++c) {
      if (!at(pr, c).is_zero()) nz.push_back(c);
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || at(r, pc).is_zero()) continue;
      Rational f = at(r, pc);
      for (auto c : nz) at(r, c) -= f * at(pr, c);
    }
    if (!reduced[pc].is_zero()) {
      Rational f = reduced[pc];
      for (auto c : nz) {
        if (c < n_) reduced[c] -= f * at(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + r * (n_ + 1), t_.begin() + (r + 1) * (n_ + 1));
    basis_.erase(basis_.begin() + r);
    --m_;
  }

 private:
  std::size_t m_, n_;
  RationalVector t_;
  std::vector<std::size_t> basis_;
};

/// Reduced costs c_j - c_B . column_j for the current basis.
RationalVector reduced_costs(Tableau& tab, const RationalVector& cost) {
  RationalVector d = cost;
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const Rational& cb = cost[tab.basis()[r]];
    if (cb.is_zero()) continue;
    for (std::size_t c = 0; c < tab.cols(); ++c) {
      if (!tab.at(r, c).is_zero()) d[c] -= cb * tab.at(r, c);
    }
  }
  return d;
}

enum class Outcome { Optimal, Unbounded };

/// Maximizes with Bland's rule over columns below `allowed`.
Outcome run_simplex(Tableau& tab, RationalVector& d, std::size_t allowed) {
  while (true) {
    std::size_t enter = allowed;
    for (std::size_t c = 0; c < allowed; ++c) {
      if (d[c] > 0) {
        enter = c;
        break;
      }
    }
    if (enter == allowed) return Outcome::Optimal;
    std::size_t leave = tab.rows();
    Rational best;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      const Rational& a = tab.at(r, enter);
      if (a <= 0) continue;
      Rational ratio = tab.rhs(r) / a;
      if (leave == tab.rows() || ratio < best ||
          (ratio == best && tab.basis()[r] < tab.basis()[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == tab.rows()) return Outcome::Unbounded;
    tab.pivot(leave, enter, d);
  }
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars;
  if (!lp.objective.empty() && lp.objective.size() != nv) {
    throw std::invalid_argument("objective length differs from num_vars");
  }
  if (!lp.free_vars.empty() && lp.free_vars.size() != nv) {
    throw std::invalid_argument("free_vars length differs from num_vars");
  }
  for (const auto& row : lp.constraints) {
    if (row.coeffs.size() != nv) throw std::invalid_argument("constraint length differs from num_vars");
  }
  auto is_free = [&](std::size_t j) { return !lp.free_vars.empty() && lp.free_vars[j]; };

  // Column layout: structural (free vars split into +/-), slacks, artificials.
  std::vector<std::size_t> plus(nv), minus(nv, SIZE_MAX);
  std::size_t ncol = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    plus[j] = ncol++;
    if (is_free(j)) minus[j] = ncol++;
  }
  const std::size_t m = lp.constraints.size();
  std::vector<int> sign(m, 1);
  std::vector<std::size_t> slack(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    if (row.rel != Relation::Equal) slack[i] = ncol++;
    if (row.rhs < 0) sign[i] = -1;
  }
  const std::size_t structural_and_slack = ncol;
  std::vector<std::size_t> art(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    bool slack_is_basic = row.rel != Relation::Equal &&
                          ((row.rel == Relation::LessEq) == (sign[i] > 0));
    if (!slack_is_basic) art[i] = ncol++;
  }

  Tableau tab(m, ncol);
  std::vector<RationalVector> original(m, RationalVector(structural_and_slack));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    for (std::size_t j = 0; j < nv; ++j) {
      Rational v = sign[i] > 0 ? row.coeffs[j] : Rational(-row.coeffs[j]);
      if (v.is_zero()) continue;
      tab.at(i, plus[j]) = v;
      if (minus[j] != SIZE_MAX) tab.at(i, minus[j]) = -v;
    }
    if (slack[i] != SIZE_MAX) {
      int s = row.rel == Relation::LessEq ? 1 : -1;
      tab.at(i, slack[i]) = s * sign[i];
    }
    for (std::size_t c = 0; c < structural_and_slack; ++c) original[i][c] = tab.at(i, c);
    tab.rhs(i) = sign[i] > 0 ? row.rhs : Rational(-row.rhs);
    if (art[i] != SIZE_MAX) {
      tab.at(i, art[i]) = 1;
      tab.basis()[i] = art[i];
    } else {
      tab.basis()[i] = slack[i];
    }
  }

  LpResult result;
  // Phase 1: maximize -(sum of artificials).
  RationalVector cost1(ncol);
  bool any_art = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (art[i] != SIZE_MAX) {
      cost1[art[i]] = -1;
      any_art = true;
    }
  }
  if (any_art) {
    RationalVector d = reduced_costs(tab, cost1);
    run_simplex(tab, d, ncol);
    Rational infeas = 0;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (tab.basis()[r] >= structural_and_slack) infeas += tab.rhs(r);
    }
    if (infeas > 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
  }
  // Drive remaining (zero-valued) artificials out of the basis.
  std::vector<std::size_t> row_origin(m);
  for (std::size_t i = 0; i < m; ++i) row_origin[i] = i;
  RationalVector scratch(ncol);
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basis()[r] < structural_and_slack) {
      ++r;
      continue;
    }
    std::size_t c = 0;
    while (c < structural_and_slack && tab.at(r, c).is_zero()) ++c;
    if (c < structural_and_slack) {
      tab.pivot(r, c, scratch);
      ++r;
    } else {
      tab.drop_row(r);
      row_origin.erase(row_origin.begin() + r);
    }
  }

  // Phase 2.
  RationalVector cost2(ncol);
  if (!lp.objective.empty()) {
    for (std::size_t j = 0; j < nv; ++j) {
      cost2[plus[j]] = lp.objective[j];
      if (minus[j] != SIZE_MAX) cost2[minus[j]] = -lp.objective[j];
    }
  }
  RationalVector d = reduced_costs(tab, cost2);
  if (run_simplex(tab, d, structural_and_slack) == Outcome::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  RationalVector col_value(ncol);
  for (std::size_t r = 0; r < tab.rows(); ++r) col_value[tab.basis()[r]] = tab.rhs(r);
  result.status = LpStatus::Optimal;
  result.witness.assign(nv, 0);
  for (std::size_t j = 0; j < nv; ++j) {
    result.witness[j] = col_value[plus[j]];
    if (minus[j] != SIZE_MAX) result.witness[j] -= col_value[minus[j]];
  }
  result.value = lp.objective.empty() ? Rational(0) : dot(lp.objective, result.witness);

  // Dual multipliers: B^T pi = c_B over the surviving rows.
  result.duals.assign(m, 0);
  const std::size_t k = tab.rows();
  if (k > 0 && !lp.objective.empty()) {
    RationalMatrix bt(k, k);
    RationalVector cb(k);
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t col = tab.basis()[a];
      cb[a] = cost2[col];
      for (std::size_t b = 0; b < k; ++b) bt(a, b) = original[row_origin[b]][col];
    }
    auto pi = solve(bt, cb);
    if (!pi) throw std::logic_error("singular basis while recovering duals");
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t i = row_origin[b];
      result.duals[i] = sign[i] > 0 ? (*pi)[b] : Rational(-(*pi)[b]);
    }
  }

  for (const auto& row : lp.constraints) {
    Rational lhs = dot(row.coeffs, result.witness);
    bool ok = row.rel == Relation::Equal ? lhs == row.rhs
              : row.rel == Relation::LessEq ? lhs <= row.rhs
                                            : lhs >= row.rhs;
    if (!ok) throw std::logic_error("simplex witness violates a constraint");
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (!is_free(j) && result.witness[j] < 0) throw std::logic_error("negative witness entry");
  }
  return result;
}

}  // namespace fcone
