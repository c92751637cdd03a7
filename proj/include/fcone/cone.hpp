#pragma once

#include "fcone/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fcone {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;
  RationalMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

/// Fraction-free (Bareiss) elimination after clearing denominators row-wise.
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const std::vector<RationalVector>& rows, std::size_t cols);

/// Indices of a lexicographically first maximal independent subset of rows.
std::vector<std::size_t> independent_rows(const std::vector<RationalVector>& rows, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

enum class Relation { LessEq, Equal, GreaterEq };

struct LpConstraint {
  RationalVector coeffs;
  Relation rel = Relation::Equal;
  Rational rhs = 0;
};

/// maximize objective . x subject to the constraints, with x_j >= 0 unless
/// free_vars[j].  An empty objective means a pure feasibility problem.
struct LinearProgram {
  std::size_t num_vars = 0;
  RationalVector objective;
  std::vector<LpConstraint> constraints;
  std::vector<bool> free_vars;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  RationalVector witness;
  /// One multiplier per constraint; an optimal solution of the dual program.
  RationalVector duals;
};

/// Two-phase tableau simplex with Bland's rule; exact and deterministic.
LpResult lp_solve(const LinearProgram& lp);

std::string to_string(LpStatus s);

/// The cone {x in Q^dim : ineq_i . x >= 0, eq_j . x = 0}.
struct FaceQuery {
  std::size_t dim = 0;
  std::vector<RationalVector> inequalities;
  std::vector<RationalVector> equalities;
};

struct ImplicitEqualities {
  /// Indices of inequalities that hold with equality on the whole cone.
  std::vector<std::size_t> indices;
  /// A point with ineq . x >= 1 for every other inequality and zero on the
  /// implicit ones; lies in the relative interior of the cone.
  RationalVector interior_point;
};

/// Iterated Farkas-dual LP: inequality k is implicit iff some nonnegative
/// combination of inequalities with positive weight on k lies in the span of
/// the equalities.
ImplicitEqualities implicit_equalities(const FaceQuery& q);

/// Same set via one primal LP per inequality (max ineq_k . x, capped at 1).
std::vector<std::size_t> implicit_equalities_primal(const FaceQuery& q);

/// Dimension of the linear span of the cone.
std::size_t face_span_dim(const FaceQuery& q);

struct ExtremalityResult {
  bool extremal = false;
  /// When not extremal: target = sum coeffs[k] * generators[indices[k]].
  std::vector<std::size_t> indices;
  RationalVector coeffs;
};

/// Decides whether `target` spans an extremal ray of cone(generators) by
/// testing if it is a nonnegative combination of generators that are not
/// positive multiples of it.
ExtremalityResult is_extremal_in_cone(const RationalVector& target,
                                      const std::vector<RationalVector>& generators);

}  // namespace fcone
