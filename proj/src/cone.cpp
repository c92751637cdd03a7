#include "fcone/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcone {

namespace {

void check_query(const FaceQuery& q) {
  for (const auto& r : q.inequalities) {
    if (r.size() != q.dim) throw std::invalid_argument("inequality length differs from dim");
  }
  for (const auto& r : q.equalities) {
    if (r.size() != q.dim) throw std::invalid_argument("equality length differs from dim");
  }
}

}  // namespace

ImplicitEqualities implicit_equalities(const FaceQuery& q) {
  check_query(q);
  const std::size_t N = q.inequalities.size();
  const std::size_t E = q.equalities.size();
  std::vector<bool> open(N, true);
  std::size_t open_count = N;
  ImplicitEqualities out;
  out.interior_point.assign(q.dim, 0);

  // Variables: y_0..y_{N-1} >= 0, z_0..z_{E-1} free.
  // sum y_k r_k + sum z_e e_e = 0, sum y <= 1, maximize sum over open y_k.
  while (open_count > 0) {
    LinearProgram lp;
    lp.num_vars = N + E;
    lp.free_vars.assign(N + E, false);
    for (std::size_t e = 0; e < E; ++e) lp.free_vars[N + e] = true;
    lp.objective.assign(N + E, 0);
    for (std::size_t k = 0; k < N; ++k) {
      if (open[k]) lp.objective[k] = 1;
    }
    for (std::size_t t = 0; t < q.dim; ++t) {
      LpConstraint c;
      c.coeffs.assign(N + E, 0);
      for (std::size_t k = 0; k < N; ++k) c.coeffs[k] = q.inequalities[k][t];
      for (std::size_t e = 0; e < E; ++e) c.coeffs[N + e] = q.equalities[e][t];
      c.rel = Relation::Equal;
      lp.constraints.push_back(std::move(c));
    }
    LpConstraint norm;
    norm.coeffs.assign(N + E, 0);
    for (std::size_t k = 0; k < N; ++k) norm.coeffs[k] = 1;
    norm.rel = Relation::LessEq;
    norm.rhs = 1;
    lp.constraints.push_back(std::move(norm));

    LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal) throw std::logic_error("Farkas program not optimal");
    if (res.value.is_zero()) {
      // The dual multipliers separate every open inequality from zero.
      out.interior_point.assign(res.duals.begin(), res.duals.begin() + q.dim);
      for (std::size_t k = 0; k < N; ++k) {
        Rational v = dot(q.inequalities[k], out.interior_point);
        if (open[k] ? v < 1 : !v.is_zero()) throw std::logic_error("bad relative interior point");
      }
      for (const auto& e : q.equalities) {
        if (!dot(e, out.interior_point).is_zero()) throw std::logic_error("interior point leaves span");
      }
      break;
    }
    for (std::size_t k = 0; k < N; ++k) {
      if (open[k] && res.witness[k] > 0) {
        open[k] = false;
        --open_count;
      }
    }
  }
  for (std::size_t k = 0; k < N; ++k) {
    if (!open[k]) out.indices.push_back(k);
  }
  return out;
}

std::vector<std::size_t> implicit_equalities_primal(const FaceQuery& q) {
  check_query(q);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < q.inequalities.size(); ++k) {
    LinearProgram lp;
    lp.num_vars = q.dim;
    lp.free_vars.assign(q.dim, true);
    lp.objective = q.inequalities[k];
    for (const auto& r : q.inequalities) lp.constraints.push_back({r, Relation::GreaterEq, 0});
    for (const auto& e : q.equalities) lp.constraints.push_back({e, Relation::Equal, 0});
    lp.constraints.push_back({q.inequalities[k], Relation::LessEq, 1});
    LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal) throw std::logic_error("bounded primal program not optimal");
    if (res.value.is_zero()) out.push_back(k);
  }
  return out;
}

std::size_t face_span_dim(const FaceQuery& q) {
  auto imp = implicit_equalities(q);
  std::vector<RationalVector> rows = q.equalities;
  for (auto k : imp.indices) rows.push_back(q.inequalities[k]);
  if (rows.empty()) return q.dim;
  return q.dim - rank(rows, q.dim);
}

namespace {

bool positive_multiple(const RationalVector& v, const RationalVector& target) {
  std::size_t p = 0;
  while (p < target.size() && target[p].is_zero()) ++p;
  if (v[p].is_zero()) return false;
  Rational t = v[p] / target[p];
  if (t <= 0) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != t * target[i]) return false;
  }
  return true;
}

}  // namespace

ExtremalityResult is_extremal_in_cone(const RationalVector& target,
                                      const std::vector<RationalVector>& generators) {
  const std::size_t dim = target.size();
  if (std::all_of(target.begin(), target.end(), [](const Rational& x) { return x.is_zero(); })) {
    throw std::invalid_argument("zero target has no ray");
  }
  std::vector<std::size_t> cand;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& v = generators[k];
    if (v.size() != dim) throw std::invalid_argument("generator length differs from target");
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) continue;
    if (positive_multiple(v, target)) continue;
    bool dup = false;
    for (auto c : cand) {
      if (generators[c] == v) {
        dup = true;
        break;
      }
    }
    if (!dup) cand.push_back(k);
  }
  ExtremalityResult out;
  LinearProgram lp;
  lp.num_vars = cand.size();
  for (std::size_t t = 0; t < dim; ++t) {
    LpConstraint c;
    c.coeffs.resize(cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k) c.coeffs[k] = generators[cand[k]][t];
    c.rel = Relation::Equal;
    c.rhs = target[t];
    lp.constraints.push_back(std::move(c));
  }
  LpResult res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) {
    out.extremal = true;
    return out;
  }
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (!res.witness[k].is_zero()) {
      out.indices.push_back(cand[k]);
      out.coeffs.push_back(res.witness[k]);
    }
  }
  return out;
}

}  // namespace fcone
