#include "fcone/extremality.hpp"

#include "json.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

namespace fcone {

void check_budget(const Context& ctx, std::size_t curves, std::size_t rank, bool allow_large) {
  if (allow_large) return;
  if (curves > kMaxCurvesInBudget) {
    throw BudgetExceeded(to_string(ctx) + " has " + std::to_string(curves) +
                         " F-curves, above the budget of " + std::to_string(kMaxCurvesInBudget) +
                         "; pass --allow-large to proceed");
  }
  if (rank > kMaxRankInBudget) {
    throw BudgetExceeded(to_string(ctx) + " has numerical rank " + std::to_string(rank) +
                         ", above the budget of " + std::to_string(kMaxRankInBudget) +
                         "; pass --allow-large to proceed");
  }
}

FConeSpace::FConeSpace(PairingMatrix matrix) : ctx_(matrix.ctx), matrix_(std::move(matrix)) {
  const std::size_t N = matrix_.curves.size();
  basis_ = independent_rows(matrix_.entries, N);
  std::map<RationalVector, std::size_t> seen;
  class_of_.resize(N);
  for (std::size_t c = 0; c < N; ++c) {
    RationalVector u(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) u[k] = matrix_.entries[basis_[k]][c];
    auto [it, inserted] = seen.try_emplace(u, classes_.size());
    if (inserted) {
      classes_.push_back(std::move(u));
      members_.emplace_back();
    }
    class_of_[c] = it->second;
    members_[it->second].push_back(c);
    curve_index_.emplace(matrix_.curves[c], c);
  }
  basis_curves_ = independent_rows(classes_, basis_.size());
  if (basis_curves_.size() != basis_.size()) throw std::logic_error("curve classes do not span");
  std::vector<RationalVector> rows;
  for (auto k : basis_curves_) rows.push_back(classes_[k]);
  basis_curve_coords_ = RationalMatrix::from_rows(rows, basis_.size());
}

std::shared_ptr<const FConeSpace> FConeSpace::build(const Context& ctx, bool allow_large) {
  ctx.require_valid();
  auto curves = enumerate_fcurves(ctx, allow_large ? std::numeric_limits<std::size_t>::max() : kMaxCurvesInBudget);
  check_budget(ctx, curves.size(), 0, allow_large);
  auto space = std::make_shared<FConeSpace>(pairing_matrix(ctx));
  check_budget(ctx, curves.size(), space->rank(), allow_large);
  return space;
}

std::shared_ptr<const FConeSpace> FConeSpace::build_cached(const Context& ctx, bool allow_large,
                                                           const std::filesystem::path& cache_dir,
                                                           std::string* warning) {
  ctx.require_valid();
  auto curves = enumerate_fcurves(ctx, allow_large ? std::numeric_limits<std::size_t>::max() : kMaxCurvesInBudget);
  check_budget(ctx, curves.size(), 0, allow_large);
  auto space = std::make_shared<FConeSpace>(cached_pairing_matrix(ctx, cache_dir, warning));
  check_budget(ctx, curves.size(), space->rank(), allow_large);
  return space;
}

std::size_t FConeSpace::index_of(const FCurve& f) const {
  auto it = curve_index_.find(f);
  if (it == curve_index_.end()) {
    throw std::invalid_argument("curve " + render(f) + " is not an F-curve of " + to_string(ctx_));
  }
  return it->second;
}

RationalVector FConeSpace::coordinates(const FCurve& f) const {
  return classes_[class_of_[index_of(f)]];
}

RationalVector FConeSpace::divisor_coordinates(const DivisorClass& d) const {
  if (d.context() != ctx_) throw std::invalid_argument("divisor lives on another space");
  RationalVector b;
  for (auto k : basis_curves_) b.push_back(intersect(d, matrix_.curves[members_[k].front()]));
  auto y = solve(basis_curve_coords_, b);
  if (!y) throw std::logic_error("singular basis curve matrix");
  return *y;
}

DivisorClass FConeSpace::divisor_from_coordinates(const RationalVector& y) const {
  if (y.size() != basis_.size()) throw std::invalid_argument("coordinate length differs from rank");
  DivisorClass d(ctx_);
  for (std::size_t k = 0; k < y.size(); ++k) d.add_term(matrix_.generators[basis_[k]], y[k]);
  return d;
}

FnefResult is_fnef(const FConeSpace& space, const DivisorClass& d) {
  if (d.context() != space.context()) throw std::invalid_argument("divisor lives on another space");
  FnefResult out;
  for (const auto& f : space.curves()) {
    Rational v = intersect(d, f);
    if (v < 0) {
      out.nef = false;
      out.witness = f;
      out.value = v;
      return out;
    }
  }
  return out;
}

namespace {

struct FaceData {
  std::size_t index = 0;
  std::vector<RationalVector> hull;
};

/// Face of the F-nef cone cut out by the given curve classes.
FaceData contracting_face(const FConeSpace& space, const std::vector<RationalVector>& contracted) {
  const std::size_t rho = space.rank();
  FaceQuery q;
  q.dim = rho;
  q.inequalities = space.classes();
  q.equalities = contracted;
  ImplicitEqualities imp = implicit_equalities(q);
  std::vector<RationalVector> tight = q.equalities;
  for (auto k : imp.indices) tight.push_back(q.inequalities[k]);
  FaceData out;
  out.index = tight.empty() ? 0 : rank(tight, rho);
  std::vector<RationalVector> basis =
      tight.empty() ? nullspace(RationalMatrix(0, rho)) : nullspace(RationalMatrix::from_rows(tight, rho));
  const RationalVector& p = imp.interior_point;
  std::vector<bool> is_tight(q.inequalities.size(), false);
  for (auto k : imp.indices) is_tight[k] = true;
  std::vector<RationalVector> candidates{p};
  for (const auto& b : basis) {
    Rational eps = 1;
    for (std::size_t j = 0; j < q.inequalities.size(); ++j) {
      if (is_tight[j]) continue;
      Rational s = dot(b, q.inequalities[j]);
      if (s < 0) {
        Rational bound = dot(p, q.inequalities[j]) / -s;
        if (bound < eps) eps = bound;
      }
    }
    RationalVector v = p;
    for (std::size_t t = 0; t < rho; ++t) v[t] += eps * b[t];
    candidates.push_back(std::move(v));
  }
  for (auto k : independent_rows(candidates, rho)) out.hull.push_back(candidates[k]);
  if (out.hull.size() != basis.size()) throw std::logic_error("certificate does not span the face");
  return out;
}

}  // namespace

std::size_t index_of_extremality(const FConeSpace& space, const RationalVector& curve_class) {
  if (curve_class.size() != space.rank()) throw std::invalid_argument("class length differs from rank");
  return contracting_face(space, {curve_class}).index;
}

std::size_t index_of_extremality(const FConeSpace& space, const FCurve& f) {
  return index_of_extremality(space, space.coordinates(f));
}

bool in_verified_range(const Context& ctx) {
  return (ctx.g == 2 && ctx.n <= 5) || (ctx.g == 3 && ctx.n <= 4) || (ctx.g == 4 && ctx.n <= 3);
}

ExtremalityReport regular_extremal_report(const FConeSpace& space, const FCurve& f) {
  auto t0 = std::chrono::steady_clock::now();
  ExtremalityReport r{f, false, {}, 0, false, {}, true, 0};
  RationalVector u = space.coordinates(f);
  ExtremalityResult ext = is_extremal_in_cone(u, space.classes());
  r.extremal = ext.extremal;
  for (std::size_t k = 0; k < ext.indices.size(); ++k) {
    const auto& rep = space.curves()[space.class_members(ext.indices[k]).front()];
    r.decomposition.push_back({ext.coeffs[k], rep});
  }
  FaceData face = contracting_face(space, {u});
  r.index = face.index;
  r.regular = r.extremal && r.index == 1;
  for (const auto& y : face.hull) r.certificate.push_back(space.divisor_from_coordinates(y));
  r.conditional = !in_verified_range(space.context());
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_json(const ExtremalityReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["g"] = r.curve.context().g;
  j["n"] = r.curve.context().n;
  j["curve"] = render(r.curve);
  j["extremal"] = r.extremal;
  if (!r.extremal) {
    auto dec = nlohmann::ordered_json::array();
    for (const auto& t : r.decomposition) {
      nlohmann::ordered_json e;
      e["coeff"] = to_pq_string(t.coeff);
      e["curve"] = render(t.curve);
      dec.push_back(std::move(e));
    }
    j["decomposition"] = std::move(dec);
  }
  j["index"] = r.index;
  j["regular"] = r.regular;
  auto cert = nlohmann::ordered_json::array();
  for (const auto& d : r.certificate) cert.push_back(render(d));
  j["certificate"] = std::move(cert);
  j["conditional_flag"] = r.conditional;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

Rational implication_value(const FConeSpace& space, const FCurve& c, const FCurve& c_prime) {
  const std::size_t rho = space.rank();
  RationalVector u = space.coordinates(c);
  RationalVector w = space.coordinates(c_prime);
  LinearProgram lp;
  lp.num_vars = rho;
  lp.free_vars.assign(rho, true);
  lp.objective = w;
  for (const auto& cls : space.classes()) lp.constraints.push_back({cls, Relation::GreaterEq, 0});
  lp.constraints.push_back({u, Relation::Equal, 0});
  lp.constraints.push_back({w, Relation::LessEq, 1});
  LpResult res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) throw std::logic_error("implication program not optimal");
  return res.value;
}

bool implication_check(const FConeSpace& space, const FCurve& c, const FCurve& c_prime) {
  FaceQuery q;
  q.dim = space.rank();
  q.inequalities = space.classes();
  q.equalities = {space.coordinates(c)};
  std::size_t target = space.class_of(space.index_of(c_prime));
  for (auto k : implicit_equalities(q).indices) {
    if (k == target) return true;
  }
  return false;
}

std::vector<DivisorClass> contracting_face_basis(const FConeSpace& space,
                                                 const std::vector<FCurve>& contracted) {
  std::vector<RationalVector> eq;
  for (const auto& f : contracted) eq.push_back(space.coordinates(f));
  std::vector<DivisorClass> out;
  for (const auto& y : contracting_face(space, eq).hull) out.push_back(space.divisor_from_coordinates(y));
  return out;
}

RationalMatrix nspan_projection(const FConeSpace& space, const std::vector<FCurve>& contracted,
                                const std::vector<FCurve>& targets) {
  auto basis = contracting_face_basis(space, contracted);
  RationalMatrix m(basis.size(), targets.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < targets.size(); ++c) m(r, c) = intersect(basis[r], targets[c]);
  }
  return m;
}

}  // namespace fcone
