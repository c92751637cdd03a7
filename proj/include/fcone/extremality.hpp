#pragma once

#include "fcone/classes.hpp"
#include "fcone/cone.hpp"
#include "fcone/fcurve.hpp"
#include "fcone/pairing.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fcone {

/// Default size caps; exceeding either needs an explicit opt-in.
inline constexpr std::size_t kMaxCurvesInBudget = 50000;
inline constexpr std::size_t kMaxRankInBudget = 60;

/// The F-cone of one space in intersection-vector coordinates: every curve is
/// represented by its pairings with a fixed maximal independent subset of the
/// generators (so coordinates are integers and the dimension is the numerical
/// rank of the pairing matrix).
class FConeSpace {
 public:
  explicit FConeSpace(PairingMatrix matrix);
  /// Enumerates and checks the size budget unless `allow_large`.
  static std::shared_ptr<const FConeSpace> build(const Context& ctx, bool allow_large = false);
  /// As above, reading and writing the pairing-matrix cache under `cache_dir`.
  static std::shared_ptr<const FConeSpace> build_cached(const Context& ctx, bool allow_large,
                                                        const std::filesystem::path& cache_dir,
                                                        std::string* warning = nullptr);

  const Context& context() const { return ctx_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<FCurve>& curves() const { return matrix_.curves; }
  const std::vector<BasisSymbol>& generators() const { return matrix_.generators; }
  /// Generators whose rows form the coordinate system.
  const std::vector<std::size_t>& basis_rows() const { return basis_; }

  /// Distinct curve classes, in order of first occurrence.
  const std::vector<RationalVector>& classes() const { return classes_; }
  std::size_t class_of(std::size_t curve) const { return class_of_[curve]; }
  const std::vector<std::size_t>& class_members(std::size_t cls) const { return members_[cls]; }

  std::size_t index_of(const FCurve& f) const;
  RationalVector coordinates(const FCurve& f) const;
  /// y with D.C = y . coordinates(C) for every curve C.
  RationalVector divisor_coordinates(const DivisorClass& d) const;
  /// Divisor class sum_k y_k (basis generator k).
  DivisorClass divisor_from_coordinates(const RationalVector& y) const;

 private:
  Context ctx_;
  PairingMatrix matrix_;
  std::vector<std::size_t> basis_;
  std::vector<RationalVector> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
  std::map<FCurve, std::size_t> curve_index_;
  std::vector<std::size_t> basis_curves_;
  RationalMatrix basis_curve_coords_;
};

void check_budget(const Context& ctx, std::size_t curves, std::size_t rank, bool allow_large);

struct FnefResult {
  bool nef = true;
  std::optional<FCurve> witness;
  Rational value = 0;
};

FnefResult is_fnef(const FConeSpace& space, const DivisorClass& d);

std::size_t index_of_extremality(const FConeSpace& space, const RationalVector& curve_class);
std::size_t index_of_extremality(const FConeSpace& space, const FCurve& f);

struct DecompositionTerm {
  Rational coeff;
  FCurve curve;
};

struct ExtremalityReport {
  FCurve curve;
  bool extremal = false;
  std::vector<DecompositionTerm> decomposition;
  std::size_t index = 0;
  bool regular = false;
  std::vector<DivisorClass> certificate;
  bool conditional = true;
  double elapsed_ms = 0;
};

/// Within the F-conjecture-verified range reported verdicts concern the nef
/// cone; outside it they are conditional.
bool in_verified_range(const Context& ctx);

ExtremalityReport regular_extremal_report(const FConeSpace& space, const FCurve& f);

/// Keys in fixed order; rationals as "p/q".  Timing only in "elapsed_ms".
std::string report_json(const ExtremalityReport& r, bool include_timing = true);

/// max { x.C' : x F-nef, x.C = 0, x.C' <= 1 }.
Rational implication_value(const FConeSpace& space, const FCurve& c, const FCurve& c_prime);
bool implication_check(const FConeSpace& space, const FCurve& c, const FCurve& c_prime);

/// F-nef divisors spanning the linear hull of the face of the F-nef cone
/// that vanishes on every listed curve.
std::vector<DivisorClass> contracting_face_basis(const FConeSpace& space,
                                                 const std::vector<FCurve>& contracted);

/// Rows: pairings of contracting_face_basis(contracted) with the targets.
RationalMatrix nspan_projection(const FConeSpace& space, const std::vector<FCurve>& contracted,
                                const std::vector<FCurve>& targets);

}  // namespace fcone
