#pragma once

#include "fcone/classes.hpp"
#include "fcone/fcurve.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fcone {

/// Intersection numbers of a curve with the canonical generators; sorted by
/// symbol, zero entries omitted.
using CurveVector = std::vector<std::pair<BasisSymbol, long long>>;

CurveVector curve_vector(const FCurve& f);

Rational intersect(const DivisorClass& d, const FCurve& f);
Rational intersect(const DivisorClass& d, const CurveVector& v);

inline constexpr int kMatrixCacheFormatVersion = 1;

/// Rows are generators, columns are curves.
struct PairingMatrix {
  Context ctx;
  std::vector<BasisSymbol> generators;
  std::vector<FCurve> curves;
  std::vector<std::vector<Rational>> entries;
};

PairingMatrix pairing_matrix(const Context& ctx);

std::string to_cache_json(const PairingMatrix& m);
/// Throws std::runtime_error when the text is not a valid cache for ctx.
PairingMatrix from_cache_json(const Context& ctx, const std::string& text);

/// Loads from `dir` when a valid cache exists, otherwise computes and writes
/// it atomically.  A corrupt cache is recomputed; `warning` receives a note.
PairingMatrix cached_pairing_matrix(const Context& ctx, const std::filesystem::path& dir,
                                    std::string* warning = nullptr);

std::filesystem::path cache_file(const std::filesystem::path& dir, const Context& ctx);

}  // namespace fcone
