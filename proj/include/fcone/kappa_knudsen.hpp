#pragma once

#include "fcone/classes.hpp"
#include "fcone/fcurve.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fcone {

/// Knudsen-type curves attached to the markings p and q: F5[0,0]({p},{q})
/// and every F6[0,0,a,g-a]({p},{q},A,R\A) with R = [n] minus {p,q}.
struct KnudsenSet {
  Context ctx;
  int p = 0;
  int q = 0;
  std::vector<FCurve> curves;
};

KnudsenSet knudsen_set(const Context& ctx, int p, int q);

/// Image of a divisor in V_{g,n}.  For n = 2 the coordinates are the
/// pairings with the Knudsen curves (labelled by curve); for n >= 3 they are
/// e_0..e_{floor(g/2)}, where e_a collects the alternating sum over the
/// Knudsen curves whose genus-a leg carries A:  sum (-1)^|A| D.C.  The middle
/// coordinate e_{g/2} is undefined when g is even and n is odd.
struct FImage {
  bool by_curve = false;
  std::vector<std::string> labels;
  RationalVector coords;
  std::vector<bool> defined;
};

FImage f_image(const DivisorClass& d, const KnudsenSet& k);

std::string render(const FImage& f);

/// Parses "-2 e_0 + 1/2 e_1" or "F5[0,0]({1},{2}) + F6[...]" into label ->
/// coefficient; throws std::invalid_argument on malformed text.
std::map<std::string, Rational> parse_image_expression(std::string_view text);

/// One printed f-identity instantiated on a space and a Knudsen pair.
struct FIdentity {
  std::string id;
  Context ctx;
  int p = 1;
  int q = 2;
  std::string divisor;
  std::string expected;
  /// Side condition as printed, e.g. "n>2 and n even".
  std::string predicate;
  std::string printed;
  std::string claim;
};

struct FIdentityCheck {
  bool pass = false;
  std::string got;
  std::string detail;
};

/// Compares on every defined coordinate; an expected label the image does
/// not have is a failure.
FIdentityCheck check_f_identity(const FIdentity& id);

/// Rows id, g, n, p, q, divisor, expected, predicate, printed, claim.
std::vector<FIdentity> load_f_identities(const std::filesystem::path& tsv);
std::filesystem::path default_f_identity_file();

/// One concrete divisor of a catalog family on a given space.
struct CatalogInstance {
  std::string name;
  std::string parameters;
  DivisorClass divisor;
  std::vector<FCurve> contracts;
};

struct CatalogEntry {
  std::string name;
  std::string anchor;
  std::string g_range;
  std::string n_range;
  std::string parameters;
  std::function<bool(const Context&)> applies;
  std::function<std::vector<CatalogInstance>(const Context&)> instances;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Every instance of every entry applicable to ctx, in catalog order.
std::vector<CatalogInstance> catalog(const Context& ctx);

/// JSON list of {name, g_range, n_range, parameters, divisor_expression,
/// contracts[]}.
std::string catalog_json(const Context& ctx);

}  // namespace fcone
