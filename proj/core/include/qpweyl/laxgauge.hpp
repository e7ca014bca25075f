#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpweyl/families.hpp"
#include "qpweyl/identity.hpp"
#include "qpweyl/report.hpp"

namespace qpweyl {

/// up * y(q x) + mid * y(x) + down * y(x/q) = 0 in the shift variable x
/// (z, or u after a dilation or inversion).
struct LinearQDE {
  Expr up;
  Expr mid;
  Expr down;
  Symbol shift = sym::z;
};

/// One of the four moves on a linear equation.
///
///   pochhammer   y = y~ * prod (q a/x; q)_inf / (q b/x; q)_inf over the pairs
///   power        y = x^d y~ with delta = q^d
///   dilation     x = u / c
///   inversion    x = c / u and y = x^d y~(u), delta = q^d
struct GaugeSpec {
  enum class Kind { pochhammer, power, dilation, inversion };

  Kind kind = Kind::power;
  std::vector<std::pair<Expr, Expr>> pairs;
  Expr c;
  Expr delta;

  static GaugeSpec pochhammer(Expr a, Expr b);
  static GaugeSpec pochhammer(std::vector<std::pair<Expr, Expr>> pairs);
  static GaugeSpec power(Expr delta);
  static GaugeSpec dilation(Expr c);
  static GaugeSpec inversion(Expr c, Expr delta);

  std::string str() const;
};

/// The spectral equation L1 y = 0 of the family, coefficients collected by shift.
LinearQDE build_L1(const FamilyDescriptor& fam);

/// Throws std::invalid_argument when a gauge parameter mentions z or u.
LinearQDE apply_gauge(const LinearQDE& eq, const GaugeSpec& g);

/// Applies t to every coefficient. Throws std::invalid_argument if t moves
/// the shift variable.
LinearQDE substitute_params(const LinearQDE& eq, const Transformation& t);

/// Renames the shift variable.
LinearQDE rename_shift(const LinearQDE& eq, Symbol to);

struct Equivalence {
  IdentityResult result;
  /// Coefficient used as the common factor: "mid", "up" or "down".
  std::string pivot;
  /// Component whose cross product failed, empty on success.
  std::string failed;
};

/// Equality up to one common rational factor, tested by cross-multiplying
/// against the first coefficient (mid, then up, then down) that is not
/// identically zero in either equation. Degenerate when all three vanish.
Equivalence equations_equivalent(const LinearQDE& a, const LinearQDE& b, const ConstraintRelation* k,
                                 const IdentityConfig& cfg);

/// Parameter maps induced by the power gauge and dilations, as substitutions
/// on primitive symbols carrying a free scale symbol (s for G, c otherwise).
///   G[s]:   nu1, nu2 -> /s; nu5, nu6 -> s*; g -> s*g
///   D[c]:   nu3, nu4, kappa1, f -> c*
///   S_E6[c], S_E7[c]: nu1..nu4, kappa1, kappa2, f -> c*; g -> g/c
Transformation scaling_G();
Transformation scaling_D();
Transformation scaling_SE6();
Transformation scaling_SE7();

/// Replaces the free scale symbol in every image by value.
Transformation specialize(const Transformation& t, Symbol scale, const Expr& value);

class UnknownClaim : public std::invalid_argument {
 public:
  explicit UnknownClaim(const std::string& id) : std::invalid_argument("unknown gauge claim '" + id + "'") {}
};

struct GaugeClaim {
  std::string id;
  std::string family;
  std::vector<GaugeSpec> chain;
  Transformation target;
};

/// d5.s2, d5.s2s1s0s2, d5.G, d5.D, d5.inversion, e6.s6, e6.S, e7.s0s4s0, e7.S.
const std::vector<std::string>& gauge_claim_ids();

/// Ids whose prefix matches the family.
std::vector<std::string> gauge_claim_ids(const FamilyDescriptor& fam);

/// Builds the claim against fam's (possibly overridden) generator tables.
GaugeClaim gauge_claim(const FamilyDescriptor& fam, std::string_view id);

/// L1 pushed through the claim's gauge chain against L1 under the target map,
/// both in the original shift variable.
CheckRecord verify_gauge_claim(const FamilyDescriptor& fam, std::string_view id, const IdentityConfig& cfg);

/// Every claim of the family.
Report verify_gauge_claims(const FamilyDescriptor& fam, const IdentityConfig& cfg);

}  // namespace qpweyl
