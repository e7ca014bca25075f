#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpweyl/families.hpp"
#include "qpweyl/field.hpp"
#include "qpweyl/identity.hpp"
#include "qpweyl/report.hpp"

namespace qpweyl {

/// The parameter adjustment Xi of the family (a copy of fam.xi).
Transformation make_xi(const FamilyDescriptor& fam);

/// T = Xi o w^2 with w = fam.evolution_word.
Transformation time_evolution(const FamilyDescriptor& fam);

/// The two sides of one nonlinear relation of the family, written without
/// quotients of the unknowns (E6/E7 are cross-multiplied). tf, tg stand for
/// T(f), T(g); t supplies T on parameters where the relation needs it.
struct RelationSides {
  std::string name;
  Expr lhs;
  Expr rhs;
};
std::vector<RelationSides> nonlinear_relations(const FamilyDescriptor& fam, const Transformation& t);

/// Ids "<F>/T/nu1" .. "<F>/T/nu8", "<F>/T/kappa1", "<F>/T/kappa2",
/// "<F>/T/relation1", "<F>/T/relation2". Modulo fam.constraint when set.
Report verify_theorem_i(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Generators zeta of the scaling statement and the composed scaling map
/// (D5: G[kappa2/(nu5 nu6)] D[kappa1/(q nu7 nu8)], E6: S_E6[kappa2/(nu5 nu6 kappa1^2)],
/// E7: S_E7[kappa1/(q kappa2)]).
std::vector<Expr> theorem_ii_generators(const FamilyDescriptor& fam);
Transformation theorem_ii_scaling(const FamilyDescriptor& fam);

/// Xi(zeta) against the scaling map for every generator; ids "<F>/xi/<zeta>".
Report verify_theorem_ii(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Whether Xi maps the constraint variety to itself: Xi(kappa1^2 kappa2^2)
/// against Xi(q nu1 ... nu8), modulo the constraint. Id "<F>/xi/constraint".
CheckRecord check_xi_constraint(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Exact point of the parameter space and the (f, g) plane.
struct OrbitState {
  mpq_class q;
  std::array<mpq_class, 8> nu;
  mpq_class kappa1;
  mpq_class kappa2;
  mpq_class f;
  mpq_class g;
  long t = 0;

  /// kappa1^2 kappa2^2 - q nu1 ... nu8.
  mpq_class constraint_residual() const;
  /// Recomputes nu8 from the constraint. Throws std::domain_error when
  /// q nu1 ... nu7 vanishes.
  void solve_nu8();
  Valuation<RationalField> valuation() const;

  friend bool operator==(const OrbitState&, const OrbitState&) = default;
};

/// A denominator of the step map vanished.
class PoleError : public std::domain_error {
 public:
  PoleError(long step, std::string stage, Expr denominator);
  /// t of the state the failing step started from.
  long step() const { return step_; }
  /// "f" or "g": which half of the step failed.
  const std::string& stage() const { return stage_; }
  const Expr& denominator() const { return denominator_; }

 private:
  long step_;
  std::string stage_;
  Expr denominator_;
};

/// The two halves of one step in each direction, as expressions in
/// f, g and the parameters.
///
///   forward:  f' = forward_f(f, g, kappa);   kappa advanced;
///             g' = forward_g(f', g, kappa')
///   backward: g  = backward_g(f', g', kappa'); kappa restored;
///             f  = backward_f(f', g, kappa)
struct StepMap {
  Expr forward_f;
  Expr forward_g;
  Expr backward_g;
  Expr backward_f;
};
const StepMap& step_map(const FamilyDescriptor& fam);

enum class Direction { forward, backward };

/// One exact step; kappa1 -> kappa1/q, kappa2 -> q kappa2 forward. Throws PoleError.
OrbitState orbit_step(const FamilyDescriptor& fam, const OrbitState& st, Direction dir = Direction::forward);

struct Orbit {
  std::vector<OrbitState> states;
  /// Set when the iteration stopped early.
  std::optional<PoleError> pole;
};

/// st0 followed by up to n forward steps.
Orbit orbit(const FamilyDescriptor& fam, const OrbitState& st0, long n);

}  // namespace qpweyl
