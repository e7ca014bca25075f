#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpweyl/identity.hpp"
#include "qpweyl/report.hpp"
#include "qpweyl/transform.hpp"

namespace qpweyl {

class UnknownFamily : public std::invalid_argument {
 public:
  explicit UnknownFamily(const std::string& name) : std::invalid_argument("unknown family '" + name + "'") {}
};

class UnknownGenerator : public std::invalid_argument {
 public:
  UnknownGenerator(const std::string& family, const std::string& name)
      : std::invalid_argument("family " + family + " has no generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class WordSyntaxError : public std::invalid_argument {
 public:
  WordSyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Sequence of generator names, leftmost printed first. Applied to an
/// expression the rightmost letter acts first.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<std::string> letters) : letters_(std::move(letters)) {}

  /// Whitespace separated names; "( ... )^n" groups are expanded. The empty
  /// string is the identity word.
  static WeylWord parse(std::string_view text);

  const std::vector<std::string>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  WeylWord power(int n) const;
  friend WeylWord operator+(const WeylWord& a, const WeylWord& b);

  std::string str() const;

 private:
  std::vector<std::string> letters_;
};

struct Generator {
  std::string name;
  Transformation map;
};

/// Data of one of the families D5, E6, E7.
struct FamilyDescriptor {
  std::string name;
  /// Reflections s0.. first, then the diagram automorphisms.
  std::vector<Generator> generators;
  /// Number of reflections s0 .. s{n-1}.
  int reflections = 0;
  std::vector<std::pair<int, int>> dynkin_edges;
  /// Defaults to kappa1^2 kappa2^2 = q nu1 ... nu8 for every family.
  std::optional<ConstraintRelation> constraint;
  WeylWord evolution_word;
  /// Parameter adjustment in T = xi o word^2.
  Transformation xi;
  /// Closed forms of composite words stored alongside the generators,
  /// keyed by the word text (E7: "s0 s4 s0").
  std::map<std::string, Transformation> composites;

  const Transformation& generator(std::string_view name) const;
  bool has_generator(std::string_view name) const;
  std::vector<std::string> pi_names() const;
  bool adjacent(int i, int j) const;
  const ConstraintRelation* constraint_ptr() const { return constraint ? &*constraint : nullptr; }

  /// Replaces one generator image; used by mutation fixtures.
  void override_image(std::string_view generator, Symbol x, Expr image);
};

/// "x -> expr; y -> expr; ..." as a simultaneous substitution. Throws
/// std::invalid_argument for malformed entries, SyntaxError from the images.
Transformation parse_substitution(std::string_view text, const std::string& label = "");

/// "D5", "E6" or "E7" (case-insensitive).
FamilyDescriptor make_family(std::string_view name);

const std::vector<std::string>& family_names();

/// Left fold of compose; the identity word gives the identity map.
Transformation word_to_transform(const FamilyDescriptor& fam, const WeylWord& w);

/// s_i^2 = id and pi^2 = id on every state symbol.
Report verify_involutions(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Braid relation on Dynkin edges, commutation on every other pair.
Report verify_braid(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// D5: the listed pi relations and (pi1 pi2)^4 = id. E6/E7: for each pi and
/// s_i, finds the j with pi s_i pi^-1 = s_j; plus the order of pi1 pi2 (E6).
Report verify_pi_relations(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Cross-checks every stored composite against its word.
Report verify_composites(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// The printed s(kappa2) of the evolution word against its dual form
/// (D5, E6) or its closed form (E7), modulo fam.constraint. Ids
/// "<F>/constraint/dual", "<F>/constraint/s(kappa2)".
Report verify_constraint_claims(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Involutions, braid and pi relations, composite tables.
Report verify_relations(const FamilyDescriptor& fam, const IdentityConfig& cfg);

/// Conjugation permutation found by verify_pi_relations: pi -> (i -> j).
/// Entries are -1 when no reflection matches.
std::map<std::string, std::vector<int>> discover_pi_permutations(const FamilyDescriptor& fam,
                                                                 const IdentityConfig& cfg);

}  // namespace qpweyl
