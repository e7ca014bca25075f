#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qpweyl {

/// Handle to an entry of the process-wide symbol registry.
///
/// The registry is seeded with the reserved names used by the q-Painlevé
/// families (q, nu1..nu8, kappa1, kappa2, f, g, z, u, delta, c, s). Further
/// names can be added with declare_symbol(); nothing else ever creates one.
class Symbol {
 public:
  constexpr Symbol() = default;
  constexpr explicit Symbol(std::uint32_t id) : id_(id) {}

  constexpr std::uint32_t id() const { return id_; }
  const std::string& name() const;

  friend constexpr bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend constexpr auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  std::uint32_t id_ = 0;
};

namespace sym {
inline constexpr Symbol q{0};
inline constexpr Symbol nu1{1};
inline constexpr Symbol nu2{2};
inline constexpr Symbol nu3{3};
inline constexpr Symbol nu4{4};
inline constexpr Symbol nu5{5};
inline constexpr Symbol nu6{6};
inline constexpr Symbol nu7{7};
inline constexpr Symbol nu8{8};
inline constexpr Symbol kappa1{9};
inline constexpr Symbol kappa2{10};
inline constexpr Symbol f{11};
inline constexpr Symbol g{12};
inline constexpr Symbol z{13};
inline constexpr Symbol u{14};
inline constexpr Symbol delta{15};
inline constexpr Symbol c{16};
inline constexpr Symbol s{17};

inline constexpr std::uint32_t kReservedCount = 18;

/// nu(1) .. nu(8)
constexpr Symbol nu(int i) { return Symbol(static_cast<std::uint32_t>(i)); }
}  // namespace sym

/// Looks up a registered symbol; returns false when the name is unknown.
bool find_symbol(std::string_view name, Symbol& out);

/// Registers a fresh symbol (or returns the existing one of that name).
/// Throws std::invalid_argument for names that are not identifiers or that
/// collide with word-only generator names (pi1, pi2, s0..).
Symbol declare_symbol(std::string_view name);

/// Number of registered symbols; ids are dense in [0, symbol_count()).
std::uint32_t symbol_count();

/// The symbols that carry the family data: q, nu1..nu8, kappa1, kappa2, f, g.
const std::vector<Symbol>& state_symbols();

/// q, nu1..nu8, kappa1, kappa2.
const std::vector<Symbol>& parameter_symbols();

}  // namespace qpweyl

template <>
struct std::hash<qpweyl::Symbol> {
  std::size_t operator()(qpweyl::Symbol s) const noexcept { return s.id(); }
};
