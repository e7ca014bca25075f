#pragma once

// Data found while checking the transcribed tables, used by tests and the
// acceptance report to show what the failing checks would need.

namespace qpweyl::corrections {

// 17 letters, ends in the same nine letters as the stored E7 word, and
// realizes s(nu_i) = kappa2/nu_{9-i}, s(kappa1) = kappa2, s(f) = 1/g.
inline constexpr const char* kE7Word = "s4 s3 s2 s5 s4 s6 s5 s7 s6 s3 s4 s5 s1 s2 s3 s4 s0";

// The only monomial parameter map with Xi s^2 = T on the constraint torus,
// i.e. S_E6[nu5 nu6/kappa2], completed on f and g.
inline constexpr const char* kE6Xi =
    "nu1 -> nu1*nu5*nu6/kappa2; nu2 -> nu2*nu5*nu6/kappa2; nu3 -> nu3*nu5*nu6/kappa2;"
    "nu4 -> nu4*nu5*nu6/kappa2; nu5 -> kappa1*nu5/(q*kappa2); nu6 -> kappa1*nu6/(q*kappa2);"
    "nu7 -> kappa1/(q*nu8); nu8 -> kappa1/(q*nu7); kappa1 -> kappa1^2*nu5*nu6/(q*kappa2*nu7*nu8);"
    "kappa2 -> kappa1*nu5*nu6/(q*kappa2); f -> f*nu5*nu6/kappa2; g -> g*kappa2/(nu5*nu6)";
inline constexpr const char* kE6Scale = "nu5*nu6/kappa2";

// D[c] scale that matches the D5 Xi on nu3, nu4, nu7/kappa1, nu8/kappa1, f.
inline constexpr const char* kD5DScale = "kappa1/(q*nu3*nu4)";

// Power gauge that completes the E7 s0 s4 s0 Pochhammer gauge.
inline constexpr const char* kE7GaugeDelta = "kappa1/(nu1*nu5)";

}  // namespace qpweyl::corrections
