#pragma once

// Sign normalization of the edge augmentations, the psi witness and the
// vertical insertion. The frozen values are re-derived by derive_signs(),
// which searches all candidates against the defining identities.

#include <string>

namespace grpcohom {

struct SignConvention {
  int sigma_h;  // j_h(f)(x_0; y) = sigma_h f(y)
  int sigma_v;  // j_v(f)(x; y_0) = sigma_v f(x)
  // psi witness component (p, n-1-p) is epsilon(p, n) (-1)^p f.
  int epsilon_base;
  bool epsilon_alternates;
  // k(f)(x; y) = k_sign(p) f(x; e, y)
  int k_base;
  bool k_alternates;

  int epsilon(int p, int /*n*/) const { return epsilon_alternates && (p % 2) ? -epsilon_base : epsilon_base; }
  int k_sign(int p) const { return k_alternates && (p % 2) ? -k_base : k_base; }

  std::string describe() const;

  friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

inline constexpr SignConvention kFrozenSigns{1, 1, -1, false, 1, true};

// First candidate, in the order +1 before -1 and constant before
// alternating, for which j_h and j_v are chain maps, the psi witness equation
// holds in degrees 1 and 2, and d_v k + k d_v = id at bidegrees (0,1) and
// (1,1). All checks run over G = Z/2 with A = Z/3 (Z/2 coefficients would
// hide every sign). Throws std::logic_error if no candidate survives.
SignConvention derive_signs();

}  // namespace grpcohom
