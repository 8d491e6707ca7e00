#pragma once

// The double complex Map(G^{p+1} x G^{q+1}, A), its total complex, edge
// augmentations, the row and vertical contractions, equivariantization and
// the psi witness.

#include <grpcohom/cochain.hpp>
#include <grpcohom/continuity.hpp>
#include <grpcohom/signs.hpp>

#include <stdexcept>
#include <variant>

namespace grpcohom {

// Tuples are (x_0..x_p, y_0..y_q) with the x-block first.
class BiCochain : public CoefficientTable, public TableArithmetic<BiCochain> {
 public:
  BiCochain(ModulePtr module, int p, int q);
  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
};

// components[p] has bidegree (p, n - p). Degree -1 has no components.
class TotalCochain {
 public:
  TotalCochain(ModulePtr module, int degree);

  int degree() const { return degree_; }
  const ModulePtr& module_ptr() const { return module_; }
  std::size_t size() const { return components_.size(); }
  BiCochain& operator[](std::size_t p) { return components_[p]; }
  const BiCochain& operator[](std::size_t p) const { return components_[p]; }
  const std::vector<BiCochain>& components() const { return components_; }
  bool is_zero() const;

  TotalCochain& operator+=(const TotalCochain& other);
  TotalCochain& operator-=(const TotalCochain& other);
  friend TotalCochain operator+(TotalCochain a, const TotalCochain& b) { return a += b; }
  friend TotalCochain operator-(TotalCochain a, const TotalCochain& b) { return a -= b; }
  friend TotalCochain operator-(TotalCochain a);
  friend bool operator==(const TotalCochain& a, const TotalCochain& b);

 private:
  ModulePtr module_;
  int degree_;
  std::vector<BiCochain> components_;
};

// Raised when an identity that must hold by construction fails.
class IdentityFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BiCochain d_h(const BiCochain& f);
BiCochain d_v(const BiCochain& f);
TotalCochain total_differential(const TotalCochain& t);

// Edge inclusions; both require f equivariant, augment_v also requires f in
// the class. Throws std::invalid_argument otherwise.
TotalCochain augment_h(const Cochain& f, const SignConvention& s = kFrozenSigns);
TotalCochain augment_v(const Cochain& f, const ContinuityClass& cls, const SignConvention& s = kFrozenSigns);
BiCochain j_h(const Cochain& f, const SignConvention& s = kFrozenSigns);
BiCochain j_v(const Cochain& f, const SignConvention& s = kFrozenSigns);

// r(f)(y) = sigma_h f(y_0; y): the retraction with h d_h = id - j_h r on (0, q).
Cochain row_augmentation(const BiCochain& f, const SignConvention& s = kFrozenSigns);

// h(f)(x_0..x_{p-1}; y) = (-1)^p f(x_0..x_{p-1}, y_0; y). Requires p >= 1.
BiCochain row_contraction(const BiCochain& f);

// k(f)(x; y_0..y_{q-1}) = k_sign(p) f(x; e, y_0, ..., y_{q-1}). Requires
// q >= 1. Refused with a witnessing pair of tuples when the result is not
// locally continuous for the class.
std::variant<BiCochain, ClassViolation> vertical_insertion(const BiCochain& f, const ContinuityClass& cls,
                                                           const SignConvention& s = kFrozenSigns);

// (Tf)(x; y) = x_0 . f(x_0^{-1} x; x_0^{-1} y).
BiCochain equivariantize(const BiCochain& f);
BiCochain g_action(Element g, const BiCochain& f);
bool is_equivariant(const BiCochain& f);

// Class membership with the y-block restricted to Gamma_U.
BlockPartition bicochain_partition(const ContinuityClass& cls, const FiniteGroup& group, int p, int q,
                                   const IdentityNbhd& U);
std::optional<ClassViolation> member_violation(const ContinuityClass& cls, const BiCochain& f,
                                               const IdentityNbhd& U);
bool is_member(const ContinuityClass& cls, const BiCochain& f, const IdentityNbhd& U);
// Maximal U witnessing local continuity, or none.
std::optional<IdentityNbhd> is_locally_continuous(const ContinuityClass& cls, const BiCochain& f);

// W with D(W) = j_v(f) - j_h(f); f must be an equivariant cocycle in the
// class. The equation is re-checked and IdentityFailure thrown if it fails.
TotalCochain psi_witness(const Cochain& f, const ContinuityClass& cls, const SignConvention& s = kFrozenSigns);

}  // namespace grpcohom
