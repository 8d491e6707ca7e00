#pragma once

// Finitely generated abelian groups Z^r + Z/d_1 + ... + Z/d_t with a group
// action by integer matrices.

#include <grpcohom/group.hpp>
#include <grpcohom/integer.hpp>
#include <grpcohom/linalg.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace grpcohom {

// Coefficient vector of length rank + torsion count. Torsion coordinate i is
// kept in [0, d_i).
using ModElement = std::vector<Integer>;

struct ModuleViolation {
  enum class Kind { shape, well_defined, identity, homomorphism, invertibility };
  Kind kind;
  std::vector<Element> witness;
  std::string message;
};

std::vector<ModuleViolation> validate_module(const FiniteGroup& group, int rank,
                                             const std::vector<std::int64_t>& torsion,
                                             const std::vector<linalg::IntMatrix>& action);

class GModule {
 public:
  // `action[g]` is the matrix of g; throws std::invalid_argument on any
  // violated module axiom.
  GModule(GroupPtr group, int rank, std::vector<std::int64_t> torsion, std::vector<linalg::IntMatrix> action);

  static GModule trivial(GroupPtr group, int rank, std::vector<std::int64_t> torsion);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t dim() const { return moduli_.size(); }
  // Per-coordinate modulus, 0 on free coordinates.
  const std::vector<Integer>& moduli() const { return moduli_; }
  const linalg::IntMatrix& action(Element g) const { return action_[static_cast<std::size_t>(g)]; }
  bool has_trivial_action() const { return trivial_; }
  bool acts_trivially(Element g) const { return acts_trivially_[static_cast<std::size_t>(g)] != 0; }

  ModElement zero() const { return ModElement(dim()); }
  ModElement canonical(ModElement a) const;
  void canonicalize(Integer* values) const;
  ModElement act(Element g, const ModElement& a) const;
  // out = g . in (canonical); `in` and `out` must not alias.
  void act_into(Element g, const Integer* in, Integer* out) const;

  bool is_finite() const { return rank_ == 0; }
  // Number of elements; only meaningful when finite.
  std::size_t cardinality() const;
  ModElement element_at(std::size_t index) const;
  std::size_t index_of(const ModElement& a) const;

  std::string describe() const;

  friend bool operator==(const GModule& a, const GModule& b);

 private:
  GroupPtr group_;
  int rank_;
  std::vector<std::int64_t> torsion_;
  std::vector<Integer> moduli_;
  std::vector<linalg::IntMatrix> action_;
  std::vector<char> acts_trivially_;
  bool trivial_;
};

using ModulePtr = std::shared_ptr<const GModule>;

bool same_module(const ModulePtr& a, const ModulePtr& b);

}  // namespace grpcohom
