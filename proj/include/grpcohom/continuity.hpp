#pragma once

// Identity neighbourhoods, diagonal neighbourhoods Gamma_U^p, and continuity
// classes that stand in for a topology on a finite group.

#include <grpcohom/cochain.hpp>
#include <grpcohom/operators.hpp>

#include <optional>
#include <string>
#include <vector>

namespace grpcohom {

class IdentityNbhd {
 public:
  // Throws std::invalid_argument if the identity is missing or an element is
  // out of range.
  IdentityNbhd(const FiniteGroup& group, std::vector<Element> elements);

  static IdentityNbhd whole(const FiniteGroup& group);
  static IdentityNbhd trivial(const FiniteGroup& group);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element g) const { return mask_[static_cast<std::size_t>(g)] != 0; }
  bool is_symmetric(const FiniteGroup& group) const;
  bool is_subset_of(const IdentityNbhd& other) const;

  friend bool operator==(const IdentityNbhd& a, const IdentityNbhd& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Element> elements_;
  std::vector<char> mask_;
};

// Whether positions [offset, length) of tuple t lie in Gamma_U.
bool in_gamma(const FiniteGroup& group, const TupleSpace& space, std::size_t t, std::size_t offset,
              const IdentityNbhd& U);

struct DiagonalNbhd {
  IdentityNbhd U;
  int degree;
  std::vector<std::size_t> tuples;  // ascending indices into G^{degree+1}
  std::vector<char> member;

  std::size_t size() const { return tuples.size(); }
  bool contains(std::size_t t) const { return member[t] != 0; }
};

DiagonalNbhd diagonal_nbhd(const FiniteGroup& group, const IdentityNbhd& U, int degree);

struct ClassViolation {
  std::vector<Element> tuple;
  std::vector<Element> other;
  std::string message;
};

class ContinuityClass {
 public:
  enum class Kind { all, quotient };

  static ContinuityClass all();
  // Throws std::invalid_argument unless `normal` is a normal subgroup.
  static ContinuityClass quotient(const FiniteGroup& group, std::vector<Element> normal);

  Kind kind() const { return kind_; }
  bool is_all() const { return kind_ == Kind::all; }
  const std::vector<Element>& normal_subgroup() const { return normal_; }
  // Coset label of g; distinct labels for distinct cosets of N.
  int coset(Element g) const { return is_all() ? g : coset_of_[static_cast<std::size_t>(g)]; }
  int num_cosets(const FiniteGroup& group) const { return is_all() ? group.order() : num_cosets_; }

  // Non-empty reason when the class cannot be used with this module: the
  // group must match and N has to act trivially so the action is continuous.
  std::string incompatibility(const GModule& module) const;
  void require_compatible(const GModule& module) const;

  // Members of `fine` are members of `coarse`.
  static bool nested(const ContinuityClass& fine, const ContinuityClass& coarse);

  std::string describe() const;

  friend bool operator==(const ContinuityClass& a, const ContinuityClass& b) {
    return a.kind_ == b.kind_ && a.normal_ == b.normal_;
  }

 private:
  Kind kind_ = Kind::all;
  int group_order_ = 0;
  std::vector<Element> normal_;
  std::vector<int> coset_of_;
  int num_cosets_ = 0;
};

// Tables over G^arity whose positions [local_offset, arity) are restricted to
// Gamma_U: the factoring condition is imposed only on tuples in that region.
// local_offset = arity means every tuple is constrained (global continuity).
struct Region {
  std::size_t local_offset;
  IdentityNbhd U;
};

// Blocks are coset classes of region tuples; tuples outside the region are
// singletons. Class members are exactly the block-constant tables.
BlockPartition class_partition(const ContinuityClass& cls, const FiniteGroup& group, std::size_t arity,
                               const std::optional<Region>& region = std::nullopt);

// First pair of tuples in the same block with different values.
std::optional<ClassViolation> find_violation(const ContinuityClass& cls, const CoefficientTable& table,
                                             const std::optional<Region>& region = std::nullopt);

bool is_continuous(const ContinuityClass& cls, const CoefficientTable& table);

// Identity neighbourhoods ordered by decreasing size, ties broken
// lexicographically. Every identity-containing subset for groups of order up
// to kExhaustiveNbhdOrder; above that, subgroups and pairwise unions.
inline constexpr int kExhaustiveNbhdOrder = 10;
std::vector<IdentityNbhd> candidate_neighbourhoods(const FiniteGroup& group);

// Maximal U with f continuous on Gamma_U, or none.
std::optional<IdentityNbhd> is_locally_continuous(const ContinuityClass& cls, const Cochain& f);

struct RestrictedTable {
  DiagonalNbhd gamma;
  std::vector<ModElement> values;  // parallel to gamma.tuples

  friend bool operator==(const RestrictedTable& a, const RestrictedTable& b) {
    return a.gamma.tuples == b.gamma.tuples && a.values == b.values;
  }
};

RestrictedTable restrict_to_gamma(const Cochain& f, const IdentityNbhd& U);

}  // namespace grpcohom
