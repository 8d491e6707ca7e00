#pragma once

// Finite groups given by full multiplication tables over dense element
// indices 0..order-1.

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grpcohom {

using Element = int;

// Raw candidate tables, validated by validate_group().
struct GroupTable {
  int order = 0;
  std::vector<Element> mult;  // row-major order x order
  Element identity = 0;
};

struct GroupViolation {
  enum class Kind { closure, identity, inverse, associativity };
  Kind kind;
  std::vector<Element> witness;
  std::string message;
};

std::vector<GroupViolation> validate_group(const GroupTable& candidate);

class FiniteGroup {
 public:
  // Infers the identity, validates every axiom and throws
  // std::invalid_argument listing the violations otherwise.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& mult, std::string label = {});
  static FiniteGroup from_table(const GroupTable& table, std::string label = {});

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mult_[static_cast<std::size_t>(a * order_ + b)]; }
  Element inv(Element g) const { return inv_[static_cast<std::size_t>(g)]; }
  const std::string& label() const { return label_; }
  const std::vector<Element>& table() const { return mult_; }

  int element_order(Element g) const;
  bool is_subgroup(std::span<const Element> subset) const;
  bool is_normal_subgroup(std::span<const Element> subset) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

 private:
  FiniteGroup(int order, std::vector<Element> mult, Element identity, std::vector<Element> inv,
              std::string label);

  int order_;
  std::vector<Element> mult_;
  Element identity_;
  std::vector<Element> inv_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup make_cyclic(int n);
// Elements (g, h) encoded as g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// Dihedral group of order 2n: rotations 0..n-1, reflections n..2n-1.
FiniteGroup make_dihedral(int n);

}  // namespace grpcohom
