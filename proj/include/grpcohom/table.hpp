#pragma once

// Dense coefficient tables G^k -> A shared by cochains, bicochains and
// inhomogeneous cochains.

#include <grpcohom/module.hpp>
#include <grpcohom/tuples.hpp>

#include <span>
#include <vector>

namespace grpcohom {

class CoefficientTable {
 public:
  CoefficientTable(ModulePtr module, std::size_t arity);

  const GModule& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }
  const FiniteGroup& group() const { return module_->group(); }
  std::size_t arity() const { return arity_; }
  std::size_t num_tuples() const { return tuples_; }
  std::size_t dim() const { return module_->dim(); }
  TupleSpace space() const { return TupleSpace(group().order(), arity_); }

  const Integer* at(std::size_t t) const { return data_.data() + t * dim(); }
  Integer* at(std::size_t t) { return data_.data() + t * dim(); }
  ModElement value_at(std::size_t t) const { return ModElement(at(t), at(t) + dim()); }
  void set_at(std::size_t t, const ModElement& a);
  ModElement value(std::span<const Element> tuple) const;
  void set(std::span<const Element> tuple, const ModElement& a);

  // Flat storage, tuple-major; length num_tuples() * dim().
  const std::vector<Integer>& data() const { return data_; }
  void assign(std::vector<Integer> flat);

  bool is_zero() const;
  void canonicalize();
  // Index of the first tuple where the tables differ, or num_tuples().
  std::size_t first_difference(const CoefficientTable& other) const;
  bool same_shape(const CoefficientTable& other) const;

  // this += sign * other, canonicalized. Shapes and modules must agree.
  void add_scaled(const CoefficientTable& other, int sign);
  void negate();

 protected:
  ModulePtr module_;
  std::size_t arity_;
  std::size_t tuples_;
  std::vector<Integer> data_;
};

bool operator==(const CoefficientTable& a, const CoefficientTable& b);

// Arithmetic shared by the concrete table types; T must derive from
// CoefficientTable and be copyable.
template <class T>
struct TableArithmetic {
  friend T operator+(T a, const T& b) {
    a.add_scaled(b, 1);
    return a;
  }
  friend T operator-(T a, const T& b) {
    a.add_scaled(b, -1);
    return a;
  }
  friend T operator-(T a) {
    a.negate();
    return a;
  }
  friend bool operator==(const T& a, const T& b) {
    return static_cast<const CoefficientTable&>(a) == static_cast<const CoefficientTable&>(b);
  }
};

}  // namespace grpcohom
