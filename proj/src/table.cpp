#include <grpcohom/table.hpp>

#include <stdexcept>

namespace grpcohom {

CoefficientTable::CoefficientTable(ModulePtr module, std::size_t arity)
    : module_(std::move(module)), arity_(arity) {
  if (!module_) throw std::invalid_argument("table: null module");
  tuples_ = TupleSpace(group().order(), arity_).size();
  data_.assign(tuples_ * dim(), Integer(0));
}

void CoefficientTable::set_at(std::size_t t, const ModElement& a) {
  if (a.size() != dim()) throw std::invalid_argument("table: coefficient has wrong dimension");
  Integer* out = at(t);
  for (std::size_t k = 0; k < dim(); ++k) out[k] = a[k];
  module_->canonicalize(out);
}

ModElement CoefficientTable::value(std::span<const Element> tuple) const {
  if (tuple.size() != arity_) throw std::invalid_argument("table: tuple has wrong length");
  return value_at(space().encode(tuple));
}

void CoefficientTable::set(std::span<const Element> tuple, const ModElement& a) {
  if (tuple.size() != arity_) throw std::invalid_argument("table: tuple has wrong length");
  for (Element g : tuple) {
    if (g < 0 || g >= group().order()) throw std::invalid_argument("table: element out of range");
  }
  set_at(space().encode(tuple), a);
}

void CoefficientTable::assign(std::vector<Integer> flat) {
  if (flat.size() != data_.size()) throw std::invalid_argument("table: flat data has wrong size");
  data_ = std::move(flat);
  canonicalize();
}

bool CoefficientTable::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

void CoefficientTable::canonicalize() {
  for (std::size_t t = 0; t < tuples_; ++t) module_->canonicalize(at(t));
}

std::size_t CoefficientTable::first_difference(const CoefficientTable& other) const {
  if (!same_shape(other)) throw std::invalid_argument("table: shape mismatch");
  const std::size_t d = dim();
  for (std::size_t t = 0; t < tuples_; ++t) {
    for (std::size_t k = 0; k < d; ++k) {
      if (data_[t * d + k] != other.data_[t * d + k]) return t;
    }
  }
  return tuples_;
}

bool CoefficientTable::same_shape(const CoefficientTable& other) const {
  return arity_ == other.arity_ && same_module(module_, other.module_);
}

void CoefficientTable::add_scaled(const CoefficientTable& other, int sign) {
  if (!same_shape(other)) throw std::invalid_argument("table: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sign > 0) {
      data_[i] += other.data_[i];
    } else {
      data_[i] -= other.data_[i];
    }
  }
  canonicalize();
}

void CoefficientTable::negate() {
  for (auto& v : data_) v = -v;
  canonicalize();
}

bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
  return a.same_shape(b) && a.data() == b.data();
}

}  // namespace grpcohom
