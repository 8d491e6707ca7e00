#pragma once

// Mixed-radix indexing of G^k. Position 0 is the most significant digit, so
// lexicographic tuple order equals index order.

#include <grpcohom/group.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace grpcohom {

class TupleSpace {
 public:
  TupleSpace(int order, std::size_t length) : order_(static_cast<std::size_t>(order)), length_(length) {
    stride_.assign(length_ + 1, 1);
    for (std::size_t i = length_; i-- > 0;) stride_[i] = stride_[i + 1] * order_;
  }

  std::size_t order() const { return order_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return stride_[0]; }
  // Weight of position i.
  std::size_t stride(std::size_t i) const { return stride_[i + 1]; }

  Element digit(std::size_t index, std::size_t i) const {
    return static_cast<Element>((index / stride_[i + 1]) % order_);
  }

  void decode(std::size_t index, std::span<Element> out) const {
    for (std::size_t i = length_; i-- > 0;) {
      out[i] = static_cast<Element>(index % order_);
      index /= order_;
    }
  }

  std::vector<Element> decode(std::size_t index) const {
    std::vector<Element> out(length_);
    decode(index, out);
    return out;
  }

  std::size_t encode(std::span<const Element> tuple) const {
    std::size_t index = 0;
    for (Element g : tuple) index = index * order_ + static_cast<std::size_t>(g);
    return index;
  }

  // Index in G^{length-1} of the tuple with position i removed.
  std::size_t drop(std::size_t index, std::size_t i) const {
    const std::size_t low = stride_[i + 1];
    return (index / stride_[i]) * low + index % low;
  }

 private:
  std::size_t order_;
  std::size_t length_;
  std::vector<std::size_t> stride_;
};

}  // namespace grpcohom
