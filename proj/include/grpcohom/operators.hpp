#pragma once

// Linear maps between coefficient tables whose output value at each tuple is
// a signed sum of group translates of input values:
//   out(t) = sum_k sign_k * act_k . in(source_k).
// Every differential, contraction and translation in the library has this
// shape, so one evaluator and one matrix builder serve all of them.
// Operators hold a reference to their group, which must outlive them.

#include <grpcohom/linalg.hpp>
#include <grpcohom/table.hpp>

#include <functional>
#include <vector>

namespace grpcohom {

struct Term {
  std::size_t source;
  int sign;
  Element act;  // identity means no action
};

class TupleOperator {
 public:
  using Generator = std::function<void(std::size_t target, std::vector<Term>& out)>;

  TupleOperator(const FiniteGroup& group, std::size_t in_arity, std::size_t out_arity, Generator generator);

  std::size_t in_arity() const { return in_arity_; }
  std::size_t out_arity() const { return out_arity_; }
  std::size_t in_size() const { return in_size_; }
  std::size_t out_size() const { return out_size_; }
  Element identity() const { return identity_; }
  void terms(std::size_t target, std::vector<Term>& out) const {
    out.clear();
    generator_(target, out);
  }

 private:
  std::size_t in_arity_;
  std::size_t out_arity_;
  std::size_t in_size_;
  std::size_t out_size_;
  Element identity_;
  Generator generator_;
};

// out arity = in arity + 1. Faces delete output positions offset .. offset+count-1,
// the face at offset+i carrying sign * (-1)^i.
TupleOperator faces_op(const FiniteGroup& g, std::size_t out_arity, std::size_t offset, std::size_t count, int sign);
// out(t) = sign * in(t with the element `value` inserted at input position pos).
TupleOperator insert_constant_op(const FiniteGroup& g, std::size_t out_arity, std::size_t pos, Element value,
                                 int sign);
// out(t) = sign * in(t with a copy of t[copy_from] inserted at input position pos).
TupleOperator insert_copy_op(const FiniteGroup& g, std::size_t out_arity, std::size_t pos, std::size_t copy_from,
                             int sign);
// out(t) = g . in(g^{-1} t).
TupleOperator translate_op(const FiniteGroup& g, std::size_t arity, Element by);
// out(t) = t_0 . in(t_0^{-1} t).
TupleOperator leader_translate_op(const FiniteGroup& g, std::size_t arity);
// Homogeneous -> inhomogeneous: F(g_1..g_n) = f(e, g_1, g_1 g_2, ...).
TupleOperator inhomogeneous_of_op(const FiniteGroup& g, std::size_t degree);
// Inhomogeneous -> homogeneous: f(g_0..g_n) = g_0 . F(g_0^{-1} g_1, ..., g_{n-1}^{-1} g_n).
TupleOperator homogeneous_of_op(const FiniteGroup& g, std::size_t degree);
// Differential on inhomogeneous n-cochains, obtained by evaluating the
// homogeneous alternating face sum through the bar correspondence.
TupleOperator inhomogeneous_differential_op(const FiniteGroup& g, std::size_t degree);

void apply(const TupleOperator& op, const CoefficientTable& in, CoefficientTable& out);

// Partition of tuples into blocks of equal value; class lattices are spanned
// by block indicators tensored with coordinate vectors.
struct BlockPartition {
  std::vector<std::size_t> block_of;
  std::vector<std::size_t> representative;

  static BlockPartition discrete(std::size_t tuples);
  std::size_t num_tuples() const { return block_of.size(); }
  std::size_t num_blocks() const { return representative.size(); }
  bool is_discrete() const { return num_blocks() == num_tuples(); }
};

// Matrix of `op` from block coordinates of `source` to block coordinates of
// `target`, read off at the target representatives. Exact whenever op maps
// block-constant tables to block-constant tables.
linalg::IntMatrix block_matrix(const TupleOperator& op, const GModule& module, const BlockPartition& source,
                               const BlockPartition& target);

// Block coordinates of a table (its values at the representatives).
linalg::Vector block_coordinates(const CoefficientTable& table, const BlockPartition& partition);
// Expands block coordinates back to a full table (canonicalized).
void from_block_coordinates(std::span<const Integer> coords, const BlockPartition& partition,
                            CoefficientTable& out);
// Per-coordinate moduli of the block coordinate space.
linalg::Vector block_moduli(const GModule& module, const BlockPartition& partition);

}  // namespace grpcohom
