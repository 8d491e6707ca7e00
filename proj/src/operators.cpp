#include <grpcohom/operators.hpp>

#include <stdexcept>

namespace grpcohom {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

TupleOperator::TupleOperator(const FiniteGroup& group, std::size_t in_arity, std::size_t out_arity,
                             Generator generator)
    : in_arity_(in_arity),
      out_arity_(out_arity),
      in_size_(TupleSpace(group.order(), in_arity).size()),
      out_size_(TupleSpace(group.order(), out_arity).size()),
      identity_(group.identity()),
      generator_(std::move(generator)) {}

TupleOperator faces_op(const FiniteGroup& g, std::size_t out_arity, std::size_t offset, std::size_t count,
                       int sign) {
  if (out_arity == 0 || offset + count > out_arity) throw std::invalid_argument("faces_op: bad face range");
  const TupleSpace out(g.order(), out_arity);
  const Element e = g.identity();
  return TupleOperator(g, out_arity - 1, out_arity, [out, offset, count, sign, e](std::size_t t, std::vector<Term>& v) {
    int s = sign;
    for (std::size_t i = 0; i < count; ++i, s = -s) v.push_back({out.drop(t, offset + i), s, e});
  });
}

TupleOperator insert_constant_op(const FiniteGroup& g, std::size_t out_arity, std::size_t pos, Element value,
                                 int sign) {
  if (pos > out_arity) throw std::invalid_argument("insert_constant_op: position out of range");
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t low = power(n, out_arity - pos);
  const Element e = g.identity();
  const auto c = static_cast<std::size_t>(value);
  return TupleOperator(g, out_arity + 1, out_arity, [n, low, c, sign, e](std::size_t t, std::vector<Term>& v) {
    v.push_back({((t / low) * n + c) * low + t % low, sign, e});
  });
}

TupleOperator insert_copy_op(const FiniteGroup& g, std::size_t out_arity, std::size_t pos, std::size_t copy_from,
                             int sign) {
  if (pos > out_arity || copy_from >= out_arity) throw std::invalid_argument("insert_copy_op: position out of range");
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t low = power(n, out_arity - pos);
  const TupleSpace out(g.order(), out_arity);
  const Element e = g.identity();
  return TupleOperator(g, out_arity + 1, out_arity,
                       [n, low, out, copy_from, sign, e](std::size_t t, std::vector<Term>& v) {
                         const auto c = static_cast<std::size_t>(out.digit(t, copy_from));
                         v.push_back({((t / low) * n + c) * low + t % low, sign, e});
                       });
}

TupleOperator translate_op(const FiniteGroup& g, std::size_t arity, Element by) {
  const TupleSpace space(g.order(), arity);
  const Element by_inv = g.inv(by);
  return TupleOperator(g, arity, arity, [&g, space, by, by_inv](std::size_t t, std::vector<Term>& v) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < space.length(); ++i) {
      src = src * space.order() + static_cast<std::size_t>(g.mul(by_inv, space.digit(t, i)));
    }
    v.push_back({src, 1, by});
  });
}

TupleOperator leader_translate_op(const FiniteGroup& g, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("leader_translate_op: empty tuples");
  const TupleSpace space(g.order(), arity);
  return TupleOperator(g, arity, arity, [&g, space](std::size_t t, std::vector<Term>& v) {
    const Element lead = space.digit(t, 0);
    const Element lead_inv = g.inv(lead);
    std::size_t src = 0;
    for (std::size_t i = 0; i < space.length(); ++i) {
      src = src * space.order() + static_cast<std::size_t>(g.mul(lead_inv, space.digit(t, i)));
    }
    v.push_back({src, 1, lead});
  });
}

TupleOperator inhomogeneous_of_op(const FiniteGroup& g, std::size_t degree) {
  const TupleSpace space(g.order(), degree);
  return TupleOperator(g, degree + 1, degree, [&g, space](std::size_t t, std::vector<Term>& v) {
    Element partial = g.identity();
    std::size_t src = static_cast<std::size_t>(partial);
    for (std::size_t i = 0; i < space.length(); ++i) {
      partial = g.mul(partial, space.digit(t, i));
      src = src * space.order() + static_cast<std::size_t>(partial);
    }
    v.push_back({src, 1, g.identity()});
  });
}

TupleOperator homogeneous_of_op(const FiniteGroup& g, std::size_t degree) {
  const TupleSpace space(g.order(), degree + 1);
  return TupleOperator(g, degree, degree + 1, [&g, space](std::size_t t, std::vector<Term>& v) {
    Element prev = space.digit(t, 0);
    std::size_t src = 0;
    for (std::size_t i = 1; i < space.length(); ++i) {
      const Element cur = space.digit(t, i);
      src = src * space.order() + static_cast<std::size_t>(g.mul(g.inv(prev), cur));
      prev = cur;
    }
    v.push_back({src, 1, space.digit(t, 0)});
  });
}

TupleOperator inhomogeneous_differential_op(const FiniteGroup& g, std::size_t degree) {
  const TupleSpace space(g.order(), degree + 1);
  return TupleOperator(g, degree, degree + 1, [&g, space](std::size_t t, std::vector<Term>& v) {
    // Homogeneous lift h = (e, g_1, g_1 g_2, ...) of the target tuple.
    const std::size_t len = space.length() + 1;
    std::vector<Element> h(len);
    h[0] = g.identity();
    for (std::size_t i = 1; i < len; ++i) h[i] = g.mul(h[i - 1], space.digit(t, i - 1));
    int sign = 1;
    for (std::size_t skip = 0; skip < len; ++skip, sign = -sign) {
      Element lead = -1, prev = -1;
      std::size_t src = 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (i == skip) continue;
        if (lead < 0) {
          lead = prev = h[i];
          continue;
        }
        src = src * space.order() + static_cast<std::size_t>(g.mul(g.inv(prev), h[i]));
        prev = h[i];
      }
      v.push_back({src, sign, lead});
    }
  });
}

void apply(const TupleOperator& op, const CoefficientTable& in, CoefficientTable& out) {
  if (in.arity() != op.in_arity() || out.arity() != op.out_arity()) {
    throw std::invalid_argument("apply: operator arity mismatch");
  }
  if (!same_module(in.module_ptr(), out.module_ptr())) throw std::invalid_argument("apply: module mismatch");
  const GModule& m = in.module();
  const std::size_t dim = m.dim();
  std::vector<Term> terms;
  ModElement scratch(dim);
  for (std::size_t t = 0; t < op.out_size(); ++t) {
    Integer* dst = out.at(t);
    for (std::size_t k = 0; k < dim; ++k) dst[k] = 0;
    op.terms(t, terms);
    for (const Term& term : terms) {
      const Integer* src = in.at(term.source);
      if (term.act != op.identity() && !m.acts_trivially(term.act)) {
        m.act_into(term.act, src, scratch.data());
        src = scratch.data();
      }
      for (std::size_t k = 0; k < dim; ++k) {
        if (term.sign > 0) {
          mpz_add(dst[k].get_mpz_t(), dst[k].get_mpz_t(), src[k].get_mpz_t());
        } else {
          mpz_sub(dst[k].get_mpz_t(), dst[k].get_mpz_t(), src[k].get_mpz_t());
        }
      }
    }
    m.canonicalize(dst);
  }
}

BlockPartition BlockPartition::discrete(std::size_t tuples) {
  BlockPartition p;
  p.block_of.resize(tuples);
  p.representative.resize(tuples);
  for (std::size_t t = 0; t < tuples; ++t) p.block_of[t] = p.representative[t] = t;
  return p;
}

linalg::IntMatrix block_matrix(const TupleOperator& op, const GModule& module, const BlockPartition& source,
                               const BlockPartition& target) {
  if (source.num_tuples() != op.in_size() || target.num_tuples() != op.out_size()) {
    throw std::invalid_argument("block_matrix: partition does not match operator");
  }
  const std::size_t dim = module.dim();
  linalg::IntMatrix m(target.num_blocks() * dim, source.num_blocks() * dim);
  std::vector<Term> terms;
  for (std::size_t b = 0; b < target.num_blocks(); ++b) {
    op.terms(target.representative[b], terms);
    for (const Term& term : terms) {
      const std::size_t c = source.block_of[term.source];
      if (term.act == op.identity() || module.acts_trivially(term.act)) {
        for (std::size_t k = 0; k < dim; ++k) m(b * dim + k, c * dim + k) += term.sign;
      } else {
        const auto& a = module.action(term.act);
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) {
            if (term.sign > 0) {
              m(b * dim + i, c * dim + j) += a(i, j);
            } else {
              m(b * dim + i, c * dim + j) -= a(i, j);
            }
          }
      }
    }
  }
  return m;
}

linalg::Vector block_coordinates(const CoefficientTable& table, const BlockPartition& partition) {
  if (partition.num_tuples() != table.num_tuples()) throw std::invalid_argument("block_coordinates: size mismatch");
  const std::size_t dim = table.dim();
  linalg::Vector out;
  out.reserve(partition.num_blocks() * dim);
  for (std::size_t rep : partition.representative) {
    const Integer* v = table.at(rep);
    out.insert(out.end(), v, v + dim);
  }
  return out;
}

void from_block_coordinates(std::span<const Integer> coords, const BlockPartition& partition,
                            CoefficientTable& out) {
  const std::size_t dim = out.dim();
  if (partition.num_tuples() != out.num_tuples() || coords.size() != partition.num_blocks() * dim) {
    throw std::invalid_argument("from_block_coordinates: size mismatch");
  }
  for (std::size_t t = 0; t < out.num_tuples(); ++t) {
    Integer* dst = out.at(t);
    const std::size_t b = partition.block_of[t];
    for (std::size_t k = 0; k < dim; ++k) dst[k] = coords[b * dim + k];
    out.module().canonicalize(dst);
  }
}

linalg::Vector block_moduli(const GModule& module, const BlockPartition& partition) {
  linalg::Vector out;
  out.reserve(partition.num_blocks() * module.dim());
  for (std::size_t b = 0; b < partition.num_blocks(); ++b)
    out.insert(out.end(), module.moduli().begin(), module.moduli().end());
  return out;
}

}  // namespace grpcohom
