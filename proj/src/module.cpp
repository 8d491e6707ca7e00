#include <grpcohom/module.hpp>

#include <stdexcept>

namespace grpcohom {

namespace {

std::vector<Integer> moduli_of(int rank, const std::vector<std::int64_t>& torsion) {
  std::vector<Integer> m(static_cast<std::size_t>(rank), Integer(0));
  for (std::int64_t d : torsion) m.emplace_back(static_cast<long>(d));
  return m;
}

// Reduce row i modulo the modulus of coordinate i.
linalg::IntMatrix reduce_rows(linalg::IntMatrix m, const std::vector<Integer>& moduli) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduce(m(i, j), moduli[i]);
  return m;
}

}  // namespace

std::vector<ModuleViolation> validate_module(const FiniteGroup& group, int rank,
                                             const std::vector<std::int64_t>& torsion,
                                             const std::vector<linalg::IntMatrix>& action) {
  using Kind = ModuleViolation::Kind;
  std::vector<ModuleViolation> out;
  if (rank < 0) out.push_back({Kind::shape, {}, "rank must be nonnegative"});
  for (std::int64_t d : torsion) {
    if (d < 2) out.push_back({Kind::shape, {}, "torsion coefficients must be >= 2"});
  }
  if (action.size() != static_cast<std::size_t>(group.order())) {
    out.push_back({Kind::shape, {}, "one action matrix per group element is required"});
  }
  if (!out.empty()) return out;
  const auto moduli = moduli_of(rank, torsion);
  const std::size_t dim = moduli.size();
  for (Element g = 0; g < group.order(); ++g) {
    const auto& a = action[static_cast<std::size_t>(g)];
    if (a.rows() != dim || a.cols() != dim) {
      out.push_back({Kind::shape, {g}, "action matrix of element " + std::to_string(g) + " has wrong size"});
    }
  }
  if (!out.empty()) return out;

  std::vector<linalg::IntMatrix> reduced;
  reduced.reserve(action.size());
  for (const auto& a : action) reduced.push_back(reduce_rows(a, moduli));

  // Column j of a torsion coordinate must be killed by d_j in the target.
  for (Element g = 0; g < group.order(); ++g) {
    const auto& a = reduced[static_cast<std::size_t>(g)];
    for (std::size_t j = 0; j < dim; ++j) {
      if (moduli[j] == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        Integer v = a(i, j) * moduli[j];
        reduce(v, moduli[i]);
        if (v != 0) {
          out.push_back({Kind::well_defined, {g},
                         "action of element " + std::to_string(g) + " is not well defined on torsion coordinate " +
                             std::to_string(j)});
          break;
        }
      }
    }
  }
  const auto identity = reduce_rows(linalg::IntMatrix::identity(dim), moduli);
  if (reduced[static_cast<std::size_t>(group.identity())] != identity) {
    out.push_back({Kind::identity, {group.identity()}, "identity element does not act as the identity matrix"});
  }
  for (Element g = 0; g < group.order(); ++g) {
    for (Element h = 0; h < group.order(); ++h) {
      const auto prod = reduce_rows(reduced[static_cast<std::size_t>(g)] * reduced[static_cast<std::size_t>(h)], moduli);
      if (prod != reduced[static_cast<std::size_t>(group.mul(g, h))]) {
        out.push_back({Kind::homomorphism, {g, h},
                       "action(" + std::to_string(g) + "*" + std::to_string(h) + ") != action(" + std::to_string(g) +
                           ") action(" + std::to_string(h) + ")"});
      }
    }
  }
  for (Element g = 0; g < group.order(); ++g) {
    const auto prod =
        reduce_rows(reduced[static_cast<std::size_t>(g)] * reduced[static_cast<std::size_t>(group.inv(g))], moduli);
    if (prod != identity) {
      out.push_back({Kind::invertibility, {g},
                     "action of element " + std::to_string(g) + " is not invertible (action(g) action(g^-1) != 1)"});
    }
  }
  return out;
}

GModule::GModule(GroupPtr group, int rank, std::vector<std::int64_t> torsion, std::vector<linalg::IntMatrix> action)
    : group_(std::move(group)), rank_(rank), torsion_(std::move(torsion)) {
  if (!group_) throw std::invalid_argument("GModule: null group");
  const auto violations = validate_module(*group_, rank_, torsion_, action);
  if (!violations.empty()) {
    std::string msg = "invalid module:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw std::invalid_argument(msg);
  }
  moduli_ = moduli_of(rank_, torsion_);
  const auto identity = reduce_rows(linalg::IntMatrix::identity(dim()), moduli_);
  trivial_ = true;
  for (auto& a : action) {
    a = reduce_rows(std::move(a), moduli_);
    const bool is_id = a == identity;
    acts_trivially_.push_back(is_id ? 1 : 0);
    trivial_ = trivial_ && is_id;
    action_.push_back(std::move(a));
  }
}

GModule GModule::trivial(GroupPtr group, int rank, std::vector<std::int64_t> torsion) {
  const std::size_t dim = static_cast<std::size_t>(rank) + torsion.size();
  std::vector<linalg::IntMatrix> action(static_cast<std::size_t>(group->order()), linalg::IntMatrix::identity(dim));
  return GModule(std::move(group), rank, std::move(torsion), std::move(action));
}

ModElement GModule::canonical(ModElement a) const {
  if (a.size() != dim()) throw std::invalid_argument("module element has wrong dimension");
  canonicalize(a.data());
  return a;
}

void GModule::canonicalize(Integer* values) const {
  for (std::size_t i = static_cast<std::size_t>(rank_); i < moduli_.size(); ++i) reduce(values[i], moduli_[i]);
}

ModElement GModule::act(Element g, const ModElement& a) const {
  if (a.size() != dim()) throw std::invalid_argument("act: dimension mismatch");
  ModElement out(dim());
  act_into(g, a.data(), out.data());
  return out;
}

void GModule::act_into(Element g, const Integer* in, Integer* out) const {
  const std::size_t n = dim();
  if (acts_trivially_[static_cast<std::size_t>(g)]) {
    for (std::size_t i = 0; i < n; ++i) out[i] = in[i];
    canonicalize(out);
    return;
  }
  const auto& a = action_[static_cast<std::size_t>(g)];
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != 0 && in[j] != 0) mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), in[j].get_mpz_t());
    }
  }
  canonicalize(out);
}

std::size_t GModule::cardinality() const {
  if (!is_finite()) throw std::logic_error("cardinality: module has free rank");
  std::size_t n = 1;
  for (std::int64_t d : torsion_) n *= static_cast<std::size_t>(d);
  return n;
}

ModElement GModule::element_at(std::size_t index) const {
  if (!is_finite()) throw std::logic_error("element_at: module has free rank");
  ModElement a(dim());
  for (std::size_t i = dim(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(torsion_[i]);
    a[i] = static_cast<unsigned long>(index % d);
    index /= d;
  }
  return a;
}

std::size_t GModule::index_of(const ModElement& a) const {
  if (!is_finite()) throw std::logic_error("index_of: module has free rank");
  const ModElement c = canonical(a);
  std::size_t index = 0;
  for (std::size_t i = 0; i < dim(); ++i) index = index * static_cast<std::size_t>(torsion_[i]) + c[i].get_ui();
  return index;
}

std::string GModule::describe() const {
  std::string out;
  if (rank_ > 0) out = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (std::int64_t d : torsion_) out += (out.empty() ? "" : " + ") + ("Z/" + std::to_string(d));
  if (out.empty()) out = "0";
  out += trivial_ ? " (trivial action)" : " (nontrivial action)";
  return out;
}

bool operator==(const GModule& a, const GModule& b) {
  return *a.group_ == *b.group_ && a.rank_ == b.rank_ && a.torsion_ == b.torsion_ && a.action_ == b.action_;
}

bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace grpcohom
