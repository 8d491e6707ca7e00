#include <grpcohom/operators.hpp>
#include <grpcohom/transfer.hpp>

#include <stdexcept>

namespace grpcohom {

namespace {

int parity_sign(int p) { return p % 2 ? -1 : 1; }

TupleOperator d_v_op(const FiniteGroup& g, int p, int q_source) {
  return faces_op(g, static_cast<std::size_t>(p + q_source + 3), static_cast<std::size_t>(p + 1),
                  static_cast<std::size_t>(q_source + 2), parity_sign(p));
}

TupleOperator k_op(const FiniteGroup& g, int p, int q_source) {
  return insert_constant_op(g, static_cast<std::size_t>(p + q_source + 1), static_cast<std::size_t>(p + 1),
                            g.identity(), kFrozenSigns.k_sign(p));
}

// Adds the coefficients of outer o inner at `target` into `acc`.
void accumulate_composite(const TupleOperator& outer, const TupleOperator& inner, std::size_t target,
                          std::map<std::size_t, long>& acc) {
  std::vector<Term> outer_terms, inner_terms;
  outer.terms(target, outer_terms);
  for (const Term& a : outer_terms) {
    inner.terms(a.source, inner_terms);
    for (const Term& b : inner_terms) acc[b.source] += a.sign * b.sign;
  }
}

// Checks d_v k + k d_v = id on A^{p,q} (q >= 1), or j_v r + k d_v = id on
// A^{p,0}, tuple by tuple on the standard basis.
bool vertical_homotopy_identity(const FiniteGroup& g, int p, int q) {
  const std::size_t arity = static_cast<std::size_t>(p + q + 2);
  const std::size_t tuples = TupleSpace(g.order(), arity).size();
  const auto k_then = k_op(g, p, q + 1);
  const auto d_then = d_v_op(g, p, q);
  std::optional<TupleOperator> first_a, first_b;
  if (q >= 1) {
    first_a.emplace(d_v_op(g, p, q - 1));
    first_b.emplace(k_op(g, p, q));
  } else {
    first_a.emplace(faces_op(g, arity, arity - 1, 1, kFrozenSigns.sigma_v));
    first_b.emplace(insert_constant_op(g, arity - 1, arity - 1, g.identity(), kFrozenSigns.sigma_v));
  }
  std::map<std::size_t, long> acc;
  for (std::size_t t = 0; t < tuples; ++t) {
    acc.clear();
    accumulate_composite(*first_a, *first_b, t, acc);
    accumulate_composite(k_then, d_then, t, acc);
    for (const auto& [source, coeff] : acc) {
      if (coeff != (source == t ? 1 : 0)) return false;
    }
    if (acc.find(t) == acc.end()) return false;
  }
  return true;
}

BiCochain table_to_bicochain(const ModulePtr& m, int p, int q, std::span<const Integer> coords,
                             const BlockPartition& part) {
  BiCochain out(m, p, q);
  from_block_coordinates(coords, part, out);
  return out;
}

ExactnessEntry solver_entry(const ModulePtr& module, const ContinuityClass& cls, int p, int q) {
  const auto& g = module->group();
  const auto U = IdentityNbhd::trivial(g);
  const auto target = bicochain_partition(cls, g, p, q, U);
  const auto next = bicochain_partition(cls, g, p, q + 1, U);
  const auto cocycles = linalg::kernel_mod(block_matrix(d_v_op(g, p, q), *module, target, next),
                                           block_moduli(*module, next));
  linalg::IntMatrix lift;
  if (q >= 1) {
    lift = block_matrix(d_v_op(g, p, q - 1), *module, bicochain_partition(cls, g, p, q - 1, U), target);
  } else {
    const std::size_t arity = static_cast<std::size_t>(p + 2);
    lift = block_matrix(faces_op(g, arity, arity - 1, 1, kFrozenSigns.sigma_v), *module,
                        class_partition(cls, g, arity - 1), target);
  }
  const auto moduli = block_moduli(*module, target);
  const linalg::LinearSolver solver(lift, moduli);
  for (std::size_t j = 0; j < cocycles.cols(); ++j) {
    const auto v = cocycles.column(j);
    if (!solver.solve(v)) {
      return {p, q, false, "solver", table_to_bicochain(module, p, q, v, target)};
    }
  }
  return {p, q, true, "solver", std::nullopt};
}

}  // namespace

bool ExactnessReport::all_exact() const {
  for (const auto& e : entries)
    if (!e.exact) return false;
  return true;
}

ExactnessReport column_exactness_check(const ModulePtr& module, const ContinuityClass& cls, int p, int q_max) {
  if (p < 0 || q_max < 0) throw std::invalid_argument("column_exactness_check: negative degree");
  cls.require_compatible(*module);
  ExactnessReport report{cls.describe(), p, {}};
  for (int q = 0; q <= q_max; ++q) {
    if (cls.is_all()) {
      const bool ok = vertical_homotopy_identity(module->group(), p, q);
      if (!ok) throw IdentityFailure("vertical insertion homotopy identity fails");
      report.entries.push_back({p, q, true, "homotopy", std::nullopt});
    } else {
      report.entries.push_back(solver_entry(module, cls, p, q));
    }
  }
  return report;
}

TransferEngine::TransferEngine(ModulePtr module, ContinuityClass cls)
    : module_(std::move(module)), cls_(cls), model_(module_, std::move(cls)) {}

const BlockPartition& TransferEngine::lift_partition(int p, int q) {
  auto it = partitions_.find({p, q});
  if (it == partitions_.end()) {
    it = partitions_
             .emplace(std::pair{p, q},
                      bicochain_partition(cls_, module_->group(), p, q, IdentityNbhd::trivial(module_->group())))
             .first;
  }
  return it->second;
}

const linalg::LinearSolver& TransferEngine::lift_solver(int p, int q) {
  auto it = solvers_.find({p, q});
  if (it == solvers_.end()) {
    const auto& source = lift_partition(p, q - 1);
    const auto& target = lift_partition(p, q);
    const auto m = block_matrix(d_v_op(module_->group(), p, q - 1), *module_, source, target);
    it = solvers_.emplace(std::pair{p, q}, std::make_unique<linalg::LinearSolver>(m, block_moduli(*module_, target)))
             .first;
  }
  return *it->second;
}

TransferResult TransferEngine::transfer(const Cochain& f) {
  if (!same_module(f.module_ptr(), module_)) throw std::invalid_argument("transfer: module mismatch");
  if (!is_equivariant(f)) throw std::invalid_argument("transfer: cochain is not equivariant");
  if (!differential(f).is_zero()) throw std::invalid_argument("transfer: cochain is not a cocycle");
  const auto U = is_locally_continuous(cls_, f);
  if (!U) throw std::invalid_argument("transfer: cochain is not locally continuous for the class");

  const int n = f.degree();
  const auto& group = module_->group();
  TotalCochain x = augment_h(f);
  TotalCochain w(module_, n - 1);
  std::vector<TransferStep> steps;
  for (int p = 0; p < n; ++p) {
    const int q = n - p;
    const BiCochain& target = x[static_cast<std::size_t>(p)];
    if (target.is_zero()) {
      steps.push_back({p, q, 0});
      continue;
    }
    const auto& part = lift_partition(p, q);
    if (find_violation(cls_, target, Region{static_cast<std::size_t>(p + 1), IdentityNbhd::trivial(group)})) {
      throw IdentityFailure("transfer: staircase component left the class");
    }
    const auto coords = lift_solver(p, q).solve(block_coordinates(target, part));
    if (!coords) {
      return TransferObstruction{p, q, target, "vertical cocycle has no class-member preimage under d_v"};
    }
    const BiCochain lift = equivariantize(table_to_bicochain(module_, p, q - 1, *coords, lift_partition(p, q - 1)));
    if (!(d_v(lift) == target)) throw IdentityFailure("transfer: equivariantized lift does not satisfy d_v L = X");
    TotalCochain step(module_, n - 1);
    step[static_cast<std::size_t>(p)] = lift;
    x -= total_differential(step);
    w += step;
    std::size_t support = 0;
    for (std::size_t t = 0; t < lift.num_tuples(); ++t) {
      const Integer* v = lift.at(t);
      for (std::size_t k = 0; k < lift.dim(); ++k) {
        if (v[k] != 0) {
          ++support;
          break;
        }
      }
    }
    steps.push_back({p, q, support});
  }
  for (int p = 0; p < n; ++p) {
    if (!x[static_cast<std::size_t>(p)].is_zero()) throw IdentityFailure("transfer: staircase did not clear");
  }
  const BiCochain& corner = x[static_cast<std::size_t>(n)];
  Cochain g(module_, n);
  apply(insert_constant_op(group, g.arity(), g.arity(), group.identity(), kFrozenSigns.sigma_v), corner, g);
  if (!(j_v(g) == corner)) throw IdentityFailure("transfer: corner is not in the image of j_v");

  TransferCertificate cert{f, g, -w, *U, cls_, std::move(steps), std::nullopt, false};
  if (!find_violation(cls_, f)) {
    cert.coboundary = model_.solve_coboundary(g, f);
    if (!cert.coboundary && cls_.is_all()) throw IdentityFailure("transfer: output not cohomologous to input");
  }
  const auto failure = verify_certificate(cert);
  if (!failure.empty()) throw IdentityFailure("transfer: " + failure);
  cert.verified = true;
  return cert;
}

TransferResult transfer_lc_to_c(const Cochain& f, const ContinuityClass& cls) {
  return TransferEngine(f.module_ptr(), cls).transfer(f);
}

std::string verify_certificate(const TransferCertificate& cert) {
  const auto& f = cert.input;
  const auto& g = cert.output;
  if (f.degree() != g.degree() || cert.witness.degree() != f.degree() - 1) return "degree mismatch";
  if (!same_module(f.module_ptr(), g.module_ptr()) || !same_module(f.module_ptr(), cert.witness.module_ptr())) {
    return "module mismatch";
  }
  if (!differential(f).is_zero()) return "input is not a cocycle";
  if (!differential(g).is_zero()) return "output is not a cocycle";
  if (!is_equivariant(f) || !is_equivariant(g)) return "cochain is not equivariant";
  if (!is_continuous(cert.cls, g)) return "output is not continuous";
  if (find_violation(cert.cls, f, Region{0, cert.input_nbhd})) return "input is not continuous on the recorded Gamma_U";
  if (!(total_differential(cert.witness) == augment_v(g, cert.cls) - augment_h(f))) {
    return "D(witness) != j_v(output) - j_h(input)";
  }
  if (cert.coboundary && cert.coboundary->b) {
    if (!(differential(*cert.coboundary->b) == g - f)) return "coboundary does not satisfy db = output - input";
  } else if (cert.coboundary && !(g == f)) {
    return "degree-0 coboundary witness requires output = input";
  }
  return {};
}

}  // namespace grpcohom
