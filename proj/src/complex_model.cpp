#include <grpcohom/complex_model.hpp>
#include <grpcohom/operators.hpp>

#include <stdexcept>

namespace grpcohom {

CochainComplexModel::CochainComplexModel(ModulePtr module, ContinuityClass cls)
    : module_(std::move(module)), cls_(std::move(cls)) {
  if (!module_) throw std::invalid_argument("CochainComplexModel: null module");
  cls_.require_compatible(*module_);
}

const BlockPartition& CochainComplexModel::partition(int n) const {
  if (n < 0) throw std::invalid_argument("CochainComplexModel: negative degree");
  auto it = partitions_.find(n);
  if (it == partitions_.end()) {
    it = partitions_.emplace(n, class_partition(cls_, module_->group(), static_cast<std::size_t>(n))).first;
  }
  return it->second;
}

linalg::Vector CochainComplexModel::moduli(int n) const { return block_moduli(*module_, partition(n)); }

const linalg::IntMatrix& CochainComplexModel::differential_matrix(int n) const {
  auto it = differentials_.find(n);
  if (it == differentials_.end()) {
    const auto op = inhomogeneous_differential_op(module_->group(), static_cast<std::size_t>(n));
    it = differentials_.emplace(n, block_matrix(op, *module_, partition(n), partition(n + 1))).first;
  }
  return it->second;
}

const linalg::Subquotient& CochainComplexModel::cohomology(int n) const {
  auto it = cohomology_.find(n);
  if (it == cohomology_.end()) {
    const auto mod = moduli(n);
    const auto out_mod = moduli(n + 1);
    const linalg::IntMatrix d_in =
        n == 0 ? linalg::IntMatrix(mod.size(), 0) : differential_matrix(n - 1);
    it = cohomology_
             .emplace(n, std::make_unique<linalg::Subquotient>(
                             linalg::homology_subquotient(differential_matrix(n), out_mod, d_in, mod)))
             .first;
  }
  return *it->second;
}

std::optional<linalg::Vector> CochainComplexModel::coordinates(const InhomogeneousCochain& F) const {
  if (!same_module(F.module_ptr(), module_)) throw std::invalid_argument("coordinates: module mismatch");
  if (find_violation(cls_, F)) return std::nullopt;
  return block_coordinates(F, partition(F.degree()));
}

InhomogeneousCochain CochainComplexModel::from_coordinates(int n, std::span<const Integer> coords) const {
  InhomogeneousCochain F(module_, n);
  from_block_coordinates(coords, partition(n), F);
  return F;
}

std::optional<linalg::Vector> CochainComplexModel::class_of(const Cochain& f) const {
  const auto c = coordinates(inhomogeneous_of(f));
  if (!c) return std::nullopt;
  return cohomology(f.degree()).coordinates(*c);
}

Cochain CochainComplexModel::generator(int n, std::size_t i) const {
  return homogeneous_of(from_coordinates(n, cohomology(n).generator(i)));
}

std::optional<CoboundaryWitness> CochainComplexModel::solve_coboundary(const Cochain& f, const Cochain& g) const {
  if (f.degree() != g.degree()) throw std::invalid_argument("solve_coboundary: degree mismatch");
  const auto diff = coordinates(inhomogeneous_of(f) - inhomogeneous_of(g));
  if (!diff) return std::nullopt;
  const int n = f.degree();
  if (n == 0) {
    if (f == g) return CoboundaryWitness{};
    return std::nullopt;
  }
  auto it = coboundary_solvers_.find(n);
  if (it == coboundary_solvers_.end()) {
    const auto mod = moduli(n);
    it = coboundary_solvers_.emplace(n, std::make_unique<linalg::LinearSolver>(differential_matrix(n - 1), mod))
             .first;
  }
  const auto x = it->second->solve(*diff);
  if (!x) return std::nullopt;
  return CoboundaryWitness{homogeneous_of(from_coordinates(n - 1, *x))};
}

std::optional<CoboundaryWitness> solve_coboundary(const Cochain& f, const Cochain& g, const ContinuityClass& cls) {
  return CochainComplexModel(f.module_ptr(), cls).solve_coboundary(f, g);
}

}  // namespace grpcohom
