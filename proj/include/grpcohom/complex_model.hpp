#pragma once

// Finite presentation of the complex of continuous equivariant cochains in
// inhomogeneous coordinates. With the class ALL this is the ordinary bar
// complex. For QUOTIENT(N) with N acting trivially, continuous equivariant
// cochains correspond to inhomogeneous cochains factoring through (G/N)^n,
// so the complex is spanned by block indicators.

#include <grpcohom/cochain.hpp>
#include <grpcohom/continuity.hpp>
#include <grpcohom/linalg.hpp>

#include <map>
#include <memory>
#include <optional>

namespace grpcohom {

struct CoboundaryWitness {
  // b with db = f - g; absent in degree 0, where the witness is f = g itself.
  std::optional<Cochain> b;
};

class CochainComplexModel {
 public:
  CochainComplexModel(ModulePtr module, ContinuityClass cls);

  const GModule& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }
  const ContinuityClass& continuity_class() const { return cls_; }

  const BlockPartition& partition(int n) const;
  linalg::Vector moduli(int n) const;
  // Matrix of d : C^n -> C^{n+1} in block coordinates.
  const linalg::IntMatrix& differential_matrix(int n) const;

  const linalg::Subquotient& cohomology(int n) const;
  linalg::FPAbelianGroup cohomology_group(int n) const { return cohomology(n).group(); }

  // Block coordinates, or none when F is not block constant.
  std::optional<linalg::Vector> coordinates(const InhomogeneousCochain& F) const;
  InhomogeneousCochain from_coordinates(int n, std::span<const Integer> coords) const;

  // Coordinates of the class of an equivariant continuous cocycle in H^n.
  std::optional<linalg::Vector> class_of(const Cochain& f) const;
  // Homogeneous cocycle representing generator i of H^n.
  Cochain generator(int n, std::size_t i) const;

  std::optional<CoboundaryWitness> solve_coboundary(const Cochain& f, const Cochain& g) const;

 private:
  ModulePtr module_;
  ContinuityClass cls_;
  mutable std::map<int, BlockPartition> partitions_;
  mutable std::map<int, linalg::IntMatrix> differentials_;
  mutable std::map<int, std::unique_ptr<linalg::Subquotient>> cohomology_;
  mutable std::map<int, std::unique_ptr<linalg::LinearSolver>> coboundary_solvers_;
};

// Convenience wrapper; `cls` restricts the witness to class members.
std::optional<CoboundaryWitness> solve_coboundary(const Cochain& f, const Cochain& g,
                                                  const ContinuityClass& cls = ContinuityClass::all());

}  // namespace grpcohom
