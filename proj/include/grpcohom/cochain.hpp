#pragma once

// The standard homogeneous cochain complex Map(G^{n+1}, A) and its bar
// (inhomogeneous) counterpart.

#include <grpcohom/table.hpp>

#include <optional>

namespace grpcohom {

class Cochain : public CoefficientTable, public TableArithmetic<Cochain> {
 public:
  Cochain(ModulePtr module, int degree);
  int degree() const { return static_cast<int>(arity()) - 1; }
};

// F : G^n -> A. Degree 0 has the single empty tuple.
class InhomogeneousCochain : public CoefficientTable, public TableArithmetic<InhomogeneousCochain> {
 public:
  InhomogeneousCochain(ModulePtr module, int degree);
  int degree() const { return static_cast<int>(arity()); }
};

Cochain differential(const Cochain& f);
Cochain g_action(Element g, const Cochain& f);
bool is_equivariant(const Cochain& f);

// Throws std::invalid_argument unless f is equivariant.
InhomogeneousCochain inhomogeneous_of(const Cochain& f);
Cochain homogeneous_of(const InhomogeneousCochain& F);
InhomogeneousCochain inhomogeneous_differential(const InhomogeneousCochain& F);

// (hf)(g_0..g_{n-1}) = f(base, g_0, ..., g_{n-1}); base defaults to the
// identity. Requires degree >= 1.
Cochain insertion_contraction(const Cochain& f, std::optional<Element> base = std::nullopt);
// Degree-0 augmentation A -> A^0 by constants.
Cochain constant_cochain(const ModulePtr& module, const ModElement& a);

}  // namespace grpcohom
