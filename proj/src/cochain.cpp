#include <grpcohom/cochain.hpp>
#include <grpcohom/operators.hpp>

#include <stdexcept>

namespace grpcohom {

namespace {

std::size_t checked_arity(int value, const char* what) {
  if (value < 0) throw std::invalid_argument(std::string(what) + ": degree must be nonnegative");
  return static_cast<std::size_t>(value);
}

}  // namespace

Cochain::Cochain(ModulePtr module, int degree)
    : CoefficientTable(std::move(module), checked_arity(degree, "Cochain") + 1) {}

InhomogeneousCochain::InhomogeneousCochain(ModulePtr module, int degree)
    : CoefficientTable(std::move(module), checked_arity(degree, "InhomogeneousCochain")) {}

Cochain differential(const Cochain& f) {
  Cochain out(f.module_ptr(), f.degree() + 1);
  apply(faces_op(f.group(), out.arity(), 0, out.arity(), 1), f, out);
  return out;
}

Cochain g_action(Element g, const Cochain& f) {
  Cochain out(f.module_ptr(), f.degree());
  apply(translate_op(f.group(), f.arity(), g), f, out);
  return out;
}

bool is_equivariant(const Cochain& f) {
  for (Element g = 0; g < f.group().order(); ++g) {
    if (g == f.group().identity()) continue;
    if (!(g_action(g, f) == f)) return false;
  }
  return true;
}

InhomogeneousCochain inhomogeneous_of(const Cochain& f) {
  if (!is_equivariant(f)) throw std::invalid_argument("inhomogeneous_of: cochain is not equivariant");
  InhomogeneousCochain out(f.module_ptr(), f.degree());
  apply(inhomogeneous_of_op(f.group(), static_cast<std::size_t>(f.degree())), f, out);
  return out;
}

Cochain homogeneous_of(const InhomogeneousCochain& F) {
  Cochain out(F.module_ptr(), F.degree());
  apply(homogeneous_of_op(F.group(), static_cast<std::size_t>(F.degree())), F, out);
  return out;
}

InhomogeneousCochain inhomogeneous_differential(const InhomogeneousCochain& F) {
  InhomogeneousCochain out(F.module_ptr(), F.degree() + 1);
  apply(inhomogeneous_differential_op(F.group(), static_cast<std::size_t>(F.degree())), F, out);
  return out;
}

Cochain insertion_contraction(const Cochain& f, std::optional<Element> base) {
  if (f.degree() < 1) throw std::invalid_argument("insertion_contraction: degree must be >= 1");
  const Element b = base.value_or(f.group().identity());
  if (b < 0 || b >= f.group().order()) throw std::invalid_argument("insertion_contraction: base out of range");
  Cochain out(f.module_ptr(), f.degree() - 1);
  apply(insert_constant_op(f.group(), out.arity(), 0, b, 1), f, out);
  return out;
}

Cochain constant_cochain(const ModulePtr& module, const ModElement& a) {
  Cochain out(module, 0);
  for (std::size_t t = 0; t < out.num_tuples(); ++t) out.set_at(t, a);
  return out;
}

}  // namespace grpcohom
