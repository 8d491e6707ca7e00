#include <grpcohom/random.hpp>

namespace grpcohom {

ModElement random_element(const GModule& m, Rng& rng, int free_bound) {
  ModElement a(m.dim());
  const auto span = static_cast<std::uint64_t>(2 * free_bound + 1);
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const Integer& d = m.moduli()[k];
    if (d == 0) {
      a[k] = static_cast<long>(rng() % span) - free_bound;
    } else {
      a[k] = static_cast<unsigned long>(rng() % d.get_ui());
    }
  }
  return a;
}

void randomize(CoefficientTable& table, Rng& rng, int free_bound) {
  for (std::size_t t = 0; t < table.num_tuples(); ++t) table.set_at(t, random_element(table.module(), rng, free_bound));
}

Cochain random_cochain(const ModulePtr& m, int degree, Rng& rng) {
  Cochain f(m, degree);
  randomize(f, rng);
  return f;
}

InhomogeneousCochain random_inhomogeneous(const ModulePtr& m, int degree, Rng& rng) {
  InhomogeneousCochain F(m, degree);
  randomize(F, rng);
  return F;
}

Cochain random_equivariant(const ModulePtr& m, int degree, Rng& rng) {
  return homogeneous_of(random_inhomogeneous(m, degree, rng));
}

BiCochain random_bicochain(const ModulePtr& m, int p, int q, Rng& rng) {
  BiCochain f(m, p, q);
  randomize(f, rng);
  return f;
}

TotalCochain random_total(const ModulePtr& m, int degree, Rng& rng) {
  TotalCochain t(m, degree);
  for (std::size_t p = 0; p < t.size(); ++p) randomize(t[p], rng);
  return t;
}

Cochain random_cocycle(const CochainComplexModel& model, int degree, Rng& rng) {
  const auto& h = model.cohomology(degree);
  linalg::Vector coords(model.partition(degree).num_blocks() * model.module().dim());
  for (std::size_t i = 0; i < h.num_generators(); ++i) {
    const Integer& order = h.invariants()[i];
    const Integer c = order == 0 ? Integer(static_cast<long>(rng() % 7) - 3) : Integer(static_cast<unsigned long>(rng() % order.get_ui()));
    const auto gen = h.generator(i);
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += c * gen[k];
  }
  InhomogeneousCochain F = model.from_coordinates(degree, coords);
  if (degree > 0) {
    const auto prev = model.partition(degree - 1).num_blocks() * model.module().dim();
    linalg::Vector b(prev);
    const auto moduli = model.moduli(degree - 1);
    for (std::size_t k = 0; k < prev; ++k) {
      b[k] = moduli[k] == 0 ? Integer(static_cast<long>(rng() % 11) - 5)
                            : Integer(static_cast<unsigned long>(rng() % moduli[k].get_ui()));
    }
    F = F + inhomogeneous_differential(model.from_coordinates(degree - 1, b));
  }
  return homogeneous_of(F);
}

}  // namespace grpcohom
