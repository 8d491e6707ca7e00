#pragma once

// Seeded random cochains for property checks. Values are drawn with plain
// modular reduction of mt19937_64 output so runs are reproducible across
// standard libraries.

#include <grpcohom/bicomplex.hpp>
#include <grpcohom/complex_model.hpp>

#include <random>

namespace grpcohom {

using Rng = std::mt19937_64;

// Free coordinates uniform in [-free_bound, free_bound].
ModElement random_element(const GModule& m, Rng& rng, int free_bound = 5);
void randomize(CoefficientTable& table, Rng& rng, int free_bound = 5);

Cochain random_cochain(const ModulePtr& m, int degree, Rng& rng);
InhomogeneousCochain random_inhomogeneous(const ModulePtr& m, int degree, Rng& rng);
Cochain random_equivariant(const ModulePtr& m, int degree, Rng& rng);
BiCochain random_bicochain(const ModulePtr& m, int p, int q, Rng& rng);
TotalCochain random_total(const ModulePtr& m, int degree, Rng& rng);

// Random continuous equivariant cocycle: a random combination of cohomology
// generators plus the coboundary of a random continuous cochain.
Cochain random_cocycle(const CochainComplexModel& model, int degree, Rng& rng);

}  // namespace grpcohom
