#include "oracles.hpp"
#include "test_util.hpp"

#include <grpcohom/complex_model.hpp>
#include <grpcohom/random.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace grpcohom;
using namespace testing_util;
using linalg::FPAbelianGroup;
using linalg::IntMatrix;

namespace {

IntMatrix empty_matrix(std::size_t rows) { return IntMatrix(rows, 0); }

}  // namespace

TEST(SmallModules, EnumerationFindsNontrivialActions) {
  // Z/2 on Z/3 by -1 and on Z/2 + Z/2 by swapping, Z/3 on Z/2 + Z/2 by a 3-cycle.
  const auto m2 = oracle::all_small_modules(cyclic(2));
  const auto m3 = oracle::all_small_modules(cyclic(3));
  auto nontrivial = [](const std::vector<ModulePtr>& ms) {
    return std::count_if(ms.begin(), ms.end(), [](const ModulePtr& m) { return !m->has_trivial_action(); });
  };
  EXPECT_GE(nontrivial(m2), 3);
  EXPECT_GE(nontrivial(m3), 2);
}

// Cohomology of every (G, A, n) with |G| <= 3, |A| <= 4, n <= 2 against
// enumeration of all cochains.
TEST(Cohomology, MatchesBruteForceEnumeration) {
  std::size_t cases = 0;
  for (int order = 1; order <= 3; ++order) {
    for (const auto& a : oracle::all_small_modules(cyclic(order))) {
      const CochainComplexModel model(a, ContinuityClass::all());
      const oracle::FiniteModule fm(*a);
      for (int n = 0; n <= 2; ++n) {
        const auto brute = oracle::brute_cohomology(a->group(), fm, n);
        const auto computed = model.cohomology_group(n);
        EXPECT_TRUE(oracle::matches(brute, fm, computed))
            << a->describe() << " over Z/" << order << " degree " << n << ": " << computed.to_string()
            << " vs order " << brute.order();
        const auto d_in = n == 0 ? empty_matrix(model.moduli(0).size()) : model.differential_matrix(n - 1);
        EXPECT_EQ(linalg::homology_at(model.differential_matrix(n), model.moduli(n + 1), d_in, model.moduli(n)),
                  computed);
        ++cases;
      }
    }
  }
  EXPECT_GT(cases, 30u);
}

TEST(Cohomology, DegreeTwoOfZ2InZ2) {
  const auto a = trivial_module(cyclic(2), 0, {2});
  const CochainComplexModel model(a, ContinuityClass::all());
  const oracle::FiniteModule fm(*a);
  const auto brute = oracle::brute_cohomology(a->group(), fm, 2);
  EXPECT_EQ(brute.cocycles.size(), 4u);
  EXPECT_EQ(brute.coboundaries.size(), 2u);
  EXPECT_EQ(model.cohomology_group(2), FPAbelianGroup::from_factors({2}));
}

TEST(Cohomology, IntegerCoefficientsOfZ2) {
  const auto a = trivial_module(cyclic(2), 1);
  const CochainComplexModel model(a, ContinuityClass::all());
  EXPECT_EQ(model.cohomology_group(0), FPAbelianGroup::from_factors({0}));
  EXPECT_TRUE(model.cohomology_group(1).is_trivial());
}

TEST(Cohomology, DegreeTwoIntegerCoefficientsIsCyclic) {
  for (int n : {2, 3, 4, 6}) {
    const CochainComplexModel model(trivial_module(cyclic(n), 1), ContinuityClass::all());
    EXPECT_EQ(model.cohomology_group(2), FPAbelianGroup::from_factors({n})) << n;
  }
}

TEST(Cohomology, DegreeTwoIntegerByEnumeration) {
  for (int n : {2, 3}) {
    const auto box = oracle::integer_h2_by_enumeration(n);
    EXPECT_EQ(box.classes, static_cast<std::size_t>(n));
    EXPECT_TRUE(box.has_element_of_full_order);
    const CochainComplexModel model(trivial_module(cyclic(n), 1), ContinuityClass::all());
    EXPECT_EQ(model.cohomology_group(2), FPAbelianGroup::from_factors({n}));
  }
}

TEST(Cohomology, ScaledModuliRegression) {
  const CochainComplexModel model(trivial_module(cyclic(4), 0, {2, 3}), ContinuityClass::all());
  EXPECT_EQ(model.cohomology_group(3), FPAbelianGroup::from_factors({2}));
}

TEST(SolveCoboundary, EqualInputs) {
  Rng rng(1);
  const auto a = trivial_module(cyclic(3), 1);
  const CochainComplexModel model(a, ContinuityClass::all());
  const auto f = random_cocycle(model, 2, rng);
  const auto w = solve_coboundary(f, f);
  ASSERT_TRUE(w.has_value());
  ASSERT_TRUE(w->b.has_value());
  EXPECT_TRUE(w->b->is_zero());
}

TEST(SolveCoboundary, CoboundaryDifference) {
  Rng rng(2);
  const auto a = cyclic_module(cyclic(4), 0, {5}, 2);
  const CochainComplexModel model(a, ContinuityClass::all());
  for (int n = 1; n <= 2; ++n) {
    const auto g = random_cocycle(model, n, rng);
    const auto f = g + differential(random_equivariant(a, n - 1, rng));
    const auto w = solve_coboundary(f, g);
    ASSERT_TRUE(w.has_value());
    ASSERT_TRUE(w->b.has_value());
    EXPECT_TRUE(is_equivariant(*w->b));
    EXPECT_EQ(differential(*w->b), f - g);
  }
}

TEST(SolveCoboundary, CarryIsNotACoboundary) {
  const auto a = trivial_module(cyclic(2), 0, {2});
  const auto f = carry_cocycle(a);
  EXPECT_FALSE(solve_coboundary(f, Cochain(a, 2)).has_value());
  // All four inhomogeneous 1-cochains miss the carry table (0, 0, 0, 1).
  const oracle::FiniteModule fm(*a);
  oracle::for_each_table(2, 2, [&](const oracle::Table& b) {
    EXPECT_NE(oracle::bar_d(a->group(), fm, b, 1), (oracle::Table{0, 0, 0, 1}));
  });
}

TEST(ComplexModel, GeneratorsRepresentTheirClasses) {
  const auto a = trivial_module(cyclic(4), 0, {2});
  const CochainComplexModel model(a, ContinuityClass::all());
  for (int n = 0; n <= 2; ++n) {
    const auto& h = model.cohomology(n);
    for (std::size_t i = 0; i < h.num_generators(); ++i) {
      const auto z = model.generator(n, i);
      EXPECT_TRUE(differential(z).is_zero());
      const auto c = model.class_of(z);
      ASSERT_TRUE(c.has_value());
      for (std::size_t k = 0; k < c->size(); ++k) EXPECT_EQ((*c)[k], k == i ? 1 : 0);
    }
  }
}

TEST(ComplexModel, QuotientClassIsInflation) {
  // Continuous cochains for G/N = Z/2 in Z/4: H^n(Z/2, Z/2) = Z/2 in every degree.
  const auto g = cyclic(4);
  const CochainComplexModel model(trivial_module(g, 0, {2}), ContinuityClass::quotient(*g, {0, 2}));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(model.cohomology_group(n), FPAbelianGroup::from_factors({2}));
}
