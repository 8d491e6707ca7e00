#include <grpcohom/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace grpcohom;
using namespace grpcohom::linalg;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Every x in [0, bound)^n checked against M x = b mod moduli.
bool brute_force_solvable(const IntMatrix& m, const Vector& b, const Vector& moduli, int bound) {
  const std::size_t n = m.cols();
  std::vector<int> x(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
      s -= b[i];
      reduce(s, moduli[i]);
      ok = s == 0;
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < n && ++x[k] == bound) x[k++] = 0;
    if (k == n) return false;
  }
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  const auto snf = smith_normal_form(IntMatrix::identity(3), {.verify = true});
  EXPECT_EQ(snf.diagonal_form, IntMatrix::identity(3));
  EXPECT_EQ(snf.rank, 3u);
}

TEST(SmithNormalForm, Zero) {
  const auto snf = smith_normal_form(IntMatrix(2, 3), {.verify = true});
  EXPECT_TRUE(snf.diagonal_form.is_zero());
  EXPECT_EQ(snf.rank, 0u);
}

TEST(SmithNormalForm, HandReduced2x2) {
  const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto snf = smith_normal_form(m, {.track_left_inverse = true, .verify = true});
  EXPECT_EQ(snf.diagonal(), (Vector{2, 4}));
  EXPECT_EQ(check_smith_form(m, snf), "");
}

TEST(SmithNormalForm, RandomPostconditions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 6, -9, 9);
    const auto snf = smith_normal_form(m, {.track_left_inverse = true});
    EXPECT_EQ(check_smith_form(m, snf), "") << m.to_string();
  }
}

TEST(SmithNormalForm, DeterminantMatchesDiagonalProduct) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 4, 4, -5, 5);
    const auto snf = smith_normal_form(m);
    Integer prod = 1;
    for (const auto& d : snf.diagonal()) prod *= d;
    Integer det = determinant(m);
    EXPECT_EQ(abs(det), prod);
  }
}

TEST(SolveFp, IdentityReturnsRhs) {
  const Vector b{3, -7, 12};
  const Vector moduli{0, 0, 0};
  const auto x = solve_fp(IntMatrix::identity(3), b, moduli);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(SolveFp, ParityObstruction) {
  const Vector moduli{0};
  EXPECT_FALSE(solve_fp(IntMatrix::from_rows({{2}}), Vector{1}, moduli));
}

TEST(SolveFp, CanonicalModularSolution) {
  const Vector moduli{6};
  const auto x = solve_fp(IntMatrix::from_rows({{2}}), Vector{4}, moduli);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, Vector{2});
}

TEST(SolveFp, AgreesWithEnumeration) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> mod_dist(0, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = 1 + (trial / 3) % 3;
    const auto m = random_matrix(rng, rows, cols, -4, 4);
    Vector moduli(rows), b(rows);
    const bool uniform = trial % 2 == 0;
    const int shared = 2 + trial % 5;
    for (std::size_t i = 0; i < rows; ++i) {
      int d = uniform ? shared : mod_dist(rng);
      if (d == 1) d = 0;
      moduli[i] = d;
      b[i] = static_cast<int>(rng() % 7) - 3;
    }
    // Over Z the search box has to be wide enough; keep free rows for mixed cases only.
    bool any_free = false;
    for (auto& d : moduli) any_free = any_free || d == 0;
    if (any_free) continue;
    const auto x = solve_fp(m, b, moduli);
    // Solutions mod lcm exist in [0, 60)^n when they exist at all.
    EXPECT_EQ(x.has_value(), brute_force_solvable(m, b, moduli, 60)) << m.to_string();
    if (x) {
      const auto mx = m.apply(*x);
      for (std::size_t i = 0; i < rows; ++i) {
        Integer r = mx[i] - b[i];
        reduce(r, moduli[i]);
        EXPECT_EQ(r, 0);
      }
    }
  }
}

TEST(Kernel, ModularKernelAnnihilates) {
  const auto m = IntMatrix::from_rows({{2, 3}, {1, 1}});
  const Vector moduli{4, 0};
  const auto k = kernel_mod(m, moduli);
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const auto v = m.apply(k.column(j));
    Integer a = v[0];
    reduce(a, moduli[0]);
    EXPECT_EQ(a, 0);
    EXPECT_EQ(v[1], 0);
  }
}

TEST(Homology, ZeroMapsOnFreeModule) {
  const Vector moduli{0, 0};
  const Vector out{};
  const auto h = homology_at(IntMatrix(0, 2), out, IntMatrix(2, 0), moduli);
  EXPECT_EQ(h.factors, (Vector{0, 0}));
  EXPECT_EQ(h.to_string(), "Z^2");
}

TEST(Homology, CokernelOfDoubling) {
  const Vector moduli{0};
  const Vector out{};
  const auto h = homology_at(IntMatrix(0, 1), out, IntMatrix::from_rows({{2}}), moduli);
  EXPECT_EQ(h.factors, Vector{2});
}

TEST(Homology, RejectsNonComplex) {
  const Vector moduli{0};
  const Vector out{0};
  EXPECT_THROW(homology_at(IntMatrix::from_rows({{1}}), out, IntMatrix::from_rows({{1}}), moduli),
               std::invalid_argument);
}

TEST(Subquotient, CoordinatesRoundTrip) {
  // Z^2 / <(2, 0), (0, 3)>: cyclic of order 6.
  const auto sq = Subquotient(IntMatrix::identity(2), IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(sq.group().factors, Vector{6});
  const auto g = sq.generator(0);
  const auto c = sq.coordinates(g);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, Vector{1});
  const Vector zero_class{4, 3};
  EXPECT_EQ(*sq.coordinates(zero_class), Vector{0});
}

TEST(FPAbelianGroup, NormalizesFactors) {
  const auto g = FPAbelianGroup::from_factors({2, 3, 1, 0});
  EXPECT_EQ(g.factors, (Vector{6, 0}));
  EXPECT_EQ(g.to_string(), "Z/6 + Z");
  EXPECT_EQ(g.order(), 0);
  EXPECT_EQ(FPAbelianGroup::from_factors({1, 1}).to_string(), "0");
}
