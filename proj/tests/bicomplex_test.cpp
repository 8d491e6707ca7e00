#include "test_util.hpp"

#include <grpcohom/bicomplex.hpp>
#include <grpcohom/random.hpp>

#include <gtest/gtest.h>

using namespace grpcohom;
using namespace testing_util;

namespace {

std::vector<Element> tup(std::initializer_list<Element> t) { return t; }

// Value of a bicochain at the tuple (x; y).
ModElement at(const BiCochain& f, std::vector<Element> x, const std::vector<Element>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return f.value(x);
}

void put(BiCochain& f, std::vector<Element> x, const std::vector<Element>& y, long value) {
  x.insert(x.end(), y.begin(), y.end());
  f.set(x, v(value));
}

}  // namespace

TEST(HorizontalDifferential, HandEvaluation) {
  const auto a = trivial_module(cyclic(2), 1);
  BiCochain f(a, 0, 0);
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y) put(f, {x}, {y}, x);
  const auto d = d_h(f);
  for (Element x0 = 0; x0 < 2; ++x0)
    for (Element x1 = 0; x1 < 2; ++x1)
      for (Element y = 0; y < 2; ++y) EXPECT_EQ(at(d, {x0, x1}, {y}), v(x1 - x0));
}

TEST(HorizontalDifferential, ConstantCancels) {
  const auto a = trivial_module(cyclic(3), 1);
  BiCochain f(a, 0, 1);
  for (std::size_t t = 0; t < f.num_tuples(); ++t) f.set_at(t, v(5));
  EXPECT_TRUE(d_h(f).is_zero());
}

TEST(VerticalDifferential, HandEvaluation) {
  const auto a = trivial_module(cyclic(2), 1);
  BiCochain f(a, 1, 0);
  for (std::size_t t = 0; t < f.num_tuples(); ++t) f.set_at(t, v(static_cast<long>(t % 2)));
  const auto d = d_v(f);
  for (std::size_t t = 0; t < d.num_tuples(); ++t) {
    const auto x = d.space().decode(t);
    EXPECT_EQ(d.value_at(t), v(-(x[3] - x[2])));
  }
}

TEST(VerticalDifferential, EvenRowConstantInY) {
  const auto a = trivial_module(cyclic(2), 1);
  BiCochain f(a, 0, 0);
  put(f, {0}, {0}, 4);
  put(f, {0}, {1}, 4);
  put(f, {1}, {0}, -1);
  put(f, {1}, {1}, -1);
  EXPECT_TRUE(d_v(f).is_zero());
}

TEST(TotalDifferential, SingleComponent) {
  Rng rng(1);
  const auto a = trivial_module(cyclic(3), 0, {5});
  TotalCochain t(a, 0);
  t[0] = random_bicochain(a, 0, 0, rng);
  const auto dt = total_differential(t);
  ASSERT_EQ(dt.size(), 2u);
  EXPECT_EQ(dt[0], d_v(t[0]));
  EXPECT_EQ(dt[1], d_h(t[0]));
}

TEST(TotalDifferential, SquaresToZero) {
  Rng rng(2);
  const auto a = cyclic_module(cyclic(2), 1, {3}, -1);
  for (int n = 0; n <= 3; ++n) {
    const auto t = random_total(a, n, rng);
    EXPECT_TRUE(total_differential(total_differential(t)).is_zero());
  }
}

TEST(Augmentation, ZeroGivesZero) {
  const auto a = trivial_module(cyclic(2), 1);
  EXPECT_TRUE(augment_h(Cochain(a, 1)).is_zero());
  EXPECT_TRUE(augment_v(Cochain(a, 1), ContinuityClass::all()).is_zero());
}

TEST(Augmentation, ChainMaps) {
  Rng rng(3);
  const auto a = cyclic_module(cyclic(4), 0, {5}, 2);
  for (int n = 0; n <= 2; ++n) {
    const auto f = random_equivariant(a, n, rng);
    EXPECT_EQ(total_differential(augment_h(f)), augment_h(differential(f)));
    EXPECT_EQ(total_differential(augment_v(f, ContinuityClass::all())),
              augment_v(differential(f), ContinuityClass::all()));
  }
}

TEST(Augmentation, RejectsNonEquivariant) {
  const auto a = trivial_module(cyclic(2), 1);
  Cochain f(a, 0);
  f.set(tup({1}), v(1));
  EXPECT_THROW(augment_h(f), std::invalid_argument);
}

TEST(RowContraction, HandEvaluation) {
  const auto a = trivial_module(cyclic(2), 1);
  BiCochain f(a, 1, 0);
  for (Element x0 = 0; x0 < 2; ++x0)
    for (Element x1 = 0; x1 < 2; ++x1)
      for (Element y = 0; y < 2; ++y) put(f, {x0, x1}, {y}, x1 * y);
  const auto h = row_contraction(f);
  for (Element x0 = 0; x0 < 2; ++x0)
    for (Element y = 0; y < 2; ++y) EXPECT_EQ(at(h, {x0}, {y}), v(-(y * y)));
}

TEST(RowContraction, HomotopyIdentity) {
  Rng rng(4);
  const auto a = trivial_module(klein(), 1, {2});
  for (int p = 1; p <= 2; ++p)
    for (int q = 0; q <= 1; ++q) {
      const auto f = random_bicochain(a, p, q, rng);
      EXPECT_EQ(row_contraction(d_h(f)) + d_h(row_contraction(f)), f);
    }
}

TEST(VerticalInsertion, ConstantStaysConstant) {
  const auto a = trivial_module(cyclic(3), 1);
  BiCochain f(a, 1, 1);
  for (std::size_t t = 0; t < f.num_tuples(); ++t) f.set_at(t, v(2));
  const auto k = vertical_insertion(f, ContinuityClass::all());
  ASSERT_TRUE(std::holds_alternative<BiCochain>(k));
  const auto& kf = std::get<BiCochain>(k);
  for (std::size_t t = 0; t < kf.num_tuples(); ++t) EXPECT_EQ(kf.value_at(t), v(-2));  // k_sign(1) = -1
}

TEST(VerticalInsertion, HomotopyUnderAll) {
  Rng rng(5);
  const auto a = trivial_module(cyclic(3), 0, {4});
  const auto all = ContinuityClass::all();
  for (int p = 0; p <= 1; ++p) {
    const auto f = random_bicochain(a, p, 1, rng);
    const auto k1 = std::get<BiCochain>(vertical_insertion(f, all));
    const auto k2 = std::get<BiCochain>(vertical_insertion(d_v(f), all));
    EXPECT_EQ(d_v(k1) + k2, f);
  }
}

// Recorded fixture: a member of the quotient class on which row contraction
// stays in the class but vertical insertion leaves it.
TEST(VerticalInsertion, RefusedWhereRowContractionSucceeds) {
  const auto j = load_fixture("remark_vertical_insertion.json");
  const auto g = json_io::group_from_json(j["group"]);
  const auto a = json_io::module_from_json(j["module"], g);
  const auto cls = json_io::class_from_json(j["class"], *g);
  const auto f = json_io::bicochain_from_json(j["bicochain"], a);
  ASSERT_EQ(cls.kind(), ContinuityClass::Kind::quotient);
  ASSERT_TRUE(is_locally_continuous(cls, f).has_value());

  const auto h = row_contraction(f);
  EXPECT_TRUE(is_locally_continuous(cls, h).has_value());

  const auto k = vertical_insertion(f, cls);
  ASSERT_TRUE(std::holds_alternative<ClassViolation>(k));
  const auto& w = std::get<ClassViolation>(k);
  ASSERT_EQ(w.tuple.size(), 3u);
  ASSERT_EQ(w.other.size(), 3u);
  // Same x-block, y coordinates 0 and 2: one coset of {0, 2}, different values.
  EXPECT_EQ(w.tuple[0], w.other[0]);
  EXPECT_EQ(w.tuple[1], w.other[1]);
  EXPECT_EQ(std::min(w.tuple[2], w.other[2]), 0);
  EXPECT_EQ(std::max(w.tuple[2], w.other[2]), 2);
}

TEST(Equivariantize, HandEvaluation) {
  const auto a = trivial_module(cyclic(2), 1);
  BiCochain f(a, 0, 0);
  put(f, {0}, {0}, 10);
  put(f, {0}, {1}, 20);
  put(f, {1}, {0}, 30);
  put(f, {1}, {1}, 40);
  const auto e = equivariantize(f);
  EXPECT_EQ(at(e, {0}, {0}), v(10));
  EXPECT_EQ(at(e, {0}, {1}), v(20));
  EXPECT_EQ(at(e, {1}, {0}), v(20));
  EXPECT_EQ(at(e, {1}, {1}), v(10));
  EXPECT_TRUE(is_equivariant(e));
}

TEST(Equivariantize, FixesEquivariantInput) {
  Rng rng(6);
  const auto a = cyclic_module(cyclic(2), 1, {}, -1);
  const auto e = equivariantize(random_bicochain(a, 1, 1, rng));
  EXPECT_EQ(equivariantize(e), e);
}

TEST(Equivariantize, KeepsEquivariantVerticalCoboundary) {
  Rng rng(7);
  const auto a = cyclic_module(cyclic(2), 0, {4}, -1);
  for (int i = 0; i < 20; ++i) {
    // u = equivariant part plus something whose d_v vanishes (a function of x only, q = 0).
    auto u = equivariantize(random_bicochain(a, 1, 0, rng));
    BiCochain c(a, 1, 0);
    for (std::size_t t = 0; t < c.num_tuples(); ++t) c.set_at(t, v(static_cast<long>((t / 2) * 3 + i)));
    u = u + c;
    ASSERT_TRUE(is_equivariant(d_v(u)));
    const auto e = equivariantize(u);
    EXPECT_TRUE(is_equivariant(e));
    EXPECT_EQ(d_v(e), d_v(u));
  }
}

TEST(PsiWitness, DegreeOne) {
  // Crossed homomorphism F(1) = 1 for Z/2 acting on Z by sign, plus a coboundary.
  const auto a = cyclic_module(cyclic(2), 1, {}, -1);
  const auto all = ContinuityClass::all();
  Rng rng(8);
  InhomogeneousCochain F(a, 1);
  F.set(tup({1}), v(1));
  const auto f = homogeneous_of(F) + differential(random_equivariant(a, 0, rng));
  ASSERT_TRUE(differential(f).is_zero());
  const auto w = psi_witness(f, all);
  ASSERT_EQ(w.degree(), 0);
  EXPECT_EQ(total_differential(w), augment_v(f, all) - augment_h(f));
  // Single component W^{0,0} = +-f.
  const auto& w00 = w[0];
  bool plus = true, minus = true;
  for (std::size_t t = 0; t < w00.num_tuples(); ++t) {
    auto neg = f.value_at(t);
    for (auto& x : neg) x = -x;
    plus = plus && w00.value_at(t) == f.value_at(t);
    minus = minus && w00.value_at(t) == neg;
  }
  EXPECT_TRUE(plus || minus);
}

TEST(PsiWitness, CarryCocycle) {
  const auto a = trivial_module(cyclic(2), 0, {2});
  const auto all = ContinuityClass::all();
  const auto f = carry_cocycle(a);
  const auto w = psi_witness(f, all);
  EXPECT_EQ(total_differential(w), augment_v(f, all) - augment_h(f));
}

TEST(Signs, FrozenConstantsRederive) { EXPECT_EQ(derive_signs(), kFrozenSigns); }
