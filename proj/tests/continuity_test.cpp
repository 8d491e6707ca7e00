#include "test_util.hpp"

#include <grpcohom/continuity.hpp>
#include <grpcohom/random.hpp>
#include <grpcohom/suites.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace grpcohom;
using namespace testing_util;

namespace {

std::vector<Element> tup(std::initializer_list<Element> t) { return t; }

// Degree-1 cochain on Z/4 equal to 1 exactly on pairs with difference 2.
Cochain difference_two(const ModulePtr& a) {
  Cochain f(a, 1);
  for (Element x = 0; x < 4; ++x) f.set(tup({x, static_cast<Element>((x + 2) % 4)}), v(1));
  return f;
}

}  // namespace

TEST(DiagonalNbhd, WholeGroup) {
  const auto g = cyclic(3);
  EXPECT_EQ(diagonal_nbhd(*g, IdentityNbhd::whole(*g), 2).size(), 27u);
}

TEST(DiagonalNbhd, TrivialNbhdIsDiagonal) {
  const auto g = cyclic(4);
  const auto gamma = diagonal_nbhd(*g, IdentityNbhd::trivial(*g), 2);
  ASSERT_EQ(gamma.size(), 4u);
  const TupleSpace s(4, 3);
  for (auto t : gamma.tuples) {
    const auto x = s.decode(t);
    EXPECT_TRUE(x[0] == x[1] && x[1] == x[2]);
  }
}

TEST(DiagonalNbhd, Z4WithoutTwo) {
  const auto g = cyclic(4);
  const IdentityNbhd U(*g, {0, 1, 3});
  const auto gamma = diagonal_nbhd(*g, U, 1);
  std::size_t expected = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) expected += (b - a + 4) % 4 != 2;
  EXPECT_EQ(expected, 12u);
  EXPECT_EQ(gamma.size(), expected);
  for (auto t : gamma.tuples) EXPECT_NE((t % 4 + 4 - t / 4) % 4, 2u);
}

TEST(IdentityNbhd, RejectsMissingIdentity) {
  const auto g = cyclic(4);
  EXPECT_THROW(IdentityNbhd(*g, {1, 2}), std::invalid_argument);
  EXPECT_THROW(IdentityNbhd(*g, {0, 7}), std::invalid_argument);
}

TEST(ContinuityClass, QuotientNeedsNormalSubgroup) {
  const auto d3 = make_dihedral(3);
  EXPECT_THROW(ContinuityClass::quotient(d3, {0, 3}), std::invalid_argument);
  EXPECT_NO_THROW(ContinuityClass::quotient(d3, {0, 1, 2}));
}

TEST(ContinuityClass, QuotientNeedsTrivialActionOfN) {
  const auto g = cyclic(2);
  const auto sign = cyclic_module(g, 1, {}, -1);
  const auto cls = ContinuityClass::quotient(*g, {0, 1});
  EXPECT_FALSE(cls.incompatibility(*sign).empty());
  EXPECT_TRUE(cls.incompatibility(*trivial_module(g, 1)).empty());
}

TEST(IsContinuous, AllAcceptsEverything) {
  Rng rng(1);
  const auto a = trivial_module(cyclic(4), 1);
  EXPECT_TRUE(is_continuous(ContinuityClass::all(), random_cochain(a, 2, rng)));
}

TEST(IsContinuous, QuotientCosetCheck) {
  const auto g = cyclic(4);
  const auto a = trivial_module(g, 1);
  const auto cls = ContinuityClass::quotient(*g, {0, 2});
  Cochain f(a, 0);
  f.set(tup({0}), v(3));
  f.set(tup({2}), v(3));
  f.set(tup({1}), v(5));
  f.set(tup({3}), v(5));
  EXPECT_TRUE(is_continuous(cls, f));
  f.set(tup({2}), v(4));
  EXPECT_FALSE(is_continuous(cls, f));
  const auto violation = find_violation(cls, f);
  ASSERT_TRUE(violation.has_value());
  const std::set<std::vector<Element>> pair{violation->tuple, violation->other};
  EXPECT_EQ(pair, (std::set<std::vector<Element>>{tup({0}), tup({2})}));
}

TEST(LocalContinuity, AllGivesWholeGroup) {
  Rng rng(2);
  const auto g = cyclic(3);
  const auto witness = is_locally_continuous(ContinuityClass::all(), random_cochain(trivial_module(g, 1), 1, rng));
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, IdentityNbhd::whole(*g));
}

TEST(LocalContinuity, GlobalFactoringGivesWholeGroup) {
  const auto g = cyclic(4);
  const auto a = trivial_module(g, 0, {2});
  const auto cls = ContinuityClass::quotient(*g, {0, 2});
  Cochain f(a, 1);
  for (std::size_t t = 0; t < 16; ++t) f.set_at(t, v(static_cast<long>((t / 4 + t % 4) % 2)));
  ASSERT_TRUE(is_continuous(cls, f));
  EXPECT_EQ(is_locally_continuous(cls, f), IdentityNbhd::whole(*g));
}

TEST(LocalContinuity, WitnessAvoidsTheBadDifference) {
  const auto g = cyclic(4);
  const auto a = trivial_module(g, 0, {2});
  const auto cls = ContinuityClass::quotient(*g, {0, 2});
  const auto f = difference_two(a);
  EXPECT_FALSE(is_continuous(cls, f));
  const auto witness = is_locally_continuous(cls, f);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->elements(), tup({0, 1, 3}));
  // Any neighbourhood containing 2 sees both (0,0) and (0,2), which share a coset tuple.
  for (const auto& U : candidate_neighbourhoods(*g)) {
    if (!U.contains(2)) continue;
    EXPECT_TRUE(find_violation(cls, f, Region{0, U}).has_value());
  }
}

TEST(LocalContinuity, CandidatesStartWithWholeGroup) {
  const auto g = cyclic(4);
  const auto cands = candidate_neighbourhoods(*g);
  ASSERT_FALSE(cands.empty());
  EXPECT_EQ(cands.front(), IdentityNbhd::whole(*g));
  EXPECT_EQ(cands.back(), IdentityNbhd::trivial(*g));
  EXPECT_EQ(cands.size(), 8u);  // every subset containing 0
}

TEST(RestrictToGamma, Sizes) {
  Rng rng(4);
  const auto g = cyclic(4);
  const auto f = random_cochain(trivial_module(g, 1), 1, rng);
  EXPECT_EQ(restrict_to_gamma(f, IdentityNbhd::whole(*g)).values.size(), 16u);
  EXPECT_EQ(restrict_to_gamma(f, IdentityNbhd::trivial(*g)).values.size(), 4u);
  const auto r = restrict_to_gamma(f, IdentityNbhd(*g, {0, 1, 3}));
  ASSERT_EQ(r.values.size(), 12u);
  for (std::size_t i = 0; i < r.values.size(); ++i) EXPECT_EQ(r.values[i], f.value_at(r.gamma.tuples[i]));
}

TEST(ClassClosure, QuotientMembersClosedUnderOperations) {
  Rng rng(9);
  const auto g = cyclic(4);
  const auto a = trivial_module(g, 0, {6});
  const auto cls = ContinuityClass::quotient(*g, {0, 2});
  for (int n = 0; n <= 2; ++n) {
    Cochain f(a, n), h(a, n);
    const auto part = class_partition(cls, *g, static_cast<std::size_t>(n + 1));
    randomize_blocks(f, part, rng);
    randomize_blocks(h, part, rng);
    ASSERT_TRUE(is_continuous(cls, f));
    EXPECT_TRUE(is_continuous(cls, f + h));
    EXPECT_TRUE(is_continuous(cls, -f));
    EXPECT_TRUE(is_continuous(cls, differential(f)));
    for (Element x = 0; x < 4; ++x) EXPECT_TRUE(is_continuous(cls, g_action(x, f)));
  }
}

TEST(ClassClosure, Nesting) {
  const auto g = cyclic(4);
  const auto q = ContinuityClass::quotient(*g, {0, 2});
  EXPECT_TRUE(ContinuityClass::nested(q, ContinuityClass::all()));
  EXPECT_FALSE(ContinuityClass::nested(ContinuityClass::all(), q));
  EXPECT_TRUE(ContinuityClass::nested(q, q));
}
