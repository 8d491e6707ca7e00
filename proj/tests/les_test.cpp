#include "oracles.hpp"
#include "test_util.hpp"

#include <grpcohom/les.hpp>
#include <grpcohom/random.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace grpcohom;
using namespace testing_util;
using linalg::FPAbelianGroup;
using linalg::IntMatrix;

namespace {

CoefficientSES load_ses(const std::string& name, GroupPtr* group = nullptr) {
  const auto j = load_fixture(name);
  const auto g = json_io::group_from_json(j["group"]);
  if (group) *group = g;
  return json_io::ses_from_json(j, g);
}

void expect_matches_brute_force(const LESReport& report, const CoefficientSES& ses) {
  const oracle::BruteLES brute(ses, report.n_max);
  ASSERT_EQ(report.nodes.size(), brute.nodes.size());
  for (std::size_t k = 0; k < brute.nodes.size(); ++k) {
    const auto& node = report.nodes[k];
    const auto& expected = brute.nodes[k];
    EXPECT_EQ(node.group.order(), static_cast<unsigned long>(expected.order)) << node.label;
    EXPECT_EQ(node.image.order(), static_cast<unsigned long>(expected.image_in)) << node.label;
    EXPECT_EQ(node.kernel.order(), static_cast<unsigned long>(expected.kernel_out)) << node.label;
    EXPECT_EQ(node.exact, expected.exact) << node.label;
  }
}

}  // namespace

TEST(ValidateSes, FixturesValidate) {
  EXPECT_TRUE(validate_ses(load_ses("ses_z2_z4_z2.json")).empty());
  EXPECT_TRUE(validate_ses(load_ses("ses_split.json")).empty());
  EXPECT_TRUE(validate_ses(load_ses("ses_z4_quotient.json")).empty());
}

TEST(ValidateSes, NonExactMiddleRejected) {
  const auto problems = validate_ses(load_ses("ses_nonexact_middle.json"));
  ASSERT_FALSE(problems.empty());
  EXPECT_THROW(les_segment(load_ses("ses_nonexact_middle.json"), 1, ContinuityClass::all()), std::invalid_argument);
}

TEST(ConnectingMap, Z2Z4Z2MatchesEnumeration) {
  const auto ses = load_ses("ses_z2_z4_z2.json");
  const auto report = les_segment(ses, 2, ContinuityClass::all());
  EXPECT_TRUE(report.all_exact());
  EXPECT_TRUE(report.compositions_zero());
  EXPECT_TRUE(report.delta_representative_independent);
  expect_matches_brute_force(report, ses);
}

TEST(ConnectingMap, DegreeZeroImageIsKernel) {
  const auto ses = load_ses("ses_z2_z4_z2.json");
  const auto delta = connecting_hom(ses, 0, ContinuityClass::all());
  EXPECT_TRUE(delta.representative_independent);
  // H^0(A) = Z/2 lifts to the invariant 1 in Z/4 whose coboundary vanishes.
  EXPECT_TRUE(delta.matrix.is_zero());
}

TEST(ConnectingMap, ZeroClassGivesZero) {
  const auto ses = load_ses("ses_z2_z4_z2.json");
  const InhomogeneousCochain zero(ses.a, 1);
  EXPECT_TRUE(connecting_cochain(ses, zero).is_zero());
}

TEST(ConnectingMap, SplitSequenceHasZeroDelta) {
  const auto ses = load_ses("ses_split.json");
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(connecting_hom(ses, n, ContinuityClass::all()).matrix.is_zero()) << n;
  const auto report = les_segment(ses, 2, ContinuityClass::all());
  EXPECT_TRUE(report.all_exact());
  expect_matches_brute_force(report, ses);
}

TEST(ConnectingMap, SplitSesBuilder) {
  const auto g = cyclic(3);
  const auto ses = split_ses(trivial_module(g, 0, {2}), trivial_module(g, 0, {3}));
  EXPECT_TRUE(validate_ses(ses).empty());
  const auto report = les_segment(ses, 1, ContinuityClass::all());
  EXPECT_TRUE(report.all_exact());
  for (const auto& m : report.maps)
    if (m.label.starts_with("delta")) EXPECT_TRUE(m.matrix.is_zero());
}

TEST(LesSegment, TrivialGroupIsTheSequenceItself) {
  const auto g = cyclic(1);
  CoefficientSES ses;
  ses.gamma = trivial_module(g, 0, {2});
  ses.b = trivial_module(g, 0, {4});
  ses.a = trivial_module(g, 0, {2});
  ses.incl = IntMatrix::from_rows({{2}});
  ses.proj = IntMatrix::from_rows({{1}});
  ses.section = {v(0), v(1)};
  const auto report = les_segment(ses, 2, ContinuityClass::all());
  EXPECT_TRUE(report.all_exact());
  EXPECT_EQ(report.objects[0], FPAbelianGroup::from_factors({2}));
  EXPECT_EQ(report.objects[1], FPAbelianGroup::from_factors({4}));
  EXPECT_EQ(report.objects[2], FPAbelianGroup::from_factors({2}));
  for (std::size_t k = 3; k < report.objects.size(); ++k) EXPECT_TRUE(report.objects[k].is_trivial());
}

TEST(LesSegment, ZeroModules) {
  const auto g = cyclic(2);
  const auto zero = trivial_module(g, 0, {});
  const auto ses = split_ses(zero, zero);
  const auto report = les_segment(ses, 2, ContinuityClass::all());
  EXPECT_TRUE(report.all_exact());
  for (const auto& o : report.objects) EXPECT_TRUE(o.is_trivial());
}

TEST(LesSegment, QuotientClassMatchesEnumerationOfInflation) {
  // For the quotient class the complex is the inflated one, so the sequence
  // is that of G/N = Z/2 with the same coefficients.
  GroupPtr g;
  const auto ses = load_ses("ses_z4_quotient.json", &g);
  const auto report = les_segment(ses, 1, ContinuityClass::quotient(*g, {0, 2}));
  const auto reference = les_segment(load_ses("ses_z2_z4_z2.json"), 1, ContinuityClass::all());
  ASSERT_EQ(report.objects.size(), reference.objects.size());
  for (std::size_t k = 0; k < report.objects.size(); ++k) EXPECT_EQ(report.objects[k], reference.objects[k]);
  EXPECT_TRUE(report.all_exact());
}

TEST(Ladder, AllIntoAllIsIdentity) {
  const auto ses = load_ses("ses_z2_z4_z2.json");
  const auto ladder = ladder_check(ses, ContinuityClass::all(), ContinuityClass::all(), 2);
  EXPECT_TRUE(ladder.all_commute());
  EXPECT_TRUE(ladder.five_lemma_consistent());
  for (const auto& vert : ladder.verticals) {
    EXPECT_EQ(vert.matrix, IntMatrix::identity(vert.matrix.rows())) << vert.label;
    EXPECT_TRUE(vert.isomorphism);
  }
}

TEST(Ladder, QuotientIntoAllMatchesRecordedFixture) {
  GroupPtr g;
  const auto ses = load_ses("ses_z4_quotient.json", &g);
  const auto ladder = ladder_check(ses, ContinuityClass::quotient(*g, {0, 2}), ContinuityClass::all(), 1);
  EXPECT_TRUE(ladder.all_commute());
  EXPECT_TRUE(ladder.five_lemma_consistent());
  EXPECT_EQ(json_io::dump(json_io::ladder_to_json(ladder)),
            json_io::dump(load_fixture("expected_ladder_z4_quotient.json")));
}

TEST(Ladder, RejectsWrongNesting) {
  GroupPtr g;
  const auto ses = load_ses("ses_z4_quotient.json", &g);
  EXPECT_THROW(ladder_check(ses, ContinuityClass::all(), ContinuityClass::quotient(*g, {0, 2}), 1),
               std::invalid_argument);
}

TEST(Abelian, SubgroupComparisons) {
  const linalg::Vector z4{4}, z2{2};
  const auto doubling = IntMatrix::from_rows({{2}});
  const auto reduction = IntMatrix::from_rows({{1}});
  EXPECT_TRUE(abelian::image_equals_kernel(doubling, z4, reduction, z2));
  EXPECT_TRUE(abelian::composition_is_zero(doubling, reduction, z2));
  EXPECT_FALSE(abelian::is_isomorphism(reduction, z4, z2));
  EXPECT_TRUE(abelian::is_isomorphism(IntMatrix::from_rows({{3}}), z4, z4));
  EXPECT_EQ(abelian::image_group(doubling, z4), FPAbelianGroup::from_factors({2}));
  EXPECT_EQ(abelian::kernel_group(reduction, z4, z2), FPAbelianGroup::from_factors({2}));
}
