// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include "commands.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

#include <grpcohom/random.hpp>
#include <grpcohom/suites.hpp>
#include <grpcohom/transfer.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace grpcohom;
using namespace testing_util;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kIdentitySeconds = 60.0;
constexpr double kTransferSeconds = 300.0;
constexpr double kCohomologySeconds = 10.0;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------- 1

Outcome simplicial_identities() {
  Outcome o;
  SuiteOptions opt;
  opt.seed = 1;
  opt.max_order = 8;
  opt.samples = 200;
  const auto start = Clock::now();
  const auto report = run_suite("differentials", opt);
  const double secs = seconds_since(start);
  for (const char* id : {"d_squared", "d_h_squared", "d_v_squared", "anticommutation", "total_D_squared"}) {
    const auto* r = report.find(id);
    if (!r) {
      o.fail(std::string("missing identity ") + id);
    } else if (!r->passed) {
      o.fail(std::string(id) + " failed: " + r->counterexample->dump());
    } else if (r->cases != 200) {
      o.fail(std::string(id) + " ran " + std::to_string(r->cases) + " cases");
    }
  }
  if (secs >= kIdentitySeconds) o.fail("took " + std::to_string(secs) + " s");
  o.detail = o.passed ? "200 cases per identity, orders <= 8, " + std::to_string(secs) + " s" : o.detail;
  return o;
}

// ---------------------------------------------------------------- 2

bool row_homotopy_holds(const BiCochain& f) { return row_contraction(d_h(f)) + d_h(row_contraction(f)) == f; }

Outcome row_homotopy() {
  Outcome o;
  std::size_t basis = 0, random = 0;
  // Exhaustive over Z/2 with Z/2 coefficients: the identity is linear, so
  // checking every basis indicator covers every bicochain.
  const auto a2 = trivial_module(cyclic(2), 0, {2});
  for (int p = 1; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      BiCochain e(a2, p, q);
      for (std::size_t t = 0; t < e.num_tuples(); ++t) {
        BiCochain f(a2, p, q);
        f.set_at(t, v(1));
        ++basis;
        if (!row_homotopy_holds(f)) o.fail("basis indicator " + std::to_string(t) + " at (" + std::to_string(p) + "," +
                                           std::to_string(q) + ")");
      }
    }
  Rng rng(0xacce55);
  for (const auto& g : {cyclic(4), klein()}) {
    for (const auto& m : {trivial_module(g, 0, {2}), trivial_module(g, 1), trivial_module(g, 0, {4})}) {
      for (int p = 1; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
          for (int i = 0; i < 5; ++i) {
            ++random;
            if (!row_homotopy_holds(random_bicochain(m, p, q, rng))) o.fail("random case over " + g->label());
          }
    }
  }
  if (o.passed) o.detail = std::to_string(basis) + " basis cases over Z/2, " + std::to_string(random) + " random over Z/4 and Z/2xZ/2";
  return o;
}

// ---------------------------------------------------------------- 3

Outcome equivariantization() {
  Outcome o;
  Rng rng(0x6e7);
  const auto g = cyclic(2);
  const std::vector<ModulePtr> modules{trivial_module(g, 0, {4}), cyclic_module(g, 0, {4}, -1)};
  for (int i = 0; i < 100; ++i) {
    const auto& m = modules[static_cast<std::size_t>(i) % 2];
    const int p = static_cast<int>(rng() % 3);
    const int q = static_cast<int>(rng() % 3);
    // Equivariant part plus a vertical cocycle that is not equivariant.
    BiCochain u = equivariantize(random_bicochain(m, p, q, rng));
    if (q == 0) {
      BiCochain x_only(m, p, 0);
      std::vector<ModElement> vals(x_only.num_tuples() / 2);
      for (auto& x : vals) x = random_element(*m, rng);
      for (std::size_t t = 0; t < x_only.num_tuples(); ++t) x_only.set_at(t, vals[t / 2]);
      u = u + x_only;
    } else {
      u = u + d_v(random_bicochain(m, p, q - 1, rng));
    }
    if (!is_equivariant(d_v(u))) {
      o.fail("generator produced non-equivariant d_v u");
      continue;
    }
    const auto T = equivariantize(u);
    if (!is_equivariant(T)) o.fail("equivariantize(u) not equivariant, case " + std::to_string(i));
    if (!(d_v(T) == d_v(u))) o.fail("d_v changed, case " + std::to_string(i));
  }
  if (o.passed) o.detail = "100 cases over Z/2 with Z/4 trivial and sign";
  return o;
}

// ---------------------------------------------------------------- 4

bool psi_holds(const Cochain& f, const ContinuityClass& cls) {
  return total_differential(psi_witness(f, cls)) == augment_v(f, cls) - augment_h(f);
}

Outcome psi_witness_identity() {
  Outcome o;
  const auto all = ContinuityClass::all();
  std::size_t exhaustive = 0;
  const auto z2 = cyclic(2);
  for (const auto& m : {trivial_module(z2, 0, {2}), trivial_module(z2, 0, {4}), cyclic_module(z2, 0, {3}, -1),
                        cyclic_module(z2, 0, {4}, -1)}) {
    const oracle::FiniteModule fm(*m);
    oracle::for_each_table(2, fm.size, [&](const oracle::Table& t) {
      InhomogeneousCochain F(m, 1);
      for (std::size_t i = 0; i < 2; ++i) F.set_at(i, m->element_at(t[i]));
      if (!inhomogeneous_differential(F).is_zero()) return;
      ++exhaustive;
      if (!psi_holds(homogeneous_of(F), all)) o.fail("degree-1 cocycle over " + m->describe());
    });
  }
  Rng rng(0x515);
  std::vector<ModulePtr> modules;
  for (const auto& g : {cyclic(1), cyclic(2), cyclic(3), cyclic(4), klein()}) {
    modules.push_back(trivial_module(g, 0, {2}));
    modules.push_back(trivial_module(g, 1));
  }
  modules.push_back(cyclic_module(cyclic(2), 0, {3}, -1));
  modules.push_back(cyclic_module(cyclic(4), 1, {}, -1));
  std::map<const GModule*, std::unique_ptr<CochainComplexModel>> models;
  for (int i = 0; i < 50; ++i) {
    const auto& m = modules[rng() % modules.size()];
    const int n = 2 + static_cast<int>(rng() % 2);
    auto& model = models[m.get()];
    if (!model) model = std::make_unique<CochainComplexModel>(m, all);
    if (!psi_holds(random_cocycle(*model, n, rng), all)) o.fail("random cocycle over " + m->describe());
  }
  if (o.passed) o.detail = std::to_string(exhaustive) + " degree-1 cocycles over Z/2, 50 random in degrees 2-3";
  return o;
}

// ---------------------------------------------------------------- 5

void check_transfer(Outcome& o, TransferEngine& engine, const Cochain& f, const std::string& label) {
  const auto result = engine.transfer(f);
  const auto* cert = std::get_if<TransferCertificate>(&result);
  if (!cert) {
    o.fail(label + ": obstruction");
    return;
  }
  if (!cert->verified || !verify_certificate(*cert).empty()) o.fail(label + ": " + verify_certificate(*cert));
  if (!(total_differential(cert->witness) == augment_v(cert->output, cert->cls) - augment_h(cert->input)))
    o.fail(label + ": witness equation");
  if (!solve_coboundary(cert->output, f)) o.fail(label + ": class changed");
}

Outcome transfer_pipeline() {
  Outcome o;
  const auto start = Clock::now();
  const auto all = ContinuityClass::all();
  {
    const auto a = trivial_module(cyclic(2), 0, {2});
    TransferEngine engine(a, all);
    check_transfer(o, engine, carry_cocycle(a), "carry");
  }
  Rng rng(0x7a5);
  {
    TransferEngine engine(trivial_module(cyclic(4), 0, {2}), all);
    for (int i = 0; i < 20; ++i) check_transfer(o, engine, random_cocycle(engine.model(), 2, rng), "Z/4 degree 2");
  }
  {
    TransferEngine engine(trivial_module(cyclic(2), 0, {2}), all);
    for (int i = 0; i < 10; ++i) check_transfer(o, engine, random_cocycle(engine.model(), 3, rng), "Z/2 degree 3");
  }
  const double secs = seconds_since(start);
  if (secs >= kTransferSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.passed) o.detail = "31 certificates re-verified, classes preserved, " + std::to_string(secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 6

Outcome cohomology_oracle() {
  Outcome o;
  std::size_t cases = 0;
  for (int order = 1; order <= 3; ++order) {
    for (const auto& a : oracle::all_small_modules(cyclic(order))) {
      const CochainComplexModel model(a, ContinuityClass::all());
      const oracle::FiniteModule fm(*a);
      for (int n = 0; n <= 2; ++n) {
        ++cases;
        const auto d_in =
            n == 0 ? linalg::IntMatrix(model.moduli(0).size(), 0) : model.differential_matrix(n - 1);
        const auto h = linalg::homology_at(model.differential_matrix(n), model.moduli(n + 1), d_in, model.moduli(n));
        if (!oracle::matches(oracle::brute_cohomology(a->group(), fm, n), fm, h))
          o.fail(a->describe() + " over Z/" + std::to_string(order) + " degree " + std::to_string(n));
      }
    }
  }
  for (int n : {2, 3, 4, 6}) {
    const CochainComplexModel model(trivial_module(cyclic(n), 1), ContinuityClass::all());
    if (!(model.cohomology_group(2) == linalg::FPAbelianGroup::from_factors({n})))
      o.fail("H^2(Z/" + std::to_string(n) + ", Z) = " + model.cohomology_group(2).to_string());
  }
  for (int n : {2, 3}) {
    const auto box = oracle::integer_h2_by_enumeration(n);
    if (box.classes != static_cast<std::size_t>(n) || !box.has_element_of_full_order)
      o.fail("enumeration oracle disagrees for Z/" + std::to_string(n));
  }
  if (o.passed) o.detail = std::to_string(cases) + " (G, A, n) cases, H^2(Z/n, Z) for n in {2,3,4,6}";
  return o;
}

// ---------------------------------------------------------------- 7

Outcome remark_fixture() {
  Outcome o;
  const auto j = load_fixture("remark_vertical_insertion.json");
  const auto g = json_io::group_from_json(j["group"]);
  const auto a = json_io::module_from_json(j["module"], g);
  const auto cls = json_io::class_from_json(j["class"], *g);
  const auto f = json_io::bicochain_from_json(j["bicochain"], a);
  if (!is_locally_continuous(cls, f)) o.fail("fixture is not a class member");
  if (!is_locally_continuous(cls, row_contraction(f))) o.fail("row contraction left the class");
  const auto k = vertical_insertion(f, cls);
  const auto* w = std::get_if<ClassViolation>(&k);
  if (!w) {
    o.fail("vertical insertion was not refused");
  } else if (o.passed) {
    std::ostringstream s;
    s << "refused with witness (";
    for (std::size_t i = 0; i < w->tuple.size(); ++i) s << (i ? "," : "") << w->tuple[i];
    s << ") vs (";
    for (std::size_t i = 0; i < w->other.size(); ++i) s << (i ? "," : "") << w->other[i];
    s << ")";
    o.detail = s.str();
  }
  return o;
}

// ---------------------------------------------------------------- 8

Outcome les_ladder() {
  Outcome o;
  const auto j = load_fixture("ses_z2_z4_z2.json");
  const auto g = json_io::group_from_json(j["group"]);
  const auto ses = json_io::ses_from_json(j, g);
  const auto report = les_segment(ses, 2, ContinuityClass::all());
  if (!report.all_exact()) o.fail("not exact");
  if (!report.compositions_zero()) o.fail("nonzero composition");
  const oracle::BruteLES brute(ses, 2);
  if (brute.nodes.size() != report.nodes.size()) o.fail("node count differs from enumeration");
  for (std::size_t k = 0; k < std::min(brute.nodes.size(), report.nodes.size()); ++k) {
    const auto& b = brute.nodes[k];
    const auto& r = report.nodes[k];
    if (!b.exact || r.group.order() != static_cast<unsigned long>(b.order) ||
        r.image.order() != static_cast<unsigned long>(b.image_in) ||
        r.kernel.order() != static_cast<unsigned long>(b.kernel_out))
      o.fail("enumeration disagrees at " + r.label);
  }
  const auto ladder = ladder_check(ses, ContinuityClass::all(), ContinuityClass::all(), 2);
  if (!ladder.all_commute()) o.fail("ladder does not commute");
  for (const auto& vert : ladder.verticals)
    if (!(vert.matrix == linalg::IntMatrix::identity(vert.matrix.rows()))) o.fail("vertical " + vert.label);
  if (o.passed) o.detail = std::to_string(report.nodes.size()) + " nodes exact, matches enumeration, identity verticals";
  return o;
}

// ---------------------------------------------------------------- 9

Outcome performance() {
  Outcome o;
  cli::JobSpec job;
  job.command = "cohomology";
  job.group = "cyclic:6";
  job.module = "Z/6";
  job.degree = 2;
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::run_job(job, out, err);
  const double secs = seconds_since(start);
  if (code != cli::kOk) o.fail("exit " + std::to_string(code) + ": " + err.str());
  else if (json_io::Json::parse(out.str())["cohomology"][0]["group"]["invariant_factors"] != json_io::Json::parse("[6]"))
    o.fail("unexpected group " + out.str());
  if (secs >= kCohomologySeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.passed) o.detail = "H^2(Z/6, Z/6) = Z/6 in " + std::to_string(secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 10

Outcome determinism() {
  Outcome o;
  cli::JobSpec job;
  job.command = "transfer";
  job.in = fixture("carry_cocycle.json");
  std::string first;
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    if (cli::run_job(job, out, err) != cli::kOk) o.fail("transfer failed: " + err.str());
    if (i == 0) first = out.str();
    else if (out.str() != first) o.fail("certificates differ");
  }
  if (o.passed) o.detail = "two certificates byte-identical (" + std::to_string(first.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"simplicial identities", simplicial_identities},
      {"row homotopy", row_homotopy},
      {"equivariantization keeps d_v", equivariantization},
      {"psi witness", psi_witness_identity},
      {"transfer pipeline", transfer_pipeline},
      {"cohomology oracle", cohomology_oracle},
      {"vertical insertion refusal fixture", remark_fixture},
      {"long exact sequence and ladder", les_ladder},
      {"performance H^2(Z/6, Z/6)", performance},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.passed;
    std::printf("criterion %2zu %-36s %s  %s\n", i + 1, criteria[i].first.c_str(), o.passed ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
