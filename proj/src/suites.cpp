#include <grpcohom/suites.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace grpcohom {

namespace {

using json_io::Json;
using Check = std::function<std::optional<Json>(Rng&)>;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Runner {
  std::string suite;
  SuiteOptions options;
  std::vector<IdentityResult> results;

  // Each identity gets its own generator so that suites stay reproducible
  // when identities are added or reordered.
  IdentityResult& run(const std::string& identity, std::size_t cases, const Check& check) {
    Rng rng(options.seed ^ fnv1a(suite + "/" + identity));
    IdentityResult r{suite, identity, true, 0, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < cases; ++i) {
      ++r.cases;
      std::optional<Json> bad;
      try {
        bad = check(rng);
      } catch (const std::exception& e) {
        bad = Json{{"exception", e.what()}};
      }
      if (bad) {
        r.passed = false;
        r.counterexample = std::move(*bad);
        break;
      }
    }
    results.push_back(std::move(r));
    return results.back();
  }
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

struct Draw {
  GroupPtr group;
  ModulePtr module;
  int a;
  int b;
};

// Picks a catalog module and a pair (a, b) with a in [a_lo, a_hi], b in
// [b_lo, b_hi], a + b <= sum_max, such that |G|^(a + b + extra) fits the cap.
Draw draw(const std::vector<CatalogEntry>& cat, Rng& rng, const SuiteOptions& opt, int a_lo, int a_hi, int b_lo,
          int b_hi, int sum_max, int extra) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto& e = cat[rng() % cat.size()];
    const int a = a_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(a_hi - a_lo + 1));
    const int b = b_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(b_hi - b_lo + 1));
    if (a + b > sum_max) continue;
    const auto order = static_cast<std::size_t>(e.group->order());
    if (ipow(order, static_cast<std::size_t>(a + b + extra)) > opt.max_tuples) continue;
    return {e.group, e.modules[rng() % e.modules.size()], a, b};
  }
  throw std::logic_error("no catalog case fits the size cap");
}

Json tuple_json(const CoefficientTable& t, std::size_t index) {
  const auto tuple = t.space().decode(index);
  return Json(std::vector<int>(tuple.begin(), tuple.end()));
}

// Counterexample payload for got != want, or none when equal.
std::optional<Json> compare(const CoefficientTable& got, const CoefficientTable& want, Json input) {
  const std::size_t i = got.first_difference(want);
  if (i == got.num_tuples()) return std::nullopt;
  return Json{{"input", std::move(input)},
              {"tuple", tuple_json(got, i)},
              {"got", json_io::vector_to_json(got.value_at(i))},
              {"expected", json_io::vector_to_json(want.value_at(i))}};
}

std::optional<Json> expect_zero(const CoefficientTable& got, Json input) {
  for (std::size_t i = 0; i < got.num_tuples(); ++i) {
    for (std::size_t k = 0; k < got.dim(); ++k) {
      if (got.at(i)[k] != 0) {
        return Json{{"input", std::move(input)},
                    {"tuple", tuple_json(got, i)},
                    {"got", json_io::vector_to_json(got.value_at(i))}};
      }
    }
  }
  return std::nullopt;
}

Json bi_input(const BiCochain& f) {
  return {{"group", json_io::group_to_json(f.group())},
          {"module", json_io::module_to_json(f.module())},
          {"bicochain", json_io::bicochain_to_json(f)}};
}

Json inhom_input(const InhomogeneousCochain& F) {
  Json values = Json::array();
  for (std::size_t i = 0; i < F.num_tuples(); ++i) {
    values.push_back({{"tuple", tuple_json(F, i)}, {"coeff", json_io::vector_to_json(F.value_at(i))}});
  }
  return {{"group", json_io::group_to_json(F.group())},
          {"module", json_io::module_to_json(F.module())},
          {"inhomogeneous_degree", F.degree()},
          {"values", values}};
}

void accumulate(ModElement& acc, const ModElement& v, int sign) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += sign * v[k];
}

// Textbook bar differential, evaluated tuple by tuple:
// (dF)(g_1..g_{n+1}) = g_1 F(g_2..g_{n+1}) + sum_i (-1)^i F(.., g_i g_{i+1}, ..) + (-1)^{n+1} F(g_1..g_n).
InhomogeneousCochain textbook_bar_differential(const InhomogeneousCochain& F) {
  const auto& G = F.group();
  const auto& M = F.module();
  const int n = F.degree();
  InhomogeneousCochain out(F.module_ptr(), n + 1);
  const auto space = out.space();
  for (std::size_t t = 0; t < out.num_tuples(); ++t) {
    const auto g = space.decode(t);
    ModElement acc = M.zero();
    accumulate(acc, M.act(g[0], F.value(std::span<const Element>(g).subspan(1))), 1);
    for (int i = 1; i <= n; ++i) {
      std::vector<Element> merged;
      for (int k = 0; k <= n; ++k) {
        if (k == i - 1) {
          merged.push_back(G.mul(g[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k + 1)]));
          ++k;
        } else {
          merged.push_back(g[static_cast<std::size_t>(k)]);
        }
      }
      accumulate(acc, F.value(merged), i % 2 ? -1 : 1);
    }
    accumulate(acc, F.value(std::span<const Element>(g).first(static_cast<std::size_t>(n))), (n + 1) % 2 ? -1 : 1);
    out.set_at(t, M.canonical(acc));
  }
  return out;
}

std::vector<Element> subgroup_closure(const FiniteGroup& G, std::vector<Element> gens) {
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  std::vector<Element> members{G.identity()};
  in[static_cast<std::size_t>(G.identity())] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      const Element h = G.mul(members[i], g);
      if (!in[static_cast<std::size_t>(h)]) {
        in[static_cast<std::size_t>(h)] = 1;
        members.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool normal_subgroup_acts_trivially(const GModule& m, const std::vector<Element>& N) {
  return std::all_of(N.begin(), N.end(), [&](Element n) { return m.acts_trivially(n); });
}

struct QuotientDraw {
  GroupPtr group;
  ModulePtr module;
  ContinuityClass cls;
};

std::vector<QuotientDraw> quotient_cases(const std::vector<CatalogEntry>& cat) {
  std::vector<QuotientDraw> out;
  for (const auto& e : cat) {
    for (const auto& N : cyclic_normal_subgroups(*e.group)) {
      const auto cls = ContinuityClass::quotient(*e.group, N);
      for (const auto& m : e.modules) {
        if (normal_subgroup_acts_trivially(*m, N)) out.push_back({e.group, m, cls});
      }
    }
  }
  return out;
}

Json class_input(const ContinuityClass& cls, Json input) {
  return {{"class", json_io::class_to_json(cls)}, {"input", std::move(input)}};
}

// ---------------------------------------------------------------- suites

void differentials_suite(Runner& r, const std::vector<CatalogEntry>& cat) {
  const auto S = static_cast<std::size_t>(r.options.samples);
  const auto& opt = r.options;

  r.run("d_squared", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 3);
    const auto f = random_cochain(c.module, c.a, rng);
    return expect_zero(differential(differential(f)), json_io::cochain_to_json(f));
  });
  r.run("action_commutes_with_d", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 2);
    const auto f = random_cochain(c.module, c.a, rng);
    const auto g = static_cast<Element>(rng() % static_cast<std::uint64_t>(c.group->order()));
    return compare(differential(g_action(g, f)), g_action(g, differential(f)), json_io::cochain_to_json(f));
  });
  r.run("d_preserves_equivariance", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 2);
    const auto f = random_equivariant(c.module, c.a, rng);
    if (is_equivariant(f) && is_equivariant(differential(f))) return std::nullopt;
    return Json{{"input", json_io::cochain_to_json(f)}};
  });
  r.run("bar_round_trip", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 1);
    const auto f = random_equivariant(c.module, c.a, rng);
    if (auto bad = compare(homogeneous_of(inhomogeneous_of(f)), f, json_io::cochain_to_json(f))) return bad;
    const auto F = random_inhomogeneous(c.module, c.a, rng);
    return compare(inhomogeneous_of(homogeneous_of(F)), F, inhom_input(F));
  });
  r.run("bar_differential_textbook", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 2);
    const auto F = random_inhomogeneous(c.module, c.a, rng);
    const auto textbook = textbook_bar_differential(F);
    if (auto bad = compare(inhomogeneous_differential(F), textbook, inhom_input(F))) return bad;
    return compare(differential(homogeneous_of(F)), homogeneous_of(textbook), inhom_input(F));
  });
  r.run("d_h_squared", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 3, 3, 4);
    const auto f = random_bicochain(c.module, c.a, c.b, rng);
    return expect_zero(d_h(d_h(f)), bi_input(f));
  });
  r.run("d_v_squared", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 3, 3, 4);
    const auto f = random_bicochain(c.module, c.a, c.b, rng);
    return expect_zero(d_v(d_v(f)), bi_input(f));
  });
  r.run("anticommutation", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 3, 3, 4);
    const auto f = random_bicochain(c.module, c.a, c.b, rng);
    return expect_zero(d_h(d_v(f)) + d_v(d_h(f)), bi_input(f));
  });
  r.run("total_D_squared", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 4);
    const auto T = random_total(c.module, c.a, rng);
    const auto DD = total_differential(total_differential(T));
    for (const auto& comp : DD.components()) {
      Json in = Json::array();
      for (const auto& x : T.components()) in.push_back(bi_input(x));
      if (auto bad = expect_zero(comp, in)) return bad;
    }
    return std::nullopt;
  });

  const auto qcases = quotient_cases(cat);
  if (qcases.empty()) return;
  r.run("class_closure", S, [&](Rng& rng) -> std::optional<Json> {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const auto& q = qcases[rng() % qcases.size()];
      const auto& G = *q.group;
      const int p = static_cast<int>(rng() % 2);
      const int qq = static_cast<int>(rng() % 2);
      if (ipow(static_cast<std::size_t>(G.order()), static_cast<std::size_t>(p + qq + 3)) > opt.max_tuples) continue;
      const int n = p + qq;
      Cochain f(q.module, n);
      randomize_blocks(f, class_partition(q.cls, G, f.arity()), rng);
      const auto g = static_cast<Element>(rng() % static_cast<std::uint64_t>(G.order()));
      if (!is_continuous(q.cls, differential(f)) || !is_continuous(q.cls, g_action(g, f))) {
        return class_input(q.cls, json_io::cochain_to_json(f));
      }
      const auto cands = candidate_neighbourhoods(G);
      const auto& U = cands[rng() % cands.size()];
      BiCochain b(q.module, p, qq);
      randomize_blocks(b, bicochain_partition(q.cls, G, p, qq, U), rng);
      if (!is_member(q.cls, d_h(b), U) || !is_member(q.cls, d_v(b), U) || !is_member(q.cls, g_action(g, b), U)) {
        Json in = bi_input(b);
        in["U"] = json_io::nbhd_to_json(U);
        return class_input(q.cls, in);
      }
      return std::nullopt;
    }
    throw std::logic_error("no quotient case fits the size cap");
  });
}

void homotopy_suite(Runner& r, const std::vector<CatalogEntry>& cat) {
  const auto S = static_cast<std::size_t>(r.options.samples);
  const auto& opt = r.options;

  r.run("row_homotopy_exhaustive_Z2", 1, [&](Rng&) -> std::optional<Json> {
    const auto G = std::make_shared<const FiniteGroup>(make_cyclic(2));
    const auto A = std::make_shared<const GModule>(GModule::trivial(G, 0, {2}));
    for (int p = 1; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        BiCochain f(A, p, q);
        for (std::size_t t = 0; t < f.num_tuples(); ++t) {
          BiCochain e(A, p, q);
          e.set_at(t, {Integer(1)});
          if (auto bad = compare(row_contraction(d_h(e)) + d_h(row_contraction(e)), e, bi_input(e))) return bad;
        }
      }
    }
    return std::nullopt;
  });
  r.run("row_homotopy", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 1, 2, 0, 2, 4, 3);
    const auto f = random_bicochain(c.module, c.a, c.b, rng);
    return compare(row_contraction(d_h(f)) + d_h(row_contraction(f)), f, bi_input(f));
  });
  r.run("row_edge_identity", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 0, 0, 2, 2, 3);
    const auto f = random_bicochain(c.module, 0, c.b, rng);
    return compare(row_contraction(d_h(f)), f - j_h(row_augmentation(f)), bi_input(f));
  });
  r.run("vertical_homotopy_all", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 1, 1, 2, 3, 3);
    const auto f = random_bicochain(c.module, c.a, c.b, rng);
    const auto all = ContinuityClass::all();
    const auto k1 = vertical_insertion(d_v(f), all);
    const auto k2 = vertical_insertion(f, all);
    if (!std::holds_alternative<BiCochain>(k1) || !std::holds_alternative<BiCochain>(k2)) {
      return Json{{"input", bi_input(f)}, {"message", "vertical insertion refused under class all"}};
    }
    return compare(std::get<BiCochain>(k1) + d_v(std::get<BiCochain>(k2)), f, bi_input(f));
  });
  r.run("insertion_contraction", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 3, 0, 0, 3, 2);
    const auto f = random_cochain(c.module, c.a, rng);
    if (c.a == 0) {
      const auto base = constant_cochain(c.module, f.value(std::vector<Element>{c.group->identity()}));
      return compare(insertion_contraction(differential(f)) + base, f, json_io::cochain_to_json(f));
    }
    return compare(differential(insertion_contraction(f)) + insertion_contraction(differential(f)), f,
                   json_io::cochain_to_json(f));
  });
}

BiCochain equivariant_average(const BiCochain& f) {
  BiCochain out(f.module_ptr(), f.p(), f.q());
  for (Element g = 0; g < f.group().order(); ++g) out = out + g_action(g, f);
  return out;
}

void equivariantize_suite(Runner& r, const std::vector<CatalogEntry>& cat) {
  const auto S = static_cast<std::size_t>(r.options.samples);
  const auto& opt = r.options;

  r.run("vertical_coboundary_preserved", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 1, 0, 1, 2, 3);
    BiCochain u = equivariantize(random_bicochain(c.module, c.a, c.b, rng));
    if (c.b == 0) {
      BiCochain x_only(c.module, c.a, 0);
      const TupleSpace xs(c.group->order(), static_cast<std::size_t>(c.a + 1));
      std::vector<ModElement> vals(xs.size());
      for (auto& v : vals) v = random_element(*c.module, rng);
      for (std::size_t t = 0; t < x_only.num_tuples(); ++t) x_only.set_at(t, vals[t / c.group->order()]);
      u = u + x_only;
    } else {
      u = u + d_v(random_bicochain(c.module, c.a, c.b - 1, rng));
    }
    if (!is_equivariant(d_v(u))) return Json{{"input", bi_input(u)}, {"message", "generator broke d_v equivariance"}};
    const auto T = equivariantize(u);
    if (!is_equivariant(T)) return Json{{"input", bi_input(u)}, {"message", "equivariantize output not equivariant"}};
    return compare(d_v(T), d_v(u), bi_input(u));
  });
  r.run("equivariantize_idempotent", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 2, 0, 2, 3, 2);
    const auto f = random_bicochain(c.module, c.a, c.b, rng);
    const auto T = equivariantize(f);
    return compare(equivariantize(T), T, bi_input(f));
  });
  r.run("equivariantize_fixes_equivariant", S, [&](Rng& rng) -> std::optional<Json> {
    const auto c = draw(cat, rng, opt, 0, 2, 0, 2, 3, 2);
    const auto e = equivariant_average(random_bicochain(c.module, c.a, c.b, rng));
    return compare(equivariantize(e), e, bi_input(e));
  });
}

std::optional<Json> psi_check(const Cochain& f, const ContinuityClass& cls) {
  const auto W = psi_witness(f, cls);
  const auto want = augment_v(f, cls) - augment_h(f);
  const auto got = total_differential(W);
  for (std::size_t p = 0; p < got.size(); ++p) {
    if (auto bad = compare(got[p], want[p], class_input(cls, json_io::cochain_to_json(f)))) return bad;
  }
  return std::nullopt;
}

void psi_suite(Runner& r, const std::vector<CatalogEntry>& cat) {
  const auto S = static_cast<std::size_t>(r.options.samples);
  const auto& opt = r.options;
  const auto all = ContinuityClass::all();

  r.run("psi_degree1_exhaustive_Z2", 1, [&](Rng&) -> std::optional<Json> {
    const auto G = std::make_shared<const FiniteGroup>(make_cyclic(2));
    const std::vector<int> sign{1, -1};
    const std::vector<ModulePtr> modules{
        std::make_shared<const GModule>(GModule::trivial(G, 0, {2})),
        std::make_shared<const GModule>(GModule::trivial(G, 0, {4})),
        sign_module(G, sign, 0, {3}),
        sign_module(G, sign, 0, {4}),
    };
    for (const auto& A : modules) {
      const std::size_t card = A->cardinality();
      for (std::size_t a = 0; a < card; ++a) {
        for (std::size_t b = 0; b < card; ++b) {
          InhomogeneousCochain F(A, 1);
          F.set_at(0, A->element_at(a));
          F.set_at(1, A->element_at(b));
          if (!inhomogeneous_differential(F).is_zero()) continue;
          if (auto bad = psi_check(homogeneous_of(F), all)) return bad;
        }
      }
    }
    return std::nullopt;
  });

  std::vector<CatalogEntry> small;
  for (const auto& e : cat)
    if (e.group->order() <= 4) small.push_back(e);
  std::map<const GModule*, std::unique_ptr<CochainComplexModel>> models;
  auto model_for = [&](const ModulePtr& m, const ContinuityClass& cls) -> const CochainComplexModel& {
    auto& slot = models[m.get()];
    if (!slot || !(slot->continuity_class() == cls)) slot = std::make_unique<CochainComplexModel>(m, cls);
    return *slot;
  };
  if (!small.empty()) {
    r.run("psi_random", S, [&](Rng& rng) -> std::optional<Json> {
      const auto c = draw(small, rng, opt, 2, 3, 0, 0, 3, 2);
      return psi_check(random_cocycle(model_for(c.module, all), c.a, rng), all);
    });
  }
  const auto qcases = quotient_cases(small);
  if (!qcases.empty()) {
    models.clear();
    r.run("psi_quotient", S, [&](Rng& rng) -> std::optional<Json> {
      const auto& q = qcases[rng() % qcases.size()];
      const int n = 1 + static_cast<int>(rng() % 2);
      return psi_check(random_cocycle(model_for(q.module, q.cls), n, rng), q.cls);
    });
  }
}

linalg::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  linalg::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

void snf_suite(Runner& r) {
  const auto S = static_cast<std::size_t>(r.options.samples);

  r.run("smith_postconditions", S, [&](Rng& rng) -> std::optional<Json> {
    const auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 9);
    const auto snf = linalg::smith_normal_form(m, {.track_left_inverse = true});
    const auto reason = linalg::check_smith_form(m, snf);
    if (reason.empty()) return std::nullopt;
    return Json{{"matrix", json_io::matrix_to_json(m)}, {"reason", reason}};
  });
  r.run("smith_determinant", S, [&](Rng& rng) -> std::optional<Json> {
    const std::size_t n = 1 + rng() % 5;
    const auto m = random_matrix(rng, n, n, 6);
    Integer prod = 1;
    for (const auto& d : linalg::smith_normal_form(m).diagonal()) prod *= d;
    const Integer det = linalg::determinant(m);
    if (prod == abs(det)) return std::nullopt;
    return Json{{"matrix", json_io::matrix_to_json(m)}, {"product", json_io::integer_to_json(prod)},
                {"determinant", json_io::integer_to_json(det)}};
  });
  r.run("solve_fp_vs_enumeration", S, [&](Rng& rng) -> std::optional<Json> {
    // Moduli divide a common base, so residues in [0, base) cover every class.
    const long base = rng() % 2 ? 4 : 6;
    std::vector<long> divisors;
    for (long d = 2; d <= base; ++d)
      if (base % d == 0) divisors.push_back(d);
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 5;
    const auto m = random_matrix(rng, rows, cols, 5);
    linalg::Vector moduli(rows), b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      moduli[i] = divisors[rng() % divisors.size()];
      b[i] = static_cast<long>(rng() % moduli[i].get_ui());
    }
    const auto got = linalg::solve_fp(m, b, moduli);
    bool found = false;
    std::vector<long> x(cols, 0);
    for (std::size_t count = ipow(static_cast<std::size_t>(base), cols); count-- > 0 && !found;) {
      std::size_t c = count;
      for (auto& xi : x) {
        xi = static_cast<long>(c % static_cast<std::size_t>(base));
        c /= static_cast<std::size_t>(base);
      }
      bool ok = true;
      for (std::size_t i = 0; i < rows && ok; ++i) {
        Integer s = -b[i];
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * x[j];
        ok = s % moduli[i] == 0;
      }
      found = ok;
    }
    bool consistent = got.has_value() == found;
    if (got) {
      for (std::size_t i = 0; i < rows && consistent; ++i) {
        Integer s = -b[i];
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * (*got)[j];
        consistent = s % moduli[i] == 0;
      }
    }
    if (consistent) return std::nullopt;
    return Json{{"matrix", json_io::matrix_to_json(m)}, {"rhs", json_io::vector_to_json(b)},
                {"moduli", json_io::vector_to_json(moduli)}, {"solver_found", got.has_value()},
                {"enumeration_found", found}};
  });
}

void signs_suite(Runner& r) {
  auto& res = r.run("frozen_signs", 1, [&](Rng&) -> std::optional<Json> {
    const auto derived = derive_signs();
    if (derived == kFrozenSigns) return std::nullopt;
    return Json{{"frozen", kFrozenSigns.describe()}, {"derived", derived.describe()}};
  });
  res.details = Json{{"frozen", kFrozenSigns.describe()}, {"derived", derive_signs().describe()}};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

const IdentityResult* SuiteReport::find(const std::string& identity) const {
  for (const auto& r : results)
    if (r.identity == identity) return &r;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"differentials", "homotopy", "equivariantize", "psi", "snf", "signs", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite \"" + name + "\"");
  if (options.max_order < 1) throw std::invalid_argument("max order must be >= 1");
  const auto cat = group_catalog(options.max_order);
  SuiteReport report{name, options, {}};
  auto run_one = [&](const std::string& suite) {
    Runner r{suite, options, {}};
    if (suite == "differentials") differentials_suite(r, cat);
    if (suite == "homotopy") homotopy_suite(r, cat);
    if (suite == "equivariantize") equivariantize_suite(r, cat);
    if (suite == "psi") psi_suite(r, cat);
    if (suite == "snf") snf_suite(r);
    if (suite == "signs") signs_suite(r);
    for (auto& x : r.results) report.results.push_back(std::move(x));
  };
  if (name == "all") {
    for (const auto& s : suite_names())
      if (s != "all") run_one(s);
  } else {
    run_one(name);
  }
  return report;
}

json_io::Json suite_report_to_json(const SuiteReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json entry{{"suite", r.suite},
               {"identity", r.identity},
               {"passed", r.passed},
               {"cases", r.cases},
               {"counterexample", r.counterexample ? *r.counterexample : Json(nullptr)}};
    if (r.details) entry["details"] = *r.details;
    results.push_back(std::move(entry));
  }
  return {{"suite", report.suite},
          {"seed", report.options.seed},
          {"max_order", report.options.max_order},
          {"samples", report.options.samples},
          {"passed", report.passed()},
          {"results", results}};
}

std::optional<std::vector<int>> sign_character(const FiniteGroup& group) {
  const int n = group.order();
  if (n % 2) return std::nullopt;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const auto H = subgroup_closure(group, {a, b});
      if (static_cast<int>(H.size()) * 2 != n) continue;
      std::vector<int> sign(static_cast<std::size_t>(n), -1);
      for (Element h : H) sign[static_cast<std::size_t>(h)] = 1;
      return sign;
    }
  }
  return std::nullopt;
}

ModulePtr sign_module(const GroupPtr& group, const std::vector<int>& sign, int rank,
                      const std::vector<std::int64_t>& torsion) {
  const std::size_t dim = static_cast<std::size_t>(rank) + torsion.size();
  std::vector<linalg::IntMatrix> action;
  for (Element g = 0; g < group->order(); ++g) {
    auto m = linalg::IntMatrix::identity(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = sign[static_cast<std::size_t>(g)];
    action.push_back(std::move(m));
  }
  return std::make_shared<const GModule>(group, rank, torsion, std::move(action));
}

std::vector<CatalogEntry> group_catalog(int max_order) {
  std::vector<FiniteGroup> groups;
  for (int n = 1; n <= 8; ++n) groups.push_back(make_cyclic(n));
  const auto c2 = make_cyclic(2);
  groups.push_back(direct_product(c2, c2));
  groups.push_back(direct_product(c2, make_cyclic(4)));
  groups.push_back(direct_product(c2, direct_product(c2, c2)));
  groups.push_back(make_dihedral(3));
  groups.push_back(make_dihedral(4));

  std::vector<CatalogEntry> out;
  for (auto& g : groups) {
    if (g.order() > max_order) continue;
    auto G = std::make_shared<const FiniteGroup>(std::move(g));
    CatalogEntry e{G, {}};
    e.modules.push_back(std::make_shared<const GModule>(GModule::trivial(G, 1, {})));
    e.modules.push_back(std::make_shared<const GModule>(GModule::trivial(G, 0, {4})));
    e.modules.push_back(std::make_shared<const GModule>(GModule::trivial(G, 0, {2, 3})));
    if (const auto sign = sign_character(*G)) {
      e.modules.push_back(sign_module(G, *sign, 1, {}));
      e.modules.push_back(sign_module(G, *sign, 0, {3}));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::vector<Element>> cyclic_normal_subgroups(const FiniteGroup& group) {
  std::vector<std::vector<Element>> out;
  for (Element g = 0; g < group.order(); ++g) {
    if (g == group.identity()) continue;
    auto H = subgroup_closure(group, {g});
    if (static_cast<int>(H.size()) == group.order() || !group.is_normal_subgroup(H)) continue;
    if (std::find(out.begin(), out.end(), H) == out.end()) out.push_back(std::move(H));
  }
  return out;
}

void randomize_blocks(CoefficientTable& table, const BlockPartition& partition, Rng& rng) {
  const auto& m = table.module();
  std::vector<Integer> coords;
  coords.reserve(partition.num_blocks() * m.dim());
  for (std::size_t b = 0; b < partition.num_blocks(); ++b) {
    const auto v = random_element(m, rng);
    coords.insert(coords.end(), v.begin(), v.end());
  }
  from_block_coordinates(coords, partition, table);
}

}  // namespace grpcohom
