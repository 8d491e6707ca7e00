#include <grpcohom/json_io.hpp>

#include <limits>

namespace grpcohom::json_io {

namespace {

Json elements_to_json(std::span<const Element> tuple) { return Json(std::vector<int>(tuple.begin(), tuple.end())); }

std::vector<Element> elements_from_json(const Json& j, const FiniteGroup& g) {
  std::vector<Element> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError("group elements must be integers");
    const auto v = x.get<long long>();
    if (v < 0 || v >= g.order()) throw FormatError("group element " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

Json table_values(const CoefficientTable& t, std::size_t split) {
  Json values = Json::array();
  const auto space = t.space();
  for (std::size_t i = 0; i < t.num_tuples(); ++i) {
    const Integer* v = t.at(i);
    bool zero = true;
    for (std::size_t k = 0; k < t.dim(); ++k) zero = zero && v[k] == 0;
    if (zero) continue;
    const auto tuple = space.decode(i);
    Json entry;
    entry["coeff"] = vector_to_json(std::span<const Integer>(v, t.dim()));
    if (split == SIZE_MAX) {
      entry["tuple"] = elements_to_json(tuple);
    } else {
      entry["x"] = elements_to_json(std::span<const Element>(tuple).first(split));
      entry["y"] = elements_to_json(std::span<const Element>(tuple).subspan(split));
    }
    values.push_back(std::move(entry));
  }
  return values;
}

void read_values(const Json& values, CoefficientTable& t, std::size_t split) {
  if (!values.is_array()) throw FormatError("\"values\" must be an array");
  for (const auto& entry : values) {
    std::vector<Element> tuple;
    if (split == SIZE_MAX) {
      tuple = elements_from_json(entry.at("tuple"), t.group());
    } else {
      tuple = elements_from_json(entry.at("x"), t.group());
      const auto y = elements_from_json(entry.at("y"), t.group());
      if (tuple.size() != split) throw FormatError("x-block has wrong length");
      tuple.insert(tuple.end(), y.begin(), y.end());
    }
    if (tuple.size() != t.arity()) throw FormatError("tuple has wrong length");
    const auto coeff = vector_from_json(entry.at("coeff"));
    if (coeff.size() != t.dim()) throw FormatError("coefficient has wrong dimension");
    t.set(tuple, coeff);
  }
}

Json steps_to_json(const std::vector<TransferStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back({{"p", s.p}, {"q", s.q}, {"lift_support", s.lift_support}});
  return out;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) && sizeof(long) >= sizeof(std::int64_t)) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw FormatError("invalid integer string");
    return v;
  }
  throw FormatError("expected an integer (number or decimal string)");
}

Json vector_to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

linalg::Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of integers");
  linalg::Vector out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json matrix_to_json(const linalg::IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

linalg::IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected a matrix (array of rows)");
  std::vector<linalg::Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  linalg::IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw FormatError("matrix rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

Json group_to_json(const FiniteGroup& g) {
  Json mult = Json::array();
  for (Element a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mult.push_back(std::move(row));
  }
  return {{"order", g.order()}, {"mult", mult}, {"label", g.label()}};
}

GroupPtr group_from_json(const Json& j) {
  const auto order = j.at("order").get<int>();
  const auto rows = j.at("mult").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != order) throw FormatError("\"mult\" must have \"order\" rows");
  const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
  try {
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows, label));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json module_to_json(const GModule& m) {
  Json out{{"rank", m.rank()}, {"torsion", m.torsion()}};
  if (m.has_trivial_action()) {
    out["action"] = "trivial";
  } else {
    Json action = Json::object();
    for (Element g = 0; g < m.group().order(); ++g) {
      if (!m.acts_trivially(g)) action[std::to_string(g)] = matrix_to_json(m.action(g));
    }
    out["action"] = action;
  }
  return out;
}

ModulePtr module_from_json(const Json& j, const GroupPtr& group) {
  const int rank = j.value("rank", 0);
  const auto torsion = j.value("torsion", std::vector<std::int64_t>{});
  const std::size_t dim = static_cast<std::size_t>(rank) + torsion.size();
  std::vector<linalg::IntMatrix> action(static_cast<std::size_t>(group->order()), linalg::IntMatrix::identity(dim));
  if (j.contains("action") && !(j.at("action").is_string() && j.at("action") == "trivial")) {
    const auto& a = j.at("action");
    if (!a.is_object()) throw FormatError("\"action\" must be \"trivial\" or an object keyed by element");
    for (const auto& [key, value] : a.items()) {
      int g = -1;
      try {
        g = std::stoi(key);
      } catch (const std::exception&) {
        throw FormatError("action key \"" + key + "\" is not an element index");
      }
      if (g < 0 || g >= group->order()) throw FormatError("action key " + key + " out of range");
      action[static_cast<std::size_t>(g)] = matrix_from_json(value);
    }
  }
  try {
    return std::make_shared<const GModule>(group, rank, torsion, std::move(action));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json class_to_json(const ContinuityClass& c) {
  if (c.is_all()) return {{"class", "all"}};
  return {{"class", "quotient"}, {"normal_subgroup", c.normal_subgroup()}};
}

ContinuityClass class_from_json(const Json& j, const FiniteGroup& group) {
  const auto kind = j.at("class").get<std::string>();
  if (kind == "all") return ContinuityClass::all();
  if (kind == "quotient") {
    try {
      return ContinuityClass::quotient(group, elements_from_json(j.at("normal_subgroup"), group));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("unknown class \"" + kind + "\"");
}

Json nbhd_to_json(const IdentityNbhd& U) { return elements_to_json(U.elements()); }

Json abelian_group_to_json(const linalg::FPAbelianGroup& g) {
  return {{"invariant_factors", vector_to_json(g.factors)}, {"description", g.to_string()}};
}

Json cochain_to_json(const Cochain& f, bool embed_context) {
  Json out{{"degree", f.degree()}, {"values", table_values(f, SIZE_MAX)}};
  if (embed_context) {
    out["group"] = group_to_json(f.group());
    out["module"] = module_to_json(f.module());
  }
  return out;
}

Cochain cochain_from_json(const Json& j, ModulePtr module) {
  if (!module) {
    if (!j.contains("group") || !j.contains("module")) throw FormatError("cochain has no embedded group and module");
    module = module_from_json(j.at("module"), group_from_json(j.at("group")));
  }
  const int degree = j.at("degree").get<int>();
  if (degree < 0) throw FormatError("degree must be nonnegative");
  Cochain f(module, degree);
  read_values(j.at("values"), f, SIZE_MAX);
  return f;
}

Json bicochain_to_json(const BiCochain& f) {
  return {{"p", f.p()}, {"q", f.q()}, {"values", table_values(f, static_cast<std::size_t>(f.p() + 1))}};
}

BiCochain bicochain_from_json(const Json& j, const ModulePtr& module) {
  BiCochain f(module, j.at("p").get<int>(), j.at("q").get<int>());
  read_values(j.at("values"), f, static_cast<std::size_t>(f.p() + 1));
  return f;
}

Json total_to_json(const TotalCochain& t) {
  Json comps = Json::array();
  for (const auto& c : t.components()) comps.push_back(bicochain_to_json(c));
  return {{"degree", t.degree()}, {"components", comps}};
}

TotalCochain total_from_json(const Json& j, const ModulePtr& module) {
  TotalCochain t(module, j.at("degree").get<int>());
  const auto& comps = j.at("components");
  if (comps.size() != t.size()) throw FormatError("total cochain has the wrong number of components");
  for (std::size_t p = 0; p < t.size(); ++p) {
    auto c = bicochain_from_json(comps[p], module);
    if (c.p() != static_cast<int>(p) || c.q() != t.degree() - static_cast<int>(p)) {
      throw FormatError("total cochain component has the wrong bidegree");
    }
    t[p] = std::move(c);
  }
  return t;
}

Json certificate_to_json(const TransferCertificate& cert) {
  Json coboundary = nullptr;
  if (cert.coboundary) {
    coboundary = Json{{"b", cert.coboundary->b ? cochain_to_json(*cert.coboundary->b, false) : Json(nullptr)}};
  }
  return {{"kind", "transfer_certificate"},
          {"group", group_to_json(cert.input.group())},
          {"module", module_to_json(cert.input.module())},
          {"class", class_to_json(cert.cls)},
          {"input", cochain_to_json(cert.input, false)},
          {"output", cochain_to_json(cert.output, false)},
          {"witness", total_to_json(cert.witness)},
          {"input_neighbourhood", nbhd_to_json(cert.input_nbhd)},
          {"steps", steps_to_json(cert.steps)},
          {"coboundary", coboundary},
          {"verified", cert.verified}};
}

TransferCertificate certificate_from_json(const Json& j) {
  const auto group = group_from_json(j.at("group"));
  const auto module = module_from_json(j.at("module"), group);
  const auto cls = class_from_json(j.at("class"), *group);
  std::vector<TransferStep> steps;
  for (const auto& s : j.at("steps")) {
    steps.push_back({s.at("p").get<int>(), s.at("q").get<int>(), s.at("lift_support").get<std::size_t>()});
  }
  std::optional<CoboundaryWitness> coboundary;
  if (!j.at("coboundary").is_null()) {
    coboundary = CoboundaryWitness{};
    const auto& b = j.at("coboundary").at("b");
    if (!b.is_null()) coboundary->b = cochain_from_json(b, module);
  }
  TransferCertificate cert{cochain_from_json(j.at("input"), module),
                           cochain_from_json(j.at("output"), module),
                           total_from_json(j.at("witness"), module),
                           IdentityNbhd(*group, elements_from_json(j.at("input_neighbourhood"), *group)),
                           cls,
                           std::move(steps),
                           std::move(coboundary),
                           false};
  cert.verified = verify_certificate(cert).empty();
  return cert;
}

Json obstruction_to_json(const TransferObstruction& obs, const ContinuityClass& cls) {
  return {{"kind", "transfer_obstruction"},
          {"group", group_to_json(obs.cocycle.group())},
          {"module", module_to_json(obs.cocycle.module())},
          {"class", class_to_json(cls)},
          {"p", obs.p},
          {"q", obs.q},
          {"cocycle", bicochain_to_json(obs.cocycle)},
          {"message", obs.message}};
}

Json exactness_to_json(const ExactnessReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"p", e.p},
                       {"q", e.q},
                       {"exact", e.exact},
                       {"method", e.method},
                       {"obstruction", e.obstruction ? bicochain_to_json(*e.obstruction) : Json(nullptr)}});
  }
  return {{"class", r.class_name}, {"p", r.p}, {"entries", entries}, {"all_exact", r.all_exact()}};
}

CoefficientSES ses_from_json(const Json& j, const GroupPtr& group) {
  CoefficientSES ses{module_from_json(j.at("gamma"), group),
                     module_from_json(j.at("b"), group),
                     module_from_json(j.at("a"), group),
                     matrix_from_json(j.at("incl")),
                     matrix_from_json(j.at("proj")),
                     {}};
  if (!ses.a->is_finite()) throw FormatError("the quotient module A must be finite");
  const auto& section = j.at("section");
  if (!section.is_array()) throw FormatError("\"section\" must be an array");
  ses.section.assign(ses.a->cardinality(), ModElement());
  std::vector<char> seen(ses.a->cardinality(), 0);
  for (std::size_t i = 0; i < section.size(); ++i) {
    const auto& entry = section[i];
    if (entry.is_object()) {
      const auto a = vector_from_json(entry.at("a"));
      if (a.size() != ses.a->dim()) throw FormatError("section key has wrong dimension");
      const std::size_t idx = ses.a->index_of(a);
      ses.section[idx] = vector_from_json(entry.at("b"));
      seen[idx] = 1;
    } else {
      if (i >= ses.section.size()) throw FormatError("section has too many entries");
      ses.section[i] = vector_from_json(entry);
      seen[i] = 1;
    }
  }
  for (char s : seen)
    if (!s) throw FormatError("section does not cover every element of A");
  return ses;
}

Json ses_to_json(const CoefficientSES& ses) {
  Json section = Json::array();
  for (std::size_t i = 0; i < ses.section.size(); ++i) {
    section.push_back({{"a", vector_to_json(ses.a->element_at(i))}, {"b", vector_to_json(ses.section[i])}});
  }
  return {{"group", group_to_json(ses.b->group())},
          {"gamma", module_to_json(*ses.gamma)},
          {"b", module_to_json(*ses.b)},
          {"a", module_to_json(*ses.a)},
          {"incl", matrix_to_json(ses.incl)},
          {"proj", matrix_to_json(ses.proj)},
          {"section", section}};
}

Json les_to_json(const LESReport& r) {
  Json objects = Json::array();
  for (std::size_t k = 0; k < r.objects.size(); ++k) {
    objects.push_back({{"label", r.object_labels[k]}, {"group", abelian_group_to_json(r.objects[k])}});
  }
  Json maps = Json::array();
  for (const auto& m : r.maps) maps.push_back({{"label", m.label}, {"degree", m.degree}, {"matrix", matrix_to_json(m.matrix)}});
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    nodes.push_back({{"label", n.label},
                     {"degree", n.degree},
                     {"group", abelian_group_to_json(n.group)},
                     {"composition_zero", n.composition_zero},
                     {"exact", n.exact},
                     {"image_in", abelian_group_to_json(n.image)},
                     {"kernel_out", abelian_group_to_json(n.kernel)}});
  }
  return {{"class", r.class_name},
          {"n_max", r.n_max},
          {"objects", objects},
          {"maps", maps},
          {"nodes", nodes},
          {"all_exact", r.all_exact()},
          {"compositions_zero", r.compositions_zero()},
          {"delta_representative_independent", r.delta_representative_independent}};
}

Json ladder_to_json(const LadderReport& r) {
  Json verticals = Json::array();
  for (const auto& v : r.verticals) {
    verticals.push_back({{"label", v.label}, {"matrix", matrix_to_json(v.matrix)}, {"isomorphism", v.isomorphism}});
  }
  Json squares = Json::array();
  for (const auto& s : r.squares) squares.push_back({{"map", s.label}, {"commutes", s.commutes}});
  Json windows = Json::array();
  for (const auto& w : r.windows) {
    windows.push_back(
        {{"center", w.center}, {"outer_isomorphisms", w.outer_isomorphisms}, {"center_isomorphism", w.center_isomorphism}});
  }
  return {{"fine", r.fine},
          {"coarse", r.coarse},
          {"fine_row", les_to_json(r.fine_row)},
          {"coarse_row", les_to_json(r.coarse_row)},
          {"verticals", verticals},
          {"squares", squares},
          {"windows", windows},
          {"all_commute", r.all_commute()},
          {"five_lemma_consistent", r.five_lemma_consistent()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace grpcohom::json_io
