#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace grpcohom::cli {

namespace {

using json_io::Json;

// Validation failure carrying a structured diagnostic.
class Diagnostic : public std::runtime_error {
 public:
  Diagnostic(Json payload, int code = kValidation)
      : std::runtime_error(payload.value("message", std::string("invalid input"))),
        payload_(std::move(payload)),
        code_(code) {}
  const Json& payload() const { return payload_; }
  int code() const { return code_; }

 private:
  Json payload_;
  int code_;
};

void emit(const JobSpec& job, std::ostream& out, const Json& j) {
  const std::string text = json_io::dump(j);
  if (job.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(job.out, std::ios::binary);
  if (!file) throw json_io::FormatError("cannot write " + job.out);
  file << text;
}

void log(const JobSpec& job, std::ostream& err, const std::string& line) {
  if (job.verbose) err << "# " << line << "\n";
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw json_io::FormatError("invalid " + what + " \"" + s + "\"");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Json tuple_json(std::span<const Element> t) { return Json(std::vector<int>(t.begin(), t.end())); }

void require(bool condition, const std::string& message) {
  if (!condition) throw Diagnostic({{"error", "usage"}, {"message", message}});
}

std::vector<int> job_degrees(const JobSpec& job) {
  std::vector<int> out;
  if (job.degree) out.push_back(*job.degree);
  if (!job.degrees.empty()) {
    const auto more = parse_degrees(job.degrees);
    out.insert(out.end(), more.begin(), more.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int max_degree(const JobSpec& job, int fallback) {
  const auto d = job_degrees(job);
  return d.empty() ? fallback : d.back();
}

void require_compatible(const ContinuityClass& cls, const GModule& m) {
  const auto reason = cls.incompatibility(m);
  if (!reason.empty()) throw Diagnostic({{"error", "incompatible_class"}, {"message", reason}});
}

// ------------------------------------------------------------ commands

int cmd_cohomology(const JobSpec& job, std::ostream& out, std::ostream& err) {
  require(!job.group.empty(), "cohomology requires --group");
  require(!job.module.empty(), "cohomology requires --module");
  const auto degrees = job_degrees(job);
  require(!degrees.empty(), "cohomology requires --degree or --degrees");
  const auto G = parse_group(job.group);
  const auto M = parse_module(job.module, G);
  const auto cls = parse_class(job.cls, *G);
  require_compatible(cls, *M);
  CochainComplexModel model(M, cls);
  Json rows = Json::array();
  for (int n : degrees) {
    log(job, err, "degree " + std::to_string(n));
    const auto H = model.cohomology_group(n);
    rows.push_back({{"degree", n}, {"group", json_io::abelian_group_to_json(H)}});
  }
  emit(job, out,
       {{"command", "cohomology"},
        {"group", json_io::group_to_json(*G)},
        {"module", json_io::module_to_json(*M)},
        {"class", json_io::class_to_json(cls)},
        {"cohomology", rows}});
  return kOk;
}

Cochain load_cochain(const JobSpec& job) {
  const Json j = read_json_file(job.in);
  if (j.contains("group")) return json_io::cochain_from_json(j);
  require(!job.group.empty() && !job.module.empty(), "cochain file has no group; pass --group and --module");
  const auto G = parse_group(job.group);
  return json_io::cochain_from_json(j, parse_module(job.module, G));
}

void validate_cocycle(const Cochain& f, const ContinuityClass& cls) {
  const auto df = differential(f);
  for (std::size_t t = 0; t < df.num_tuples(); ++t) {
    const auto v = df.value_at(t);
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) {
      const auto tuple = df.space().decode(t);
      std::string s;
      for (Element g : tuple) s += (s.empty() ? "" : ",") + std::to_string(g);
      throw Diagnostic({{"error", "not_a_cocycle"},
                        {"message", "df != 0 at tuple (" + s + ")"},
                        {"tuple", tuple_json(tuple)},
                        {"value", json_io::vector_to_json(v)}});
    }
  }
  for (Element g = 0; g < f.group().order(); ++g) {
    const auto gf = g_action(g, f);
    const std::size_t t = gf.first_difference(f);
    if (t != f.num_tuples()) {
      throw Diagnostic({{"error", "not_equivariant"},
                        {"message", "g.f != f for g = " + std::to_string(g)},
                        {"element", g},
                        {"tuple", tuple_json(f.space().decode(t))}});
    }
  }
  if (!is_locally_continuous(cls, f)) {
    const auto v = find_violation(cls, f, Region{0, IdentityNbhd::trivial(f.group())});
    Json payload{{"error", "not_locally_continuous"}, {"message", "cochain is not locally continuous for the class"}};
    if (v) {
      payload["tuple"] = tuple_json(v->tuple);
      payload["other"] = tuple_json(v->other);
    }
    throw Diagnostic(payload);
  }
}

int cmd_transfer(const JobSpec& job, std::ostream& out, std::ostream& err) {
  require(!job.in.empty(), "transfer requires --in");
  const Cochain f = load_cochain(job);
  const auto cls = parse_class(job.cls, f.group());
  require_compatible(cls, f.module());
  validate_cocycle(f, cls);
  log(job, err, "transferring degree " + std::to_string(f.degree()) + " cocycle, class " + cls.describe());
  TransferEngine engine(f.module_ptr(), cls);
  auto result = engine.transfer(f);
  if (auto* obs = std::get_if<TransferObstruction>(&result)) {
    emit(job, out, json_io::obstruction_to_json(*obs, cls));
    err << json_io::dump({{"error", "obstruction"}, {"message", obs->message}, {"p", obs->p}, {"q", obs->q}});
    return kObstruction;
  }
  const auto& cert = std::get<TransferCertificate>(result);
  emit(job, out, json_io::certificate_to_json(cert));
  if (!cert.verified) {
    err << json_io::dump({{"error", "identity_failure"}, {"message", verify_certificate(cert)}});
    return kIdentityFailure;
  }
  return kOk;
}

int cmd_check(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (!is_suite(job.suite)) {
    std::string names;
    for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    throw Diagnostic({{"error", "usage"}, {"message", "unknown suite \"" + job.suite + "\"; expected one of " + names}});
  }
  SuiteOptions options;
  options.seed = job.seed;
  options.max_order = job.max_order;
  options.samples = job.samples;
  log(job, err, "running suite " + job.suite);
  const auto report = run_suite(job.suite, options);
  emit(job, out, suite_report_to_json(report));
  return report.passed() ? kOk : kIdentityFailure;
}

int cmd_les(const JobSpec& job, std::ostream& out, std::ostream& err) {
  require(!job.in.empty(), "les requires --in");
  const Json j = read_json_file(job.in);
  GroupPtr G;
  if (j.contains("group")) {
    G = json_io::group_from_json(j.at("group"));
  } else {
    require(!job.group.empty(), "ses file has no group; pass --group");
    G = parse_group(job.group);
  }
  const auto ses = json_io::ses_from_json(j, G);
  const auto problems = validate_ses(ses);
  if (!problems.empty()) {
    throw Diagnostic({{"error", "invalid_ses"}, {"message", problems.front()}, {"violations", problems}});
  }
  const int n_max = max_degree(job, 2);
  const auto fine = parse_class(job.cls, *G);
  if (job.coarse_cls.empty()) {
    log(job, err, "long exact sequence up to degree " + std::to_string(n_max));
    const auto report = les_segment(ses, n_max, fine);
    emit(job, out, json_io::les_to_json(report));
    if (!report.compositions_zero() || !report.delta_representative_independent) return kIdentityFailure;
    return report.all_exact() ? kOk : kObstruction;
  }
  const auto coarse = parse_class(job.coarse_cls, *G);
  log(job, err, "ladder " + fine.describe() + " -> " + coarse.describe());
  const auto report = ladder_check(ses, fine, coarse, n_max);
  emit(job, out, json_io::ladder_to_json(report));
  const bool identities = report.all_commute() && report.five_lemma_consistent() &&
                          report.fine_row.compositions_zero() && report.coarse_row.compositions_zero();
  if (!identities) return kIdentityFailure;
  return report.fine_row.all_exact() && report.coarse_row.all_exact() ? kOk : kObstruction;
}

int cmd_exactness(const JobSpec& job, std::ostream& out, std::ostream& err) {
  require(!job.group.empty(), "exactness requires --group");
  require(!job.module.empty(), "exactness requires --module");
  require(job.p >= 0, "--p must be >= 0");
  const auto G = parse_group(job.group);
  const auto M = parse_module(job.module, G);
  const auto cls = parse_class(job.cls, *G);
  require_compatible(cls, *M);
  const int q_max = max_degree(job, 2);
  log(job, err, "column p = " + std::to_string(job.p) + ", q <= " + std::to_string(q_max));
  const auto report = column_exactness_check(M, cls, job.p, q_max);
  emit(job, out, json_io::exactness_to_json(report));
  return report.all_exact() ? kOk : kObstruction;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw json_io::FormatError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw json_io::FormatError(path + ": " + e.what());
  }
}

GroupPtr parse_group(const std::string& spec) {
  auto make = [](FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); };
  if (starts_with(spec, "cyclic:")) return make(make_cyclic(parse_int(spec.substr(7), "group order")));
  if (starts_with(spec, "Z/")) return make(make_cyclic(parse_int(spec.substr(2), "group order")));
  if (starts_with(spec, "dihedral:")) return make(make_dihedral(parse_int(spec.substr(9), "dihedral index")));
  if (spec == "klein") return make(direct_product(make_cyclic(2), make_cyclic(2)));
  if (spec == "trivial") return make(make_cyclic(1));
  if (std::filesystem::exists(spec)) return json_io::group_from_json(read_json_file(spec));
  throw json_io::FormatError("unknown group \"" + spec + "\"");
}

ModulePtr parse_module(const std::string& spec, const GroupPtr& group) {
  if (std::filesystem::exists(spec)) return json_io::module_from_json(read_json_file(spec), group);
  int rank = 0;
  std::vector<std::int64_t> torsion;
  if (spec != "0") {
    for (auto term : split(spec, '+')) {
      term.erase(std::remove(term.begin(), term.end(), ' '), term.end());
      if (term == "Z") {
        ++rank;
      } else if (starts_with(term, "Z^")) {
        rank += parse_int(term.substr(2), "rank");
      } else if (starts_with(term, "Z/")) {
        const int n = parse_int(term.substr(2), "modulus");
        if (n < 1) throw json_io::FormatError("modulus must be positive");
        if (n > 1) torsion.push_back(n);
      } else {
        throw json_io::FormatError("unknown module term \"" + term + "\"");
      }
    }
  }
  return std::make_shared<const GModule>(GModule::trivial(group, rank, torsion));
}

ContinuityClass parse_class(const std::string& spec, const FiniteGroup& group) {
  if (spec.empty() || spec == "all") return ContinuityClass::all();
  if (starts_with(spec, "quotient:")) {
    std::vector<Element> N;
    for (const auto& s : split(spec.substr(9), ',')) N.push_back(parse_int(s, "element"));
    for (Element g : N)
      if (g < 0 || g >= group.order()) throw json_io::FormatError("element " + std::to_string(g) + " out of range");
    return ContinuityClass::quotient(group, N);
  }
  if (std::filesystem::exists(spec)) return json_io::class_from_json(read_json_file(spec), group);
  throw json_io::FormatError("unknown class \"" + spec + "\"");
}

std::vector<int> parse_degrees(const std::string& spec) {
  std::set<int> out;
  if (spec.find(',') != std::string::npos) {
    for (const auto& s : split(spec, ',')) out.insert(parse_int(s, "degree"));
  } else if (const auto dash = spec.find('-'); dash != std::string::npos && dash > 0) {
    const int a = parse_int(spec.substr(0, dash), "degree");
    const int b = parse_int(spec.substr(dash + 1), "degree");
    for (int n = a; n <= b; ++n) out.insert(n);
  } else {
    const int n = parse_int(spec, "degree");
    for (int k = 0; k <= n; ++k) out.insert(k);
  }
  if (!out.empty() && *out.begin() < 0) throw json_io::FormatError("degrees must be >= 0");
  return {out.begin(), out.end()};
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << json_io::dump({{"error", kind}, {"message", message}});
    return code;
  };
  try {
    if (job.degree && *job.degree < 0) return fail(kValidation, "usage", "degree must be >= 0");
    if (job.command == "cohomology") return cmd_cohomology(job, out, err);
    if (job.command == "transfer") return cmd_transfer(job, out, err);
    if (job.command == "check") return cmd_check(job, out, err);
    if (job.command == "les") return cmd_les(job, out, err);
    if (job.command == "exactness") return cmd_exactness(job, out, err);
    return fail(kValidation, "usage", "unknown command \"" + job.command + "\"");
  } catch (const Diagnostic& d) {
    err << json_io::dump(d.payload());
    return d.code();
  } catch (const IdentityFailure& e) {
    return fail(kIdentityFailure, "identity_failure", e.what());
  } catch (const json_io::FormatError& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const Json::exception& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const std::out_of_range& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return fail(kIdentityFailure, "internal", e.what());
  }
}

}  // namespace grpcohom::cli
