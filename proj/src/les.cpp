#include <grpcohom/bicomplex.hpp>
#include <grpcohom/les.hpp>

#include <random>
#include <set>
#include <stdexcept>

namespace grpcohom {

namespace {

using linalg::IntMatrix;
using linalg::Vector;

ModElement apply_matrix(const IntMatrix& m, const GModule& target, const ModElement& x) {
  return target.canonical(m.apply(x));
}

bool well_defined(const IntMatrix& m, const GModule& source, const GModule& target) {
  for (std::size_t j = 0; j < source.dim(); ++j) {
    if (source.moduli()[j] == 0) continue;
    for (std::size_t i = 0; i < target.dim(); ++i) {
      Integer v = m(i, j) * source.moduli()[j];
      reduce(v, target.moduli()[i]);
      if (v != 0) return false;
    }
  }
  return true;
}

bool equivariant_map(const IntMatrix& m, const GModule& source, const GModule& target) {
  for (Element g = 0; g < source.group().order(); ++g) {
    for (std::size_t j = 0; j < source.dim(); ++j) {
      ModElement e(source.dim());
      e[j] = 1;
      if (apply_matrix(m, target, source.act(g, e)) != target.act(g, apply_matrix(m, target, e))) return false;
    }
  }
  return true;
}

IntMatrix relations(const Vector& invariants) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (invariants[i] == 0) continue;
    Vector c(invariants.size());
    c[i] = invariants[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, invariants.size());
}

// Every column of `small` lies in the Z-span of the columns of `big`.
bool lattice_contains(const IntMatrix& big, const IntMatrix& small) {
  if (small.cols() == 0) return true;
  if (big.cols() == 0) return small.is_zero();
  const linalg::LinearSolver solver(big);
  for (std::size_t j = 0; j < small.cols(); ++j) {
    if (!solver.solve(small.column(j))) return false;
  }
  return true;
}

IntMatrix image_lattice(const IntMatrix& map, const Vector& target) {
  if (map.rows() != target.size()) throw std::invalid_argument("abelian: dimension mismatch");
  return map.hconcat(relations(target));
}

IntMatrix kernel_lattice(const IntMatrix& map, const Vector& source, const Vector& target) {
  if (target.empty()) return IntMatrix::identity(source.size());
  if (source.empty()) return IntMatrix(0, 0);
  return linalg::kernel_mod(map, target);
}

linalg::FPAbelianGroup subgroup(const IntMatrix& generators, const Vector& ambient) {
  if (ambient.empty()) return {};
  return linalg::Subquotient(generators, relations(ambient)).group();
}

std::string h_label(const char* module, int n) { return "H^" + std::to_string(n) + "(" + module + ")"; }

// Coordinates in H^n(dst) of fn(generator i of H^n(src)), as columns.
template <class Fn>
IntMatrix induced_matrix(const CochainComplexModel& src, int n_src, const CochainComplexModel& dst, int n_dst,
                         Fn fn) {
  const auto& hs = src.cohomology(n_src);
  const auto& hd = dst.cohomology(n_dst);
  IntMatrix m(hd.num_generators(), hs.num_generators());
  for (std::size_t i = 0; i < hs.num_generators(); ++i) {
    const InhomogeneousCochain image = fn(src.from_coordinates(n_src, hs.generator(i)));
    const auto coords = dst.coordinates(image);
    if (!coords) throw IdentityFailure("induced map leaves the class");
    const auto h = hd.coordinates(*coords);
    if (!h) throw IdentityFailure("induced map does not send cocycles to cocycles");
    m.set_column(i, *h);
  }
  return m;
}

struct Row {
  std::vector<std::string> labels;
  std::vector<Vector> invariants;
  std::vector<linalg::FPAbelianGroup> groups;
};

}  // namespace

std::vector<std::string> validate_ses(const CoefficientSES& ses) {
  std::vector<std::string> out;
  if (!ses.gamma || !ses.b || !ses.a) return {"missing module"};
  const auto& g = ses.b->group();
  if (!(ses.gamma->group() == g) || !(ses.a->group() == g)) out.push_back("modules are over different groups");
  if (!ses.gamma->is_finite() || !ses.b->is_finite() || !ses.a->is_finite()) {
    out.push_back("modules must be finite (rank 0)");
  }
  if (ses.incl.rows() != ses.b->dim() || ses.incl.cols() != ses.gamma->dim()) out.push_back("incl has wrong shape");
  if (ses.proj.rows() != ses.a->dim() || ses.proj.cols() != ses.b->dim()) out.push_back("proj has wrong shape");
  if (!out.empty()) return out;

  if (!well_defined(ses.incl, *ses.gamma, *ses.b)) out.push_back("incl is not well defined on torsion");
  if (!well_defined(ses.proj, *ses.b, *ses.a)) out.push_back("proj is not well defined on torsion");
  if (!out.empty()) return out;
  if (!equivariant_map(ses.incl, *ses.gamma, *ses.b)) out.push_back("incl is not G-equivariant");
  if (!equivariant_map(ses.proj, *ses.b, *ses.a)) out.push_back("proj is not G-equivariant");

  std::set<std::size_t> incl_image;
  for (std::size_t i = 0; i < ses.gamma->cardinality(); ++i) {
    incl_image.insert(ses.b->index_of(apply_matrix(ses.incl, *ses.b, ses.gamma->element_at(i))));
  }
  if (incl_image.size() != ses.gamma->cardinality()) out.push_back("incl is not injective");
  std::set<std::size_t> proj_image;
  std::set<std::size_t> proj_kernel;
  for (std::size_t i = 0; i < ses.b->cardinality(); ++i) {
    const auto image = apply_matrix(ses.proj, *ses.a, ses.b->element_at(i));
    proj_image.insert(ses.a->index_of(image));
    if (image == ses.a->zero()) proj_kernel.insert(i);
  }
  if (proj_image.size() != ses.a->cardinality()) out.push_back("proj is not surjective");
  bool composite_zero = true;
  for (std::size_t i : incl_image) composite_zero = composite_zero && proj_kernel.count(i) == 1;
  if (!composite_zero) out.push_back("proj o incl is not zero");
  else if (proj_kernel != incl_image) out.push_back("sequence is not exact in the middle");

  if (ses.section.size() != ses.a->cardinality()) {
    out.push_back("section must have one entry per element of A");
  } else {
    for (std::size_t i = 0; i < ses.section.size(); ++i) {
      if (ses.section[i].size() != ses.b->dim()) {
        out.push_back("section entry has wrong dimension");
        break;
      }
      if (apply_matrix(ses.proj, *ses.a, ses.b->canonical(ses.section[i])) != ses.a->element_at(i)) {
        out.push_back("proj o section is not the identity");
        break;
      }
    }
  }
  return out;
}

CoefficientSES split_ses(const ModulePtr& gamma, const ModulePtr& a) {
  if (!gamma->is_finite() || !a->is_finite()) throw std::invalid_argument("split_ses: modules must be finite");
  const std::size_t dg = gamma->dim(), da = a->dim();
  std::vector<std::int64_t> torsion = gamma->torsion();
  torsion.insert(torsion.end(), a->torsion().begin(), a->torsion().end());
  std::vector<IntMatrix> action;
  for (Element g = 0; g < gamma->group().order(); ++g) {
    IntMatrix m(dg + da, dg + da);
    for (std::size_t i = 0; i < dg; ++i)
      for (std::size_t j = 0; j < dg; ++j) m(i, j) = gamma->action(g)(i, j);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m(dg + i, dg + j) = a->action(g)(i, j);
    action.push_back(std::move(m));
  }
  auto b = std::make_shared<const GModule>(gamma->group_ptr(), 0, torsion, action);
  CoefficientSES ses{gamma, b, a, IntMatrix(dg + da, dg), IntMatrix(da, dg + da), {}};
  for (std::size_t i = 0; i < dg; ++i) ses.incl(i, i) = 1;
  for (std::size_t i = 0; i < da; ++i) ses.proj(i, dg + i) = 1;
  for (std::size_t i = 0; i < a->cardinality(); ++i) {
    ModElement s(dg + da);
    const auto x = a->element_at(i);
    for (std::size_t k = 0; k < da; ++k) s[dg + k] = x[k];
    ses.section.push_back(std::move(s));
  }
  return ses;
}

InhomogeneousCochain apply_module_map(const IntMatrix& map, const ModulePtr& target, const InhomogeneousCochain& F) {
  InhomogeneousCochain out(target, F.degree());
  for (std::size_t t = 0; t < F.num_tuples(); ++t) out.set_at(t, map.apply(F.value_at(t)));
  return out;
}

InhomogeneousCochain connecting_cochain(const CoefficientSES& ses, const InhomogeneousCochain& F) {
  InhomogeneousCochain lifted(ses.b, F.degree());
  for (std::size_t t = 0; t < F.num_tuples(); ++t) {
    lifted.set_at(t, ses.section[ses.a->index_of(F.value_at(t))]);
  }
  const auto d_lifted = inhomogeneous_differential(lifted);
  const linalg::LinearSolver solver(ses.incl, ses.b->moduli());
  InhomogeneousCochain out(ses.gamma, F.degree() + 1);
  for (std::size_t t = 0; t < d_lifted.num_tuples(); ++t) {
    const auto c = solver.solve(d_lifted.value_at(t));
    if (!c) throw std::invalid_argument("connecting_cochain: d(s o F) is not in the image of incl (F not a cocycle?)");
    out.set_at(t, *c);
  }
  return out;
}

ConnectingMap connecting_hom(const CoefficientSES& ses, int n, const ContinuityClass& cls) {
  const auto problems = validate_ses(ses);
  if (!problems.empty()) throw std::invalid_argument("invalid ses: " + problems.front());
  for (const auto& m : {ses.gamma, ses.b, ses.a}) {
    const auto reason = cls.incompatibility(*m);
    if (!reason.empty()) throw std::invalid_argument("section is not class-compatible: " + reason);
  }
  const CochainComplexModel model_a(ses.a, cls), model_gamma(ses.gamma, cls);
  const auto fn = [&](const InhomogeneousCochain& F) { return connecting_cochain(ses, F); };
  ConnectingMap out{n, induced_matrix(model_a, n, model_gamma, n + 1, fn), true, 0};

  if (n == 0) return out;
  // Representative independence, sampled over random class-member coboundaries.
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
  const auto& h_a = model_a.cohomology(n);
  const auto& h_gamma = model_gamma.cohomology(n + 1);
  const auto prev_moduli = model_a.moduli(n - 1);
  for (std::size_t i = 0; i < h_a.num_generators(); ++i) {
    const auto base = model_a.from_coordinates(n, h_a.generator(i));
    for (int sample = 0; sample < 8; ++sample) {
      Vector b(prev_moduli.size());
      for (std::size_t k = 0; k < b.size(); ++k) {
        const unsigned long bound = prev_moduli[k] == 0 ? 7 : prev_moduli[k].get_ui();
        b[k] = static_cast<unsigned long>(rng() % bound);
      }
      const auto rep = base + inhomogeneous_differential(model_a.from_coordinates(n - 1, b));
      const auto coords = model_gamma.coordinates(connecting_cochain(ses, rep));
      const auto h = coords ? h_gamma.coordinates(*coords) : std::nullopt;
      ++out.representatives_checked;
      if (!h || *h != out.matrix.column(i)) out.representative_independent = false;
    }
  }
  return out;
}

bool LESReport::all_exact() const {
  for (const auto& node : nodes)
    if (!node.exact) return false;
  return true;
}

bool LESReport::compositions_zero() const {
  for (const auto& node : nodes)
    if (!node.composition_zero) return false;
  return true;
}

LESReport les_segment(const CoefficientSES& ses, int n_max, const ContinuityClass& cls) {
  if (n_max < 0) throw std::invalid_argument("les_segment: negative degree bound");
  const auto problems = validate_ses(ses);
  if (!problems.empty()) throw std::invalid_argument("invalid ses: " + problems.front());
  const CochainComplexModel mg(ses.gamma, cls), mb(ses.b, cls), ma(ses.a, cls);

  LESReport report;
  report.class_name = cls.describe();
  report.n_max = n_max;
  std::vector<Vector> invariants;
  auto push_object = [&](std::string label, const CochainComplexModel& m, int n) {
    report.object_labels.push_back(std::move(label));
    report.objects.push_back(m.cohomology_group(n));
    invariants.push_back(m.cohomology(n).invariants());
  };
  for (int n = 0; n <= n_max; ++n) {
    push_object(h_label("Gamma", n), mg, n);
    push_object(h_label("B", n), mb, n);
    push_object(h_label("A", n), ma, n);
    report.maps.push_back({"i^" + std::to_string(n), n, induced_matrix(mg, n, mb, n, [&](const auto& F) {
                             return apply_module_map(ses.incl, ses.b, F);
                           })});
    report.maps.push_back({"p^" + std::to_string(n), n, induced_matrix(mb, n, ma, n, [&](const auto& F) {
                             return apply_module_map(ses.proj, ses.a, F);
                           })});
    const auto delta = connecting_hom(ses, n, cls);
    report.delta_representative_independent =
        report.delta_representative_independent && delta.representative_independent;
    report.maps.push_back({"delta^" + std::to_string(n), n, delta.matrix});
  }
  push_object(h_label("Gamma", n_max + 1), mg, n_max + 1);

  // Node k sits between maps[k-1] and maps[k]; the sequence starts with 0.
  const std::size_t node_count = report.objects.size() - 1;
  for (std::size_t k = 0; k < node_count; ++k) {
    const Vector& middle = invariants[k];
    const Vector& next = invariants[k + 1];
    const IntMatrix incoming = k == 0 ? IntMatrix(middle.size(), 0) : report.maps[k - 1].matrix;
    const IntMatrix& outgoing = report.maps[k].matrix;
    LESNode node{report.object_labels[k],
                 static_cast<int>(k / 3),
                 report.objects[k],
                 abelian::composition_is_zero(incoming, outgoing, next),
                 abelian::image_equals_kernel(incoming, middle, outgoing, next),
                 abelian::image_group(incoming, middle),
                 abelian::kernel_group(outgoing, middle, next)};
    report.nodes.push_back(std::move(node));
  }
  return report;
}

bool LadderReport::all_commute() const {
  for (const auto& s : squares)
    if (!s.commutes) return false;
  return true;
}

bool LadderReport::five_lemma_consistent() const {
  for (const auto& w : windows)
    if (w.outer_isomorphisms && !w.center_isomorphism) return false;
  return true;
}

LadderReport ladder_check(const CoefficientSES& ses, const ContinuityClass& fine, const ContinuityClass& coarse,
                          int n_max) {
  if (!ContinuityClass::nested(fine, coarse)) {
    throw std::invalid_argument("ladder_check: fine class members are not coarse class members");
  }
  LadderReport report{fine.describe(), coarse.describe(), les_segment(ses, n_max, fine),
                      les_segment(ses, n_max, coarse), {}, {}, {}};
  const CochainComplexModel fg(ses.gamma, fine), fb(ses.b, fine), fa(ses.a, fine);
  const CochainComplexModel cg(ses.gamma, coarse), cb(ses.b, coarse), ca(ses.a, coarse);
  const auto identity_map = [](const InhomogeneousCochain& F) { return F; };

  std::vector<Vector> fine_inv, coarse_inv;
  const std::size_t objects = report.fine_row.objects.size();
  for (std::size_t k = 0; k < objects; ++k) {
    const int n = static_cast<int>(k / 3);
    const CochainComplexModel* pairs[3][2] = {{&fg, &cg}, {&fb, &cb}, {&fa, &ca}};
    const auto& [f_model, c_model] = pairs[k % 3];
    fine_inv.push_back(f_model->cohomology(n).invariants());
    coarse_inv.push_back(c_model->cohomology(n).invariants());
    auto m = induced_matrix(*f_model, n, *c_model, n, identity_map);
    const bool iso = abelian::is_isomorphism(m, fine_inv.back(), coarse_inv.back());
    report.verticals.push_back({report.fine_row.object_labels[k], std::move(m), iso});
  }
  for (std::size_t k = 0; k + 1 < objects; ++k) {
    // coarse_map o v_k == v_{k+1} o fine_map, compared in the coarse target.
    const IntMatrix left = report.coarse_row.maps[k].matrix * report.verticals[k].matrix;
    const IntMatrix right = report.verticals[k + 1].matrix * report.fine_row.maps[k].matrix;
    bool commutes = left.rows() == right.rows() && left.cols() == right.cols();
    for (std::size_t i = 0; commutes && i < left.rows(); ++i) {
      for (std::size_t j = 0; j < left.cols(); ++j) {
        Integer diff = left(i, j) - right(i, j);
        reduce(diff, coarse_inv[k + 1][i]);
        if (diff != 0) {
          commutes = false;
          break;
        }
      }
    }
    report.squares.push_back({report.fine_row.maps[k].label, commutes});
  }
  // The rows start 0 -> 0 -> H^0(Gamma); the padding verticals are isomorphisms.
  auto vertical_iso = [&](long k) { return k < 0 ? true : report.verticals[static_cast<std::size_t>(k)].isomorphism; };
  for (long c = 0; c + 2 < static_cast<long>(objects); ++c) {
    const bool outer = vertical_iso(c - 2) && vertical_iso(c - 1) && vertical_iso(c + 1) && vertical_iso(c + 2);
    report.windows.push_back({report.fine_row.object_labels[static_cast<std::size_t>(c)], outer, vertical_iso(c)});
  }
  return report;
}

namespace abelian {

bool image_equals_kernel(const IntMatrix& alpha, const Vector& middle, const IntMatrix& beta, const Vector& target) {
  if (middle.empty()) return true;
  const IntMatrix image = image_lattice(alpha, middle);
  const IntMatrix kernel = kernel_lattice(beta, middle, target);
  return lattice_contains(kernel, image) && lattice_contains(image, kernel);
}

bool composition_is_zero(const IntMatrix& alpha, const IntMatrix& beta, const Vector& target) {
  if (target.empty() || alpha.cols() == 0) return true;
  IntMatrix c = beta * alpha;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      reduce(c(i, j), target[i]);
      if (c(i, j) != 0) return false;
    }
  return true;
}

bool is_isomorphism(const IntMatrix& map, const Vector& source, const Vector& target) {
  const bool injective = source.empty() || lattice_contains(relations(source), kernel_lattice(map, source, target));
  const bool surjective = target.empty() || lattice_contains(image_lattice(map, target), IntMatrix::identity(target.size()));
  return injective && surjective;
}

linalg::FPAbelianGroup image_group(const IntMatrix& map, const Vector& target) {
  return subgroup(image_lattice(map, target), target);
}

linalg::FPAbelianGroup kernel_group(const IntMatrix& map, const Vector& source, const Vector& target) {
  return subgroup(kernel_lattice(map, source, target), source);
}

}  // namespace abelian

}  // namespace grpcohom
