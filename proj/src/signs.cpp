#include <grpcohom/bicomplex.hpp>
#include <grpcohom/signs.hpp>

namespace grpcohom {

std::string SignConvention::describe() const {
  auto sign = [](int s) { return s > 0 ? std::string("+1") : std::string("-1"); };
  return "sigma_h=" + sign(sigma_h) + " sigma_v=" + sign(sigma_v) + " epsilon(p,n)=" + sign(epsilon_base) +
         (epsilon_alternates ? "*(-1)^p" : "") + " k_sign(p)=" + sign(k_base) + (k_alternates ? "*(-1)^p" : "");
}

namespace {

// Standard basis of equivariant cochains of the given degree.
std::vector<Cochain> equivariant_basis(const ModulePtr& m, int degree) {
  std::vector<Cochain> out;
  InhomogeneousCochain F(m, degree);
  for (std::size_t t = 0; t < F.num_tuples(); ++t) {
    for (std::size_t k = 0; k < m->dim(); ++k) {
      InhomogeneousCochain e(m, degree);
      e.at(t)[k] = 1;
      out.push_back(homogeneous_of(e));
    }
  }
  return out;
}

std::vector<BiCochain> bicochain_basis(const ModulePtr& m, int p, int q) {
  std::vector<BiCochain> out;
  BiCochain shape(m, p, q);
  for (std::size_t t = 0; t < shape.num_tuples(); ++t) {
    for (std::size_t k = 0; k < m->dim(); ++k) {
      BiCochain e(m, p, q);
      e.at(t)[k] = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool chain_maps_hold(const ModulePtr& m, const SignConvention& s) {
  const auto all = ContinuityClass::all();
  for (int n = 1; n <= 2; ++n) {
    for (const auto& f : equivariant_basis(m, n)) {
      const auto df = differential(f);
      if (!(total_differential(augment_h(f, s)) == augment_h(df, s))) return false;
      if (!(total_differential(augment_v(f, all, s)) == augment_v(df, all, s))) return false;
    }
  }
  return true;
}

bool psi_holds(const ModulePtr& m, const SignConvention& s) {
  const auto all = ContinuityClass::all();
  for (int n = 1; n <= 2; ++n) {
    // Every cocycle is a coboundary for these coefficients.
    for (const auto& g : equivariant_basis(m, n - 1)) {
      try {
        psi_witness(differential(g), all, s);
      } catch (const IdentityFailure&) {
        return false;
      }
    }
  }
  return true;
}

bool vertical_homotopy_holds(const ModulePtr& m, const SignConvention& s) {
  const auto all = ContinuityClass::all();
  for (auto [p, q] : {std::pair{0, 1}, std::pair{1, 1}}) {
    for (const auto& f : bicochain_basis(m, p, q)) {
      const auto kf = std::get<BiCochain>(vertical_insertion(f, all, s));
      const auto kdf = std::get<BiCochain>(vertical_insertion(d_v(f), all, s));
      if (!(d_v(kf) + kdf == f)) return false;
    }
  }
  return true;
}

}  // namespace

SignConvention derive_signs() {
  auto group = std::make_shared<const FiniteGroup>(make_cyclic(2));
  auto module = std::make_shared<const GModule>(GModule::trivial(group, 0, {3}));
  for (int sh : {1, -1}) {
    for (int sv : {1, -1}) {
      for (int eb : {1, -1}) {
        for (bool ea : {false, true}) {
          for (int kb : {1, -1}) {
            for (bool ka : {false, true}) {
              const SignConvention s{sh, sv, eb, ea, kb, ka};
              if (chain_maps_hold(module, s) && psi_holds(module, s) && vertical_homotopy_holds(module, s)) {
                return s;
              }
            }
          }
        }
      }
    }
  }
  throw std::logic_error("derive_signs: no sign convention satisfies the identities");
}

}  // namespace grpcohom
