#include <grpcohom/bicomplex.hpp>
#include <grpcohom/operators.hpp>

namespace grpcohom {

namespace {

std::size_t bi_arity(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("BiCochain: bidegree must be nonnegative");
  return static_cast<std::size_t>(p + q + 2);
}

int parity_sign(int p) { return p % 2 ? -1 : 1; }

void require_equivariant(const Cochain& f, const char* what) {
  if (!is_equivariant(f)) throw std::invalid_argument(std::string(what) + ": cochain is not equivariant");
}

}  // namespace

BiCochain::BiCochain(ModulePtr module, int p, int q)
    : CoefficientTable(std::move(module), bi_arity(p, q)), p_(p), q_(q) {}

TotalCochain::TotalCochain(ModulePtr module, int degree) : module_(std::move(module)), degree_(degree) {
  if (degree < -1) throw std::invalid_argument("TotalCochain: degree must be >= -1");
  components_.reserve(static_cast<std::size_t>(degree + 1));
  for (int p = 0; p <= degree; ++p) components_.emplace_back(module_, p, degree - p);
}

bool TotalCochain::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

TotalCochain& TotalCochain::operator+=(const TotalCochain& other) {
  if (degree_ != other.degree_) throw std::invalid_argument("TotalCochain: degree mismatch");
  for (std::size_t p = 0; p < components_.size(); ++p) components_[p].add_scaled(other.components_[p], 1);
  return *this;
}

TotalCochain& TotalCochain::operator-=(const TotalCochain& other) {
  if (degree_ != other.degree_) throw std::invalid_argument("TotalCochain: degree mismatch");
  for (std::size_t p = 0; p < components_.size(); ++p) components_[p].add_scaled(other.components_[p], -1);
  return *this;
}

TotalCochain operator-(TotalCochain a) {
  for (auto& c : a.components_) c.negate();
  return a;
}

bool operator==(const TotalCochain& a, const TotalCochain& b) {
  return a.degree_ == b.degree_ && a.components_ == b.components_;
}

BiCochain d_h(const BiCochain& f) {
  BiCochain out(f.module_ptr(), f.p() + 1, f.q());
  apply(faces_op(f.group(), out.arity(), 0, static_cast<std::size_t>(f.p() + 2), 1), f, out);
  return out;
}

BiCochain d_v(const BiCochain& f) {
  BiCochain out(f.module_ptr(), f.p(), f.q() + 1);
  apply(faces_op(f.group(), out.arity(), static_cast<std::size_t>(f.p() + 1), static_cast<std::size_t>(f.q() + 2),
                 parity_sign(f.p())),
        f, out);
  return out;
}

TotalCochain total_differential(const TotalCochain& t) {
  TotalCochain out(t.module_ptr(), t.degree() + 1);
  for (int p = 0; p <= t.degree(); ++p) {
    const auto& c = t[static_cast<std::size_t>(p)];
    out[static_cast<std::size_t>(p + 1)].add_scaled(d_h(c), 1);
    out[static_cast<std::size_t>(p)].add_scaled(d_v(c), 1);
  }
  return out;
}

BiCochain j_h(const Cochain& f, const SignConvention& s) {
  BiCochain out(f.module_ptr(), 0, f.degree());
  apply(faces_op(f.group(), out.arity(), 0, 1, s.sigma_h), f, out);
  return out;
}

BiCochain j_v(const Cochain& f, const SignConvention& s) {
  BiCochain out(f.module_ptr(), f.degree(), 0);
  apply(faces_op(f.group(), out.arity(), out.arity() - 1, 1, s.sigma_v), f, out);
  return out;
}

TotalCochain augment_h(const Cochain& f, const SignConvention& s) {
  require_equivariant(f, "augment_h");
  TotalCochain out(f.module_ptr(), f.degree());
  out[0] = j_h(f, s);
  return out;
}

TotalCochain augment_v(const Cochain& f, const ContinuityClass& cls, const SignConvention& s) {
  require_equivariant(f, "augment_v");
  if (const auto v = find_violation(cls, f)) throw std::invalid_argument("augment_v: cochain is not continuous");
  TotalCochain out(f.module_ptr(), f.degree());
  out[static_cast<std::size_t>(f.degree())] = j_v(f, s);
  return out;
}

Cochain row_augmentation(const BiCochain& f, const SignConvention& s) {
  if (f.p() != 0) throw std::invalid_argument("row_augmentation: requires p = 0");
  Cochain out(f.module_ptr(), f.q());
  apply(insert_copy_op(f.group(), out.arity(), 0, 0, s.sigma_h), f, out);
  return out;
}

BiCochain row_contraction(const BiCochain& f) {
  if (f.p() < 1) throw std::invalid_argument("row_contraction: requires p >= 1");
  BiCochain out(f.module_ptr(), f.p() - 1, f.q());
  const auto pos = static_cast<std::size_t>(f.p());
  apply(insert_copy_op(f.group(), out.arity(), pos, pos, parity_sign(f.p())), f, out);
  return out;
}

std::variant<BiCochain, ClassViolation> vertical_insertion(const BiCochain& f, const ContinuityClass& cls,
                                                           const SignConvention& s) {
  if (f.q() < 1) throw std::invalid_argument("vertical_insertion: requires q >= 1");
  BiCochain out(f.module_ptr(), f.p(), f.q() - 1);
  apply(insert_constant_op(f.group(), out.arity(), static_cast<std::size_t>(f.p() + 1), f.group().identity(),
                           s.k_sign(f.p())),
        f, out);
  if (!cls.is_all()) {
    // Gamma_{e} is the smallest diagonal neighbourhood, so membership there
    // is local continuity for some U.
    if (auto v = member_violation(cls, out, IdentityNbhd::trivial(f.group()))) {
      v->message = "vertical insertion leaves the class: " + v->message;
      return *v;
    }
  }
  return out;
}

BiCochain equivariantize(const BiCochain& f) {
  BiCochain out(f.module_ptr(), f.p(), f.q());
  apply(leader_translate_op(f.group(), f.arity()), f, out);
  return out;
}

BiCochain g_action(Element g, const BiCochain& f) {
  BiCochain out(f.module_ptr(), f.p(), f.q());
  apply(translate_op(f.group(), f.arity(), g), f, out);
  return out;
}

bool is_equivariant(const BiCochain& f) {
  for (Element g = 0; g < f.group().order(); ++g) {
    if (g == f.group().identity()) continue;
    if (!(g_action(g, f) == f)) return false;
  }
  return true;
}

BlockPartition bicochain_partition(const ContinuityClass& cls, const FiniteGroup& group, int p, int q,
                                   const IdentityNbhd& U) {
  return class_partition(cls, group, bi_arity(p, q), Region{static_cast<std::size_t>(p + 1), U});
}

std::optional<ClassViolation> member_violation(const ContinuityClass& cls, const BiCochain& f,
                                               const IdentityNbhd& U) {
  return find_violation(cls, f, Region{static_cast<std::size_t>(f.p() + 1), U});
}

bool is_member(const ContinuityClass& cls, const BiCochain& f, const IdentityNbhd& U) {
  return !member_violation(cls, f, U).has_value();
}

std::optional<IdentityNbhd> is_locally_continuous(const ContinuityClass& cls, const BiCochain& f) {
  if (cls.is_all()) return IdentityNbhd::whole(f.group());
  for (const auto& U : candidate_neighbourhoods(f.group())) {
    if (is_member(cls, f, U)) return U;
  }
  return std::nullopt;
}

TotalCochain psi_witness(const Cochain& f, const ContinuityClass& cls, const SignConvention& s) {
  require_equivariant(f, "psi_witness");
  if (!differential(f).is_zero()) throw std::invalid_argument("psi_witness: cochain is not a cocycle");
  if (find_violation(cls, f)) throw std::invalid_argument("psi_witness: cochain is not continuous");
  const int n = f.degree();
  TotalCochain w(f.module_ptr(), n - 1);
  for (int p = 0; p < n; ++p) {
    auto& c = w[static_cast<std::size_t>(p)];
    // Same flat layout: (x_0..x_p, y_0..y_{n-1-p}) is an (n+1)-tuple.
    c.assign(f.data());
    if (s.epsilon(p, n) * parity_sign(p) < 0) c.negate();
  }
  const TotalCochain expected = augment_v(f, cls, s) - augment_h(f, s);
  const TotalCochain got = total_differential(w);
  if (!(got == expected)) throw IdentityFailure("psi_witness: D(W) != j_v(f) - j_h(f)");
  return w;
}

}  // namespace grpcohom
