#include <grpcohom/group.hpp>

#include <algorithm>
#include <stdexcept>

namespace grpcohom {

std::vector<GroupViolation> validate_group(const GroupTable& candidate) {
  std::vector<GroupViolation> out;
  const int n = candidate.order;
  if (n <= 0) {
    out.push_back({GroupViolation::Kind::closure, {}, "order must be positive"});
    return out;
  }
  if (candidate.mult.size() != static_cast<std::size_t>(n * n)) {
    out.push_back({GroupViolation::Kind::closure, {}, "multiplication table must have order^2 entries"});
    return out;
  }
  auto m = [&](Element a, Element b) { return candidate.mult[static_cast<std::size_t>(a * n + b)]; };
  bool closed = true;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element c = m(a, b);
      if (c < 0 || c >= n) {
        closed = false;
        out.push_back({GroupViolation::Kind::closure, {a, b},
                       "product " + std::to_string(a) + "*" + std::to_string(b) + " out of range"});
      }
    }
  }
  if (!closed) return out;
  const Element e = candidate.identity;
  if (e < 0 || e >= n) {
    out.push_back({GroupViolation::Kind::identity, {e}, "identity index out of range"});
    return out;
  }
  for (Element g = 0; g < n; ++g) {
    if (m(e, g) != g || m(g, e) != g) {
      out.push_back({GroupViolation::Kind::identity, {g},
                     "identity is not two-sided neutral at element " + std::to_string(g)});
    }
  }
  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element h = 0; h < n && !found; ++h) found = m(g, h) == e && m(h, g) == e;
    if (!found) {
      out.push_back({GroupViolation::Kind::inverse, {g},
                     "element " + std::to_string(g) + " has no two-sided inverse"});
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) {
          out.push_back({GroupViolation::Kind::associativity, {a, b, c},
                         "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")"});
        }
      }
    }
  }
  return out;
}

FiniteGroup::FiniteGroup(int order, std::vector<Element> mult, Element identity, std::vector<Element> inv,
                         std::string label)
    : order_(order), mult_(std::move(mult)), identity_(identity), inv_(std::move(inv)), label_(std::move(label)) {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& rows, std::string label) {
  GroupTable t;
  t.order = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("group table must be square");
    t.mult.insert(t.mult.end(), row.begin(), row.end());
  }
  // Left identity candidate; validation reports if it is not two-sided.
  t.identity = 0;
  for (Element e = 0; e < t.order; ++e) {
    bool left_neutral = true;
    for (Element g = 0; g < t.order && left_neutral; ++g) left_neutral = rows[e][g] == g;
    if (left_neutral) {
      t.identity = e;
      break;
    }
  }
  return from_table(t, std::move(label));
}

FiniteGroup FiniteGroup::from_table(const GroupTable& table, std::string label) {
  const auto violations = validate_group(table);
  if (!violations.empty()) {
    std::string msg = "invalid group table:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw std::invalid_argument(msg);
  }
  const int n = table.order;
  std::vector<Element> inv(static_cast<std::size_t>(n));
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (table.mult[static_cast<std::size_t>(g * n + h)] == table.identity) {
        inv[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
  }
  return FiniteGroup(n, table.mult, table.identity, std::move(inv), std::move(label));
}

int FiniteGroup::element_order(Element g) const {
  int k = 1;
  Element x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_subgroup(std::span<const Element> subset) const {
  std::vector<char> in(static_cast<std::size_t>(order_), 0);
  for (Element g : subset) {
    if (g < 0 || g >= order_) return false;
    in[static_cast<std::size_t>(g)] = 1;
  }
  if (!in[static_cast<std::size_t>(identity_)]) return false;
  for (Element a : subset) {
    for (Element b : subset) {
      if (!in[static_cast<std::size_t>(mul(a, inv(b)))]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal_subgroup(std::span<const Element> subset) const {
  if (!is_subgroup(subset)) return false;
  std::vector<char> in(static_cast<std::size_t>(order_), 0);
  for (Element g : subset) in[static_cast<std::size_t>(g)] = 1;
  for (Element g = 0; g < order_; ++g) {
    for (Element n : subset) {
      if (!in[static_cast<std::size_t>(mul(mul(g, n), inv(g)))]) return false;
    }
  }
  return true;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
  GroupTable t;
  t.order = n;
  t.identity = 0;
  t.mult.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mult[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return FiniteGroup::from_table(t, "Z/" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order();
  const int nh = h.order();
  GroupTable t;
  t.order = ng * nh;
  t.identity = g.identity() * nh + h.identity();
  t.mult.resize(static_cast<std::size_t>(t.order * t.order));
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) {
      const Element first = g.mul(a / nh, b / nh);
      const Element second = h.mul(a % nh, b % nh);
      t.mult[static_cast<std::size_t>(a * t.order + b)] = first * nh + second;
    }
  }
  std::string label;
  if (!g.label().empty() && !h.label().empty()) label = g.label() + " x " + h.label();
  return FiniteGroup::from_table(t, label);
}

FiniteGroup make_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("make_dihedral: n must be >= 1");
  const int order = 2 * n;
  GroupTable t;
  t.order = order;
  t.identity = 0;
  t.mult.resize(static_cast<std::size_t>(order * order));
  // r^a s^i with r^n = s^2 = 1 and s r = r^{-1} s.
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, i = x / n;
      const int b = y % n, j = y / n;
      const int rot = i == 0 ? (a + b) % n : ((a - b) % n + n) % n;
      const int ref = (i + j) % 2;
      t.mult[static_cast<std::size_t>(x * order + y)] = ref * n + rot;
    }
  }
  return FiniteGroup::from_table(t, "D" + std::to_string(order));
}

}  // namespace grpcohom
