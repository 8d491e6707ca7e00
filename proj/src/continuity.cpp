#include <grpcohom/continuity.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grpcohom {

IdentityNbhd::IdentityNbhd(const FiniteGroup& group, std::vector<Element> elements)
    : elements_(std::move(elements)), mask_(static_cast<std::size_t>(group.order()), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element g : elements_) {
    if (g < 0 || g >= group.order()) throw std::invalid_argument("neighbourhood element out of range");
    mask_[static_cast<std::size_t>(g)] = 1;
  }
  if (!contains(group.identity())) throw std::invalid_argument("neighbourhood must contain the identity");
}

IdentityNbhd IdentityNbhd::whole(const FiniteGroup& group) {
  std::vector<Element> all(static_cast<std::size_t>(group.order()));
  for (Element g = 0; g < group.order(); ++g) all[static_cast<std::size_t>(g)] = g;
  return IdentityNbhd(group, std::move(all));
}

IdentityNbhd IdentityNbhd::trivial(const FiniteGroup& group) { return IdentityNbhd(group, {group.identity()}); }

bool IdentityNbhd::is_symmetric(const FiniteGroup& group) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Element g) { return contains(group.inv(g)); });
}

bool IdentityNbhd::is_subset_of(const IdentityNbhd& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element g) { return static_cast<std::size_t>(g) < other.mask_.size() && other.contains(g); });
}

bool in_gamma(const FiniteGroup& group, const TupleSpace& space, std::size_t t, std::size_t offset,
              const IdentityNbhd& U) {
  for (std::size_t i = offset; i < space.length(); ++i) {
    const Element gi_inv = group.inv(space.digit(t, i));
    for (std::size_t j = i + 1; j < space.length(); ++j) {
      const Element gj = space.digit(t, j);
      // U need not be symmetric, so both quotients are checked.
      if (!U.contains(group.mul(gi_inv, gj)) || !U.contains(group.mul(group.inv(gj), space.digit(t, i)))) {
        return false;
      }
    }
  }
  return true;
}

DiagonalNbhd diagonal_nbhd(const FiniteGroup& group, const IdentityNbhd& U, int degree) {
  if (degree < 0) throw std::invalid_argument("diagonal_nbhd: negative degree");
  const TupleSpace space(group.order(), static_cast<std::size_t>(degree) + 1);
  DiagonalNbhd out{U, degree, {}, std::vector<char>(space.size(), 0)};
  for (std::size_t t = 0; t < space.size(); ++t) {
    if (in_gamma(group, space, t, 0, U)) {
      out.tuples.push_back(t);
      out.member[t] = 1;
    }
  }
  return out;
}

ContinuityClass ContinuityClass::all() { return ContinuityClass(); }

ContinuityClass ContinuityClass::quotient(const FiniteGroup& group, std::vector<Element> normal) {
  std::sort(normal.begin(), normal.end());
  normal.erase(std::unique(normal.begin(), normal.end()), normal.end());
  if (!group.is_normal_subgroup(normal)) throw std::invalid_argument("quotient class: N is not a normal subgroup");
  ContinuityClass c;
  c.kind_ = Kind::quotient;
  c.group_order_ = group.order();
  c.normal_ = normal;
  c.coset_of_.assign(static_cast<std::size_t>(group.order()), -1);
  for (Element g = 0; g < group.order(); ++g) {
    if (c.coset_of_[static_cast<std::size_t>(g)] >= 0) continue;
    for (Element n : normal) c.coset_of_[static_cast<std::size_t>(group.mul(g, n))] = c.num_cosets_;
    ++c.num_cosets_;
  }
  return c;
}

std::string ContinuityClass::incompatibility(const GModule& module) const {
  if (is_all()) return {};
  if (module.group().order() != group_order_) return "continuity class was built for a different group";
  for (Element n : normal_) {
    if (!module.acts_trivially(n)) {
      return "normal subgroup element " + std::to_string(n) + " acts nontrivially on the module";
    }
  }
  return {};
}

void ContinuityClass::require_compatible(const GModule& module) const {
  const auto reason = incompatibility(module);
  if (!reason.empty()) throw std::invalid_argument(reason);
}

bool ContinuityClass::nested(const ContinuityClass& fine, const ContinuityClass& coarse) {
  if (coarse.is_all()) return true;
  if (fine.is_all()) return false;
  return std::includes(fine.normal_.begin(), fine.normal_.end(), coarse.normal_.begin(), coarse.normal_.end());
}

std::string ContinuityClass::describe() const {
  if (is_all()) return "all";
  std::string out = "quotient:";
  for (std::size_t i = 0; i < normal_.size(); ++i) out += (i ? "," : "") + std::to_string(normal_[i]);
  return out;
}

BlockPartition class_partition(const ContinuityClass& cls, const FiniteGroup& group, std::size_t arity,
                               const std::optional<Region>& region) {
  const TupleSpace space(group.order(), arity);
  if (cls.is_all()) return BlockPartition::discrete(space.size());
  const std::size_t m = static_cast<std::size_t>(cls.num_cosets(group));
  const TupleSpace keys(static_cast<int>(m), arity);
  std::vector<std::size_t> block_of_key(keys.size(), SIZE_MAX);
  BlockPartition p;
  p.block_of.resize(space.size());
  for (std::size_t t = 0; t < space.size(); ++t) {
    if (region && !in_gamma(group, space, t, region->local_offset, region->U)) {
      p.block_of[t] = p.representative.size();
      p.representative.push_back(t);
      continue;
    }
    std::size_t key = 0;
    for (std::size_t i = 0; i < arity; ++i) key = key * m + static_cast<std::size_t>(cls.coset(space.digit(t, i)));
    if (block_of_key[key] == SIZE_MAX) {
      block_of_key[key] = p.representative.size();
      p.representative.push_back(t);
    }
    p.block_of[t] = block_of_key[key];
  }
  return p;
}

std::optional<ClassViolation> find_violation(const ContinuityClass& cls, const CoefficientTable& table,
                                             const std::optional<Region>& region) {
  if (cls.is_all()) return std::nullopt;
  const auto partition = class_partition(cls, table.group(), table.arity(), region);
  const std::size_t dim = table.dim();
  for (std::size_t t = 0; t < table.num_tuples(); ++t) {
    const std::size_t rep = partition.representative[partition.block_of[t]];
    if (rep == t) continue;
    if (!std::equal(table.at(t), table.at(t) + dim, table.at(rep))) {
      const auto space = table.space();
      return ClassViolation{space.decode(t), space.decode(rep),
                            "values differ on tuples with the same image in the quotient"};
    }
  }
  return std::nullopt;
}

bool is_continuous(const ContinuityClass& cls, const CoefficientTable& table) {
  return !find_violation(cls, table).has_value();
}

std::vector<IdentityNbhd> candidate_neighbourhoods(const FiniteGroup& group) {
  const int n = group.order();
  const Element e = group.identity();
  std::vector<std::vector<Element>> sets;
  if (n <= kExhaustiveNbhdOrder) {
    std::vector<Element> others;
    for (Element g = 0; g < n; ++g)
      if (g != e) others.push_back(g);
    for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
      std::vector<Element> s{e};
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(others[i]);
      std::sort(s.begin(), s.end());
      sets.push_back(std::move(s));
    }
  } else {
    // Subgroups generated by at most two elements, then pairwise unions.
    std::set<std::vector<Element>> subgroups;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        std::vector<Element> members{e};
        in[static_cast<std::size_t>(e)] = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (Element gen : {a, b}) {
            const Element x = group.mul(members[i], gen);
            if (!in[static_cast<std::size_t>(x)]) {
              in[static_cast<std::size_t>(x)] = 1;
              members.push_back(x);
            }
          }
        }
        std::sort(members.begin(), members.end());
        subgroups.insert(members);
      }
    }
    std::set<std::vector<Element>> all(subgroups.begin(), subgroups.end());
    for (auto i = subgroups.begin(); i != subgroups.end(); ++i) {
      for (auto j = std::next(i); j != subgroups.end(); ++j) {
        std::vector<Element> u;
        std::set_union(i->begin(), i->end(), j->begin(), j->end(), std::back_inserter(u));
        all.insert(u);
      }
    }
    sets.assign(all.begin(), all.end());
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<IdentityNbhd> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(group, std::move(s));
  return out;
}

std::optional<IdentityNbhd> is_locally_continuous(const ContinuityClass& cls, const Cochain& f) {
  if (cls.is_all()) return IdentityNbhd::whole(f.group());
  for (const auto& U : candidate_neighbourhoods(f.group())) {
    if (!find_violation(cls, f, Region{0, U})) return U;
  }
  return std::nullopt;
}

RestrictedTable restrict_to_gamma(const Cochain& f, const IdentityNbhd& U) {
  RestrictedTable out{diagonal_nbhd(f.group(), U, f.degree()), {}};
  out.values.reserve(out.gamma.size());
  for (std::size_t t : out.gamma.tuples) out.values.push_back(f.value_at(t));
  return out;
}

}  // namespace grpcohom
