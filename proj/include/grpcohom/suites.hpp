#pragma once

// Randomized and exhaustive identity suites behind `cohom check`. Each
// identity reports pass/fail and, on failure, the first counterexample.

#include <grpcohom/json_io.hpp>
#include <grpcohom/random.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grpcohom {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int max_order = 8;
  int samples = 200;
  // Largest table (number of tuples) any single case may touch.
  std::size_t max_tuples = std::size_t{1} << 15;
};

struct IdentityResult {
  std::string suite;
  std::string identity;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<json_io::Json> counterexample;
  // Extra output some identities attach (the sign constants, for example).
  std::optional<json_io::Json> details;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<IdentityResult> results;
  bool passed() const;
  const IdentityResult* find(const std::string& identity) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// "all" runs every suite. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

json_io::Json suite_report_to_json(const SuiteReport& report);

struct CatalogEntry {
  GroupPtr group;
  std::vector<ModulePtr> modules;
};

// Small groups up to `max_order` (cyclic, Klein four, Z/2 x Z/4, (Z/2)^3,
// D6, D8) with trivial modules Z, Z/4, Z/2 + Z/3 and, when the group has an
// index-2 subgroup, Z and Z/3 with the sign action.
std::vector<CatalogEntry> group_catalog(int max_order);

// Homomorphism G -> {+1, -1} with kernel the first index-2 subgroup found.
std::optional<std::vector<int>> sign_character(const FiniteGroup& group);

// Module Z^rank + torsion on which each g acts by sign(g) times the identity.
ModulePtr sign_module(const GroupPtr& group, const std::vector<int>& sign, int rank,
                      const std::vector<std::int64_t>& torsion);

// Nontrivial proper normal subgroups generated by one element.
std::vector<std::vector<Element>> cyclic_normal_subgroups(const FiniteGroup& group);

// Random class member: independent random values on the blocks.
void randomize_blocks(CoefficientTable& table, const BlockPartition& partition, Rng& rng);

}  // namespace grpcohom
