#pragma once

// Command implementations shared by the `cohom` executable and the tests.

#include <grpcohom/json_io.hpp>
#include <grpcohom/suites.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace grpcohom::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kObstruction = 2, kIdentityFailure = 3 };

struct JobSpec {
  std::string command;
  std::string group;
  std::string module;
  std::string cls = "all";
  std::string coarse_cls;  // les only: compare against this class with a ladder
  std::string degrees;
  std::optional<int> degree;
  int p = 0;
  std::string in;
  std::string out;
  std::string suite;
  std::uint64_t seed = 1;
  int max_order = 8;
  int samples = 200;
  bool verbose = false;
};

// Runs one command. The payload goes to `out` (or to the --out file) and
// diagnostics, as JSON, to `err`. Returns the process exit code.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

// "cyclic:N", "klein", "dihedral:N" (order 2N), "trivial", or a JSON file.
GroupPtr parse_group(const std::string& spec);
// "Z", "Z^r", "Z/n" and "+"-sums of these with trivial action, or a JSON file.
ModulePtr parse_module(const std::string& spec, const GroupPtr& group);
// "all", "quotient:a,b,...", or a JSON file.
ContinuityClass parse_class(const std::string& spec, const FiniteGroup& group);
// "n" (meaning 0..n), "a-b", or "a,b,c". Sorted and deduplicated.
std::vector<int> parse_degrees(const std::string& spec);

json_io::Json read_json_file(const std::string& path);

}  // namespace grpcohom::cli
