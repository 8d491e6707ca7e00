#pragma once

// Column exactness of the double complex for a continuity class, and the
// staircase transfer of a locally continuous cocycle to a continuous one with
// an explicit total-complex witness.

#include <grpcohom/bicomplex.hpp>
#include <grpcohom/complex_model.hpp>

#include <map>
#include <memory>
#include <variant>

namespace grpcohom {

struct ExactnessEntry {
  int p;
  int q;
  bool exact;
  // "homotopy" when certified by the vertical insertion identity, "solver"
  // when decided by linear algebra over the class lattice.
  std::string method;
  // Class-member vertical cocycle that is not d_v of a class member (for
  // q = 0: not in the image of the column augmentation).
  std::optional<BiCochain> obstruction;
};

struct ExactnessReport {
  std::string class_name;
  int p;
  std::vector<ExactnessEntry> entries;

  bool all_exact() const;
};

ExactnessReport column_exactness_check(const ModulePtr& module, const ContinuityClass& cls, int p, int q_max);

struct TransferStep {
  int p;
  int q;
  std::size_t lift_support;  // tuples where the equivariant lift is nonzero
};

struct TransferCertificate {
  Cochain input;
  Cochain output;
  // D(witness) = j_v(output) - j_h(input).
  TotalCochain witness;
  IdentityNbhd input_nbhd;
  ContinuityClass cls;
  std::vector<TransferStep> steps;
  // db = output - input; present when the input is itself continuous.
  std::optional<CoboundaryWitness> coboundary;
  bool verified = false;
};

struct TransferObstruction {
  int p;
  int q;
  BiCochain cocycle;
  std::string message;
};

using TransferResult = std::variant<TransferCertificate, TransferObstruction>;

// Holds the d_v lift solvers for one module and class so that repeated
// transfers reuse their Smith decompositions.
class TransferEngine {
 public:
  TransferEngine(ModulePtr module, ContinuityClass cls);

  // Requires an equivariant locally continuous cocycle; throws
  // std::invalid_argument otherwise and IdentityFailure if an internal
  // identity breaks.
  TransferResult transfer(const Cochain& f);

  const CochainComplexModel& model() const { return model_; }

 private:
  const linalg::LinearSolver& lift_solver(int p, int q);
  const BlockPartition& lift_partition(int p, int q);

  ModulePtr module_;
  ContinuityClass cls_;
  CochainComplexModel model_;
  std::map<std::pair<int, int>, BlockPartition> partitions_;
  std::map<std::pair<int, int>, std::unique_ptr<linalg::LinearSolver>> solvers_;
};

TransferResult transfer_lc_to_c(const Cochain& f, const ContinuityClass& cls);

// Empty when every certificate invariant holds, else the first failure.
std::string verify_certificate(const TransferCertificate& cert);

}  // namespace grpcohom
