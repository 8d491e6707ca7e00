#pragma once

// Long exact cohomology sequence of a short exact sequence of finite
// coefficient modules Gamma -> B -> A, and the comparison ladder between two
// nested continuity classes.

#include <grpcohom/complex_model.hpp>

#include <string>
#include <vector>

namespace grpcohom {

struct CoefficientSES {
  ModulePtr gamma;
  ModulePtr b;
  ModulePtr a;
  linalg::IntMatrix incl;  // dim(B) x dim(Gamma)
  linalg::IntMatrix proj;  // dim(A) x dim(B)
  // Set-theoretic section, indexed by GModule::index_of on A.
  std::vector<ModElement> section;
};

// Empty when valid; otherwise one message per failed invariant.
std::vector<std::string> validate_ses(const CoefficientSES& ses);

// Builds the split sequence Gamma -> Gamma + A -> A (trivial actions only
// for the direct sum's action blocks, which are taken from the summands).
CoefficientSES split_ses(const ModulePtr& gamma, const ModulePtr& a);

// A module homomorphism applied pointwise to an inhomogeneous cochain.
InhomogeneousCochain apply_module_map(const linalg::IntMatrix& map, const ModulePtr& target,
                                      const InhomogeneousCochain& F);

struct ConnectingMap {
  int degree;
  // Column i: coordinates in H^{n+1}(Gamma) of delta(generator i of H^n(A)).
  linalg::IntMatrix matrix;
  // Every sampled representative of every generator gave the same class.
  bool representative_independent;
  std::size_t representatives_checked;
};

// Inhomogeneous (n+1)-cocycle in Gamma lifting d(s o F).
InhomogeneousCochain connecting_cochain(const CoefficientSES& ses, const InhomogeneousCochain& F);

ConnectingMap connecting_hom(const CoefficientSES& ses, int n, const ContinuityClass& cls);

struct LESMap {
  std::string label;  // i^n, p^n or delta^n
  int degree;
  linalg::IntMatrix matrix;
};

struct LESNode {
  std::string label;  // H^n(Gamma), H^n(B), H^n(A)
  int degree;
  linalg::FPAbelianGroup group;
  bool composition_zero;
  bool exact;
  linalg::FPAbelianGroup image;   // of the incoming map
  linalg::FPAbelianGroup kernel;  // of the outgoing map
};

struct LESReport {
  std::string class_name;
  int n_max;
  // Objects in sequence order: H^0(Gamma), H^0(B), H^0(A), H^1(Gamma), ...,
  // H^{n_max}(A), H^{n_max+1}(Gamma).
  std::vector<std::string> object_labels;
  std::vector<linalg::FPAbelianGroup> objects;
  // maps[i] : objects[i] -> objects[i+1]
  std::vector<LESMap> maps;
  std::vector<LESNode> nodes;
  bool delta_representative_independent = true;

  bool all_exact() const;
  bool compositions_zero() const;
};

LESReport les_segment(const CoefficientSES& ses, int n_max, const ContinuityClass& cls);

struct LadderVertical {
  std::string label;
  linalg::IntMatrix matrix;
  bool isomorphism;
};

struct LadderSquare {
  std::string label;
  bool commutes;
};

struct FiveLemmaWindow {
  std::string center;
  bool outer_isomorphisms;
  bool center_isomorphism;
};

struct LadderReport {
  std::string fine;
  std::string coarse;
  LESReport fine_row;
  LESReport coarse_row;
  std::vector<LadderVertical> verticals;
  std::vector<LadderSquare> squares;
  std::vector<FiveLemmaWindow> windows;

  bool all_commute() const;
  // No window has four outer isomorphisms with a non-isomorphic center.
  bool five_lemma_consistent() const;
};

// Throws std::invalid_argument unless fine members are coarse members.
LadderReport ladder_check(const CoefficientSES& ses, const ContinuityClass& fine, const ContinuityClass& coarse,
                          int n_max);

// Subgroup comparisons inside a finite abelian group Z^k / diag(invariants).
namespace abelian {
// Whether im(alpha) == ker(beta) in the middle group.
bool image_equals_kernel(const linalg::IntMatrix& alpha, const linalg::Vector& middle,
                         const linalg::IntMatrix& beta, const linalg::Vector& target);
bool composition_is_zero(const linalg::IntMatrix& alpha, const linalg::IntMatrix& beta,
                         const linalg::Vector& target);
bool is_isomorphism(const linalg::IntMatrix& map, const linalg::Vector& source, const linalg::Vector& target);
linalg::FPAbelianGroup image_group(const linalg::IntMatrix& map, const linalg::Vector& target);
linalg::FPAbelianGroup kernel_group(const linalg::IntMatrix& map, const linalg::Vector& source,
                                    const linalg::Vector& target);
}  // namespace abelian

}  // namespace grpcohom
