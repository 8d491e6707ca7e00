#pragma once

// Exact integer linear algebra: Smith normal form, lattices, solving linear
// systems with per-row moduli, and subquotients of Z^m.

#include <grpcohom/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grpcohom::linalg {

using Vector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, std::span<const Integer> values);

  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix top_rows(std::size_t count) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  Vector apply(std::span<const Integer> x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// S = L * M * R with S diagonal, s_0 | s_1 | ... , nonnegative entries, and
// L, R unimodular. `left_inverse` is filled only when requested.
struct SmithForm {
  IntMatrix diagonal_form;
  IntMatrix left;
  IntMatrix right;
  IntMatrix left_inverse;
  std::size_t rank = 0;

  Vector diagonal() const;
};

struct SmithOptions {
  bool track_left_inverse = false;
  // Re-check the factorization, divisibility chain and unimodularity.
  bool verify = false;
  // Nonzero: S is kept reduced modulo this value, so S = L*M*R holds only
  // modulo it (L and R stay exactly unimodular). Enough for kernels and
  // solutions mod the modulus and avoids coefficient growth.
  Integer modulus = 0;
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});

// Returns an empty string when all Smith postconditions hold, else a reason.
std::string check_smith_form(const IntMatrix& m, const SmithForm& snf);

Integer determinant(const IntMatrix& m);

// Z-basis of {x : m x = 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& m);

// Z-basis of {x : (m x)_i = 0 mod row_moduli[i]}; modulus 0 means equality in Z.
IntMatrix kernel_mod(const IntMatrix& m, std::span<const Integer> row_moduli);

// Z-basis of the column span of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

// Solves m x = b with row i taken modulo moduli[i]. The Smith decomposition is
// computed once, so repeated right-hand sides are cheap. The returned solution
// is the particular one with all free Smith coordinates set to zero.
class LinearSolver {
 public:
  LinearSolver(const IntMatrix& m, std::span<const Integer> moduli);
  explicit LinearSolver(const IntMatrix& m);

  std::optional<Vector> solve(std::span<const Integer> b) const;

  std::size_t unknowns() const { return unknowns_; }

 private:
  std::size_t unknowns_ = 0;
  // Uniform modulus path: every row shares one modulus (possibly 0).
  bool uniform_ = true;
  Integer uniform_modulus_;
  Vector row_moduli_;
  // Finite mixed moduli are brought to their lcm L by scaling row i by
  // L / moduli[i]; empty when no scaling was needed.
  Vector row_scale_;
  SmithForm snf_;
};

std::optional<Vector> solve_fp(const IntMatrix& m, std::span<const Integer> b,
                               std::span<const Integer> moduli);

// Finitely generated abelian group by invariant factors: d_1 | d_2 | ... with
// every d_i >= 2, followed by zeros (one per free summand).
struct FPAbelianGroup {
  std::vector<Integer> factors;

  static FPAbelianGroup from_factors(std::vector<Integer> raw);

  bool is_trivial() const { return factors.empty(); }
  std::size_t free_rank() const;
  // Order of the group, or 0 when infinite.
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const FPAbelianGroup&, const FPAbelianGroup&) = default;
};

// outer / inner for lattices inner <= outer <= Z^m, both given by generating
// columns. Keeps a presentation with explicit generators and a coordinate map.
class Subquotient {
 public:
  Subquotient(const IntMatrix& outer_generators, const IntMatrix& inner_generators);

  FPAbelianGroup group() const;
  std::size_t num_generators() const { return invariants_.size(); }
  // Order of generator i (0 for infinite order).
  const Vector& invariants() const { return invariants_; }
  // Representative of generator i in ambient coordinates.
  Vector generator(std::size_t i) const;
  // Coordinates of v modulo inner, reduced mod the invariants; nullopt when v
  // is not in outer.
  std::optional<Vector> coordinates(std::span<const Integer> v) const;
  std::size_t ambient_dimension() const { return basis_.rows(); }

 private:
  IntMatrix basis_;
  LinearSolver basis_solver_;
  SmithForm relation_snf_;
  std::vector<std::size_t> kept_;
  Vector invariants_;
  IntMatrix generators_;
};

// H = ker(d_out) / im(d_in) for the complex
//   Z^a --d_in--> Z^m / (moduli) --d_out--> Z^b / (out_moduli).
// Throws std::invalid_argument if d_out is not well defined on the middle
// presentation or d_out * d_in is nonzero.
FPAbelianGroup homology_at(const IntMatrix& d_out, std::span<const Integer> out_moduli,
                           const IntMatrix& d_in, std::span<const Integer> moduli);

Subquotient homology_subquotient(const IntMatrix& d_out, std::span<const Integer> out_moduli,
                                 const IntMatrix& d_in, std::span<const Integer> moduli);

}  // namespace grpcohom::linalg
