#include <grpcohom/linalg.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace grpcohom::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    m.set_column(j, columns[j]);
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector IntMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, std::span<const Integer> values) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_ && other.cols_ != 0 && cols_ != 0) {
    throw std::invalid_argument("hconcat: row mismatch");
  }
  const std::size_t r = cols_ == 0 ? other.rows_ : rows_;
  IntMatrix m(r, cols_ + other.cols_);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

Vector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer* row = &data_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0 && x[j] != 0) mpz_addmul(y[i].get_mpz_t(), row[j].get_mpz_t(), x[j].get_mpz_t());
    }
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  Integer* d = &data_[dst * cols_];
  const Integer* s = &data_[src * cols_];
  for (std::size_t j = 0; j < cols_; ++j) {
    if (s[j] != 0) mpz_addmul(d[j].get_mpz_t(), factor.get_mpz_t(), s[j].get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (s != 0) mpz_addmul((*this)(i, dst).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    Integer& v = (*this)(i, j);
    v = -v;
  }
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer& v = (*this)(i, j);
    v = -v;
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (bkj != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Vector SmithForm::diagonal() const {
  Vector d(std::min(diagonal_form.rows(), diagonal_form.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = diagonal_form(i, i);
  return d;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track_inverse, Integer modulus)
      : s_(m),
        l_(IntMatrix::identity(m.rows())),
        r_(IntMatrix::identity(m.cols())),
        track_inverse_(track_inverse),
        modulus_(std::move(modulus)) {
    if (track_inverse_) linv_ = IntMatrix::identity(m.rows());
    if (modulus_ != 0) {
      for (std::size_t i = 0; i < s_.rows(); ++i)
        for (std::size_t j = 0; j < s_.cols(); ++j) reduce(s_(i, j), modulus_);
    }
  }

  SmithForm run() {
    const std::size_t rows = s_.rows();
    const std::size_t cols = s_.cols();
    std::size_t t = 0;
    while (t < std::min(rows, cols)) {
      if (!move_smallest_to_pivot(t, t, rows, t, cols)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (s_(i, t) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), s_(i, t).get_mpz_t(), s_(t, t).get_mpz_t());
          row_add(i, t, -q);
          if (s_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s_(t, j) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), s_(t, j).get_mpz_t(), s_(t, t).get_mpz_t());
          col_add(j, t, -q);
          if (s_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_smallest_in_cross(t);
          continue;
        }
        if (fix_divisibility(t)) continue;
        break;
      }
      if (s_(t, t) < 0) row_negate(t);
      ++t;
    }
    SmithForm out;
    out.rank = t;
    out.diagonal_form = std::move(s_);
    out.left = std::move(l_);
    out.right = std::move(r_);
    out.left_inverse = std::move(linv_);
    return out;
  }

 private:
  void row_swap(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    l_.swap_rows(a, b);
    if (track_inverse_) linv_.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    s_.swap_cols(a, b);
    r_.swap_cols(a, b);
  }
  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    s_.add_row_multiple(dst, src, f);
    if (modulus_ != 0)
      for (std::size_t j = 0; j < s_.cols(); ++j) reduce(s_(dst, j), modulus_);
    l_.add_row_multiple(dst, src, f);
    if (track_inverse_) linv_.add_col_multiple(src, dst, -f);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    s_.add_col_multiple(dst, src, f);
    if (modulus_ != 0)
      for (std::size_t i = 0; i < s_.rows(); ++i) reduce(s_(i, dst), modulus_);
    r_.add_col_multiple(dst, src, f);
  }
  void row_negate(std::size_t i) {
    s_.negate_row(i);
    l_.negate_row(i);
    if (track_inverse_) linv_.negate_col(i);
  }

  bool move_smallest_to_pivot(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0,
                              std::size_t c1) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const Integer& v = s_(i, j);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0) {
          found = true;
          bi = i;
          bj = j;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) break;
        }
      }
      if (found && mpz_cmpabs_ui(s_(bi, bj).get_mpz_t(), 1) == 0) break;
    }
    if (!found) return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (s_(i, t) != 0 && (s_(bi, bj) == 0 || mpz_cmpabs(s_(i, t).get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0)) {
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < s_.cols(); ++j) {
      if (s_(t, j) != 0 && (s_(bi, bj) == 0 || mpz_cmpabs(s_(t, j).get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0)) {
        bi = t;
        bj = j;
      }
    }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  // If some remaining entry is not divisible by the pivot, fold its row into
  // the pivot row so the next sweep produces a smaller pivot.
  bool fix_divisibility(std::size_t t) {
    const Integer& pivot = s_(t, t);
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        const Integer& v = s_(i, j);
        if (v != 0 && !mpz_divisible_p(v.get_mpz_t(), pivot.get_mpz_t())) {
          row_add(t, i, 1);
          return true;
        }
      }
    }
    return false;
  }

  IntMatrix s_, l_, r_, linv_;
  bool track_inverse_;
  Integer modulus_;
};

Vector nonzero_diagonal_columns(std::span<const Integer> moduli, std::vector<std::size_t>& rows) {
  Vector entries;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] != 0) {
      rows.push_back(i);
      entries.push_back(moduli[i]);
    }
  }
  return entries;
}

// [m | D] where D has a column moduli[i] * e_i for every nonzero modulus.
IntMatrix augment_with_moduli(const IntMatrix& m, std::span<const Integer> moduli) {
  std::vector<std::size_t> rows;
  const Vector entries = nonzero_diagonal_columns(moduli, rows);
  IntMatrix d(m.rows(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) d(rows[k], k) = entries[k];
  IntMatrix out(m.rows(), m.cols() + rows.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    for (std::size_t k = 0; k < rows.size(); ++k) out(i, m.cols() + k) = d(i, k);
  }
  return out;
}

bool all_equal(std::span<const Integer> values) {
  for (const Integer& v : values)
    if (v != values.front()) return false;
  return true;
}

// Row i taken mod d_i is equivalent to row i times L/d_i taken mod L, which
// keeps the Smith decomposition at the size of m instead of m plus one
// relation column per row. Only possible when every modulus is nonzero.
std::optional<Vector> uniform_scales(std::span<const Integer> moduli, Integer& lcm_out) {
  Integer l = 1;
  for (const Integer& d : moduli) {
    if (d == 0) return std::nullopt;
    l = lcm(l, d);
  }
  Vector scales;
  for (const Integer& d : moduli) scales.push_back(l / d);
  lcm_out = l;
  return scales;
}

IntMatrix scale_rows(IntMatrix m, std::span<const Integer> scales) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= scales[i];
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
  SmithForm snf = SmithReducer(m, options.track_left_inverse, options.modulus).run();
  if (options.verify) {
    const std::string problem = check_smith_form(m, snf);
    if (!problem.empty()) throw std::logic_error("smith_normal_form postcondition: " + problem);
  }
  return snf;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      a.swap_rows(k, swap_row);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string check_smith_form(const IntMatrix& m, const SmithForm& snf) {
  const IntMatrix& s = snf.diagonal_form;
  if (s.rows() != m.rows() || s.cols() != m.cols()) return "shape mismatch";
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return "off-diagonal entry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  const Vector d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return "negative diagonal entry";
    if (i < snf.rank && d[i] == 0) return "zero inside rank";
    if (i >= snf.rank && d[i] != 0) return "nonzero beyond rank";
    if (i + 1 < snf.rank && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) {
      return "divisibility chain broken at " + std::to_string(i);
    }
  }
  if (abs(determinant(snf.left)) != 1) return "left factor not unimodular";
  if (abs(determinant(snf.right)) != 1) return "right factor not unimodular";
  if (snf.left * m * snf.right != s) return "S != L*M*R";
  if (snf.left_inverse.rows() != 0 && snf.left_inverse * snf.left != IntMatrix::identity(m.rows())) {
    return "left inverse incorrect";
  }
  return {};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  return snf.right.columns(snf.rank, m.cols() - snf.rank);
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  if (generators.cols() == 0) return IntMatrix(generators.rows(), 0);
  const SmithForm snf = smith_normal_form(generators);
  return (generators * snf.right).columns(0, snf.rank);
}

IntMatrix kernel_mod(const IntMatrix& m, std::span<const Integer> row_moduli) {
  if (row_moduli.size() != m.rows()) throw std::invalid_argument("kernel_mod: moduli length mismatch");
  if (row_moduli.empty() || all_equal(row_moduli)) {
    const Integer d = row_moduli.empty() ? Integer(0) : row_moduli.front();
    const SmithForm snf = smith_normal_form(m, {.modulus = d});
    std::vector<Vector> columns;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      Vector col = snf.right.column(i);
      if (i < snf.rank) {
        if (d == 0) continue;
        const Integer scale = d / gcd(snf.diagonal_form(i, i), d);
        for (Integer& v : col) v *= scale;
      }
      columns.push_back(std::move(col));
    }
    return IntMatrix::from_columns(columns, m.cols());
  }
  Integer l;
  if (const auto scales = uniform_scales(row_moduli, l)) {
    return kernel_mod(scale_rows(m, *scales), Vector(m.rows(), l));
  }
  const IntMatrix augmented = augment_with_moduli(m, row_moduli);
  const IntMatrix k = kernel_basis(augmented);
  return lattice_basis(k.top_rows(m.cols()));
}

LinearSolver::LinearSolver(const IntMatrix& m) : LinearSolver(m, Vector(m.rows())) {}

LinearSolver::LinearSolver(const IntMatrix& m, std::span<const Integer> moduli)
    : unknowns_(m.cols()), row_moduli_(moduli.begin(), moduli.end()) {
  if (moduli.size() != m.rows()) throw std::invalid_argument("LinearSolver: moduli length mismatch");
  uniform_ = moduli.empty() || all_equal(moduli);
  if (uniform_) {
    uniform_modulus_ = moduli.empty() ? Integer(0) : moduli.front();
    snf_ = smith_normal_form(m, {.modulus = uniform_modulus_});
  } else if (auto scales = uniform_scales(moduli, uniform_modulus_)) {
    uniform_ = true;
    row_scale_ = std::move(*scales);
    snf_ = smith_normal_form(scale_rows(m, row_scale_), {.modulus = uniform_modulus_});
  } else {
    snf_ = smith_normal_form(augment_with_moduli(m, moduli));
  }
}

std::optional<Vector> LinearSolver::solve(std::span<const Integer> b) const {
  if (b.size() != row_moduli_.size()) throw std::invalid_argument("solve: rhs length mismatch");
  Vector scaled;
  if (!row_scale_.empty()) {
    scaled.assign(b.begin(), b.end());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] *= row_scale_[i];
    b = scaled;
  }
  const Vector c = snf_.left.apply(b);
  const std::size_t cols = snf_.right.rows();
  Vector u(cols);
  if (uniform_) {
    const Integer& d = uniform_modulus_;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i >= snf_.rank) {
        Integer rem = c[i];
        reduce(rem, d);
        if (rem != 0) return std::nullopt;
        continue;
      }
      const Integer& s = snf_.diagonal_form(i, i);
      if (d == 0) {
        if (!mpz_divisible_p(c[i].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
        mpz_divexact(u[i].get_mpz_t(), c[i].get_mpz_t(), s.get_mpz_t());
        continue;
      }
      const Integer g = gcd(s, d);
      Integer rhs = c[i];
      reduce(rhs, d);
      if (!mpz_divisible_p(rhs.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
      const Integer reduced_mod = d / g;
      Integer inv;
      Integer s_red = s / g;
      reduce(s_red, reduced_mod);
      if (reduced_mod == 1) {
        u[i] = 0;
        continue;
      }
      mpz_invert(inv.get_mpz_t(), s_red.get_mpz_t(), reduced_mod.get_mpz_t());
      u[i] = (rhs / g) * inv;
      reduce(u[i], reduced_mod);
    }
    return snf_.right.apply(u);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i >= snf_.rank) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    const Integer& s = snf_.diagonal_form(i, i);
    if (!mpz_divisible_p(c[i].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
    mpz_divexact(u[i].get_mpz_t(), c[i].get_mpz_t(), s.get_mpz_t());
  }
  Vector z = snf_.right.apply(u);
  z.resize(unknowns_);
  return z;
}

std::optional<Vector> solve_fp(const IntMatrix& m, std::span<const Integer> b,
                               std::span<const Integer> moduli) {
  return LinearSolver(m, moduli).solve(b);
}

FPAbelianGroup FPAbelianGroup::from_factors(std::vector<Integer> raw) {
  // Re-derive the canonical chain through a diagonal Smith form so arbitrary
  // inputs (e.g. [2, 3]) normalise to [6].
  Vector entries;
  std::size_t zeros = 0;
  for (Integer& v : raw) {
    v = abs(v);
    if (v == 0) ++zeros;
    else if (v != 1) entries.push_back(v);
  }
  FPAbelianGroup g;
  if (!entries.empty()) {
    const SmithForm snf = smith_normal_form(IntMatrix::diagonal(entries));
    for (const Integer& d : snf.diagonal())
      if (d != 1) g.factors.push_back(d);
  }
  g.factors.insert(g.factors.end(), zeros, Integer(0));
  return g;
}

std::size_t FPAbelianGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(factors.begin(), factors.end(), Integer(0)));
}

Integer FPAbelianGroup::order() const {
  Integer n = 1;
  for (const Integer& d : factors) {
    if (d == 0) return 0;
    n *= d;
  }
  return n;
}

std::string FPAbelianGroup::to_string() const {
  if (factors.empty()) return "0";
  std::string out;
  const std::size_t free = free_rank();
  for (const Integer& d : factors) {
    if (d == 0) continue;
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  if (free > 0) {
    if (!out.empty()) out += " + ";
    out += free == 1 ? "Z" : "Z^" + std::to_string(free);
  }
  return out;
}

Subquotient::Subquotient(const IntMatrix& outer_generators, const IntMatrix& inner_generators)
    : basis_(lattice_basis(outer_generators)), basis_solver_(basis_) {
  const std::size_t k = basis_.cols();
  std::vector<Vector> relations;
  relations.reserve(inner_generators.cols());
  for (std::size_t j = 0; j < inner_generators.cols(); ++j) {
    auto y = basis_solver_.solve(inner_generators.column(j));
    if (!y) throw std::invalid_argument("Subquotient: inner lattice not contained in outer lattice");
    relations.push_back(std::move(*y));
  }
  const IntMatrix y = IntMatrix::from_columns(relations, k);
  relation_snf_ = smith_normal_form(y, {.track_left_inverse = true});
  for (std::size_t i = 0; i < k; ++i) {
    if (i < relation_snf_.rank) {
      const Integer& s = relation_snf_.diagonal_form(i, i);
      if (s == 1) continue;
      kept_.push_back(i);
      invariants_.push_back(s);
    } else {
      kept_.push_back(i);
      invariants_.push_back(0);
    }
  }
  generators_ = basis_ * relation_snf_.left_inverse;
}

FPAbelianGroup Subquotient::group() const { return FPAbelianGroup::from_factors(invariants_); }

Vector Subquotient::generator(std::size_t i) const { return generators_.column(kept_.at(i)); }

std::optional<Vector> Subquotient::coordinates(std::span<const Integer> v) const {
  auto y = basis_solver_.solve(v);
  if (!y) return std::nullopt;
  const Vector c = relation_snf_.left.apply(*y);
  Vector out(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    out[i] = c[kept_[i]];
    reduce(out[i], invariants_[i]);
  }
  return out;
}

Subquotient homology_subquotient(const IntMatrix& d_out, std::span<const Integer> out_moduli,
                                 const IntMatrix& d_in, std::span<const Integer> moduli) {
  const std::size_t m = moduli.size();
  if (d_out.cols() != m || d_out.rows() != out_moduli.size() || d_in.rows() != m) {
    throw std::invalid_argument("homology_at: dimension mismatch");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (moduli[i] == 0) continue;
    Vector col = d_out.column(i);
    for (std::size_t r = 0; r < col.size(); ++r) {
      col[r] *= moduli[i];
      reduce(col[r], out_moduli[r]);
      if (col[r] != 0) throw std::invalid_argument("homology_at: d_out not well defined on the presentation");
    }
  }
  IntMatrix composite = d_out * d_in;
  for (std::size_t i = 0; i < composite.rows(); ++i) {
    for (std::size_t j = 0; j < composite.cols(); ++j) {
      reduce(composite(i, j), out_moduli[i]);
      if (composite(i, j) != 0) throw std::invalid_argument("homology_at: d_out * d_in != 0");
    }
  }
  const IntMatrix outer = kernel_mod(d_out, out_moduli);
  const IntMatrix inner = augment_with_moduli(d_in, moduli);
  return Subquotient(outer, inner);
}

FPAbelianGroup homology_at(const IntMatrix& d_out, std::span<const Integer> out_moduli,
                           const IntMatrix& d_in, std::span<const Integer> moduli) {
  return homology_subquotient(d_out, out_moduli, d_in, moduli).group();
}

}  // namespace grpcohom::linalg
