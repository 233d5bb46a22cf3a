#include "locobs/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "locobs/error.hpp"

namespace locobs {

namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionError(std::string(what) + " requires a square matrix, got " + shape(m));
  }
}

void require_symmetric(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw ValidationError(std::string(what) + " requires a square matrix, got " + shape(m));
  }
  if (!m.is_symmetric()) {
    throw ValidationError(std::string(what) + " requires a symmetric matrix");
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix, got " + std::to_string(entries_.size()));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_int64(std::size_t rows, std::size_t cols,
                                std::span<const std::int64_t> entries) {
  std::vector<Integer> values;
  values.reserve(entries.size());
  for (std::int64_t v : entries) values.emplace_back(std::to_string(v));
  return IntMatrix(rows, cols, std::move(values));
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::leading_minor(std::size_t k) const {
  if (k > rows_ || k > cols_) throw DimensionError("leading minor larger than matrix");
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& x = (*this)(source, j);
    if (sgn(x) != 0) mpz_addmul((*this)(target, j).get_mpz_t(), factor.get_mpz_t(), x.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& x = (*this)(i, source);
    if (sgn(x) != 0) mpz_addmul((*this)(i, target).get_mpz_t(), factor.get_mpz_t(), x.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot add " + shape(a) + " and " + shape(b));
  }
  std::vector<Integer> entries(a.entries());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += b.entries()[i];
  return IntMatrix(a.rows(), a.cols(), std::move(entries));
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
  std::vector<Integer> entries(a.entries());
  for (Integer& e : entries) e = -e;
  return IntMatrix(a.rows(), a.cols(), std::move(entries));
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

namespace {

// One fraction-free elimination step below pivot (k, k):
// a(i, j) <- (a(i, j) a(k, k) - a(i, k) a(k, j)) / previous, exactly.
// Zero entries are skipped so banded matrices stay cheap.
void bareiss_step(IntMatrix& a, std::size_t k, const Integer& previous) {
  const std::size_t n = a.rows();
  mpz_class t;
  const mpz_srcptr pivot = a(k, k).get_mpz_t();
  for (std::size_t i = k + 1; i < n; ++i) {
    const bool below_zero = sgn(a(i, k)) == 0;
    for (std::size_t j = k + 1; j < n; ++j) {
      const bool cross_zero = below_zero || sgn(a(k, j)) == 0;
      const mpz_ptr target = a(i, j).get_mpz_t();
      if (cross_zero) {
        if (mpz_sgn(target) == 0) continue;
        mpz_mul(target, target, pivot);
      } else {
        mpz_mul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_mul(target, target, pivot);
        mpz_sub(target, target, t.get_mpz_t());
      }
      mpz_divexact(target, target, previous.get_mpz_t());
    }
    a(i, k) = 0;
  }
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    bareiss_step(a, k, previous);
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Least |a(i,j)| != 0 over i, j >= s; row-major scan keeps the first minimum,
// which is the lexicographically smallest (row, col).
bool find_pivot(const IntMatrix& a, std::size_t s, std::size_t& row, std::size_t& col) {
  bool found = false;
  Integer best;
  for (std::size_t i = s; i < a.rows(); ++i)
    for (std::size_t j = s; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!found || mpz_cmpabs(a(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(a(i, j));
        row = i;
        col = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t pr = 0, pc = 0;
    bool exhausted = false;
    for (;;) {
      if (!find_pivot(a, s, pr, pc)) {
        exhausted = true;
        break;
      }
      a.swap_rows(s, pr);
      u.swap_rows(s, pr);
      a.swap_cols(s, pc);
      v.swap_cols(s, pc);

      bool cleared = true;
      for (std::size_t i = s + 1; i < a.rows(); ++i) {
        if (sgn(a(i, s)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, s).get_mpz_t(), a(s, s).get_mpz_t());
        a.add_row_multiple(i, s, -q);
        u.add_row_multiple(i, s, -q);
        if (sgn(a(i, s)) != 0) cleared = false;
      }
      for (std::size_t j = s + 1; j < a.cols(); ++j) {
        if (sgn(a(s, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(s, j).get_mpz_t(), a(s, s).get_mpz_t());
        a.add_col_multiple(j, s, -q);
        v.add_col_multiple(j, s, -q);
        if (sgn(a(s, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the whole remaining block; otherwise fold the
      // offending row into row s and reduce again.
      bool divides = true;
      for (std::size_t i = s + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = s + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(s, s).get_mpz_t())) {
            a.add_row_multiple(s, i, 1);
            u.add_row_multiple(s, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (sgn(a(s, s)) < 0) {
      a.negate_row(s);
      u.negate_row(s);
    }
  }

  SmithDecomposition out;
  out.invariant_factors.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.invariant_factors.push_back(a(i, i));
  out.u = std::move(u);
  out.d = std::move(a);
  out.v = std::move(v);
  return out;
}

Cokernel cokernel(const IntMatrix& m) {
  require_square(m, "cokernel");
  const SmithDecomposition snf = smith_normal_form(m);
  std::vector<Integer> torsion;
  Cokernel out;
  for (const Integer& f : snf.invariant_factors) {
    if (sgn(f) == 0) {
      ++out.free_rank;
    } else {
      torsion.push_back(f);
    }
  }
  out.torsion = FiniteAbelianGroup::from_invariant_factors(torsion);
  return out;
}

namespace {

// Sylvester's criterion in one pass: without row exchanges, the k-th Bareiss
// pivot is the k-th leading principal minor. A zero pivot means a vanishing
// minor, which already rules out definiteness.
bool leading_minors_have_signs(const IntMatrix& m, int first_sign, bool alternate) {
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer previous = 1;
  int expected = first_sign;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) != expected) return false;
    bareiss_step(a, k, previous);
    previous = a(k, k);
    if (alternate) expected = -expected;
  }
  return true;
}

}  // namespace

bool is_negative_definite(const IntMatrix& m) {
  require_symmetric(m, "is_negative_definite");
  return leading_minors_have_signs(m, -1, true);
}

bool is_positive_definite(const IntMatrix& m) {
  require_symmetric(m, "is_positive_definite");
  return leading_minors_have_signs(m, 1, false);
}

}  // namespace locobs
