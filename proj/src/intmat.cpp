#include "mcgcert/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace mcgcert {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMat: dimension mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

IntVec IntMat::apply(const IntVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMat: dimension mismatch");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != 0) s += at(i, j) * v[j];
    }
    out[i] = s;
  }
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntVec IntMat::column(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void IntMat::set_column(std::size_t j, const IntVec& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("IntMat: det of non-square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) { swap_row = i; break; }
      }
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j);
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

IntVec vec_add(const IntVec& u, const IntVec& v) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

IntVec vec_sub(const IntVec& u, const IntVec& v) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

IntVec vec_neg(const IntVec& u) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
  return w;
}

IntVec vec_scale(const Int& c, const IntVec& u) {
  IntVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = c * u[i];
  return w;
}

bool vec_is_zero(const IntVec& u) {
  for (const auto& x : u)
    if (x != 0) return false;
  return true;
}

namespace {

// floor division, used so off-pivot entries end up reduced into [0, pivot)
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

void add_col_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMat& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

}  // namespace

HermiteResult hermite_cols(const IntMat& a) {
  HermiteResult res;
  res.h = a;
  res.u = IntMat::identity(a.cols());
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t m = a.cols();
  std::size_t col = 0;
  for (std::size_t row = 0; row < a.rows() && col < m; ++row) {
    // Euclidean phase: kill every entry in this row right of `col` except one.
    while (true) {
      std::size_t best = m;
      for (std::size_t j = col; j < m; ++j) {
        if (h.at(row, j) == 0) continue;
        if (best == m || abs(h.at(row, j)) < abs(h.at(row, best))) best = j;
      }
      if (best == m) break;  // row is zero from col on
      swap_cols(h, col, best);
      swap_cols(u, col, best);
      bool others = false;
      for (std::size_t j = col + 1; j < m; ++j) {
        if (h.at(row, j) != 0) {
          others = true;
          Int q = h.at(row, j) / h.at(row, col);
          add_col_multiple(h, j, col, -q);
          add_col_multiple(u, j, col, -q);
        }
      }
      if (!others) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) { negate_col(h, col); negate_col(u, col); }
    for (std::size_t j = 0; j < col; ++j) {
      Int q = floor_div(h.at(row, j), h.at(row, col));
      if (q != 0) {
        add_col_multiple(h, j, col, -q);
        add_col_multiple(u, j, col, -q);
      }
    }
    res.pivot_rows.push_back(row);
    ++col;
  }
  res.rank = col;
  return res;
}

std::vector<IntVec> int_kernel(const IntMat& a) {
  HermiteResult hr = hermite_cols(a);
  std::vector<IntVec> basis;
  for (std::size_t j = hr.rank; j < a.cols(); ++j) basis.push_back(hr.u.column(j));
  return basis;
}

std::optional<IntVec> solve_int(const IntMat& a, const IntVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_int: dimension mismatch");
  HermiteResult hr = hermite_cols(a);
  IntVec residual = b;
  IntVec y(a.cols(), Int(0));
  for (std::size_t t = 0; t < hr.rank; ++t) {
    std::size_t pr = hr.pivot_rows[t];
    // rows above the pivot row of column t are zero in columns >= t,
    // so any unmatched residual there means inconsistency
    const Int& piv = hr.h.at(pr, t);
    Int r = residual[pr];
    if (r % piv != 0) return std::nullopt;
    Int q = r / piv;
    if (q != 0) {
      y[t] = q;
      for (std::size_t i = 0; i < a.rows(); ++i) residual[i] -= q * hr.h.at(i, t);
    }
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return hr.u.apply(y);
}

std::vector<IntVec> saturate_span(const std::vector<IntVec>& gens, std::size_t dim) {
  if (gens.empty()) return {};
  IntMat c(dim, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) c.set_column(j, gens[j]);
  // functionals (as vectors under the dot product) vanishing on the span
  std::vector<IntVec> ann = int_kernel(c.transpose());
  if (ann.empty()) {
    // full span: standard basis
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, Int(0));
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  IntMat f(ann.size(), dim);
  for (std::size_t i = 0; i < ann.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) f.at(i, j) = ann[i][j];
  return int_kernel(f);
}

std::optional<std::vector<Rat>> solve_rational(const std::vector<IntVec>& basis_cols,
                                               const IntVec& target) {
  std::size_t n = target.size();
  std::size_t k = basis_cols.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(basis_cols[j][i]);
    m[i][k] = Rat(target[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(k, n);
  for (std::size_t colj = 0; colj < k && row < n; ++colj) {
    std::size_t piv = n;
    for (std::size_t i = row; i < n; ++i) {
      if (m[i][colj] != 0) { piv = i; break; }
    }
    if (piv == n) continue;
    std::swap(m[row], m[piv]);
    Rat inv = m[row][colj];
    for (std::size_t j = colj; j <= k; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][colj] == 0) continue;
      Rat f = m[i][colj];
      for (std::size_t j = colj; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_of_col[colj] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<Rat> x(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j)
    if (pivot_of_col[j] != n) x[j] = m[pivot_of_col[j]][k];
  return x;
}

}  // namespace mcgcert
