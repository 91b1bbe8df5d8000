#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mcgcert {

// All matrix arithmetic in the lattice layer is exact; entries are
// arbitrary-precision integers so no overflow analysis is ever needed.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMat operator*(const IntMat& rhs) const;
  IntVec apply(const IntVec& v) const;
  IntMat transpose() const;

  bool operator==(const IntMat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }
  bool operator!=(const IntMat& rhs) const { return !(*this == rhs); }

  bool is_identity() const;
  bool is_zero() const;

  IntVec column(std::size_t j) const;
  void set_column(std::size_t j, const IntVec& v);

  // Fraction-free Bareiss determinant; exact.
  Int det() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntVec vec_add(const IntVec& u, const IntVec& v);
IntVec vec_sub(const IntVec& u, const IntVec& v);
IntVec vec_neg(const IntVec& u);
IntVec vec_scale(const Int& c, const IntVec& u);
bool vec_is_zero(const IntVec& u);

// Column-style Hermite reduction: a * u == h with u unimodular, pivot rows
// strictly increasing, columns past `rank` identically zero.
struct HermiteResult {
  IntMat h;
  IntMat u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot_rows[t] = row of pivot in column t
};
HermiteResult hermite_cols(const IntMat& a);

// Basis of { x : a x = 0 }, saturated because it comes from a unimodular
// transform. Deterministic.
std::vector<IntVec> int_kernel(const IntMat& a);

// Canonical integer solution of a x = b, or nullopt when none exists.
std::optional<IntVec> solve_int(const IntMat& a, const IntVec& b);

// Basis of the saturation of the span of `gens` inside Z^dim.
std::vector<IntVec> saturate_span(const std::vector<IntVec>& gens, std::size_t dim);

// Unique rational solution of (basis columns) * x = target, assuming the
// columns are independent; nullopt when target is outside the span.
std::optional<std::vector<Rat>> solve_rational(const std::vector<IntVec>& basis_cols,
                                               const IntVec& target);

}  // namespace mcgcert
