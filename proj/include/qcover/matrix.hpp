#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcover/field.hpp"

namespace qcover {

/// Dense row-major matrix over a Field.  Throughout the library linear maps
/// act on row vectors from the right, so the composite "f then g" is F * G.
class Mat {
 public:
  Mat() : field_(Field::prime()) {}
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  static Mat identity(Field f, std::size_t n);
  /// Rows of small integers, reduced into the field.
  static Mat from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return e_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  bool is_zero() const;
  bool is_identity() const;

  Mat row(std::size_t r) const;
  Mat col(std::size_t c) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  /// Rows listed in `idx`, in order.
  Mat select_rows(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);

struct RrefResult {
  Mat matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the row space is preserved.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Columns form a basis of {b : m * b = 0}; count = cols - rank.
Mat kernel_basis(const Mat& m);
/// Rows form a basis of {v : v * m = 0}.
Mat left_kernel_basis(const Mat& m);
/// Rows form a basis of the row space of m.
Mat row_space_basis(const Mat& m);

/// x with a * x = b, or nullopt.  Throws DimensionMismatch if a.rows != b.rows.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);
/// x with x * a = b (row-vector convention), or nullopt.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

/// Rows of `sub` span a subspace of the row space of `basis` iff true.
bool row_space_contains(const Mat& basis, const Mat& sub);
/// Rows of the result extend `sub` (independent rows) to a basis of k^n;
/// only the added complement rows are returned.
Mat complement_rows(const Mat& sub, std::size_t n);
/// Basis of the intersection of the row spaces of a and b.
Mat row_space_intersection(const Mat& a, const Mat& b);

/// Coefficients c_0..c_n of det(t I - m), c_n = 1 (Hessenberg reduction).
std::vector<Scalar> characteristic_polynomial(const Mat& m);
/// Powers m^k.
Mat power(const Mat& m, std::size_t k);

}  // namespace qcover
