#include "qcover/matrix.hpp"

#include <sstream>
#include <utility>

#include "qcover/errors.hpp"

namespace qcover {

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                            std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        r(i, j) = field_.add(r(i, j), field_.mul(a, b));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sum of differently shaped matrices");
  Mat r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(e_[i], o.e_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("difference of differently shaped matrices");
  Mat r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(e_[i], o.e_[i]);
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(*this);
  for (auto& x : r.e_) x = field_.mul(x, s);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? field_.one() : field_.zero())) return false;
  return true;
}

Mat Mat::row(std::size_t r) const { return block(r, 0, 1, cols_); }
Mat Mat::col(std::size_t c) const { return block(0, c, rows_, 1); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Mat r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.format((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t piv = lead_row;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead_row, j));
    Scalar inv = f.inv(a(lead_row, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) = f.mul(a(lead_row, j), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c).is_zero()) continue;
      Scalar factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(lead_row, j).is_zero()) a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead_row, j)));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  const Field& f = m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(f, m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k(fc, j) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = f.neg(r(i, fc));
  }
  return k;
}

Mat left_kernel_basis(const Mat& m) { return kernel_basis(m.transpose()).transpose(); }

Mat row_space_basis(const Mat& m) {
  auto [r, pivots] = rref(m);
  return r.block(0, 0, pivots.size(), m.cols());
}

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("solve_linear: a has " + std::to_string(a.rows()) + " rows, b has " +
                            std::to_string(b.rows()));
  const Field& f = a.field();
  auto [r, pivots] = rref(hstack(a, b));
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
  return x;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  auto x = solve_linear(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return m;
  auto [r, pivots] = rref(hstack(m, Mat::identity(m.field(), m.rows())));
  if (pivots.size() < m.rows() || pivots[m.rows() - 1] >= m.cols()) return std::nullopt;
  return r.block(0, m.cols(), m.rows(), m.rows());
}

bool row_space_contains(const Mat& basis, const Mat& sub) {
  if (sub.rows() == 0) return true;
  if (basis.rows() == 0) return sub.is_zero();
  return rank(vstack(basis, sub)) == rank(basis);
}

Mat complement_rows(const Mat& sub, std::size_t n) {
  const Field& f = sub.field();
  auto [r, pivots] = rref(sub.rows() ? sub : Mat(f, 0, n));
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) rest.push_back(c);
  Mat comp(f, rest.size(), n);
  for (std::size_t i = 0; i < rest.size(); ++i) comp(i, rest[i]) = f.one();
  return comp;
}

Mat row_space_intersection(const Mat& a, const Mat& b) {
  const Field& f = a.field();
  if (a.rows() == 0 || b.rows() == 0) return Mat(f, 0, a.cols());
  // v = x a = y b  <=>  [x, -y] in left kernel of [a; b]
  Mat lk = left_kernel_basis(vstack(a, b));
  if (lk.rows() == 0) return Mat(f, 0, a.cols());
  Mat xs = lk.block(0, 0, lk.rows(), a.rows());
  return row_space_basis(xs * a);
}

std::vector<Scalar> characteristic_polynomial(const Mat& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  Mat h = m;
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    Scalar inv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j).is_zero()) continue;
      Scalar u = f.mul(h(r, j), inv);
      for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(u, h(j + 1, c)));
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) = f.add(h(rr, j + 1), f.mul(u, h(rr, r)));
    }
  }
  // p_k(t) = (t - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Scalar> cur(k + 1, f.zero());
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], prev[d]);
      cur[d] = f.sub(cur[d], f.mul(h(k - 1, k - 1), prev[d]));
    }
    Scalar prod = f.one();
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod.is_zero()) break;
      Scalar coef = f.mul(h(i, k - 1), prod);
      if (coef.is_zero()) continue;
      const auto& q = p[i];
      for (std::size_t d = 0; d < q.size(); ++d) cur[d] = f.sub(cur[d], f.mul(coef, q[d]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

Mat power(const Mat& m, std::size_t k) {
  Mat result = Mat::identity(m.field(), m.rows());
  Mat base = m;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace qcover
