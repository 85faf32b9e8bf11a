#include "khtensor/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace kht {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return y;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::row(int r) const {
  return Vec(data_.begin() + static_cast<long>(r) * cols_,
             data_.begin() + static_cast<long>(r + 1) * cols_);
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec out(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_)
    if (!x.is_zero()) x *= s;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: size mismatch");
  Matrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int t = 0; t < cols_; ++t) {
      const Scalar& a = (*this)(r, t);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(t, c);
        if (!b.is_zero()) m(r, c) += a * b;
      }
    }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: size mismatch");
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: size mismatch");
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(const Matrix& a) {
  Matrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(static_cast<int>(i), a.cols());
  return x;
}

Vec Echelon::reduce(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
  Vec w = v;
  Vec out(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    out[i] = c;
    axpy(w, -c, rows_[i]);
  }
  if (!is_zero(w)) return std::nullopt;
  return out;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Echelon::add(const Vec& v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("Echelon::add: size mismatch");
  Vec w = v;
  Vec combo;
  if (track_) {
    combo.assign(inserted_ + 1, Scalar());
    combo[inserted_] = Scalar(1);
  }
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    axpy(w, -c, rows_[i]);
    if (track_) {
      const Vec& ci = combos_[i];
      for (size_t j = 0; j < ci.size(); ++j)
        if (!ci[j].is_zero()) combo[j] -= c * ci[j];
    }
  }
  int p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  ++inserted_;
  const Scalar inv = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  if (track_)
    for (auto& x : combo)
      if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

std::optional<Vec> Echelon::express(const Vec& v) const {
  if (!track_) throw std::logic_error("Echelon::express needs tracking");
  Vec w = v;
  Vec out(inserted_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    axpy(w, -c, rows_[i]);
    const Vec& ci = combos_[i];
    for (size_t j = 0; j < ci.size(); ++j)
      if (!ci[j].is_zero()) out[j] += c * ci[j];
  }
  if (!is_zero(w)) return std::nullopt;
  return out;
}

}  // namespace kht
