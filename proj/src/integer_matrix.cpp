#include "hmcg/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "hmcg/errors.hpp"

namespace hmcg {

namespace {
[[noreturn]] void overflow() { throw ResourceCapError("integer overflow in exact arithmetic"); }
}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const std::int64_t> d) {
  IntegerMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix n = *this;
  for (auto& x : n.data_) x = checked_sub(0, x);
  return n;
}

bool IntegerMatrix::is_identity() const {
  return square() && *this == identity(rows_);
}

std::int64_t IntegerMatrix::max_abs() const {
  std::int64_t m = 0;
  for (auto x : data_) m = std::max(m, x < 0 ? checked_sub(0, x) : x);
  return m;
}

std::vector<std::int64_t> IntegerMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw Error("vector length does not match matrix columns");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] = checked_add(out[r], checked_mul((*this)(r, c), v[c]));
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    cells[i] = std::to_string(data_[i]);
    width = std::max(width, cells[i].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::string& s = cells[r * cols_ + c];
      os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimensions do not agree");
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        p(i, j) = checked_add(p(i, j), checked_mul(aik, b(k, j)));
    }
  return p;
}

std::int64_t determinant(const IntegerMatrix& m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::int64_t num = checked_sub(checked_mul(a(i, j), a(k, k)),
                                             checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

}  // namespace hmcg
