#include "hmcg/symplectic.hpp"

#include "hmcg/errors.hpp"

namespace hmcg {

std::int64_t ChainBasis::pairing(std::span<const std::int64_t> x,
                                 std::span<const std::int64_t> y) const {
  const IntVector jy = form.apply(y);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], jy[i]));
  return s;
}

namespace {

// Solves J v = rhs for the chain form, (Jv)_i = v_{i+1} - v_{i-1}.
IntVector solve_chain_form(const IntVector& rhs) {
  const std::size_t n = rhs.size();  // even
  IntVector v(n + 2, 0);             // v[0] and v[n+1] pad the ends
  // Odd rows fix the even entries going up.
  for (std::size_t i = 1; i + 1 <= n; i += 2) v[i + 1] = checked_add(rhs[i - 1], v[i - 1]);
  // Even rows fix the odd entries coming down from v_{n+1} = 0.
  for (std::size_t i = n; i >= 2; i -= 2) v[i - 1] = checked_sub(v[i + 1], rhs[i - 1]);
  return IntVector(v.begin() + 1, v.begin() + 1 + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

ChainBasis build_chain_basis(Genus g) {
  const std::size_t dim = 2 * static_cast<std::size_t>(g.value());
  ChainBasis b;
  b.genus = g;
  b.form = IntegerMatrix(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    b.form(i, i + 1) = 1;
    b.form(i + 1, i) = -1;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    b.classes.push_back(e);
  }
  b.form_inverse = IntegerMatrix(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const IntVector col = solve_chain_form(b.classes[j]);
    for (std::size_t i = 0; i < dim; ++i) b.form_inverse(i, j) = col[i];
  }
  // J [a_{2g+1}] = e_{2g}: a_{2g+1} meets a_{2g} once and misses a_1..a_{2g-1}.
  b.classes.push_back(solve_chain_form(b.classes[dim - 1]));

  // [a_{2g+2}] = B [a_{2g+1}], B = T_1 T_2 ... T_{2g+1}.
  IntegerMatrix bmat = IntegerMatrix::identity(dim);
  for (const auto& c : b.classes) bmat = bmat * transvection(c, b.form);
  b.classes.push_back(bmat.apply(b.classes.back()));
  return b;
}

IntegerMatrix transvection(std::span<const std::int64_t> c, const IntegerMatrix& form) {
  const std::size_t n = c.size();
  if (form.rows() != n || form.cols() != n) throw Error("class and form dimensions differ");
  // Column j is e_j + <e_j, c> c, and <e_j, c> = (J c)_j.
  const IntVector jc = form.apply(c);
  IntegerMatrix t = IntegerMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (jc[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) t(i, j) = checked_add(t(i, j), checked_mul(jc[j], c[i]));
  }
  return t;
}

IntegerMatrix build_sigma_matrix(Genus g) {
  IntVector d(2 * static_cast<std::size_t>(g.value()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (i % 2 == 0) ? 1 : -1;
  return IntegerMatrix::diagonal(d);
}

int form_sign(const IntegerMatrix& m, const IntegerMatrix& form) {
  const IntegerMatrix p = m.transpose() * form * m;
  if (p == form) return 1;
  if (p == -form) return -1;
  return 0;
}

std::vector<std::int64_t> char_poly(const IntegerMatrix& m) {
  if (!m.square()) throw Error("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::int64_t> c{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading r x r block A, column S = m[0..r)[r], row R = m[r][0..r).
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
    std::vector<std::int64_t> col(r + 2, 0);
    col[0] = 1;
    col[1] = checked_sub(0, m(r, r));
    IntVector s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      std::int64_t rs = 0;
      for (std::size_t i = 0; i < r; ++i) rs = checked_add(rs, checked_mul(m(r, i), s[i]));
      col[k + 2] = checked_sub(0, rs);
      IntVector next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          next[i] = checked_add(next[i], checked_mul(m(i, j), s[j]));
      s = std::move(next);
    }
    std::vector<std::int64_t> nc(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        nc[i] = checked_add(nc[i], checked_mul(col[i - j], c[j]));
    c = std::move(nc);
  }
  return c;
}

}  // namespace hmcg
