#include "hmcg/abelianization.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "hmcg/errors.hpp"

namespace hmcg {

std::vector<std::int64_t> SmithDecomposition::diagonal() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& m)
      : a_(m), u_(IntegerMatrix::identity(m.rows())), v_(IntegerMatrix::identity(m.cols())) {}

  SmithDecomposition run() && {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_smallest_to(t, t, t)) break;
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    return {std::move(u_), std::move(a_), std::move(v_)};
  }

 private:
  // Moves the smallest nonzero |entry| of the block [from.., from..] to (t, t).
  bool move_smallest_to(std::size_t t, std::size_t row_from, std::size_t col_from) {
    std::size_t br = 0, bc = 0;
    std::int64_t best = 0;
    for (std::size_t i = row_from; i < a_.rows(); ++i)
      for (std::size_t j = col_from; j < a_.cols(); ++j) {
        const std::int64_t x = std::abs(a_(i, j));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          br = i;
          bc = j;
        }
      }
    if (best == 0) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        const std::int64_t q = a_(i, t) / a_(t, t);
        if (q != 0) add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        const std::int64_t q = a_(t, j) / a_(t, t);
        if (q != 0) add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; bring it to the pivot.
        std::size_t br = t, bc = t;
        std::int64_t best = std::abs(a_(t, t));
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
          if (a_(i, t) != 0 && std::abs(a_(i, t)) < best) best = std::abs(a_(i, t)), br = i, bc = t;
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(t, j) != 0 && std::abs(a_(t, j)) < best) best = std::abs(a_(t, j)), br = t, bc = j;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Row and column are clear; enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(i, j) % a_(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      a_(dst, c) = checked_add(a_(dst, c), checked_mul(k, a_(src, c)));
    for (std::size_t c = 0; c < u_.cols(); ++c)
      u_(dst, c) = checked_add(u_(dst, c), checked_mul(k, u_(src, c)));
  }

  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      a_(r, dst) = checked_add(a_(r, dst), checked_mul(k, a_(r, src)));
    for (std::size_t r = 0; r < v_.rows(); ++r)
      v_(r, dst) = checked_add(v_(r, dst), checked_mul(k, v_(r, src)));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = checked_sub(0, a_(i, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = checked_sub(0, u_(i, c));
  }

  IntegerMatrix a_;
  IntegerMatrix u_;
  IntegerMatrix v_;
};

std::int64_t mod(std::int64_t x, std::int64_t d) {
  const std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

// Inverse of a modulo d; throws if a is not a unit.
std::int64_t mod_inverse(std::int64_t a, std::int64_t d) {
  std::int64_t r0 = d, r1 = mod(a, d), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) throw Error(std::to_string(a) + " is not a unit modulo " + std::to_string(d));
  return mod(s0, d);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) { return SmithReducer(m).run(); }

IntegerMatrix relation_matrix(Genus g) {
  const int m = g.twist_count();
  const int n = g.free_rank();
  const std::size_t cols = static_cast<std::size_t>(m) + 2;
  const std::size_t b = cols - 2;
  const std::size_t r = cols - 1;
  std::vector<std::vector<std::int64_t>> rows;
  auto row = [&] { return std::vector<std::int64_t>(cols, 0); };

  auto rho = row();  // (1) rho = A_1..A_{2g+1} A_{2g+1}..A_1
  for (int i = 0; i < n; ++i) rho[i] = 2;
  rho[r] = -1;
  rows.push_back(rho);

  auto bb = row();  // (2) B = A_1..A_{2g+1}
  for (int i = 0; i < n; ++i) bb[i] = 1;
  bb[b] = -1;
  rows.push_back(bb);

  for (int i = 0; i < m; ++i) {  // (3) A_{i+1} = B A_i B^{-1}
    auto x = row();
    x[(i + 1) % m] += 1;
    x[i] -= 1;
    rows.push_back(x);
  }
  for (int i = 0; i < m; ++i) {  // (5) A_i A_j A_i = A_j A_i A_j
    auto x = row();
    x[i] += 1;
    x[(i + 1) % m] -= 1;
    rows.push_back(x);
  }
  auto order_b = row();  // (6) B^{2g+2} = 1
  order_b[b] = m;
  rows.push_back(order_b);
  auto order_r = row();  // (7) rho^2 = 1
  order_r[r] = 2;
  rows.push_back(order_r);

  IntegerMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  return out;
}

std::vector<std::int64_t> invariant_factors(const IntegerMatrix& relations) {
  const SmithDecomposition s = smith_normal_form(relations);
  std::vector<std::int64_t> out;
  const auto d = s.diagonal();
  for (std::int64_t x : d)
    if (x != 1) out.push_back(x);
  for (std::size_t j = d.size(); j < relations.cols(); ++j) out.push_back(0);
  return out;
}

std::vector<std::int64_t> h1_hyperelliptic(Genus g) { return invariant_factors(relation_matrix(g)); }

InvolutionQuotient involution_quotient(Genus g) {
  const IntegerMatrix rel = relation_matrix(g);
  const SmithDecomposition s = smith_normal_form(rel);
  const auto diag = s.diagonal();

  // Z^cols / rows(M)  ~  Z^cols / rows(D) via x -> x V, so generator k sits
  // at row k of V.
  std::size_t pivot = diag.size();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] != 1) {
      if (pivot != diag.size()) throw Error("H_1 is not cyclic");
      pivot = i;
    }
  }
  if (pivot == diag.size() || diag[pivot] == 0 || diag.size() != rel.cols()) {
    throw Error("H_1 is not a finite cyclic group");
  }
  InvolutionQuotient q;
  const std::int64_t d = diag[pivot];
  q.h1_order = d;
  auto cls = [&](std::size_t k) { return mod(s.V(k, pivot), d); };

  const std::int64_t t = cls(0);
  for (int i = 1; i < g.twist_count(); ++i) {
    if (cls(static_cast<std::size_t>(i)) != t) throw Error("twists are not all homologous");
  }
  const std::int64_t tinv = mod_inverse(t, d);
  const std::size_t b_col = static_cast<std::size_t>(g.twist_count());
  q.rho_class = mod(checked_mul(cls(b_col + 1), tinv), d);
  q.b_class = mod(checked_mul(cls(b_col), tinv), d);
  q.b_power_class = mod(checked_mul(q.b_class, g.value() + 1), d);
  q.index = std::gcd(std::gcd(d, q.rho_class), q.b_power_class);
  return q;
}

std::int64_t involution_subgroup_index(Genus g) { return involution_quotient(g).index; }

}  // namespace hmcg
