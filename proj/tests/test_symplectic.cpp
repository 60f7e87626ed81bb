#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "hmcg/errors.hpp"
#include "hmcg/integer_matrix.hpp"
#include "hmcg/symplectic.hpp"

using namespace hmcg;

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

// det(x I - m) through Bareiss, as an independent check on Berkowitz.
std::int64_t det_shift(const IntegerMatrix& m, std::int64_t x) {
  IntegerMatrix a = -m;
  for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) += x;
  return determinant(a);
}

std::int64_t horner(const std::vector<std::int64_t>& c, std::int64_t x) {
  std::int64_t acc = 0;
  for (std::int64_t k : c) acc = acc * x + k;
  return acc;
}

}  // namespace

TEST_SUITE("symplectic") {

TEST_CASE("chain form at genus 2") {
  const ChainBasis b = build_chain_basis(Genus(2));
  const IntegerMatrix j{{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}};
  CHECK(b.form == j);
  CHECK(b.curve(5) == IntVector{-1, 0, -1, 0});
  for (int i = 1; i <= 4; ++i) CHECK(b.curve(i) == unit(4, static_cast<std::size_t>(i - 1)));
  CHECK(b.form * b.form_inverse == IntegerMatrix::identity(4));
}

TEST_CASE("chain form invariants") {
  for (int gv = 2; gv <= 5; ++gv) {
    const ChainBasis b = build_chain_basis(Genus(gv));
    const std::size_t n = 2 * static_cast<std::size_t>(gv);
    CHECK(determinant(b.form) == 1);
    CHECK(b.form.transpose() == -b.form);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::int64_t want = c == r + 1 ? 1 : r == c + 1 ? -1 : 0;
        CHECK(b.form(r, c) == want);
      }
    // J [a_{2g+1}] is the last standard vector.
    CHECK(b.form.apply(b.curve(gv * 2 + 1)) == unit(n, n - 1));
    // Adjacent chain curves meet once; others are disjoint.
    for (int i = 1; i <= 2 * gv + 1; ++i)
      for (int k = i + 2; k <= 2 * gv + 1; ++k) CHECK(b.pairing(b.curve(i), b.curve(k)) == 0);
    for (int i = 1; i <= 2 * gv; ++i) CHECK(b.pairing(b.curve(i), b.curve(i + 1)) == 1);
  }
}

TEST_CASE("transvections") {
  const ChainBasis b = build_chain_basis(Genus(2));
  CHECK(transvection(IntVector(4, 0), b.form).is_identity());

  const IntegerMatrix t1 = transvection(b.curve(1), b.form);
  CHECK(t1.apply(unit(4, 0)) == unit(4, 0));
  CHECK(t1.apply(unit(4, 1)) == IntVector{-1, 1, 0, 0});
  CHECK(t1.apply(unit(4, 2)) == unit(4, 2));
  CHECK(t1.apply(unit(4, 3)) == unit(4, 3));

  const IntegerMatrix t2 = transvection(b.curve(2), b.form);
  CHECK(t1 * t2 * t1 == t2 * t1 * t2);
  CHECK(t1 * transvection(b.curve(3), b.form) == transvection(b.curve(3), b.form) * t1);
  for (int i = 1; i <= 6; ++i) CHECK(form_sign(transvection(b.curve(i), b.form), b.form) == 1);
}

TEST_CASE("rho from ten transvections is -I") {
  // Multiply the transvections of A1 A2 A3 A4 A5 A5 A4 A3 A2 A1 by hand.
  const ChainBasis b = build_chain_basis(Genus(2));
  IntegerMatrix m = IntegerMatrix::identity(4);
  for (int i : {1, 2, 3, 4, 5, 5, 4, 3, 2, 1}) m = m * transvection(b.curve(i), b.form);
  CHECK(m == -IntegerMatrix::identity(4));
}

TEST_CASE("sigma matrix") {
  for (int gv = 2; gv <= 5; ++gv) {
    const Genus g(gv);
    const ChainBasis b = build_chain_basis(g);
    const IntegerMatrix s = build_sigma_matrix(g);
    CHECK((s * s).is_identity());
    CHECK(form_sign(s, b.form) == -1);
    for (int i = 1; i <= g.twist_count(); ++i) {
      const IntegerMatrix t = transvection(b.curve(i), b.form);
      CHECK((s * t * s * t).is_identity());
    }
  }
  const IntegerMatrix d2{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  CHECK(build_sigma_matrix(Genus(2)) == d2);
}

TEST_CASE("form sign") {
  const ChainBasis b = build_chain_basis(Genus(2));
  CHECK(form_sign(IntegerMatrix::identity(4), b.form) == 1);
  IntegerMatrix bad = IntegerMatrix::identity(4);
  bad(0, 0) = 2;
  CHECK(form_sign(bad, b.form) == 0);
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(IntegerMatrix::identity(2)) == std::vector<std::int64_t>{1, -2, 1});
  CHECK(char_poly(-IntegerMatrix::identity(2)) == std::vector<std::int64_t>{1, 2, 1});
  CHECK(char_poly(IntegerMatrix{{0, -1}, {1, 0}}) == std::vector<std::int64_t>{1, 0, 1});

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    const auto p = char_poly(m);
    REQUIRE(p.size() == n + 1);
    for (std::int64_t x = -3; x <= static_cast<std::int64_t>(n); ++x) CHECK(horner(p, x) == det_shift(m, x));
  }
}

TEST_CASE("checked arithmetic") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), ResourceCapError);
  CHECK_THROWS_AS(checked_mul(big, 2), ResourceCapError);
  CHECK_THROWS_AS(checked_sub(-big, 2), ResourceCapError);
  CHECK(checked_mul(-3, 4) == -12);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntegerMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntegerMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant(IntegerMatrix{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}) == -30);
}

}
