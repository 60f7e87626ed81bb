#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "hmcg/abelianization.hpp"

using namespace hmcg;

namespace {

bool diagonal_chain(const SmithDecomposition& s) {
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return false;
  const auto d = s.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) return false;
  }
  return true;
}

bool unimodular(const IntegerMatrix& m) { return std::llabs(determinant(m)) == 1; }

// Z / gcd-chain arithmetic done by hand: the cyclic group generated by
// classes c_i inside Z_d has index gcd(d, c_1, ...).
std::int64_t index_in_cyclic(std::int64_t d, std::initializer_list<std::int64_t> cs) {
  std::int64_t r = d;
  for (auto c : cs) r = std::gcd(r, c % d);
  return r;
}

}  // namespace

TEST_SUITE("abelianization") {

TEST_CASE("small smith forms") {
  const SmithDecomposition s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  CHECK(s.diagonal() == std::vector<std::int64_t>{1, 6});
  CHECK(s.U * IntegerMatrix{{2, 0}, {0, 3}} * s.V == s.D);

  const SmithDecomposition z = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(z.D == IntegerMatrix(3, 2));
  CHECK(z.U.is_identity());
  CHECK(z.V.is_identity());

  const IntegerMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithDecomposition t = smith_normal_form(m);
  CHECK(t.diagonal() == std::vector<std::int64_t>{2, 6, 12});
  CHECK(t.U * m * t.V == t.D);
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(IntegerMatrix{{2, 0}, {0, 3}}) == std::vector<std::int64_t>{6});
  CHECK(invariant_factors(IntegerMatrix{{2, 0, 0}}) == std::vector<std::int64_t>{2, 0, 0});
}

TEST_CASE("relation matrix decomposition") {
  for (int gv = 2; gv <= 6; ++gv) {
    const IntegerMatrix rel = relation_matrix(Genus(gv));
    CHECK(rel.cols() == static_cast<std::size_t>(2 * gv + 4));
    CHECK(rel.rows() == static_cast<std::size_t>(4 * gv + 8));
    const SmithDecomposition s = smith_normal_form(rel);
    CHECK(s.U * rel * s.V == s.D);
    CHECK(diagonal_chain(s));
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.V));
  }
}

TEST_CASE("first homology") {
  CHECK(h1_hyperelliptic(Genus(2)) == std::vector<std::int64_t>{10});
  CHECK(h1_hyperelliptic(Genus(3)) == std::vector<std::int64_t>{28});
  CHECK(h1_hyperelliptic(Genus(4)) == std::vector<std::int64_t>{18});
  CHECK(h1_hyperelliptic(Genus(5)) == std::vector<std::int64_t>{44});
  for (int gv = 2; gv <= 9; ++gv) {
    const std::int64_t want = gv % 2 ? 8 * gv + 4 : 4 * gv + 2;
    CHECK(h1_hyperelliptic(Genus(gv)) == std::vector<std::int64_t>{want});
  }
}

TEST_CASE("involution subgroup") {
  for (int gv = 2; gv <= 9; ++gv) {
    const InvolutionQuotient q = involution_quotient(Genus(gv));
    const std::int64_t n = 2 * gv + 1;
    CHECK(q.rho_class == (2 * n) % q.h1_order);
    CHECK(q.b_class == n % q.h1_order);
    CHECK(q.b_power_class == ((gv + 1) * n) % q.h1_order);
    CHECK(q.index == index_in_cyclic(q.h1_order, {2 * n, (gv + 1) * n}));
    CHECK(q.index == (gv % 2 ? 4 * gv + 2 : 2 * gv + 1));
  }
  CHECK(involution_subgroup_index(Genus(2)) == 5);
  CHECK(involution_subgroup_index(Genus(3)) == 14);
  // At g = 3 the images 14 and 28 = 0 generate <14>, of order 2 in Z_28.
  CHECK(index_in_cyclic(28, {14, 28}) == 14);
}

}
