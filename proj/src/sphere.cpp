#include "hmcg/sphere.hpp"

#include <algorithm>
#include <set>

#include "hmcg/errors.hpp"

namespace hmcg {

namespace {

FreeWord prefix(int k) {
  std::vector<Letter> ls;
  for (int j = 1; j <= k; ++j) ls.push_back(j);
  return FreeWord::reduce(ls);
}

FreeWord letters(std::initializer_list<Letter> ls) {
  return FreeWord::reduce(std::vector<Letter>(ls));
}

}  // namespace

FreeAutomorphism build_halftwist(int i, Genus g) {
  const int n = g.free_rank();
  if (i < 1 || i > n) {
    throw IndexError("half-twist index " + std::to_string(i) + " outside 1.." +
                     std::to_string(n));
  }
  FreeAutomorphism id = FreeAutomorphism::identity(n);
  std::vector<FreeWord> fwd = id.images();
  std::vector<FreeWord> bwd = id.images();
  if (i < n) {
    // x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
    fwd[i - 1] = letters({i, i + 1, -i});
    fwd[i] = letters({i});
    bwd[i - 1] = letters({i + 1});
    bwd[i] = letters({-(i + 1), i, i + 1});
  } else {
    // Same formula with x_{2g+2} = (x_1 ... x_{2g+1})^{-1}.
    const FreeWord last = prefix(n).inverse();
    fwd[n - 1] = conjugate(letters({n}), last);
    bwd[n - 1] = last;
  }
  return FreeAutomorphism::from_images(std::move(fwd), std::move(bwd));
}

bool outer_equal(const FreeAutomorphism& a, const FreeAutomorphism& b, std::size_t cap) {
  return is_inner(compose(a, b.inverse(), cap), cap).has_value();
}

namespace {

FreeAutomorphism b_image(const std::vector<FreeAutomorphism>& h, std::size_t cap) {
  FreeAutomorphism b = FreeAutomorphism::identity(h.front().rank());
  for (const auto& t : h) b = compose(b, t, cap);
  return b;
}

FreeAutomorphism conj(const FreeAutomorphism& by, const FreeAutomorphism& x, std::size_t cap) {
  return compose(compose(by, x, cap), by.inverse(), cap);
}

}  // namespace

FreeAutomorphism build_mirror(Genus g, std::size_t cap) {
  const int n = g.free_rank();
  // x_i -> (x_1 ... x_{i-1}) x_i^{-1} (x_1 ... x_{i-1})^{-1}; an involution on
  // the nose, so it is its own inverse.
  std::vector<FreeWord> fwd;
  for (int i = 1; i <= n; ++i) {
    fwd.push_back(conjugate(prefix(i - 1), FreeWord::generator(-i), cap));
  }
  FreeAutomorphism mirror = FreeAutomorphism::from_images(fwd, fwd, cap);

  std::vector<FreeAutomorphism> h;
  for (int i = 1; i <= n; ++i) h.push_back(build_halftwist(i, g));
  h.push_back(conj(b_image(h, cap), h.back(), cap));  // A_{2g+2}
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!outer_equal(conj(mirror, h[i], cap), h[i].inverse(), cap)) {
      throw ContractError("mirror violates sigma A" + std::to_string(i + 1) +
                          " sigma = A" + std::to_string(i + 1) + "^-1");
    }
  }
  if (!is_inner(compose(mirror, mirror, cap), cap)) {
    throw ContractError("mirror violates sigma^2 = 1");
  }
  return mirror;
}

SphereGeneratorTable build_sphere_table(Genus g, std::size_t cap) {
  SphereGeneratorTable t;
  t.genus = g;
  for (int i = 1; i <= g.free_rank(); ++i) t.halftwist.push_back(build_halftwist(i, g));
  t.mirror = build_mirror(g, cap);
  return t;
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> RelationReport::failed_families() const {
  std::set<std::string> fams;
  for (const auto& c : checks) {
    if (!c.passed) fams.insert(c.relation.substr(0, c.relation.find(' ')));
  }
  return {fams.begin(), fams.end()};
}

RelationReport selftest_relations(const SphereGeneratorTable& table, std::size_t cap) {
  const Genus g = table.genus;
  const int m = g.twist_count();
  const FreeAutomorphism b = b_image(table.halftwist, cap);
  std::vector<FreeAutomorphism> h = table.halftwist;
  h.push_back(conj(b, h.back(), cap));
  auto A = [&](int i) -> const FreeAutomorphism& { return h[((i - 1) % m + m) % m]; };
  auto name = [](int i) { return "A" + std::to_string(i); };

  RelationReport r;
  // (1): the rho word lies in the Birman-Hilden kernel, i.e. acts as an inner
  // automorphism.
  {
    FreeAutomorphism rho = b;
    for (int i = g.free_rank(); i >= 1; --i) rho = compose(rho, A(i), cap);
    r.checks.push_back({"(1) rho word is inner", is_inner(rho, cap).has_value()});
  }
  for (int i = 1; i <= m; ++i) {
    const int j = i % m + 1;
    r.checks.push_back({"(3) B " + name(i) + " B^-1 = " + name(j),
                        outer_equal(conj(b, A(i), cap), A(j), cap)});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      if (j - i > 2 * g.value()) continue;
      r.checks.push_back({"(4) " + name(i) + " " + name(j) + " commute",
                          outer_equal(compose(A(i), A(j), cap), compose(A(j), A(i), cap), cap)});
    }
  }
  for (int i = 1; i <= m; ++i) {
    const int j = i % m + 1;
    const auto lhs = compose(compose(A(i), A(j), cap), A(i), cap);
    const auto rhs = compose(compose(A(j), A(i), cap), A(j), cap);
    r.checks.push_back({"(5) braid " + name(i) + " " + name(j), outer_equal(lhs, rhs, cap)});
  }
  {
    FreeAutomorphism p = FreeAutomorphism::identity(g.free_rank());
    for (int k = 0; k < m; ++k) p = compose(p, b, cap);
    r.checks.push_back({"(6) B^" + std::to_string(m) + " = 1", is_inner(p, cap).has_value()});
  }
  return r;
}

}  // namespace hmcg
