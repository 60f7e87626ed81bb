#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmcg/free_group.hpp"
#include "hmcg/word.hpp"

namespace hmcg {

// Outer action of the primitive generators on pi_1 of the (2g+2)-punctured
// sphere. The last puncture loop is eliminated through x_1 ... x_{2g+2} = 1,
// so everything lives in the free group of rank 2g+1.
struct SphereGeneratorTable {
  Genus genus{2};
  std::vector<FreeAutomorphism> halftwist;  // halftwist[i-1] realises A_i
  FreeAutomorphism mirror;                  // realises sigma

  const FreeAutomorphism& twist(int i) const { return halftwist.at(i - 1); }
};

FreeAutomorphism build_halftwist(int i, Genus g);

// Throws ContractError naming the failed relation if the reflection does not
// invert every half-twist up to inner automorphisms or does not square to an
// inner automorphism.
FreeAutomorphism build_mirror(Genus g, std::size_t cap = kDefaultLetterCap);

SphereGeneratorTable build_sphere_table(Genus g, std::size_t cap = kDefaultLetterCap);

// Equality in Out(F): a b^{-1} is inner.
bool outer_equal(const FreeAutomorphism& a, const FreeAutomorphism& b,
                 std::size_t cap = kDefaultLetterCap);

struct RelationCheck {
  std::string relation;  // e.g. "(5) braid A3 A4"
  bool passed = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_passed() const;
  // Names of failed relation families, e.g. {"(3)", "(5)"}.
  std::vector<std::string> failed_families() const;
};

// Checks the presentation relations (1), (3), (4), (5), (6) in Out(F).
RelationReport selftest_relations(const SphereGeneratorTable& table,
                                  std::size_t cap = kDefaultLetterCap);

}  // namespace hmcg
