#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hmcg/free_group.hpp"
#include "hmcg/integer_matrix.hpp"
#include "hmcg/sphere.hpp"
#include "hmcg/symplectic.hpp"
#include "hmcg/word.hpp"

namespace hmcg {

// Value of a word in the extended hyperelliptic mapping class group: the outer
// action on the punctured sphere, the action on H_1(S_g), and the orientation
// character. The pair of actions has trivial common kernel, so equality of
// values is equality of mapping classes.
struct GroupElement {
  FreeAutomorphism out;
  IntegerMatrix mat;
  int orient = 1;
};

// Deliberate damage to one generator image; used to show the relation
// self-tests are sensitive.
struct Corruption {
  enum class Target { SphereTwist, MatrixTwist, SphereMirror };
  Target target = Target::SphereTwist;
  int index = 1;  // twist index for the twist targets
};

struct OracleOptions {
  std::size_t letter_cap = kDefaultLetterCap;
  std::optional<Corruption> corruption;
};

class Oracle {
 public:
  explicit Oracle(Genus g, OracleOptions options = {});

  Genus genus() const noexcept { return genus_; }
  std::size_t letter_cap() const noexcept { return options_.letter_cap; }
  const SphereGeneratorTable& sphere() const noexcept { return sphere_; }
  const ChainBasis& chain() const noexcept { return chain_; }

  GroupElement identity() const;
  GroupElement evaluate(const Word& w) const;
  GroupElement evaluate(std::string_view text) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& e) const;
  GroupElement power(const GroupElement& e, std::int64_t k) const;

  bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_identity(const GroupElement& e) const;

  // Least k in 1..cap with e^k = 1, or nullopt if none.
  std::optional<std::int64_t> order(const GroupElement& e, std::int64_t cap) const;
  std::optional<std::int64_t> order(const GroupElement& e) const {
    return order(e, default_order_cap());
  }
  std::int64_t default_order_cap() const noexcept { return 8 * genus_.value() + 8; }

  // Commutes with A_1..A_{2g+2} and sigma.
  bool is_central(const GroupElement& e) const;

 private:
  Genus genus_;
  OracleOptions options_;
  SphereGeneratorTable sphere_;
  ChainBasis chain_;
  IntegerMatrix sigma_mat_;
  std::vector<GroupElement> twist_;      // A_1..A_{2g+1}
  std::vector<GroupElement> twist_inv_;
  GroupElement sigma_;
  std::vector<GroupElement> centre_test_;  // A_1..A_{2g+2}, sigma
};

}  // namespace hmcg
