#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hmcg/integer_matrix.hpp"
#include "hmcg/word.hpp"

namespace hmcg {

using IntVector = std::vector<std::int64_t>;

// Intersection form on H_1(S_g) in the basis of the first 2g chain curves,
// plus the homology classes of all 2g+2 chain curves.
struct ChainBasis {
  Genus genus{2};
  IntegerMatrix form;            // J, 2g x 2g
  IntegerMatrix form_inverse;    // J^{-1}, integral since det J = 1
  std::vector<IntVector> classes;  // classes[i-1] = [a_i], i = 1..2g+2

  const IntVector& curve(int i) const { return classes.at(i - 1); }
  std::int64_t pairing(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;
};

ChainBasis build_chain_basis(Genus g);

// x -> x + <x, c> c, the homology action of the right twist about a curve of
// class c.
IntegerMatrix transvection(std::span<const std::int64_t> c, const IntegerMatrix& form);

// diag(+1, -1, +1, ...): the reflection fixing every chain curve setwise.
IntegerMatrix build_sigma_matrix(Genus g);

// +1 if m^T J m = J, -1 if m^T J m = -J, 0 otherwise.
int form_sign(const IntegerMatrix& m, const IntegerMatrix& form);

// Coefficients of det(xI - m), leading coefficient first. Division-free
// (Berkowitz), so every intermediate value is an exact integer.
std::vector<std::int64_t> char_poly(const IntegerMatrix& m);

}  // namespace hmcg
