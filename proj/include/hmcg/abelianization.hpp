#pragma once

#include <cstdint>
#include <vector>

#include "hmcg/integer_matrix.hpp"
#include "hmcg/word.hpp"

namespace hmcg {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  // Diagonal of D, min(rows, cols) entries, non-negative.
  std::vector<std::int64_t> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Abelianised presentation of the hyperelliptic mapping class group. Columns
// are a_1..a_{2g+2}, b, r; one row per relation that survives abelianisation.
IntegerMatrix relation_matrix(Genus g);

// Invariant factors of the cokernel other than 1; a free summand shows up as 0.
std::vector<std::int64_t> invariant_factors(const IntegerMatrix& relations);

std::vector<std::int64_t> h1_hyperelliptic(Genus g);

// Image of the involution subgroup in the cyclic group H_1 = Z_d, where the
// class t of a single twist generates H_1. The images used are those of rho
// and of the involution B^{g+1}.
struct InvolutionQuotient {
  std::int64_t h1_order = 0;        // d
  std::int64_t rho_class = 0;       // pi(rho) = rho_class * t
  std::int64_t b_class = 0;         // pi(B) = b_class * t
  std::int64_t b_power_class = 0;   // pi(B^{g+1})
  std::int64_t index = 0;           // [Z_d : <pi(rho), pi(B^{g+1})>]
};

InvolutionQuotient involution_quotient(Genus g);

std::int64_t involution_subgroup_index(Genus g);

}  // namespace hmcg
