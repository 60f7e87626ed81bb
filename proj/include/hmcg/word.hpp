#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hmcg/free_group.hpp"

namespace hmcg {

// Genus of the closed surface; always at least 2.
class Genus {
 public:
  explicit Genus(int value);

  int value() const noexcept { return value_; }
  // Number of chain twists A_1..A_{2g+2}.
  int twist_count() const noexcept { return 2 * value_ + 2; }
  // Rank of the free group pi_1 of the (2g+2)-punctured sphere.
  int free_rank() const noexcept { return 2 * value_ + 1; }
  bool even() const noexcept { return value_ % 2 == 0; }

  friend bool operator==(Genus, Genus) = default;

 private:
  int value_;
};

enum class Symbol : std::uint8_t {
  Twist,      // A<k>
  BigB,       // B   = A_1 A_2 ... A_{2g+1}
  BigBBar,    // Bb  = A_{2g+1} ... A_2 A_1
  Rho,        // hyperelliptic involution
  Sigma,      // reflection fixing every chain curve
  Tau,        // second reflection, sigma S
  SHalfTurn,  // S, the half-turn reversing the chain
  Beta,
  NElt,
  MElt,
  Theta,
  FPair,      // F<j> = A_j A_{j+1}
  Eps1,
  Eps2,
};

struct Generator {
  Symbol symbol = Symbol::Twist;
  int index = 0;  // only meaningful for Twist and FPair

  static Generator twist(int i) { return {Symbol::Twist, i}; }
  static Generator fpair(int j) { return {Symbol::FPair, j}; }
  static Generator named(Symbol s) { return {s, 0}; }

  std::string spelling() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Term {
  Generator gen;
  std::int64_t exponent = 1;
  friend bool operator==(const Term&, const Term&) = default;
};

// Product of generator powers. "X Y" means Y acts first.
class Word {
 public:
  Word() = default;
  explicit Word(Generator g, std::int64_t exponent = 1) { append(g, exponent); }

  // Zero exponents are dropped.
  void append(Generator g, std::int64_t exponent = 1);
  void append(const Word& w);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Word inverse() const;
  Word power(std::int64_t k, std::size_t cap = kDefaultLetterCap) const;

  friend Word operator*(Word a, const Word& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Term> terms_;
};

// Throws IndexError if a twist or F index falls outside its range for g.
void validate(const Word& w, Genus g);

// Parses the word DSL, e.g. "A1 A2^-1 (B sigma)^3 rho".
Word parse_word(std::string_view text, Genus g,
                std::size_t cap = kDefaultLetterCap);

// Canonical text form; parse_word(to_string(w)) == w.
std::string to_string(const Word& w);

// Rewrites w over {A_1..A_{2g+1}, sigma} with every exponent +-1.
Word expand(const Word& w, Genus g, std::size_t cap = kDefaultLetterCap);

// Number of sigma letters in the expansion, mod 2 mapped to +1/-1.
int orientation(const Word& expanded);

}  // namespace hmcg
