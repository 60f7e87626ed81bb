#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hmcg {

// Signed 1-based basis index: +i is x_i, -i is x_i^{-1}.
using Letter = std::int32_t;

// Upper bound on the length of any free word built by the engine.
inline constexpr std::size_t kDefaultLetterCap = 1'000'000;

// Freely reduced word over the basis x_1, x_2, ...
class FreeWord {
 public:
  FreeWord() = default;

  // Free reduction of an arbitrary letter sequence. Zero letters are rejected.
  static FreeWord reduce(std::span<const Letter> raw,
                         std::size_t cap = kDefaultLetterCap);
  static FreeWord generator(Letter letter);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;

  // Exponent of x_i^{+-1} raised to a power: x_i^k.
  static FreeWord power(Letter letter, std::int64_t k,
                        std::size_t cap = kDefaultLetterCap);

  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend class WordBuilder;

  std::vector<Letter> letters_;
};

// Accumulates letters while keeping the buffer freely reduced.
class WordBuilder {
 public:
  explicit WordBuilder(std::size_t cap = kDefaultLetterCap) : cap_(cap) {}

  void push(Letter letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  std::size_t size() const noexcept { return buf_.size(); }
  FreeWord finish() &&;

 private:
  std::vector<Letter> buf_;
  std::size_t cap_;
};

FreeWord multiply(const FreeWord& a, const FreeWord& b,
                  std::size_t cap = kDefaultLetterCap);

// w x w^{-1}
FreeWord conjugate(const FreeWord& w, const FreeWord& x,
                   std::size_t cap = kDefaultLetterCap);

// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
struct CyclicReduction {
  FreeWord conjugator;
  FreeWord core;
};
CyclicReduction cyclic_reduce(const FreeWord& w);

// Automorphism of F_rank, stored with its inverse so that both directions of
// composition stay cheap.
class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  static FreeAutomorphism identity(int rank);

  // Throws ContractError unless bwd really inverts fwd.
  static FreeAutomorphism from_images(std::vector<FreeWord> fwd,
                                      std::vector<FreeWord> bwd,
                                      std::size_t cap = kDefaultLetterCap);

  // x_i -> w x_i w^{-1}
  static FreeAutomorphism inner(const FreeWord& w, int rank,
                                std::size_t cap = kDefaultLetterCap);

  int rank() const noexcept { return static_cast<int>(fwd_.size()); }
  const FreeWord& image(int i) const { return fwd_.at(i - 1); }
  const FreeWord& inverse_image(int i) const { return bwd_.at(i - 1); }
  const std::vector<FreeWord>& images() const noexcept { return fwd_; }
  const std::vector<FreeWord>& inverse_images() const noexcept { return bwd_; }

  FreeAutomorphism inverse() const { return FreeAutomorphism(bwd_, fwd_); }
  std::size_t total_length() const noexcept;

  // True when fwd and bwd are mutually inverse on every basis letter.
  bool check_invariant(std::size_t cap = kDefaultLetterCap) const;

  friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
    return a.fwd_ == b.fwd_;
  }

 private:
  FreeAutomorphism(std::vector<FreeWord> fwd, std::vector<FreeWord> bwd)
      : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {}
  friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&,
                                  std::size_t);

  std::vector<FreeWord> fwd_;
  std::vector<FreeWord> bwd_;
};

// Substitutes the images of a into w.
FreeWord apply(const FreeAutomorphism& a, const FreeWord& w,
               std::size_t cap = kDefaultLetterCap);

// a after b: (a o b)(x) = a(b(x)).
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b,
                         std::size_t cap = kDefaultLetterCap);

// Returns w with a(x_i) = w x_i w^{-1} for every i, if a is inner.
std::optional<FreeWord> is_inner(const FreeAutomorphism& a,
                                 std::size_t cap = kDefaultLetterCap);

}  // namespace hmcg
