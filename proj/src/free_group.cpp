#include "hmcg/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hmcg/errors.hpp"

namespace hmcg {

namespace {

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw ResourceCapError("free word exceeds " + std::to_string(cap) +
                           " letters");
  }
}

}  // namespace

void WordBuilder::push(Letter letter) {
  if (letter == 0) throw IndexError("free-group letter 0 is not a basis index");
  if (!buf_.empty() && buf_.back() == -letter) {
    buf_.pop_back();
    return;
  }
  buf_.push_back(letter);
  check_cap(buf_.size(), cap_);
}

void WordBuilder::append(const FreeWord& w) {
  for (Letter l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const FreeWord& w) {
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
}

FreeWord WordBuilder::finish() && { return FreeWord(std::move(buf_)); }

FreeWord FreeWord::reduce(std::span<const Letter> raw, std::size_t cap) {
  WordBuilder b(cap);
  for (Letter l : raw) b.push(l);
  return std::move(b).finish();
}

FreeWord FreeWord::generator(Letter letter) {
  WordBuilder b;
  b.push(letter);
  return std::move(b).finish();
}

FreeWord FreeWord::power(Letter letter, std::int64_t k, std::size_t cap) {
  if (letter == 0) throw IndexError("free-group letter 0 is not a basis index");
  const std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  check_cap(n, cap);
  return FreeWord(std::vector<Letter>(n, k < 0 ? -letter : letter));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return FreeWord(std::move(out));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << std::abs(letters_[i]);
    if (letters_[i] < 0) os << "^-1";
  }
  return os.str();
}

FreeWord multiply(const FreeWord& a, const FreeWord& b, std::size_t cap) {
  WordBuilder out(cap);
  out.append(a);
  out.append(b);
  return std::move(out).finish();
}

FreeWord conjugate(const FreeWord& w, const FreeWord& x, std::size_t cap) {
  WordBuilder out(cap);
  out.append(w);
  out.append(x);
  out.append_inverse(w);
  return std::move(out).finish();
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.conjugator = FreeWord::reduce(std::span(ls).subspan(0, lo));
  r.core = FreeWord::reduce(std::span(ls).subspan(lo, hi - lo));
  return r;
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeWord> fwd;
  fwd.reserve(rank);
  for (int i = 1; i <= rank; ++i) fwd.push_back(FreeWord::generator(i));
  return FreeAutomorphism(fwd, fwd);
}

FreeAutomorphism FreeAutomorphism::from_images(std::vector<FreeWord> fwd,
                                               std::vector<FreeWord> bwd,
                                               std::size_t cap) {
  if (fwd.size() != bwd.size()) {
    throw ContractError("forward and inverse image tables differ in rank");
  }
  const int rank = static_cast<int>(fwd.size());
  auto in_range = [rank](const FreeWord& w) {
    return std::all_of(w.letters().begin(), w.letters().end(),
                       [rank](Letter l) { return std::abs(l) <= rank; });
  };
  if (!std::all_of(fwd.begin(), fwd.end(), in_range) ||
      !std::all_of(bwd.begin(), bwd.end(), in_range)) {
    throw IndexError("automorphism image uses a letter beyond rank " +
                     std::to_string(rank));
  }
  FreeAutomorphism a(std::move(fwd), std::move(bwd));
  if (!a.check_invariant(cap)) {
    throw ContractError("inverse images do not invert the forward images");
  }
  return a;
}

FreeAutomorphism FreeAutomorphism::inner(const FreeWord& w, int rank,
                                         std::size_t cap) {
  std::vector<FreeWord> fwd;
  std::vector<FreeWord> bwd;
  const FreeWord winv = w.inverse();
  for (int i = 1; i <= rank; ++i) {
    const FreeWord x = FreeWord::generator(i);
    fwd.push_back(conjugate(w, x, cap));
    bwd.push_back(conjugate(winv, x, cap));
  }
  return FreeAutomorphism(std::move(fwd), std::move(bwd));
}

std::size_t FreeAutomorphism::total_length() const noexcept {
  std::size_t n = 0;
  for (const auto& w : fwd_) n += w.size();
  return n;
}

bool FreeAutomorphism::check_invariant(std::size_t cap) const {
  const FreeAutomorphism inv(bwd_, fwd_);
  for (int i = 1; i <= rank(); ++i) {
    const FreeWord x = FreeWord::generator(i);
    if (apply(inv, image(i), cap) != x) return false;
    if (apply(*this, inverse_image(i), cap) != x) return false;
  }
  return true;
}

FreeWord apply(const FreeAutomorphism& a, const FreeWord& w, std::size_t cap) {
  WordBuilder out(cap);
  for (Letter l : w.letters()) {
    const int idx = std::abs(l);
    if (idx > a.rank()) {
      throw IndexError("letter x" + std::to_string(idx) +
                       " is outside the automorphism's rank " +
                       std::to_string(a.rank()));
    }
    if (l > 0) {
      out.append(a.image(idx));
    } else {
      out.append_inverse(a.image(idx));
    }
  }
  return std::move(out).finish();
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b,
                         std::size_t cap) {
  if (a.rank() != b.rank()) {
    throw IndexError("cannot compose automorphisms of rank " +
                     std::to_string(a.rank()) + " and " +
                     std::to_string(b.rank()));
  }
  const FreeAutomorphism b_inv = b.inverse();
  std::vector<FreeWord> fwd;
  std::vector<FreeWord> bwd;
  fwd.reserve(a.rank());
  bwd.reserve(a.rank());
  for (int i = 1; i <= a.rank(); ++i) {
    fwd.push_back(apply(a, b.image(i), cap));
    bwd.push_back(apply(b_inv, a.inverse_image(i), cap));
  }
  return FreeAutomorphism(std::move(fwd), std::move(bwd));
}

std::optional<FreeWord> is_inner(const FreeAutomorphism& a, std::size_t cap) {
  const int rank = a.rank();
  if (rank == 0) return FreeWord{};

  // The conjugator must carry x_1 to a(x_1), so a(x_1) is a conjugate of x_1:
  // a(x_1) = u x_1 u^{-1}. Any conjugator then has the form u x_1^k because
  // the centraliser of x_1 is <x_1>.
  const CyclicReduction cr = cyclic_reduce(a.image(1));
  if (cr.core != FreeWord::generator(1)) return std::nullopt;
  const FreeWord& u = cr.conjugator;
  if (rank == 1) return u;

  std::size_t longest = 0;
  for (const auto& w : a.images()) longest = std::max(longest, w.size());
  const std::int64_t bound = static_cast<std::int64_t>(longest + u.size() + 1);

  // u^{-1} a(x_2) u must equal x_1^k x_2 x_1^{-k}; its reduced form starts with
  // exactly k copies of x_1^{+-1}, so the leading run is the only candidate
  // within the search window.
  WordBuilder tb(cap);
  tb.append_inverse(u);
  tb.append(a.image(2));
  tb.append(u);
  const FreeWord t = std::move(tb).finish();
  std::int64_t k = 0;
  if (!t.empty() && std::abs(t.letters().front()) == 1) {
    const Letter lead = t.letters().front();
    for (Letter l : t.letters()) {
      if (l != lead) break;
      k += lead;
    }
  }
  if (k > bound || -k > bound) return std::nullopt;

  const FreeWord w = multiply(u, FreeWord::power(1, k, cap), cap);
  for (int i = 1; i <= rank; ++i) {
    if (conjugate(w, FreeWord::generator(i), cap) != a.image(i)) {
      return std::nullopt;
    }
  }
  return w;
}

}  // namespace hmcg
