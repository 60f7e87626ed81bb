#include "hmcg/word.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <utility>

#include "hmcg/errors.hpp"

namespace hmcg {

Genus::Genus(int value) : value_(value) {
  if (value < 2) {
    throw GenusError("genus must be at least 2, got " + std::to_string(value));
  }
}

std::string Generator::spelling() const {
  switch (symbol) {
    case Symbol::Twist: return "A" + std::to_string(index);
    case Symbol::BigB: return "B";
    case Symbol::BigBBar: return "Bb";
    case Symbol::Rho: return "rho";
    case Symbol::Sigma: return "sigma";
    case Symbol::Tau: return "tau";
    case Symbol::SHalfTurn: return "S";
    case Symbol::Beta: return "beta";
    case Symbol::NElt: return "N";
    case Symbol::MElt: return "M";
    case Symbol::Theta: return "theta";
    case Symbol::FPair: return "F" + std::to_string(index);
    case Symbol::Eps1: return "eps1";
    case Symbol::Eps2: return "eps2";
  }
  return "?";
}

void Word::append(Generator g, std::int64_t exponent) {
  if (exponent != 0) terms_.push_back({g, exponent});
}

void Word::append(const Word& w) {
  terms_.insert(terms_.end(), w.terms_.begin(), w.terms_.end());
}

Word Word::inverse() const {
  Word r;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    r.append(it->gen, -it->exponent);
  }
  return r;
}

Word Word::power(std::int64_t k, std::size_t cap) const {
  if (k == 0 || terms_.empty()) return {};
  const Word base = k < 0 ? inverse() : *this;
  const std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  if (n > cap / base.size()) {
    throw ResourceCapError("word power exceeds " + std::to_string(cap) +
                           " terms");
  }
  Word r;
  r.terms_.reserve(n * base.size());
  for (std::uint64_t i = 0; i < n; ++i) r.append(base);
  return r;
}

void validate(const Word& w, Genus g) {
  for (const Term& t : w.terms()) {
    if (t.gen.symbol == Symbol::Twist &&
        (t.gen.index < 1 || t.gen.index > g.twist_count())) {
      throw IndexError("A" + std::to_string(t.gen.index) +
                       ": twist index must lie in 1.." +
                       std::to_string(g.twist_count()) + " (2g+2) for genus " +
                       std::to_string(g.value()));
    }
    if (t.gen.symbol == Symbol::FPair &&
        (t.gen.index < 3 || t.gen.index > 2 * g.value())) {
      throw IndexError("F" + std::to_string(t.gen.index) +
                       ": index must lie in 3.." + std::to_string(2 * g.value()) +
                       " (2g) for genus " + std::to_string(g.value()));
    }
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  Word parse_all() {
    skip_ws();
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail("unmatched ')'");
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_ws(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

  bool skip_ws() {
    const std::size_t start = pos_;
    while (!at_end() && is_ws(peek())) ++pos_;
    return pos_ != start;
  }

  Word parse_word() {
    Word w;
    if (at_end() || peek() == ')') return w;
    w.append(parse_term());
    check_size(w);
    while (true) {
      const bool had_ws = skip_ws();
      if (at_end() || peek() == ')') break;
      if (!had_ws) fail("expected whitespace between terms");
      w.append(parse_term());
      check_size(w);
    }
    return w;
  }

  void check_size(const Word& w) const {
    if (w.size() > cap_) {
      throw ResourceCapError("word exceeds " + std::to_string(cap_) + " terms");
    }
  }

  Word parse_term() {
    Word atom = parse_atom();
    if (peek() != '^') return atom;
    ++pos_;
    const std::int64_t e = parse_int();
    if (atom.size() == 1) {
      // Fold the exponent into a single generator instead of repeating it.
      const Term& t = atom.terms().front();
      if (e != 0 && std::abs(t.exponent) <= std::numeric_limits<std::int64_t>::max() / std::abs(e)) {
        return Word(t.gen, t.exponent * e);
      }
    }
    return atom.power(e, cap_);
  }

  Word parse_atom() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      Word inner = parse_word();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    return Word(parse_gen());
  }

  Generator parse_gen() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::size_t letters_end = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view name = text_.substr(start, letters_end - start);
    const std::string_view digits = text_.substr(letters_end, pos_ - letters_end);
    if (name.empty()) {
      pos_ = start;
      if (at_end()) fail("expected a generator");
      fail("expected a generator, found '" + std::string(1, peek()) + "'");
    }

    static const std::map<std::string_view, Symbol, std::less<>> kNamed = {
        {"B", Symbol::BigB},       {"Bb", Symbol::BigBBar},
        {"rho", Symbol::Rho},      {"sigma", Symbol::Sigma},
        {"tau", Symbol::Tau},      {"S", Symbol::SHalfTurn},
        {"beta", Symbol::Beta},    {"N", Symbol::NElt},
        {"M", Symbol::MElt},       {"theta", Symbol::Theta},
    };
    if (digits.empty()) {
      if (auto it = kNamed.find(name); it != kNamed.end()) {
        return Generator::named(it->second);
      }
    } else if (name == "A" || name == "F") {
      int idx = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
      if (ec != std::errc{} || p != digits.data() + digits.size()) {
        pos_ = letters_end;
        fail("index out of range");
      }
      return name == "A" ? Generator::twist(idx) : Generator::fpair(idx);
    } else if (name == "eps" && (digits == "1" || digits == "2")) {
      return Generator::named(digits == "1" ? Symbol::Eps1 : Symbol::Eps2);
    }
    const std::string token(text_.substr(start, pos_ - start));
    pos_ = start;
    fail("unknown generator '" + token + "'");
  }

  std::int64_t parse_int() {
    const std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t dstart = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (dstart == pos_) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text_.data() + dstart, text_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("exponent out of range");
    }
    if (v == 0) {
      pos_ = start;
      fail("exponent must be nonzero");
    }
    return neg ? -v : v;
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, Genus g, std::size_t cap) {
  Word w = Parser(text, cap).parse_all();
  validate(w, g);
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Term& t : w.terms()) {
    if (!out.empty()) out += ' ';
    out += t.gen.spelling();
    if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
  }
  return out;
}

namespace {

Word twists(int from, int to) {
  Word w;
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    w.append(Generator::twist(i));
    if (i == to) break;
  }
  return w;
}

// One level of unfolding for a non-primitive generator.
Word definition(Generator gen, Genus g) {
  const int n = g.free_rank();  // 2g+1
  const Word B(Generator::named(Symbol::BigB));
  const Word sigma(Generator::named(Symbol::Sigma));
  const Word tau(Generator::named(Symbol::Tau));
  switch (gen.symbol) {
    case Symbol::Twist:
      // A_{2g+2} = B A_{2g+1} B^{-1}
      return B * Word(Generator::twist(n)) * B.inverse();
    case Symbol::BigB: return twists(1, n);
    case Symbol::BigBBar: return twists(n, 1);
    case Symbol::Rho: return twists(1, n) * twists(n, 1);
    case Symbol::Sigma: break;
    case Symbol::Tau: return sigma * Word(Generator::named(Symbol::SHalfTurn));
    case Symbol::SHalfTurn: {
      // A_1 (A_2 A_1) (A_3 A_2 A_1) ... (A_{2g+1} ... A_1)
      Word w;
      for (int k = 1; k <= n; ++k) w.append(twists(k, 1));
      return w;
    }
    case Symbol::Beta: return sigma * B;
    case Symbol::NElt: {
      Word w = sigma;
      w.append(Generator::twist(n), -1);
      w.append(Generator::twist(1));
      w.append(Generator::twist(2));
      w.append(Generator::twist(1), -1);
      w.append(B);
      w.append(Generator::twist(n), -1);
      return w;
    }
    case Symbol::MElt: return twists(2, n);
    case Symbol::Theta: return twists(g.value() + 2, n).power(g.value() + 1);
    case Symbol::FPair: return twists(gen.index, gen.index + 1);
    case Symbol::Eps1: return tau * B;
    case Symbol::Eps2: return tau * Word(Generator::twist(g.value() + 1));
  }
  throw Error("generator " + gen.spelling() + " has no definition");
}

bool is_primitive(Generator gen, Genus g) {
  return gen.symbol == Symbol::Sigma ||
         (gen.symbol == Symbol::Twist && gen.index <= g.free_rank());
}

class Expander {
 public:
  Expander(Genus g, std::size_t cap) : g_(g), cap_(cap) {}

  void emit(const Word& w) {
    for (const Term& t : w.terms()) emit(t.gen, t.exponent);
  }

  Word take() && { return std::move(out_); }

 private:
  void emit(Generator gen, std::int64_t exponent) {
    if (is_primitive(gen, g_)) {
      const std::int64_t unit = exponent < 0 ? -1 : 1;
      grow(static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent));
      for (std::int64_t k = 0; k != exponent; k += unit) out_.append(gen, unit);
      return;
    }
    const Word& body = cached(gen);
    const Word& block = exponent < 0 ? cached_inverse(gen) : body;
    const std::uint64_t n = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
    if (!block.empty() && n > cap_ / block.size()) grow(cap_ + 1);
    grow(n * block.size());
    for (std::uint64_t k = 0; k < n; ++k) out_.append(block);
  }

  void grow(std::uint64_t extra) {
    if (extra > cap_ || out_.size() + extra > cap_) {
      throw ResourceCapError("expanded word exceeds " + std::to_string(cap_) +
                             " letters");
    }
  }

  using Key = std::pair<Symbol, int>;

  const Word& cached(Generator gen) {
    const Key key{gen.symbol, gen.index};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Expander sub(g_, cap_);
    sub.cache_ = cache_;
    sub.emit(definition(gen, g_));
    cache_ = std::move(sub.cache_);
    return cache_.emplace(key, std::move(sub).take()).first->second;
  }

  const Word& cached_inverse(Generator gen) {
    const Key key{gen.symbol, gen.index};
    if (auto it = inverse_cache_.find(key); it != inverse_cache_.end()) return it->second;
    return inverse_cache_.emplace(key, cached(gen).inverse()).first->second;
  }

  Genus g_;
  std::size_t cap_;
  Word out_;
  std::map<Key, Word> cache_;
  std::map<Key, Word> inverse_cache_;
};

}  // namespace

Word expand(const Word& w, Genus g, std::size_t cap) {
  validate(w, g);
  Expander e(g, cap);
  e.emit(w);
  return std::move(e).take();
}

int orientation(const Word& expanded) {
  int sign = 1;
  for (const Term& t : expanded.terms()) {
    if (t.gen.symbol == Symbol::Sigma && (t.exponent % 2 != 0)) sign = -sign;
  }
  return sign;
}

}  // namespace hmcg
