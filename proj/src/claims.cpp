#include "hmcg/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hmcg/abelianization.hpp"
#include "hmcg/errors.hpp"

namespace hmcg {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
    case ClaimStatus::Error: return "error";
  }
  return "error";
}

namespace {

// Collects the sub-checks of one claim into a single outcome.
class Verdict {
 public:
  explicit Verdict(const Oracle& o) : o_(o) {}

  void identity(const std::string& lhs, const std::string& rhs) {
    record(o_.equal(o_.evaluate(lhs), o_.evaluate(rhs)), lhs + " = " + (rhs.empty() ? "1" : rhs));
  }

  void differs(const std::string& lhs, const std::string& rhs) {
    record(!o_.equal(o_.evaluate(lhs), o_.evaluate(rhs)), lhs + " != " + (rhs.empty() ? "1" : rhs));
  }

  void require(bool ok, const std::string& what) { record(ok, what); }

  ClaimOutcome finish() const {
    ClaimOutcome out;
    out.passed = failures_.empty();
    out.expected = std::to_string(total_) + (total_ == 1 ? " check holds" : " checks hold");
    out.actual = std::to_string(total_ - failures_.size()) + " of " + std::to_string(total_) + " hold";
    if (!failures_.empty()) out.actual += "; first failure: " + failures_.front();
    return out;
  }

 private:
  void record(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }

  const Oracle& o_;
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

ClaimOutcome value_outcome(std::int64_t expected, const std::optional<std::int64_t>& actual,
                           const std::string& what) {
  ClaimOutcome out;
  out.expected = what + " " + std::to_string(expected);
  out.actual = actual ? what + " " + std::to_string(*actual) : what + " exceeds cap";
  out.passed = actual && *actual == expected;
  return out;
}

struct Ctx {
  const Oracle& o;
  int g;
  int n;  // 2g+1
  int m;  // 2g+2

  explicit Ctx(const Oracle& oracle)
      : o(oracle), g(oracle.genus().value()), n(2 * g + 1), m(2 * g + 2) {}

  // A_i with the index reduced into 1..2g+2.
  std::string A(int i) const { return "A" + std::to_string(((i - 1) % m + m) % m + 1); }
  std::string Ainv(int i) const { return A(i) + "^-1"; }
  static std::string pw(const std::string& x, int k) { return x + "^" + std::to_string(k); }

  // A_from A_{from+1} ... A_to (or descending), indices taken mod 2g+2.
  std::string run(int from, int to, bool inverse = false) const {
    std::string s;
    const int step = from <= to ? 1 : -1;
    for (int i = from;; i += step) {
      if (!s.empty()) s += ' ';
      s += inverse ? Ainv(i) : A(i);
      if (i == to) break;
    }
    return s;
  }

  std::optional<std::int64_t> order(const std::string& w) const { return o.order(o.evaluate(w)); }
};

auto any_genus = [](int) { return true; };

Claim make(std::string id, std::string description, std::function<ClaimOutcome(const Ctx&)> f,
           std::string guard_text = {}, std::function<bool(int)> guard = any_genus) {
  return Claim{std::move(id), std::move(description), std::move(guard_text), std::move(guard),
               [f = std::move(f)](const Oracle& o) { return f(Ctx(o)); }};
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<Claim> build_registry() {
  std::vector<Claim> r;

  // Presentation relations.
  r.push_back(make("C-R1", "rho = A_1 A_2 ... A_{2g+1} A_{2g+1} ... A_2 A_1, acting as -I with inner sphere action",
                   [](const Ctx& c) {
                     Verdict v(c.o);
                     v.identity("rho", c.run(1, c.n) + " " + c.run(c.n, 1));
                     v.identity("rho", "B Bb");
                     const GroupElement rho = c.o.evaluate("rho");
                     v.require(is_inner(rho.out, c.o.letter_cap()).has_value(), "rho acts innerly on the punctured sphere");
                     v.require(rho.mat == -IntegerMatrix::identity(2 * static_cast<std::size_t>(c.g)), "rho acts as -I on H_1");
                     v.differs("rho", "");
                     return v.finish();
                   }));
  r.push_back(make("C-R2", "B = A_1 A_2 ... A_{2g+1}", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("B", c.run(1, c.n));
    GroupElement prod = c.o.identity();
    for (int i = 1; i <= c.n; ++i) prod = c.o.multiply(prod, c.o.evaluate(c.A(i)));
    v.require(c.o.equal(prod, c.o.evaluate("B")), "product of separately evaluated A_i equals B");
    return v.finish();
  }));
  r.push_back(make("C-R3", "A_j = B A_i B^-1 for j = i+1 mod 2g+2", [](const Ctx& c) {
    Verdict v(c.o);
    for (int i = 1; i <= c.m; ++i) v.identity("B " + c.A(i) + " B^-1", c.A(i + 1));
    return v.finish();
  }));
  r.push_back(make("C-R4", "A_i A_j = A_j A_i for 2 <= |i-j| <= 2g", [](const Ctx& c) {
    Verdict v(c.o);
    for (int i = 1; i <= c.m; ++i)
      for (int j = i + 2; j <= c.m; ++j)
        if (j - i <= 2 * c.g) v.identity(c.A(i) + " " + c.A(j), c.A(j) + " " + c.A(i));
    return v.finish();
  }));
  r.push_back(make("C-R5", "A_i A_j A_i = A_j A_i A_j for j = i+1 mod 2g+2", [](const Ctx& c) {
    Verdict v(c.o);
    for (int i = 1; i <= c.m; ++i) {
      const std::string a = c.A(i), b = c.A(i + 1);
      v.identity(a + " " + b + " " + a, b + " " + a + " " + b);
    }
    return v.finish();
  }));
  r.push_back(make("C-R6", "B^{2g+2} = 1", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity(Ctx::pw("B", c.m), "");
    return v.finish();
  }));
  r.push_back(make("C-R7", "rho^2 = 1", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("rho^2", "");
    v.differs("rho", "");
    return v.finish();
  }));
  r.push_back(make("C-R8", "rho A_i = A_i rho", [](const Ctx& c) {
    Verdict v(c.o);
    for (int i = 1; i <= c.m; ++i) v.identity("rho " + c.A(i), c.A(i) + " rho");
    return v.finish();
  }));
  r.push_back(make("C-E9", "sigma A_i sigma = A_i^-1 for 1 <= i <= 2g+2", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("sigma^2", "");
    for (int i = 1; i <= c.m; ++i) v.identity("sigma " + c.A(i) + " sigma", c.Ainv(i));
    return v.finish();
  }));
  r.push_back(make("C-E10", "sigma B sigma = Bb^-1 = rho B", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("sigma B sigma", "Bb^-1");
    v.identity("sigma B sigma", "rho B");
    return v.finish();
  }));

  // B and M.
  r.push_back(make("C-BSHIFT", "B = A_{1+k} A_{2+k} ... A_{2g+1+k}, indices mod 2g+2", [](const Ctx& c) {
    Verdict v(c.o);
    for (int k = 0; k < c.m; ++k) v.identity("B", c.run(1 + k, c.n + k));
    return v.finish();
  }));
  r.push_back(make("C-ORD-B", "B has order 2g+2", [](const Ctx& c) {
    return value_outcome(c.m, c.order("B"), "order");
  }));
  r.push_back(make("C-ORD-M", "M = A_2 ... A_{2g+1} has order 4g+2", [](const Ctx& c) {
    return value_outcome(4 * c.g + 2, c.order("M"), "order");
  }));
  r.push_back(make("C-A1BM", "A_1 = B M^-1", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("A1", "B M^-1");
    return v.finish();
  }));

  // beta = sigma B.
  r.push_back(make("C-L2-ORD", "beta = sigma B has order 2g+2 for g odd and 4g+4 for g even", [](const Ctx& c) {
    return value_outcome(c.g % 2 ? 2 * c.g + 2 : 4 * c.g + 4, c.order("beta"), "order");
  }));
  r.push_back(make("C-L2-POW", "beta^2 = sigma B sigma B = rho B^2 and beta^{2g+2} = rho^{g+1}", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("beta^2", "sigma B sigma B");
    v.identity("beta^2", "rho B^2");
    v.identity(Ctx::pw("beta", c.m), Ctx::pw("rho", c.g + 1));
    return v.finish();
  }));

  // N = sigma A_{2g+1}^-1 A_1 A_2 A_1^-1 B A_{2g+1}^-1.
  r.push_back(make("C-L3-N2", "N^2 = A_{2g+1} (A_2 A_3)(A_1^-1 A_2^-1) B^2 A_{2g+1}^-1 rho", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("N^2", c.A(c.n) + " A2 A3 A1^-1 A2^-1 B^2 " + c.Ainv(c.n) + " rho");
    return v.finish();
  }));
  r.push_back(make("C-L3-N2M",
                   "N^{2m} = A_{2g+1} (A_2 ... A_{2m+1})(A_1^-1 ... A_{2m}^-1) B^{2m} A_{2g+1}^-1 rho^m for 1 <= m <= g",
                   [](const Ctx& c) {
                     Verdict v(c.o);
                     for (int k = 1; k <= c.g; ++k) {
                       v.identity(Ctx::pw("N", 2 * k), c.A(c.n) + " " + c.run(2, 2 * k + 1) + " " +
                                                           c.run(1, 2 * k, true) + " " + Ctx::pw("B", 2 * k) +
                                                           " " + c.Ainv(c.n) + " " + Ctx::pw("rho", k));
                     }
                     return v.finish();
                   }));
  r.push_back(make("C-L3-N2G", "N^{2g} = A_{2g+1} B rho B B^{2g} A_{2g+1}^-1 rho^g = rho^{g+1}", [](const Ctx& c) {
    Verdict v(c.o);
    const std::string n2g = Ctx::pw("N", 2 * c.g);
    v.identity(n2g, c.A(c.n) + " B rho B " + Ctx::pw("B", 2 * c.g) + " " + c.Ainv(c.n) + " " + Ctx::pw("rho", c.g));
    v.identity(n2g, Ctx::pw("rho", c.g + 1));
    return v.finish();
  }));
  r.push_back(make("C-L3-ORD", "N has order 2g for g odd and 4g for g even", [](const Ctx& c) {
    return value_outcome(c.g % 2 ? 2 * c.g : 4 * c.g, c.order("N"), "order");
  }));

  // A_{2g+1} A_1^-1 in <beta, N>.
  r.push_back(make(
      "C-L4", "N^-2 (beta^4 N^2 beta^-4)(beta^-2 N^2 beta^2)(beta^2 N^-2 beta^-2) = A_{2g+1} A_1^-1",
      [](const Ctx& c) {
        Verdict v(c.o);
        v.identity("N^-2 (beta^4 N^2 beta^-4) (beta^-2 N^2 beta^2) (beta^2 N^-2 beta^-2)",
                   c.A(c.n) + " A1^-1");
        return v.finish();
      },
      "g >= 4", [](int g) { return g >= 4; }));
  r.push_back(make(
      "C-L4-G3", "beta^-4 N^-2 beta N^-2 beta^-1 N^-1 beta^2 N^2 beta^-4 N beta N^-3 beta^4 N^-1 beta = A_7 A_1^-1",
      [](const Ctx& c) {
        Verdict v(c.o);
        v.identity("beta^-4 N^-2 beta N^-2 beta^-1 N^-1 beta^2 N^2 beta^-4 N beta N^-3 beta^4 N^-1 beta",
                   "A7 A1^-1");
        return v.finish();
      },
      "g = 3", [](int g) { return g == 3; }));

  // <beta, N> is the whole extended group.
  r.push_back(make("C-T2-BETA", "A_j^-1 = beta A_i beta^-1 for j = i+1 mod 2g+2", [](const Ctx& c) {
    Verdict v(c.o);
    for (int i = 1; i <= c.m; ++i) v.identity("beta " + c.A(i) + " beta^-1", c.Ainv(i + 1));
    return v.finish();
  }));
  r.push_back(make(
      "C-T2-CHAIN",
      "(A_{2g-1} A_{2g+1}^-1)(A_{2g+1} A_1^-1)(A_{2g+2}^-1 A_{2g}) beta^-1 N (A_{2g+1} A_{2g-1}^-1) = A_{2g+2}^-1",
      [](const Ctx& c) {
        Verdict v(c.o);
        const int g2 = 2 * c.g;
        // The outer factors are beta-conjugates of A_{2g+1} A_1^-1 or its inverse.
        v.identity("beta (" + c.Ainv(c.m) + " " + c.A(g2) + ") beta^-1", "A1 " + c.Ainv(c.n));
        v.identity("beta^-2 " + c.A(c.n) + " A1^-1 beta^2", c.A(g2 - 1) + " " + c.Ainv(c.n));
        const std::string lhs = c.A(g2 - 1) + " " + c.Ainv(c.n) + " " + c.A(c.n) + " A1^-1 " + c.Ainv(c.m) + " " +
                                c.A(g2) + " beta^-1 N " + c.A(c.n) + " " + c.Ainv(g2 - 1);
        v.identity(lhs, c.A(g2 - 1) + " " + c.Ainv(c.m) + " " + c.Ainv(g2 - 1));
        v.identity(lhs, c.Ainv(c.m));
        return v.finish();
      },
      "g >= 3", [](int g) { return g >= 3; }));
  r.push_back(make(
      "C-T2-G2", "N^-1 beta N^2 beta N beta N^-1 beta^-1 N^-1 beta N^2 beta N beta = A_3^-1",
      [](const Ctx& c) {
        Verdict v(c.o);
        v.identity("N^-1 beta N^2 beta N beta N^-1 beta^-1 N^-1 beta N^2 beta N beta", "A3^-1");
        return v.finish();
      },
      "g = 2", [](int g) { return g == 2; }));

  // Involutions.
  r.push_back(make("C-L5-RHO", "(A_1 A_{2g+2}^-1 B)^{2g} = rho", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity(Ctx::pw("(A1 " + c.Ainv(c.m) + " B)", 2 * c.g), "rho");
    return v.finish();
  }));
  r.push_back(make("C-L5-ORD4", "(A_1 A_{2g+2}^-1 B)^g has order 4", [](const Ctx& c) {
    return value_outcome(4, c.order(Ctx::pw("(A1 " + c.Ainv(c.m) + " B)", c.g)), "order");
  }));
  r.push_back(make(
      "C-L5-THETA", "theta S theta^-1 = rho S with theta = (A_{g+2} ... A_{2g+1})^{g+1}",
      [](const Ctx& c) {
        Verdict v(c.o);
        v.identity("theta S theta^-1 S^-1", "rho");
        v.identity("theta S theta^-1", "rho S");
        return v.finish();
      },
      "g even", [](int g) { return g % 2 == 0; }));
  r.push_back(make("C-L5-EIG", "S and rho S have different characteristic polynomials on H_1 exactly when g is odd",
                   [](const Ctx& c) {
                     const GroupElement s = c.o.evaluate("S");
                     const GroupElement rs = c.o.evaluate("rho S");
                     const bool differ = char_poly(s.mat) != char_poly(rs.mat);
                     ClaimOutcome out;
                     const bool want = c.g % 2 == 1;
                     out.expected = want ? "characteristic polynomials differ" : "characteristic polynomials agree";
                     out.actual = differ ? "characteristic polynomials differ" : "characteristic polynomials agree";
                     out.actual += " (S: " + join(char_poly(s.mat)) + ")";
                     out.passed = differ == want && rs.mat == -s.mat;
                     return out;
                   }));

  // Twists are congruent modulo the involution subgroup.
  r.push_back(make("C-L6-S", "S A_1 S^-1 = A_{2g+1}", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity("S A1 S^-1", c.A(c.n));
    v.identity("A1 " + c.Ainv(c.n), "(A1 S A1^-1) S^-1");
    v.identity("(A1 S A1^-1)^2", "");
    return v.finish();
  }));
  r.push_back(make("C-L6-F", "F_j = A_j A_{j+1} fixes A_1 and carries A_j to A_{j+1} for 3 <= j <= 2g", [](const Ctx& c) {
    Verdict v(c.o);
    for (int j = 3; j <= 2 * c.g; ++j) {
      const std::string f = "F" + std::to_string(j);
      v.identity(f + " A1 " + f + "^-1", "A1");
      v.identity(f + " " + c.A(j) + " " + f + "^-1", c.A(j + 1));
    }
    // F = F_{2g} F_{2g-1} ... F_i carries A_i to A_{2g+1} and fixes A_1.
    for (int i = 3; i <= 2 * c.g; ++i) {
      std::string f;
      for (int j = 2 * c.g; j >= i; --j) f += (f.empty() ? "F" : " F") + std::to_string(j);
      v.identity("(" + f + ") " + c.A(i) + " (" + f + ")^-1", c.A(c.n));
      v.identity("(" + f + ") A1 (" + f + ")^-1", "A1");
      v.identity("A1 " + c.Ainv(i), "(" + f + ")^-1 (A1 " + c.Ainv(c.n) + ") (" + f + ")");
    }
    return v.finish();
  }));
  r.push_back(make("C-L6-CONJ", "A_{2g+1} A_2^-1 = S (A_1 A_{2g}^-1) S^-1", [](const Ctx& c) {
    Verdict v(c.o);
    v.identity(c.A(c.n) + " A2^-1", "S (A1 " + c.Ainv(2 * c.g) + ") S^-1");
    return v.finish();
  }));
  r.push_back(make("C-SDELTA", "S = A_1 (A_2 A_1) ... (A_{2g+1} ... A_1) satisfies S A_i S^-1 = A_{2g+2-i} and S^2 = 1",
                   [](const Ctx& c) {
                     Verdict v(c.o);
                     for (int i = 1; i <= c.m; ++i) v.identity("S " + c.A(i) + " S^-1", c.A(c.m - i));
                     v.identity("S^2", "");
                     v.differs("S", "");
                     const std::size_t len = expand(Word(Generator::named(Symbol::SHalfTurn)), c.o.genus()).size();
                     v.require(len == static_cast<std::size_t>(c.n * c.m / 2), "S expands to (2g+1)(2g+2)/2 twists");
                     return v.finish();
                   }));

  // Abelianisation and the involution subgroup.
  r.push_back(make("C-T7-H1", "H_1 = Z_{4g+2} for g even and Z_{8g+4} for g odd", [](const Ctx& c) {
    const Genus g = c.o.genus();
    const std::int64_t d = c.g % 2 ? 8 * c.g + 4 : 4 * c.g + 2;
    const auto h1 = h1_hyperelliptic(g);
    const InvolutionQuotient q = involution_quotient(g);
    ClaimOutcome out;
    out.expected = "Z_" + std::to_string(d) + ", pi(rho) = " + std::to_string((2 * c.n) % d) +
                   " t, pi(B) = " + std::to_string(c.n % d) + " t";
    out.actual = (h1.size() == 1 ? "Z_" + std::to_string(h1.front()) : "factors " + join(h1)) +
                 ", pi(rho) = " + std::to_string(q.rho_class) + " t, pi(B) = " + std::to_string(q.b_class) + " t";
    out.passed = h1 == std::vector<std::int64_t>{d} && q.rho_class == (2 * c.n) % d && q.b_class == c.n % d;
    return out;
  }));
  r.push_back(make("C-T7-IDX", "[M^h_g : I_g] = 2g+1 for g even and 4g+2 for g odd", [](const Ctx& c) {
    const std::int64_t want = c.g % 2 ? 4 * c.g + 2 : 2 * c.g + 1;
    return value_outcome(want, involution_subgroup_index(c.o.genus()), "index");
  }));
  r.push_back(make("C-T7-BINV", "B^{g+1} is an involution that is neither central nor rho", [](const Ctx& c) {
    Verdict v(c.o);
    const std::string bh = Ctx::pw("B", c.g + 1);
    v.identity("(" + bh + ")^2", "");
    v.differs(bh, "");
    v.differs(bh, "rho");
    v.require(!c.o.is_central(c.o.evaluate(bh)), bh + " is not central");
    return v.finish();
  }));

  // Three symmetries.
  r.push_back(make("C-T8-TAU", "tau B tau = B^-1 and tau A_{g+1} tau = A_{g+1}^-1 with tau an orientation-reversing involution",
                   [](const Ctx& c) {
                     Verdict v(c.o);
                     const std::string a = c.A(c.g + 1);
                     v.identity("tau^2", "");
                     v.identity("tau B tau^-1", "B^-1");
                     v.identity("tau " + a + " tau^-1", a + "^-1");
                     v.require(c.o.evaluate("tau").orient == -1, "tau reverses orientation");
                     return v.finish();
                   }));
  r.push_back(make("C-T8-EPS", "eps1 = tau B and eps2 = tau A_{g+1} are symmetries with B = tau eps1, A_{g+1} = tau eps2",
                   [](const Ctx& c) {
                     Verdict v(c.o);
                     v.identity("eps1^2", "");
                     v.identity("eps2^2", "");
                     v.identity("B", "tau eps1");
                     v.identity(c.A(c.g + 1), "tau eps2");
                     v.require(c.o.evaluate("eps1").orient == -1 && c.o.evaluate("eps2").orient == -1,
                               "eps1 and eps2 reverse orientation");
                     return v.finish();
                   }));
  r.push_back(make("C-RHO-CENTRAL", "rho is a central involution different from 1", [](const Ctx& c) {
    Verdict v(c.o);
    v.require(c.o.is_central(c.o.evaluate("rho")), "rho is central");
    v.identity("rho^2", "");
    v.differs("rho", "");
    return v.finish();
  }));
  return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

ClaimReport check_claim(const Claim& claim, const Oracle& oracle) {
  ClaimReport rep;
  rep.id = claim.id;
  rep.genus = oracle.genus().value();
  if (!claim.guard(rep.genus)) {
    rep.status = ClaimStatus::Skipped;
    rep.expected = "guard " + claim.guard_text + " not met";
    return rep;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome out = claim.check(oracle);
    rep.status = out.passed ? ClaimStatus::Pass : ClaimStatus::Fail;
    rep.expected = std::move(out.expected);
    rep.actual = std::move(out.actual);
  } catch (const ResourceCapError& e) {
    rep.status = ClaimStatus::Error;
    rep.resource_cap = true;
    rep.actual = std::string("resource cap: ") + e.what();
  } catch (const std::exception& e) {
    rep.status = ClaimStatus::Error;
    rep.actual = e.what();
  }
  rep.ms = elapsed_ms(start);
  return rep;
}

RunResult run(const RunOptions& options) {
  if (options.genus_min < 2) throw GenusError("genus range must start at 2 or more");
  if (options.genus_max < options.genus_min) throw GenusError("empty genus range");

  std::vector<const Claim*> selected;
  if (options.claims.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    std::set<std::string> seen;
    for (const auto& id : options.claims) {
      const Claim* c = find_claim(id);
      if (!c) throw Error("unknown claim id " + id);
      if (seen.insert(id).second) selected.push_back(c);
    }
  }

  struct Task {
    const Claim* claim;
    int genus;
  };
  std::vector<Task> tasks;
  for (const Claim* c : selected)
    for (int g = options.genus_min; g <= options.genus_max; ++g) tasks.push_back({c, g});
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    return a.claim->id != b.claim->id ? a.claim->id < b.claim->id : a.genus < b.genus;
  });

  // One shared oracle per genus, built on first use.
  std::map<int, std::shared_ptr<const Oracle>> oracles;
  std::map<int, std::string> oracle_errors;
  std::mutex oracle_mu;
  auto oracle_for = [&](int g) -> std::shared_ptr<const Oracle> {
    std::lock_guard lock(oracle_mu);
    if (auto it = oracles.find(g); it != oracles.end()) return it->second;
    if (oracle_errors.count(g)) return nullptr;
    try {
      auto o = std::make_shared<const Oracle>(Genus(g), options.oracle);
      oracles.emplace(g, o);
      return o;
    } catch (const std::exception& e) {
      oracle_errors.emplace(g, e.what());
      return nullptr;
    }
  };

  RunResult result;
  result.genus_min = options.genus_min;
  result.genus_max = options.genus_max;
  result.reports.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      ClaimReport& rep = result.reports[i];
      if (!t.claim->guard(t.genus)) {
        rep = ClaimReport{t.claim->id, t.genus, ClaimStatus::Skipped,
                          "guard " + t.claim->guard_text + " not met", "", 0.0, false};
        continue;
      }
      auto o = oracle_for(t.genus);
      if (!o) {
        std::lock_guard lock(oracle_mu);
        rep = ClaimReport{t.claim->id, t.genus, ClaimStatus::Error, "",
                          "oracle construction failed: " + oracle_errors[t.genus], 0.0, false};
        continue;
      }
      rep = check_claim(*t.claim, *o);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& rep : result.reports) {
    switch (rep.status) {
      case ClaimStatus::Pass: ++result.summary.pass; break;
      case ClaimStatus::Fail: ++result.summary.fail; break;
      case ClaimStatus::Skipped: ++result.summary.skipped; break;
      case ClaimStatus::Error: ++result.summary.error; break;
    }
    if (rep.resource_cap) ++result.summary.resource_cap;
  }
  return result;
}

std::string to_json(const RunResult& result) {
  nlohmann::ordered_json j;
  j["range"] = {result.genus_min, result.genus_max};
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["genus"] = r.genus;
    e["status"] = std::string(to_string(r.status));
    e["expected"] = r.expected;
    e["actual"] = r.actual;
    e["ms"] = r.ms;
    j["reports"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", result.summary.pass},
                  {"fail", result.summary.fail},
                  {"skipped", result.summary.skipped},
                  {"error", result.summary.error}};
  return j.dump(2);
}

std::string to_text(const RunResult& result) {
  std::ostringstream os;
  os << "genus range " << result.genus_min << ".." << result.genus_max << "\n";
  for (const auto& r : result.reports) {
    os << r.id << " g=" << r.genus << " " << to_string(r.status);
    if (r.status == ClaimStatus::Skipped) {
      os << " (" << r.expected << ")";
    } else {
      os << ": expected " << r.expected << "; actual " << r.actual;
    }
    os << "\n";
  }
  os << "summary: pass " << result.summary.pass << ", fail " << result.summary.fail << ", skipped "
     << result.summary.skipped << ", error " << result.summary.error << "\n";
  return os.str();
}

}  // namespace hmcg
