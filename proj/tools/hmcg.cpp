// Command-line front end; talks to the library only through hmcg.h.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmcg/hmcg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int exit_code(hmcg_status s) {
  switch (s) {
    case HMCG_OK: return kExitOk;
    case HMCG_ERR_RESOURCE_CAP:
    case HMCG_ERR_ORDER_EXCEEDS_CAP: return kExitCap;
    case HMCG_ERR_USAGE:
    case HMCG_ERR_PARSE:
    case HMCG_ERR_INDEX:
    case HMCG_ERR_GENUS:
    case HMCG_ERR_NULL_ARG: return kExitUsage;
    default: return kExitFail;
  }
}

int report(hmcg_status s) {
  std::cerr << "hmcg: " << hmcg_status_name(s) << ": " << hmcg_last_error() << "\n";
  return exit_code(s);
}

// Reads a positive integer from the environment; 0 when unset.
std::optional<std::int64_t> env_cap(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long long x = std::strtoll(v, &end, 10);
  if (*end != '\0' || x <= 0) throw CLI::ValidationError(std::string(name), "must be a positive integer");
  return x;
}

struct OracleDeleter {
  void operator()(hmcg_oracle* o) const { hmcg_oracle_destroy(o); }
};
struct ElementDeleter {
  void operator()(hmcg_element* e) const { hmcg_element_destroy(e); }
};
struct StringDeleter {
  void operator()(char* s) const { hmcg_string_free(s); }
};
using OraclePtr = std::unique_ptr<hmcg_oracle, OracleDeleter>;
using ElementPtr = std::unique_ptr<hmcg_element, ElementDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Settings {
  int genus_min = 2;
  int genus_max = 5;
  std::vector<std::string> claims;
  std::string format = "text";
  unsigned jobs = 1;
  int genus = 2;
  std::string word;
  std::string lhs;
  std::string rhs;
  std::int64_t order_cap = 0;
  std::int64_t word_cap = 0;
};

std::size_t word_cap(const Settings& s) { return static_cast<std::size_t>(s.word_cap); }

hmcg_status open(const Settings& s, OraclePtr& out) {
  hmcg_oracle* o = nullptr;
  const hmcg_status st = hmcg_oracle_create(s.genus, word_cap(s), &o);
  out.reset(o);
  return st;
}

hmcg_status eval(const hmcg_oracle* o, const std::string& w, ElementPtr& out) {
  hmcg_element* e = nullptr;
  const hmcg_status st = hmcg_evaluate(o, w.c_str(), &e);
  out.reset(e);
  return st;
}

const char* yes_no(int b) { return b ? "yes" : "no"; }

int cmd_verify(const Settings& s) {
  std::vector<const char*> ids;
  for (const auto& c : s.claims) ids.push_back(c.c_str());
  hmcg_verify_options opts{s.genus_min, s.genus_max, ids.data(), ids.size(), s.jobs, word_cap(s)};
  char* raw = nullptr;
  hmcg_verify_summary sum{};
  const hmcg_status st = hmcg_verify(&opts, s.format == "json" ? 1 : 0, &raw, &sum);
  StringPtr text(raw);
  if (st != HMCG_OK) return report(st);
  std::cout << text.get();
  if (s.format == "json") std::cout << "\n";
  if (sum.fail > 0) return kExitFail;
  if (sum.resource_cap > 0) return kExitCap;
  if (sum.error > 0) return kExitFail;
  return kExitOk;
}

int cmd_eval(const Settings& s) {
  OraclePtr o;
  if (auto st = open(s, o); st != HMCG_OK) return report(st);
  ElementPtr e, rho;
  if (auto st = eval(o.get(), s.word, e); st != HMCG_OK) return report(st);
  if (auto st = eval(o.get(), "rho", rho); st != HMCG_OK) return report(st);
  int ident = 0, is_rho = 0, central = 0;
  hmcg_status st = hmcg_is_identity(o.get(), e.get(), &ident);
  if (st == HMCG_OK) st = hmcg_equal(o.get(), e.get(), rho.get(), &is_rho);
  if (st == HMCG_OK) st = hmcg_is_central(o.get(), e.get(), &central);
  if (st != HMCG_OK) return report(st);

  const std::size_t dim = hmcg_element_dimension(e.get());
  std::vector<std::int64_t> m(dim * dim);
  if (st = hmcg_element_matrix(e.get(), m.data(), m.size()); st != HMCG_OK) return report(st);
  bool plus_i = true, minus_i = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const std::int64_t d = i == j ? 1 : 0;
      plus_i = plus_i && m[i * dim + j] == d;
      minus_i = minus_i && m[i * dim + j] == -d;
    }

  std::cout << "orientation: " << hmcg_element_orientation(e.get()) << "\n"
            << "identity: " << yes_no(ident) << "\n"
            << "equal to rho: " << yes_no(is_rho) << "\n"
            << "central: " << yes_no(central) << "\n"
            << "matrix:" << (plus_i ? " I" : minus_i ? " -I" : "") << "\n";
  for (std::size_t i = 0; i < dim; ++i) {
    std::cout << "  [";
    for (std::size_t j = 0; j < dim; ++j) std::cout << (j ? " " : "") << m[i * dim + j];
    std::cout << "]\n";
  }
  return kExitOk;
}

int cmd_order(const Settings& s) {
  OraclePtr o;
  if (auto st = open(s, o); st != HMCG_OK) return report(st);
  ElementPtr e;
  if (auto st = eval(o.get(), s.word, e); st != HMCG_OK) return report(st);
  std::int64_t ord = 0;
  const hmcg_status st = hmcg_order(o.get(), e.get(), s.order_cap, &ord);
  if (st == HMCG_ERR_ORDER_EXCEEDS_CAP) {
    const std::int64_t k = s.order_cap > 0 ? s.order_cap : 8 * static_cast<std::int64_t>(s.genus) + 8;
    std::cout << "exceeds cap " << k << "\n";
    return kExitCap;
  }
  if (st != HMCG_OK) return report(st);
  std::cout << ord << "\n";
  return kExitOk;
}

int cmd_equal(const Settings& s) {
  OraclePtr o;
  if (auto st = open(s, o); st != HMCG_OK) return report(st);
  ElementPtr a, b;
  if (auto st = eval(o.get(), s.lhs, a); st != HMCG_OK) return report(st);
  if (auto st = eval(o.get(), s.rhs, b); st != HMCG_OK) return report(st);
  int eq = 0;
  if (auto st = hmcg_equal(o.get(), a.get(), b.get(), &eq); st != HMCG_OK) return report(st);
  std::cout << (eq ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_h1(const Settings& s) {
  std::int64_t f[8];
  std::size_t n = 0;
  if (auto st = hmcg_h1(s.genus, f, 8, &n); st != HMCG_OK) return report(st);
  for (std::size_t i = 0; i < n; ++i) std::cout << (i ? " + " : "") << (f[i] == 0 ? "Z" : "Z_" + std::to_string(f[i]));
  std::cout << (n == 0 ? "0" : "") << "\n";
  return kExitOk;
}

int cmd_index(const Settings& s) {
  std::int64_t idx = 0;
  if (auto st = hmcg_involution_index(s.genus, &idx); st != HMCG_OK) return report(st);
  std::cout << idx << "\n";
  return kExitOk;
}

int cmd_selftest(const Settings& s) {
  OraclePtr o;
  if (auto st = open(s, o); st != HMCG_OK) return report(st);
  char* raw = nullptr;
  int ok = 0;
  const hmcg_status st = hmcg_selftest_json(o.get(), &raw, &ok);
  StringPtr json(raw);
  if (st != HMCG_OK) return report(st);
  if (s.format == "json") {
    std::cout << json.get() << "\n";
  } else {
    const auto j = nlohmann::json::parse(json.get());
    for (const auto& c : j["checks"]) {
      std::cout << c["relation"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "pass" : "fail") << "\n";
    }
    std::cout << "selftest genus " << s.genus << ": " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify identities in the hyperelliptic mapping class group", "hmcg"};
  app.require_subcommand(1);
  Settings s;

  auto add_genus = [&](CLI::App* c) {
    c->add_option("--genus", s.genus, "genus g >= 2")->required();
  };
  auto add_word_cap = [&](CLI::App* c) {
    c->add_option("--word-cap", s.word_cap, "free-word length cap (env HMCG_WORD_CAP)")
        ->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "run the claim registry");
  verify->add_option("--genus-min", s.genus_min, "lowest genus")->capture_default_str();
  verify->add_option("--genus-max", s.genus_max, "highest genus")->capture_default_str();
  verify->add_option("--claim", s.claims, "claim id (repeatable)");
  verify->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", s.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_word_cap(verify);

  auto* ev = app.add_subcommand("eval", "evaluate a word");
  add_genus(ev);
  ev->add_option("--word", s.word, "word in the generators; empty is the identity");
  add_word_cap(ev);

  auto* order = app.add_subcommand("order", "order of an element");
  add_genus(order);
  order->add_option("--word", s.word, "word in the generators")->required();
  order->add_option("--cap", s.order_cap, "largest power tried (env HMCG_ORDER_CAP)")
      ->check(CLI::PositiveNumber);
  add_word_cap(order);

  auto* equal = app.add_subcommand("equal", "compare two words");
  add_genus(equal);
  equal->add_option("--lhs", s.lhs, "left word; empty is the identity");
  equal->add_option("--rhs", s.rhs, "right word; empty is the identity");
  add_word_cap(equal);

  auto* h1 = app.add_subcommand("h1", "first homology of the group");
  add_genus(h1);

  auto* index = app.add_subcommand("index", "index of the involution subgroup");
  add_genus(index);

  auto* selftest = app.add_subcommand("selftest", "check the presentation on the sphere");
  add_genus(selftest);
  selftest->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_word_cap(selftest);

  try {
    app.parse(argc, argv);
    if (s.order_cap == 0) s.order_cap = env_cap("HMCG_ORDER_CAP").value_or(0);
    if (s.word_cap == 0) s.word_cap = env_cap("HMCG_WORD_CAP").value_or(0);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) return cmd_verify(s);
  if (*ev) return cmd_eval(s);
  if (*order) return cmd_order(s);
  if (*equal) return cmd_equal(s);
  if (*h1) return cmd_h1(s);
  if (*index) return cmd_index(s);
  if (*selftest) return cmd_selftest(s);
  return kExitUsage;
}
