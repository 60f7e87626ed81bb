#include "hmcg/hmcg.h"

#include <cstring>
#include <exception>
#include <string>

#include <json.hpp>

#include "hmcg/abelianization.hpp"
#include "hmcg/claims.hpp"
#include "hmcg/errors.hpp"
#include "hmcg/oracle.hpp"

struct hmcg_oracle {
  hmcg::Oracle oracle;
};

struct hmcg_element {
  hmcg::GroupElement value;
};

namespace {

thread_local std::string last_error;

hmcg_status fail(hmcg_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Maps the exception in flight to a status code.
hmcg_status translate() {
  try {
    throw;
  } catch (const hmcg::ParseError& e) {
    return fail(HMCG_ERR_PARSE, e.what());
  } catch (const hmcg::IndexError& e) {
    return fail(HMCG_ERR_INDEX, e.what());
  } catch (const hmcg::GenusError& e) {
    return fail(HMCG_ERR_GENUS, e.what());
  } catch (const hmcg::ResourceCapError& e) {
    return fail(HMCG_ERR_RESOURCE_CAP, e.what());
  } catch (const hmcg::ContractError& e) {
    return fail(HMCG_ERR_CONTRACT, e.what());
  } catch (const hmcg::Error& e) {
    return fail(HMCG_ERR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HMCG_ERR_RESOURCE_CAP, "out of memory");
  } catch (const std::exception& e) {
    return fail(HMCG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HMCG_ERR_INTERNAL, "unknown exception");
  }
}

template <class F>
hmcg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (...) {
    return translate();
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hmcg_status null_arg(const char* name) { return fail(HMCG_ERR_NULL_ARG, std::string(name) + " is null"); }

}  // namespace

extern "C" {

const char* hmcg_last_error(void) { return last_error.c_str(); }

const char* hmcg_status_name(hmcg_status s) {
  switch (s) {
    case HMCG_OK: return "ok";
    case HMCG_ERR_USAGE: return "usage error";
    case HMCG_ERR_PARSE: return "parse error";
    case HMCG_ERR_INDEX: return "index error";
    case HMCG_ERR_GENUS: return "genus error";
    case HMCG_ERR_RESOURCE_CAP: return "resource cap exceeded";
    case HMCG_ERR_CONTRACT: return "contract violation";
    case HMCG_ERR_ORDER_EXCEEDS_CAP: return "order exceeds cap";
    case HMCG_ERR_NULL_ARG: return "null argument";
    case HMCG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hmcg_string_free(char* s) { delete[] s; }

hmcg_status hmcg_oracle_create(int genus, size_t letter_cap, hmcg_oracle** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    hmcg::OracleOptions opts;
    if (letter_cap) opts.letter_cap = letter_cap;
    *out = new hmcg_oracle{hmcg::Oracle(hmcg::Genus(genus), opts)};
    return HMCG_OK;
  });
}

void hmcg_oracle_destroy(hmcg_oracle* o) { delete o; }

int hmcg_oracle_genus(const hmcg_oracle* o) { return o ? o->oracle.genus().value() : 0; }

hmcg_status hmcg_evaluate(const hmcg_oracle* o, const char* word, hmcg_element** out) {
  if (!o) return null_arg("oracle");
  if (!word) return null_arg("word");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hmcg_element{o->oracle.evaluate(std::string_view(word))};
    return HMCG_OK;
  });
}

void hmcg_element_destroy(hmcg_element* e) { delete e; }

int hmcg_element_orientation(const hmcg_element* e) { return e ? e->value.orient : 0; }

size_t hmcg_element_dimension(const hmcg_element* e) { return e ? e->value.mat.rows() : 0; }

hmcg_status hmcg_element_matrix(const hmcg_element* e, int64_t* buf, size_t len) {
  if (!e) return null_arg("element");
  if (!buf) return null_arg("buf");
  const auto& m = e->value.mat;
  if (len < m.rows() * m.cols()) return fail(HMCG_ERR_USAGE, "matrix buffer too small");
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) buf[i * m.cols() + j] = m(i, j);
  return HMCG_OK;
}

hmcg_status hmcg_equal(const hmcg_oracle* o, const hmcg_element* a, const hmcg_element* b, int* out) {
  if (!o || !a || !b || !out) return null_arg("argument");
  return guarded([&] {
    *out = o->oracle.equal(a->value, b->value) ? 1 : 0;
    return HMCG_OK;
  });
}

hmcg_status hmcg_is_identity(const hmcg_oracle* o, const hmcg_element* e, int* out) {
  if (!o || !e || !out) return null_arg("argument");
  return guarded([&] {
    *out = o->oracle.is_identity(e->value) ? 1 : 0;
    return HMCG_OK;
  });
}

hmcg_status hmcg_is_central(const hmcg_oracle* o, const hmcg_element* e, int* out) {
  if (!o || !e || !out) return null_arg("argument");
  return guarded([&] {
    *out = o->oracle.is_central(e->value) ? 1 : 0;
    return HMCG_OK;
  });
}

hmcg_status hmcg_order(const hmcg_oracle* o, const hmcg_element* e, int64_t cap, int64_t* out) {
  if (!o || !e || !out) return null_arg("argument");
  return guarded([&] {
    const int64_t k = cap > 0 ? cap : 8 * static_cast<int64_t>(o->oracle.genus().value()) + 8;
    const auto ord = o->oracle.order(e->value, k);
    if (!ord) return fail(HMCG_ERR_ORDER_EXCEEDS_CAP, "order exceeds cap " + std::to_string(k));
    *out = *ord;
    return HMCG_OK;
  });
}

hmcg_status hmcg_h1(int genus, int64_t* factors, size_t capacity, size_t* count) {
  if (!count) return null_arg("count");
  return guarded([&] {
    const auto f = hmcg::h1_hyperelliptic(hmcg::Genus(genus));
    *count = f.size();
    if (capacity < f.size() || (!factors && !f.empty())) {
      return fail(HMCG_ERR_USAGE, "factor buffer too small");
    }
    for (size_t i = 0; i < f.size(); ++i) factors[i] = f[i];
    return HMCG_OK;
  });
}

hmcg_status hmcg_involution_index(int genus, int64_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = hmcg::involution_subgroup_index(hmcg::Genus(genus));
    return HMCG_OK;
  });
}

hmcg_status hmcg_selftest_json(const hmcg_oracle* o, char** json, int* all_passed) {
  if (!o) return null_arg("oracle");
  if (!json) return null_arg("json");
  *json = nullptr;
  return guarded([&] {
    const auto rep = hmcg::selftest_relations(o->oracle.sphere(), o->oracle.letter_cap());
    nlohmann::ordered_json j;
    j["genus"] = o->oracle.genus().value();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) j["checks"].push_back({{"relation", c.relation}, {"passed", c.passed}});
    j["passed"] = rep.all_passed();
    *json = copy_string(j.dump(2));
    if (all_passed) *all_passed = rep.all_passed() ? 1 : 0;
    return HMCG_OK;
  });
}

hmcg_status hmcg_verify(const hmcg_verify_options* options, int format, char** report,
                        hmcg_verify_summary* summary) {
  if (!options) return null_arg("options");
  if (!report) return null_arg("report");
  if (options->claim_count && !options->claims) return null_arg("claims");
  *report = nullptr;
  return guarded([&] {
    hmcg::RunOptions ro;
    ro.genus_min = options->genus_min;
    ro.genus_max = options->genus_max;
    for (size_t i = 0; i < options->claim_count; ++i) {
      if (!options->claims[i]) return null_arg("claim id");
      ro.claims.emplace_back(options->claims[i]);
    }
    ro.jobs = options->jobs ? options->jobs : 1;
    if (options->letter_cap) ro.oracle.letter_cap = options->letter_cap;
    const hmcg::RunResult r = hmcg::run(ro);
    *report = copy_string(format == 1 ? hmcg::to_json(r) : hmcg::to_text(r));
    if (summary) {
      *summary = {r.summary.pass, r.summary.fail, r.summary.skipped, r.summary.error, r.summary.resource_cap};
    }
    return HMCG_OK;
  });
}

hmcg_status hmcg_list_claims(char** json) {
  if (!json) return null_arg("json");
  *json = nullptr;
  return guarded([&] {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : hmcg::registry()) {
      j.push_back({{"id", c.id}, {"description", c.description}, {"guard", c.guard_text}});
    }
    *json = copy_string(j.dump(2));
    return HMCG_OK;
  });
}

}  // extern "C"
