#include "hmcg/oracle.hpp"

#include "hmcg/errors.hpp"

namespace hmcg {

Oracle::Oracle(Genus g, OracleOptions options)
    : genus_(g),
      options_(options),
      sphere_(build_sphere_table(g, options.letter_cap)),
      chain_(build_chain_basis(g)),
      sigma_mat_(build_sigma_matrix(g)) {
  for (int i = 1; i <= g.free_rank(); ++i) {
    GroupElement e{sphere_.twist(i), transvection(chain_.curve(i), chain_.form), 1};
    if (options_.corruption) {
      const Corruption& c = *options_.corruption;
      if (c.index == i && c.target == Corruption::Target::SphereTwist) e.out = e.out.inverse();
      if (c.index == i && c.target == Corruption::Target::MatrixTwist) {
        e.mat = transvection(chain_.curve(i), -chain_.form);
      }
    }
    twist_.push_back(e);
  }
  sigma_ = GroupElement{sphere_.mirror, sigma_mat_, -1};
  if (options_.corruption && options_.corruption->target == Corruption::Target::SphereMirror) {
    sigma_.out = FreeAutomorphism::identity(g.free_rank());
  }
  for (const auto& e : twist_) twist_inv_.push_back(inverse(e));

  for (int i = 1; i <= g.twist_count(); ++i) {
    centre_test_.push_back(evaluate(Word(Generator::twist(i))));
  }
  centre_test_.push_back(sigma_);
}

GroupElement Oracle::identity() const {
  const std::size_t dim = 2 * static_cast<std::size_t>(genus_.value());
  return {FreeAutomorphism::identity(genus_.free_rank()), IntegerMatrix::identity(dim), 1};
}

GroupElement Oracle::multiply(const GroupElement& a, const GroupElement& b) const {
  return {compose(a.out, b.out, options_.letter_cap), a.mat * b.mat, a.orient * b.orient};
}

GroupElement Oracle::inverse(const GroupElement& e) const {
  // M^T J M = s J gives M^{-1} = s J^{-1} M^T J.
  IntegerMatrix minv = chain_.form_inverse * e.mat.transpose() * chain_.form;
  if (e.orient < 0) minv = -minv;
  if (!(minv * e.mat).is_identity()) {
    throw ContractError("matrix image is not (anti-)symplectic for the chain form");
  }
  return {e.out.inverse(), minv, e.orient};
}

GroupElement Oracle::power(const GroupElement& e, std::int64_t k) const {
  GroupElement base = k < 0 ? inverse(e) : e;
  std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GroupElement acc = identity();
  for (std::uint64_t i = 0; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

GroupElement Oracle::evaluate(const Word& w) const {
  const Word ex = expand(w, genus_, options_.letter_cap);
  GroupElement acc = identity();
  std::size_t pos = 0;
  try {
    for (const Term& t : ex.terms()) {
      if (t.gen.symbol == Symbol::Sigma) {
        acc = multiply(acc, sigma_);  // sigma is its own inverse on both sides
      } else {
        const auto idx = static_cast<std::size_t>(t.gen.index - 1);
        acc = multiply(acc, t.exponent > 0 ? twist_[idx] : twist_inv_[idx]);
      }
      ++pos;
    }
  } catch (const ResourceCapError& err) {
    Word head;
    for (std::size_t i = 0; i <= pos && i < ex.size(); ++i) {
      head.append(ex.terms()[i].gen, ex.terms()[i].exponent);
    }
    std::string shown = to_string(head);
    if (shown.size() > 200) shown = "..." + shown.substr(shown.size() - 200);
    throw ResourceCapError(std::string(err.what()) + " after expanded letter " +
                           std::to_string(pos + 1) + " of " + std::to_string(ex.size()) +
                           " (prefix " + shown + ")");
  }
  return acc;
}

GroupElement Oracle::evaluate(std::string_view text) const {
  return evaluate(parse_word(text, genus_, options_.letter_cap));
}

bool Oracle::equal(const GroupElement& a, const GroupElement& b) const {
  if (a.orient != b.orient || a.mat != b.mat) return false;
  return is_inner(compose(a.out, b.out.inverse(), options_.letter_cap), options_.letter_cap)
      .has_value();
}

bool Oracle::is_identity(const GroupElement& e) const {
  return e.orient == 1 && e.mat.is_identity() &&
         is_inner(e.out, options_.letter_cap).has_value();
}

std::optional<std::int64_t> Oracle::order(const GroupElement& e, std::int64_t cap) const {
  if (cap < 1) throw Error("order cap must be positive");
  GroupElement p = e;
  for (std::int64_t k = 1; k <= cap; ++k) {
    if (is_identity(p)) return k;
    if (k < cap) p = multiply(p, e);
  }
  return std::nullopt;
}

bool Oracle::is_central(const GroupElement& e) const {
  for (const auto& x : centre_test_) {
    if (!equal(multiply(e, x), multiply(x, e))) return false;
  }
  return true;
}

}  // namespace hmcg
