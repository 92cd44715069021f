#include "xbdi/core/facts.hpp"

#include <algorithm>

namespace xbdi {

FactSet::InsertResult FactSet::insert(const Term& atom) {
  if (!atom.is_ground()) throw FactError("fact is not ground: " + atom.to_string());
  InsertResult result;
  if (contains(atom)) return result;
  if (vocab_.is_functional(atom)) {
    result.displaced = complements_of(atom);
    for (const auto& old : result.displaced) erase(old);
  }
  facts_.push_back(atom);
  result.inserted = true;
  return result;
}

bool FactSet::erase(const Term& atom) {
  auto it = std::find(facts_.begin(), facts_.end(), atom);
  if (it == facts_.end()) return false;
  facts_.erase(it);
  return true;
}

bool FactSet::contains(const Term& atom) const {
  return std::find(facts_.begin(), facts_.end(), atom) != facts_.end();
}

std::vector<Term> FactSet::complements_of(const Term& atom) const {
  std::vector<Term> out;
  if (!atom.is_ground()) return out;
  for (const auto& f : facts_) {
    if (vocab_.exclusive(atom, f)) out.push_back(f);
  }
  return out;
}

namespace {

void solve(const FactSet& facts, std::span<const Literal> rest, const Substitution& sigma,
           std::vector<Substitution>& out, bool first_only) {
  if (rest.empty()) {
    out.push_back(sigma);
    return;
  }
  const Literal& lit = rest.front();
  const Term goal = apply_substitution(sigma, lit.atom);
  if (lit.negated) {
    const bool any = std::any_of(facts.facts().begin(), facts.facts().end(),
                                 [&](const Term& f) { return unify(goal, f).has_value(); });
    if (!any) solve(facts, rest.subspan(1), sigma, out, first_only);
    return;
  }
  for (const auto& f : facts.facts()) {
    if (auto next = unify(goal, f, sigma)) {
      solve(facts, rest.subspan(1), *next, out, first_only);
      if (first_only && !out.empty()) return;
    }
  }
}

// Negated literals go last so they are tested once the positive ones have
// bound every variable they can.
std::vector<Literal> positives_first(std::span<const Literal> conjunction) {
  std::vector<Literal> out(conjunction.begin(), conjunction.end());
  std::stable_partition(out.begin(), out.end(), [](const Literal& l) { return !l.negated; });
  return out;
}

}  // namespace

std::vector<Substitution> query(const FactSet& facts, std::span<const Literal> conjunction,
                                const Substitution& start) {
  std::vector<Substitution> out;
  solve(facts, positives_first(conjunction), start, out, false);
  return out;
}

std::optional<Substitution> query_first(const FactSet& facts, std::span<const Literal> conjunction,
                                        const Substitution& start) {
  std::vector<Substitution> out;
  solve(facts, positives_first(conjunction), start, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

}  // namespace xbdi
