#pragma once

// Insertion-ordered set of ground atoms with closed-world querying. Shared by
// the agent's belief base and the simulated world.

#include <span>
#include <stdexcept>
#include <vector>

#include "xbdi/lang/syntax.hpp"

namespace xbdi {

class FactError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FactSet {
 public:
  FactSet() = default;
  explicit FactSet(Vocabulary vocabulary) : vocab_(std::move(vocabulary)) {}

  struct InsertResult {
    bool inserted = false;
    std::vector<Term> displaced;  // old values of a functional state variable
  };

  /// Inserts a ground atom. For functional predicates the previous value of
  /// the same state variable is removed first. Throws FactError if not ground.
  InsertResult insert(const Term& atom);
  bool erase(const Term& atom);
  bool contains(const Term& atom) const;

  /// Believed atoms that are exclusive alternatives of `atom`.
  std::vector<Term> complements_of(const Term& atom) const;

  std::span<const Term> facts() const { return facts_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }
  const Vocabulary& vocabulary() const { return vocab_; }

  /// Same facts in the same order.
  friend bool operator==(const FactSet& a, const FactSet& b) { return a.facts_ == b.facts_; }

 private:
  Vocabulary vocab_;
  std::vector<Term> facts_;
};

/// Every substitution extending `start` under which each positive literal is
/// a member and each negated literal has no unifiable member. Answers follow
/// fact insertion order, positive literal by positive literal; negated
/// literals are tested after all positive ones.
std::vector<Substitution> query(const FactSet& facts, std::span<const Literal> conjunction,
                                const Substitution& start = {});

/// First answer only.
std::optional<Substitution> query_first(const FactSet& facts, std::span<const Literal> conjunction,
                                        const Substitution& start = {});

}  // namespace xbdi
