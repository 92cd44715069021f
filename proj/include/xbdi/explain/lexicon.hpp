#pragma once

// Predicate-to-phrase lexicon used to verbalize explanations.
//
// File format (`#` starts a comment line):
//
//   [actions]
//   navigateTo(L) = moving to the {L} | move to the {L}
//   [facts]
//   holding(none) = I am holding nothing
//   holding(X) = I am holding {X}
//   [negated]
//   dishwasherDoor(S) = the dishwasher door is not {S}
//   [entities]
//   none = nothing
//
// Keys are term patterns; the first entry in file order whose pattern
// unifies with the term wins. Action entries give a progressive and an
// infinitive phrase. `{V}` expands to the entity phrase bound to variable V;
// `{V's}` expands to "its" when that value was already mentioned in the same
// sentence, else to "the <phrase>'s".

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xbdi/lang/term.hpp"

namespace xbdi {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values already verbalized in the sentence being built.
using Mentions = std::set<Term>;

class Lexicon {
 public:
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::filesystem::path& path);

  /// "moving to the dishwasher"; falls back to "executing <term>".
  std::string progressive(const Term& action, Mentions& mentions) const;
  /// "move to the dishwasher"; falls back to "execute <term>".
  std::string infinitive(const Term& action, Mentions& mentions) const;
  /// Verbalizes a literal; falls back to the raw literal text.
  std::string fact(const Literal& literal, Mentions& mentions) const;
  std::string entity(const Term& value) const;

  bool empty() const { return actions_.empty() && facts_.empty() && negated_.empty() && entities_.empty(); }

 private:
  struct Entry {
    Term pattern;
    std::string text;
    std::string alt;  // infinitive for actions
  };

  const Entry* lookup(const std::vector<Entry>& entries, const Term& t, Substitution& sigma) const;
  std::string expand(const std::string& tmpl, const Substitution& sigma, Mentions& mentions) const;

  std::vector<Entry> actions_;
  std::vector<Entry> facts_;
  std::vector<Entry> negated_;
  std::vector<std::pair<Term, std::string>> entities_;
};

}  // namespace xbdi
