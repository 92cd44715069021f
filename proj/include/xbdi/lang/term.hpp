#pragma once

// First-order terms, literals, substitutions and unification.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xbdi {

/// A variable or a compound term `functor(args...)`. Constants are
/// compounds of arity zero. Variables start with an uppercase letter or `_`.
class Term {
 public:
  Term() = default;

  static Term variable(std::string name);
  static Term atom(std::string functor, std::vector<Term> args = {});

  bool is_variable() const { return variable_; }
  /// Functor for compounds, variable name for variables.
  const std::string& name() const { return name_; }
  std::span<const Term> args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool is_ground() const;
  /// Appends every variable name (depth-first, first occurrence order).
  void collect_variables(std::vector<std::string>& out) const;
  bool contains_variable(const std::string& var) const;

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(bool variable, std::string name, std::vector<Term> args)
      : variable_(variable), name_(std::move(name)), args_(std::move(args)) {}

  bool variable_ = false;
  std::string name_;
  std::vector<Term> args_;
};

/// `functor/arity` key used for action schemas and predicate metadata.
struct Signature {
  std::string functor;
  std::size_t arity = 0;

  static Signature of(const Term& t) { return {t.name(), t.arity()}; }
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Atom with optional classical negation.
struct Literal {
  Term atom;
  bool negated = false;

  Literal complement() const { return {atom, !negated}; }
  bool is_ground() const { return atom.is_ground(); }
  std::string to_string() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

/// Variable bindings. Kept normalized by `unify`: no bound variable occurs
/// in any binding's right-hand side.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> init) : bindings_(init) {}

  const Term* lookup(const std::string& var) const;
  void bind(const std::string& var, Term value) { bindings_[var] = std::move(value); }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  /// Resolves binding chains so that applying the result once reaches the
  /// fixpoint.
  Substitution normalized() const;

  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Term> bindings_;
};

/// Replaces bound variables until no bound variable remains.
Term apply_substitution(const Substitution& s, const Term& t);
Literal apply_substitution(const Substitution& s, const Literal& l);

/// Most general unifier of `a` and `b` extending `start`, with occurs-check.
std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& start = {});

/// Appends `#suffix` to every variable so plan instances never share names.
Term rename_variables(const Term& t, const std::string& suffix);

}  // namespace xbdi
