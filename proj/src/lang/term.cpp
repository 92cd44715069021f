#include "xbdi/lang/term.hpp"

#include <algorithm>
#include <sstream>

namespace xbdi {

Term Term::variable(std::string name) { return Term(true, std::move(name), {}); }

Term Term::atom(std::string functor, std::vector<Term> args) {
  return Term(false, std::move(functor), std::move(args));
}

bool Term::is_ground() const {
  if (variable_) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (variable_) {
    if (std::find(out.begin(), out.end(), name_) == out.end()) out.push_back(name_);
    return;
  }
  for (const auto& a : args_) a.collect_variables(out);
}

bool Term::contains_variable(const std::string& var) const {
  if (variable_) return name_ == var;
  return std::any_of(args_.begin(), args_.end(),
                     [&](const Term& a) { return a.contains_variable(var); });
}

std::string Term::to_string() const {
  if (args_.empty()) return name_;
  std::string out = name_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i > 0) out += ", ";
    out += args_[i].to_string();
  }
  out += ")";
  return out;
}

bool operator==(const Term& a, const Term& b) {
  return a.variable_ == b.variable_ && a.name_ == b.name_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  // Variables sort before compounds; compounds by functor, arity, then args.
  if (a.variable_ != b.variable_) return a.variable_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.name_.compare(b.name_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Signature::to_string() const { return functor + "/" + std::to_string(arity); }

std::string Literal::to_string() const { return (negated ? "not " : "") + atom.to_string(); }

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return a.negated <=> b.negated;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Substitution Substitution::normalized() const {
  Substitution out;
  for (const auto& [var, value] : bindings_) out.bindings_.emplace(var, apply_substitution(*this, value));
  return out;
}

std::string Substitution::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [var, value] : bindings_) {
    if (!first) os << ", ";
    first = false;
    os << var << " -> " << value.to_string();
  }
  os << "}";
  return os.str();
}

Term apply_substitution(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_variable()) {
    const Term* bound = s.lookup(t.name());
    // Bindings are acyclic (occurs-check), so chasing chains terminates.
    return bound ? apply_substitution(s, *bound) : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(apply_substitution(s, a));
  return Term::atom(t.name(), std::move(args));
}

Literal apply_substitution(const Substitution& s, const Literal& l) {
  return {apply_substitution(s, l.atom), l.negated};
}

namespace {

const Term& walk(const Term& t, const Substitution& s) {
  const Term* cur = &t;
  while (cur->is_variable()) {
    const Term* next = s.lookup(cur->name());
    if (!next) break;
    cur = next;
  }
  return *cur;
}

bool occurs(const std::string& var, const Term& t, const Substitution& s) {
  const Term& w = walk(t, s);
  if (w.is_variable()) return w.name() == var;
  return std::any_of(w.args().begin(), w.args().end(),
                     [&](const Term& a) { return occurs(var, a, s); });
}

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  const Term& x = walk(a, s);
  const Term& y = walk(b, s);
  if (x.is_variable() && y.is_variable() && x.name() == y.name()) return true;
  if (x.is_variable()) {
    if (occurs(x.name(), y, s)) return false;
    s.bind(x.name(), y);
    return true;
  }
  if (y.is_variable()) {
    if (occurs(y.name(), x, s)) return false;
    s.bind(y.name(), x);
    return true;
  }
  if (x.name() != y.name() || x.arity() != y.arity()) return false;
  // x and y may point into map nodes; std::map never relocates them.
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (!unify_into(x.args()[i], y.args()[i], s)) return false;
  }
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& start) {
  Substitution s = start;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s.normalized();
}

Term rename_variables(const Term& t, const std::string& suffix) {
  if (t.is_variable()) return Term::variable(t.name() + "#" + suffix);
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(rename_variables(a, suffix));
  return Term::atom(t.name(), std::move(args));
}

}  // namespace xbdi
