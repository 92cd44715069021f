#include "xbdi/lang/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace xbdi {

namespace {

std::string format_error(const std::string& message, int line, int column,
                         const std::set<std::string>& expected) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      if (!first) os << ", ";
      first = false;
      os << "'" << e << "'";
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column, std::set<std::string> expected)
    : std::runtime_error(format_error(message, line, column, expected)),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Var, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      const int l = line, cl = col;
      auto end = src.find("*/", i + 2);
      if (end == std::string_view::npos) throw ParseError("unterminated block comment", l, cl);
      advance(end + 2 - i);
      continue;
    }
    const int l = line, cl = col;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string text(src.substr(i, j - i));
      const bool var = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      out.push_back({var ? Tok::Var : Tok::Ident, std::move(text), l, cl});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 2) == "<-") {
      out.push_back({Tok::Punct, "<-", l, cl});
      advance(2);
      continue;
    }
    static constexpr std::string_view kPunct = "+-!:&.;,(){}@";
    if (kPunct.find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
  }
  out.push_back({Tok::End, "<end of input>", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  PlanLibrary library() {
    PlanLibrary lib;
    while (!at_end()) {
      if (peek().kind == Tok::Ident && peek().text == "action") {
        const Token start = peek();
        ActionSchema schema = action();
        const Signature sig = Signature::of(schema.head);
        if (lib.actions.count(sig) != 0) {
          throw ParseError("duplicate action schema " + sig.to_string(), start.line, start.column);
        }
        lib.actions.emplace(sig, std::move(schema));
      } else {
        lib.plans.push_back(plan());
      }
    }
    return lib;
  }

  Term single_term() {
    Term t = term();
    expect_end();
    return t;
  }

  Literal single_literal() {
    Literal l = literal();
    expect_end();
    return l;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_keyword(std::string_view kw) {
    if (peek().kind == Tok::Ident && peek().text == kw) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    throw ParseError("unexpected '" + t.text + "'", t.line, t.column, std::move(expected));
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail({std::string(punct)});
  }

  void expect_end() {
    if (!at_end()) fail({"<end of input>"});
  }

  std::string identifier(const char* what) {
    if (peek().kind != Tok::Ident) fail({what});
    return next().text;
  }

  Term term() {
    if (peek().kind == Tok::Var) return Term::variable(next().text);
    if (peek().kind != Tok::Ident) fail({"identifier", "variable"});
    std::string functor = next().text;
    if (peek().kind != Tok::Punct || peek().text != "(") return Term::atom(std::move(functor));
    const Token open = next();
    std::vector<Term> args;
    args.push_back(term());
    while (!accept(")")) {
      if (!accept(",")) {
        // Report the unclosed parenthesis rather than the token after it.
        throw ParseError("unclosed '(' in arguments of " + functor + " (found '" + peek().text + "')",
                         open.line, open.column, {",", ")"});
      }
      args.push_back(term());
    }
    return Term::atom(std::move(functor), std::move(args));
  }

  Term compound(const char* what) {
    if (peek().kind == Tok::Var) fail({what});
    return term();
  }

  Literal literal() {
    const bool negated = accept_keyword("not");
    return {compound("atom"), negated};
  }

  TriggerEvent trigger() {
    if (accept("+")) {
      if (accept("!")) return {TriggerKind::GoalAddition, compound("goal")};
      return {TriggerKind::BeliefAddition, compound("belief")};
    }
    if (accept("-")) {
      if (peek().kind == Tok::Punct && peek().text == "!") {
        const Token& t = peek();
        throw ParseError("goal-deletion triggers are not supported", t.line, t.column);
      }
      return {TriggerKind::BeliefRemoval, compound("belief")};
    }
    fail({"+", "-", "@", "action"});
  }

  Step step() {
    if (accept("!")) return SubGoalStep{compound("goal")};
    return ActionStep{compound("action")};
  }

  PlanTemplate plan() {
    const Token start = peek();
    PlanTemplate p;
    if (accept("@")) p.name = identifier("plan label");
    p.trigger = trigger();
    if (p.name.empty()) p.name = p.trigger.payload.name();
    if (accept(":")) {
      if (!accept_keyword("true")) {
        p.context.push_back(literal());
        while (accept("&")) p.context.push_back(literal());
      }
    }
    if (!accept("<-")) fail({"<-", "&", ":"});
    p.body.push_back(step());
    while (accept(";")) p.body.push_back(step());
    expect(".");
    check_plan_variables(p, start);
    return p;
  }

  static void check_plan_variables(const PlanTemplate& p, const Token& start) {
    std::vector<std::string> bound;
    p.trigger.payload.collect_variables(bound);
    for (const auto& l : p.context) {
      if (!l.negated) l.atom.collect_variables(bound);
    }
    std::vector<std::string> used;
    for (const auto& s : p.body) {
      if (const auto* a = std::get_if<ActionStep>(&s)) {
        a->action.collect_variables(used);
      } else {
        std::get<SubGoalStep>(s).goal.collect_variables(used);
      }
    }
    for (const auto& v : used) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
        throw ParseError("unbound variable " + v + " in body of plan " + p.name, start.line, start.column);
      }
    }
  }

  std::vector<Literal> literal_list() {
    std::vector<Literal> out;
    if (peek().kind == Tok::Punct && peek().text == ";") return out;
    out.push_back(literal());
    while (accept(",")) out.push_back(literal());
    return out;
  }

  ActionSchema action() {
    const Token start = next();  // 'action'
    ActionSchema a;
    a.head = compound("action head");
    expect("{");
    std::set<std::string> seen;
    while (!accept("}")) {
      const Token section = peek();
      if (section.kind != Tok::Ident || (section.text != "pre" && section.text != "add" && section.text != "del")) {
        fail({"pre", "add", "del", "}"});
      }
      ++pos_;
      if (!seen.insert(section.text).second) {
        throw ParseError("duplicate '" + section.text + "' section", section.line, section.column);
      }
      expect(":");
      auto lits = literal_list();
      expect(";");
      if (section.text == "pre") {
        a.preconditions = std::move(lits);
      } else {
        for (const auto& l : lits) {
          if (l.negated) throw ParseError("effects must be positive atoms", section.line, section.column);
        }
        (section.text == "add" ? a.add_effects : a.del_effects) = std::move(lits);
      }
    }
    check_action_variables(a, start);
    return a;
  }

  static void check_action_variables(const ActionSchema& a, const Token& start) {
    std::vector<std::string> bound;
    a.head.collect_variables(bound);
    for (const auto& l : a.preconditions) {
      if (!l.negated) l.atom.collect_variables(bound);
    }
    std::vector<std::string> used;
    for (const auto& l : a.add_effects) l.atom.collect_variables(used);
    for (const auto& l : a.del_effects) l.atom.collect_variables(used);
    for (const auto& v : used) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
        throw ParseError("unbound variable " + v + " in effects of action " + a.head.to_string(), start.line,
                         start.column);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanLibrary parse_plan_library(std::string_view source) { return Parser(source).library(); }

Term parse_term(std::string_view source) { return Parser(source).single_term(); }

Literal parse_literal(std::string_view source) { return Parser(source).single_literal(); }

}  // namespace xbdi
