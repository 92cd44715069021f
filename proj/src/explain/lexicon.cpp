#include "xbdi/explain/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "xbdi/lang/parser.hpp"

namespace xbdi {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string section;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw LexiconError("lexicon line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section != "actions" && section != "facts" && section != "negated" && section != "entities") {
        fail("unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'pattern = phrase'");
    if (section.empty()) fail("entry outside of a section");
    Term key;
    try {
      key = parse_term(trim(line.substr(0, eq)));
    } catch (const ParseError& e) {
      fail(std::string("bad pattern: ") + e.what());
    }
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail("empty phrase");
    if (section == "entities") {
      if (!key.is_ground()) fail("entity keys must be ground");
      lex.entities_.emplace_back(std::move(key), value);
    } else if (section == "actions") {
      const auto bar = value.find('|');
      if (bar == std::string::npos) fail("action entries need 'progressive | infinitive'");
      lex.actions_.push_back({std::move(key), trim(value.substr(0, bar)), trim(value.substr(bar + 1))});
    } else {
      (section == "facts" ? lex.facts_ : lex.negated_).push_back({std::move(key), value, {}});
    }
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Lexicon::Entry* Lexicon::lookup(const std::vector<Entry>& entries, const Term& t, Substitution& sigma) const {
  for (const auto& e : entries) {
    if (auto s = unify(e.pattern, t)) {
      sigma = std::move(*s);
      return &e;
    }
  }
  return nullptr;
}

std::string Lexicon::entity(const Term& value) const {
  for (const auto& [k, phrase] : entities_) {
    if (k == value) return phrase;
  }
  return value.to_string();
}

std::string Lexicon::expand(const std::string& tmpl, const Substitution& sigma, Mentions& mentions) const {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    const auto close = tmpl.find('}', i);
    if (close == std::string::npos) {
      out += tmpl.substr(i);
      break;
    }
    std::string slot = tmpl.substr(i + 1, close - i - 1);
    const bool possessive = slot.size() > 2 && slot.compare(slot.size() - 2, 2, "'s") == 0;
    if (possessive) slot.resize(slot.size() - 2);
    const Term* bound = sigma.lookup(slot);
    const Term value = bound ? apply_substitution(sigma, *bound) : Term::variable(slot);
    if (possessive) {
      out += mentions.count(value) ? "its" : "the " + entity(value) + "'s";
    } else {
      out += entity(value);
    }
    mentions.insert(value);
    i = close + 1;
  }
  return out;
}

std::string Lexicon::progressive(const Term& action, Mentions& mentions) const {
  Substitution sigma;
  if (const Entry* e = lookup(actions_, action, sigma)) return expand(e->text, sigma, mentions);
  return "executing " + action.to_string();
}

std::string Lexicon::infinitive(const Term& action, Mentions& mentions) const {
  Substitution sigma;
  if (const Entry* e = lookup(actions_, action, sigma)) return expand(e->alt, sigma, mentions);
  return "execute " + action.to_string();
}

std::string Lexicon::fact(const Literal& literal, Mentions& mentions) const {
  Substitution sigma;
  if (const Entry* e = lookup(literal.negated ? negated_ : facts_, literal.atom, sigma)) {
    return expand(e->text, sigma, mentions);
  }
  return literal.to_string();
}

}  // namespace xbdi
