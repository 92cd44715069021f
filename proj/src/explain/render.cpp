#include "xbdi/explain/render.hpp"

#include <algorithm>
#include <cctype>

namespace xbdi {

std::string to_string(ExplanationStyle s) {
  switch (s) {
    case ExplanationStyle::EA: return "EA";
    case ExplanationStyle::EG: return "EG";
    case ExplanationStyle::EC: return "EC";
    case ExplanationStyle::ECR: return "ECR";
    case ExplanationStyle::EB: return "EB";
    case ExplanationStyle::EI: return "EI";
  }
  return "EC";
}

std::optional<ExplanationStyle> parse_style(std::string_view s) {
  std::string upper(s);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto style : kAllStyles) {
    if (to_string(style) == upper) return style;
  }
  return std::nullopt;
}

namespace {

std::string contextual(const Explanation& e, const Lexicon& lex) {
  Mentions mentions;
  std::string out = "I am " + lex.progressive(e.action, mentions);
  if (e.suffix.size() > 1) out += " to " + lex.infinitive(e.key_action(), mentions);
  if (!e.context.empty()) {
    out += ", because: ";
    for (std::size_t i = 0; i < e.context.entries.size(); ++i) {
      if (i > 0) out += "; ";
      out += lex.fact(e.context.entries[i].literal, mentions);
    }
  }
  return out + ".";
}

}  // namespace

std::string render(const Explanation& e, ExplanationStyle style, const Lexicon& lex) {
  switch (style) {
    case ExplanationStyle::EA: {
      Mentions mentions;
      return "I will " + lex.infinitive(e.key_action(), mentions) + ".";
    }
    case ExplanationStyle::EG:
      return "I am working on: " + e.root_goal.to_string() + ".";
    case ExplanationStyle::EC:
      return contextual(e, lex);
    case ExplanationStyle::ECR: {
      std::string out = contextual(e, lex);
      if (e.follow_up) {
        Mentions mentions;
        out += " After that I will " + lex.infinitive(*e.follow_up, mentions) + ".";
      } else {
        out += " No further action follows in this plan.";
      }
      return out;
    }
    case ExplanationStyle::EB: {
      std::string out = contextual(e, lex) + " My current beliefs are: ";
      for (std::size_t i = 0; i < e.beliefs.size(); ++i) {
        if (i > 0) out += ", ";
        out += e.beliefs[i].to_string();
      }
      return out + (e.beliefs.empty() ? "none." : ".");
    }
    case ExplanationStyle::EI: {
      std::string out = "My current intentions are: ";
      for (std::size_t i = 0; i < e.chain.size(); ++i) {
        const auto& link = e.chain[i];
        if (i > 0) out += " > ";
        out += link.goal.to_string() + " [plan " + link.plan + ", cursor " + std::to_string(link.cursor) + "/" +
               std::to_string(link.length) + "]";
      }
      return out + (e.chain.empty() ? "none." : ".");
    }
  }
  return contextual(e, lex);
}

}  // namespace xbdi
