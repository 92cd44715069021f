#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "xbdi/explain/explanation.hpp"
#include "xbdi/explain/lexicon.hpp"

namespace xbdi {

/// EA: key action only. EG: root goal only. EC: key contextual factors
/// (the default). ECR: EC plus the action that follows. EB: EC plus every
/// belief. EI: the whole intention chain.
enum class ExplanationStyle { EA, EG, EC, ECR, EB, EI };

inline constexpr std::array<ExplanationStyle, 6> kAllStyles = {
    ExplanationStyle::EA, ExplanationStyle::EG, ExplanationStyle::EC,
    ExplanationStyle::ECR, ExplanationStyle::EB, ExplanationStyle::EI};

std::string to_string(ExplanationStyle s);
/// Case-insensitive.
std::optional<ExplanationStyle> parse_style(std::string_view s);

std::string render(const Explanation& e, ExplanationStyle style, const Lexicon& lexicon);

}  // namespace xbdi
