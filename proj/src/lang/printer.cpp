#include "xbdi/lang/printer.hpp"

#include <sstream>

namespace xbdi {

namespace {

std::string join(const std::vector<Literal>& lits, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i > 0) out += sep;
    out += lits[i].to_string();
  }
  return out;
}

}  // namespace

std::string to_string(const PlanTemplate& plan) {
  std::ostringstream os;
  os << "@" << plan.name << "\n" << plan.trigger.to_string();
  if (!plan.context.empty()) os << " : " << join(plan.context, " & ");
  os << " <-";
  for (std::size_t i = 0; i < plan.body.size(); ++i) {
    os << "\n    " << to_string(plan.body[i]) << (i + 1 == plan.body.size() ? "." : ";");
  }
  os << "\n";
  return os.str();
}

std::string to_string(const ActionSchema& schema) {
  std::ostringstream os;
  os << "action " << schema.head.to_string() << " {\n";
  if (!schema.preconditions.empty()) os << "    pre: " << join(schema.preconditions, ", ") << ";\n";
  if (!schema.add_effects.empty()) os << "    add: " << join(schema.add_effects, ", ") << ";\n";
  if (!schema.del_effects.empty()) os << "    del: " << join(schema.del_effects, ", ") << ";\n";
  os << "}\n";
  return os.str();
}

std::string pretty_print(const PlanLibrary& lib) {
  std::string out;
  for (const auto& [sig, schema] : lib.actions) {
    if (!out.empty()) out += "\n";
    out += to_string(schema);
  }
  for (const auto& plan : lib.plans) {
    if (!out.empty()) out += "\n";
    out += to_string(plan);
  }
  return out;
}

}  // namespace xbdi
