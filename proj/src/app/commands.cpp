#include "xbdi/app/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "xbdi/lang/parser.hpp"

namespace xbdi {

namespace {

AgentOptions agent_options(const RunOptions& opts) {
  AgentOptions a;
  a.style = opts.style;
  a.matching = opts.functor_only ? SuccessorMatching::FunctorOnly : SuccessorMatching::Exact;
  return a;
}

}  // namespace

std::filesystem::path resolve_scenario(const RunOptions& opts, const std::string& scenario) {
  const std::filesystem::path p(scenario);
  if (!p.has_parent_path() && !p.has_extension()) {
    auto bundled = opts.root / "scenarios" / (scenario + ".scn");
    if (std::filesystem::exists(bundled)) return bundled;
    return opts.root / (scenario + ".scn");
  }
  auto full = opts.root / p;
  if (!p.has_extension() && !std::filesystem::exists(full)) full += ".scn";
  return full;
}

std::filesystem::path store_path(const RunOptions& opts) {
  return opts.root / opts.store.value_or("profiles.json");
}

Session::Session(const RunOptions& opts, const std::string& scenario, bool post_orders)
    : opts_(opts), loaded_(load_scenario(resolve_scenario(opts, scenario), agent_options(opts), post_orders)) {
  const auto store = store_path(opts);
  const auto existing = load_store(store);
  auto it = existing.find(opts.user);
  if (it != existing.end() && !opts.reset) {
    profile_ = it->second;
  } else {
    const InitStrategy strategy = make_init_strategy(loaded_.spec, opts.init);
    profile_.user_id = opts.user;
    profile_.model = init_expectations(strategy, loaded_.agent.library(), opts.user);
    profile_.init_strategy = strategy_name(strategy);
    profile_.created = it != existing.end() ? it->second.created : unix_now();
    profile_.updated = profile_.created;
  }
  loaded_.agent.set_model(profile_.model);
}

bool Session::finish_if_idle() {
  Agent& a = loaded_.agent;
  if (!a.idle()) return false;
  if (!a.trace().empty() && a.trace().back().kind == RecordKind::Done) return false;
  a.finish();
  return true;
}

void Session::save() {
  profile_.model = loaded_.agent.model();
  profile_.updated = unix_now();
  save_profile(store_path(opts_), profile_);
}

void Session::write_trace(std::ostream& out) const { out << serialize_trace(loaded_.agent.trace()); }

bool Session::has_failures() const {
  for (const auto& r : loaded_.agent.trace()) {
    if (r.kind == RecordKind::Fail) return true;
  }
  return false;
}

namespace {

bool emit_trace(const Session& s, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  if (!opts.out) {
    s.write_trace(out);
    return true;
  }
  const auto path = opts.root / *opts.out;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write trace " << path.string() << "\n";
    return false;
  }
  s.write_trace(file);
  return static_cast<bool>(file);
}

}  // namespace

int cmd_run(const RunOptions& opts, const std::string& scenario, std::ostream& out, std::ostream& err) {
  std::optional<Session> session;
  try {
    session.emplace(opts, scenario, true);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  const RunResult result = session->run(opts.budget);
  if (result.outcome == RunOutcome::Done) session->finish_if_idle();
  try {
    session->save();
  } catch (const StoreError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  if (!emit_trace(*session, opts, out, err)) return kExitLoadError;
  if (session->has_failures()) return kExitIntentionFailure;
  if (result.outcome == RunOutcome::BudgetExhausted) {
    err << "step budget of " << opts.budget << " exhausted\n";
    return kExitBudgetExhausted;
  }
  return kExitOk;
}

namespace {

constexpr const char* kReplHelp =
    "commands:\n"
    "  order <goal>     queue a user order, e.g. order storeCup(cup1)\n"
    "  step             run one reasoning step\n"
    "  auto             run until idle or out of budget\n"
    "  beliefs          list current beliefs\n"
    "  intentions       show the active intention chain\n"
    "  why [style]      re-render the last explanation\n"
    "  style <name>     set the style: EA EG EC ECR EB EI\n"
    "  quit             save the profile and exit\n";

void print_record(const TraceRecord& r, std::ostream& out) {
  if (r.kind == RecordKind::Explain && r.text) {
    out << "robot: " << *r.text << "\n";
    return;
  }
  out << "[" << r.step_no << "] " << to_string(r.kind);
  if (!r.payload.empty()) out << " " << r.payload;
  out << "\n";
}

}  // namespace

int cmd_repl(const RunOptions& opts, const std::string& scenario, std::istream& in, std::ostream& out,
             std::ostream& err) {
  std::optional<Session> session;
  try {
    session.emplace(opts, scenario, false);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  Agent& agent = session->agent();
  out << "scenario " << session->spec().name << ", user " << opts.user << ". Type 'help' for commands.\n";

  std::string line;
  while (true) {
    out << "xbdi> " << std::flush;
    if (!std::getline(in, line)) break;
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    std::string rest;
    std::getline(words, rest);
    if (auto b = rest.find_first_not_of(' '); b != std::string::npos) rest = rest.substr(b);
    else rest.clear();

    if (cmd.empty()) continue;
    if (cmd == "quit" || cmd == "exit") break;
    if (cmd == "help") {
      out << kReplHelp;
    } else if (cmd == "order") {
      try {
        const Term goal = parse_term(rest);
        agent.post_order(goal);
        out << "queued +!" << goal.to_string() << "\n";
      } catch (const ParseError& e) {
        out << "bad goal: " << e.what() << "\n";
      }
    } else if (cmd == "step") {
      if (auto r = agent.step(session->world())) {
        print_record(*r, out);
      } else {
        session->finish_if_idle();
        out << "idle\n";
      }
    } else if (cmd == "auto") {
      const RunResult result = session->run(opts.budget);
      for (const auto& r : result.records) print_record(r, out);
      if (result.outcome == RunOutcome::Done) {
        session->finish_if_idle();
        out << "idle\n";
      } else {
        out << "step budget exhausted\n";
      }
    } else if (cmd == "beliefs") {
      for (const auto& b : agent.beliefs().facts()) out << "  " << b.to_string() << "\n";
    } else if (cmd == "intentions") {
      if (agent.intentions().empty()) out << "  (none)\n";
      for (const auto& n : agent.intentions().path()) {
        out << "  #" << n.id << " " << n.goal().to_string() << " [plan " << n.plan.name << ", cursor " << n.cursor
            << "/" << n.plan.body.size() << "]\n";
      }
    } else if (cmd == "why") {
      auto style = rest.empty() ? std::optional(agent.style()) : parse_style(rest);
      if (!style) {
        out << "unknown style '" << rest << "'\n";
      } else if (!agent.last_explanation()) {
        out << "nothing has been explained yet\n";
      } else {
        out << "robot: " << render(*agent.last_explanation(), *style, agent.lexicon()) << "\n";
      }
    } else if (cmd == "style") {
      if (auto style = parse_style(rest)) {
        agent.set_style(*style);
        out << "style " << to_string(*style) << "\n";
      } else {
        out << "unknown style '" << rest << "'\n";
      }
    } else {
      out << "unknown command '" << cmd << "'\n" << kReplHelp;
    }
  }
  try {
    session->save();
  } catch (const StoreError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  if (opts.out && !emit_trace(*session, opts, out, err)) return kExitLoadError;
  return kExitOk;
}

int cmd_render(const std::filesystem::path& trace, std::optional<ExplanationStyle> style,
               const std::optional<std::filesystem::path>& lexicon, std::ostream& out, std::ostream& err) {
  std::vector<TraceRecord> records;
  Lexicon lex;
  try {
    records = load_trace(trace.string());
    if (lexicon) lex = Lexicon::load(*lexicon);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  for (const auto& r : records) {
    if (r.kind != RecordKind::Explain || !r.explanation) continue;
    out << "#" << r.step_no << " " << r.explanation->action.to_string() << "\n";
    for (auto s : kAllStyles) {
      if (style && *style != s) continue;
      std::string name = to_string(s);
      name.resize(4, ' ');
      out << "  " << name << render(*r.explanation, s, lex) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace xbdi
