// xbdi: run kitchen scenarios, talk to the robot, re-render explanations.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "xbdi/app/commands.hpp"

namespace {

void add_run_flags(CLI::App& cmd, xbdi::RunOptions& opts, std::string& style, std::string& init,
                   std::string& store, std::string& out, std::string& scenario) {
  cmd.add_option("scenario", scenario, "scenario name or .scn path")->required();
  cmd.add_option("--user", opts.user, "user profile id")->capture_default_str();
  cmd.add_option("--style", style, "explanation style: EA EG EC ECR EB EI")->capture_default_str();
  cmd.add_option("--init", init, "expectation seeding for new profiles")
      ->check(CLI::IsMember({"empty", "cooccur", "tasklinked"}));
  cmd.add_option("--store", store, "profile store (default <root>/profiles.json)");
  cmd.add_option("--budget", opts.budget, "step budget")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--out", out, "write the trace here instead of stdout");
  cmd.add_option("--seed", opts.seed, "reserved; runs are deterministic");
  cmd.add_flag("--reset", opts.reset, "start the user's model afresh");
  cmd.add_flag("--functor-only", opts.functor_only, "match expected successors by functor/arity");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BDI kitchen robot with surprise-driven explanations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string root = ".";
  app.add_option("--root", root, "workspace directory all paths are relative to")->capture_default_str();

  xbdi::RunOptions opts;
  std::string style = "EC";
  std::string init;
  std::string store;
  std::string out;
  std::string scenario;

  auto* run = app.add_subcommand("run", "run a scenario to completion and print its trace");
  add_run_flags(*run, opts, style, init, store, out, scenario);
  auto* repl = app.add_subcommand("repl", "interactive session: give orders, step, ask why");
  add_run_flags(*repl, opts, style, init, store, out, scenario);

  auto* render = app.add_subcommand("render", "re-render the explanations in a trace");
  std::string trace;
  std::string render_style;
  std::string lexicon;
  render->add_option("trace", trace, "trace file")->required();
  render->add_option("--style", render_style, "one style only (default: all six)");
  render->add_option("--lexicon", lexicon, "phrase lexicon (default <root>/scenarios/kitchen.lex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return xbdi::kExitUsage;
  }

  opts.root = root;
  if (!store.empty()) opts.store = store;
  if (!out.empty()) opts.out = out;
  if (!init.empty()) opts.init = xbdi::parse_init_kind(init);

  if (render->parsed()) {
    std::optional<xbdi::ExplanationStyle> only;
    if (!render_style.empty()) {
      only = xbdi::parse_style(render_style);
      if (!only) {
        std::cerr << "unknown style '" << render_style << "'\n";
        return xbdi::kExitUsage;
      }
    }
    std::optional<std::filesystem::path> lex;
    if (!lexicon.empty()) {
      lex = opts.root / lexicon;
    } else if (std::filesystem::exists(opts.root / "scenarios" / "kitchen.lex")) {
      lex = opts.root / "scenarios" / "kitchen.lex";
    }
    return xbdi::cmd_render(opts.root / trace, only, lex, std::cout, std::cerr);
  }

  auto parsed_style = xbdi::parse_style(style);
  if (!parsed_style) {
    std::cerr << "unknown style '" << style << "'\n";
    return xbdi::kExitUsage;
  }
  opts.style = *parsed_style;

  if (run->parsed()) return xbdi::cmd_run(opts, scenario, std::cout, std::cerr);
  return xbdi::cmd_repl(opts, scenario, std::cin, std::cout, std::cerr);
}
