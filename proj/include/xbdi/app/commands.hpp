#pragma once

// Scripted runner, interactive REPL and trace re-rendering behind the `xbdi`
// command-line tool.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "xbdi/core/agent.hpp"
#include "xbdi/users/profile_store.hpp"
#include "xbdi/world/scenario.hpp"

namespace xbdi {

/// Process exit codes. Stable.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitLoadError = 2,
  kExitIntentionFailure = 3,
  kExitBudgetExhausted = 4,
};

struct RunOptions {
  std::filesystem::path root = ".";
  std::string user = "default";
  ExplanationStyle style = ExplanationStyle::EC;
  std::optional<InitKind> init;
  std::optional<std::filesystem::path> store;  // default: <root>/profiles.json
  std::size_t budget = 1000;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;  // accepted, no effect: runs are deterministic
  bool reset = false;                 // discard the stored model first
  bool functor_only = false;          // expected successors compare functors only
};

/// A name without directory or extension resolves to
/// <root>/scenarios/<name>.scn, falling back to <root>/<name>.scn; anything
/// else is taken relative to <root>, with ".scn" appended when the path
/// has no extension and does not exist as given.
std::filesystem::path resolve_scenario(const RunOptions& opts, const std::string& scenario);
std::filesystem::path store_path(const RunOptions& opts);

/// A loaded scenario bound to one user profile.
class Session {
 public:
  /// Throws ScenarioError, StoreError or std::invalid_argument.
  Session(const RunOptions& opts, const std::string& scenario, bool post_orders);

  Agent& agent() { return loaded_.agent; }
  WorldState& world() { return loaded_.world; }
  const ScenarioSpec& spec() const { return loaded_.spec; }
  const UserProfile& profile() const { return profile_; }

  RunResult run(std::size_t budget) { return loaded_.agent.run_to_completion(loaded_.world, budget); }
  /// Appends the terminal record once the agent has nothing left to do.
  bool finish_if_idle();
  /// Copies the agent's model into the profile and saves it.
  void save();
  void write_trace(std::ostream& out) const;
  bool has_failures() const;

 private:
  RunOptions opts_;
  LoadedScenario loaded_;
  UserProfile profile_;
};

int cmd_run(const RunOptions& opts, const std::string& scenario, std::ostream& out, std::ostream& err);
int cmd_repl(const RunOptions& opts, const std::string& scenario, std::istream& in, std::ostream& out,
             std::ostream& err);
/// Renders every explain record of a trace in one style, or all six.
int cmd_render(const std::filesystem::path& trace, std::optional<ExplanationStyle> style,
               const std::optional<std::filesystem::path>& lexicon, std::ostream& out, std::ostream& err);

}  // namespace xbdi
