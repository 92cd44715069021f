#pragma once

// Reasoning-cycle trace records and their line-delimited JSON encoding.
//
// One record per line, keys in this order (absent optionals are omitted):
//   {"step":N,"kind":K,"payload":P,"intention":I,"parent":J,"plan":NAME,
//    "style":S,"text":T,"explanation":{...}}
// kind is one of adopt, action, subgoal, explain, fail, complete, done.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xbdi/explain/explanation.hpp"

namespace xbdi {

enum class RecordKind { Adopt, Action, SubGoal, Explain, Fail, Complete, Done };

std::string to_string(RecordKind k);
std::optional<RecordKind> parse_record_kind(std::string_view s);

struct TraceRecord {
  std::uint64_t step_no = 0;
  RecordKind kind = RecordKind::Done;
  std::string payload;
  std::optional<IntentionId> intention;
  std::optional<IntentionId> parent;
  std::optional<std::string> plan;
  std::optional<std::string> style;
  std::optional<std::string> text;
  std::optional<Explanation> explanation;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single line, no trailing newline.
std::string serialize(const TraceRecord& r);
/// Each record followed by '\n'.
std::string serialize_trace(std::span<const TraceRecord> records);

TraceRecord parse_record(std::string_view line);
/// Blank lines are skipped. Errors name the 1-based line.
std::vector<TraceRecord> parse_trace(std::istream& in);
std::vector<TraceRecord> load_trace(const std::string& path);

/// Actions executed under one root intention, in order.
struct ActionEpisode {
  std::optional<Term> order;  // goal of a root goal-addition intention
  std::vector<Term> actions;
};

/// Splits a trace at root adoptions.
std::vector<ActionEpisode> episodes(std::span<const TraceRecord> records);

}  // namespace xbdi
