#include "xbdi/core/trace.hpp"

#include <fstream>
#include <istream>

#include "json.hpp"
#include "xbdi/lang/parser.hpp"

namespace xbdi {

using Json = nlohmann::ordered_json;

std::string to_string(RecordKind k) {
  switch (k) {
    case RecordKind::Adopt: return "adopt";
    case RecordKind::Action: return "action";
    case RecordKind::SubGoal: return "subgoal";
    case RecordKind::Explain: return "explain";
    case RecordKind::Fail: return "fail";
    case RecordKind::Complete: return "complete";
    case RecordKind::Done: return "done";
  }
  return "done";
}

std::optional<RecordKind> parse_record_kind(std::string_view s) {
  for (auto k : {RecordKind::Adopt, RecordKind::Action, RecordKind::SubGoal, RecordKind::Explain, RecordKind::Fail,
                 RecordKind::Complete, RecordKind::Done}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

Json terms_to_json(const std::vector<Term>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(t.to_string());
  return arr;
}

std::vector<Term> terms_from_json(const Json& j) {
  std::vector<Term> out;
  for (const auto& item : j) out.push_back(parse_term(item.get<std::string>()));
  return out;
}

Json explanation_to_json(const Explanation& e) {
  Json j;
  j["action"] = e.action.to_string();
  j["index"] = e.body_index;
  Json ctx = Json::array();
  for (const auto& c : e.context.entries) {
    Json entry;
    entry["literal"] = c.literal.to_string();
    entry["from"] = c.source;
    ctx.push_back(std::move(entry));
  }
  j["context"] = std::move(ctx);
  j["suffix"] = terms_to_json(e.suffix);
  j["key_index"] = e.key_index;
  j["intention"] = e.intention;
  if (e.predecessor) j["predecessor"] = e.predecessor->to_string();
  j["root_goal"] = e.root_goal.to_string();
  j["beliefs"] = terms_to_json(e.beliefs);
  Json chain = Json::array();
  for (const auto& s : e.chain) {
    Json link;
    link["id"] = s.id;
    link["plan"] = s.plan;
    link["goal"] = s.goal.to_string();
    link["cursor"] = s.cursor;
    link["length"] = s.length;
    chain.push_back(std::move(link));
  }
  j["chain"] = std::move(chain);
  if (e.follow_up) j["follow_up"] = e.follow_up->to_string();
  return j;
}

Explanation explanation_from_json(const Json& j) {
  Explanation e;
  e.action = parse_term(j.at("action").get<std::string>());
  e.body_index = j.at("index").get<std::size_t>();
  for (const auto& c : j.at("context")) {
    e.context.entries.push_back({parse_literal(c.at("literal").get<std::string>()), c.at("from").get<IntentionId>()});
  }
  e.suffix = terms_from_json(j.at("suffix"));
  if (e.suffix.empty()) throw TraceError("explanation with empty action suffix");
  e.key_index = j.at("key_index").get<std::size_t>();
  e.intention = j.at("intention").get<IntentionId>();
  if (j.contains("predecessor")) e.predecessor = parse_term(j.at("predecessor").get<std::string>());
  e.root_goal = parse_term(j.at("root_goal").get<std::string>());
  e.beliefs = terms_from_json(j.at("beliefs"));
  for (const auto& link : j.at("chain")) {
    e.chain.push_back({link.at("id").get<IntentionId>(), link.at("plan").get<std::string>(),
                       parse_term(link.at("goal").get<std::string>()), link.at("cursor").get<std::size_t>(),
                       link.at("length").get<std::size_t>()});
  }
  if (j.contains("follow_up")) e.follow_up = parse_term(j.at("follow_up").get<std::string>());
  return e;
}

}  // namespace

std::string serialize(const TraceRecord& r) {
  Json j;
  j["step"] = r.step_no;
  j["kind"] = to_string(r.kind);
  j["payload"] = r.payload;
  if (r.intention) j["intention"] = *r.intention;
  if (r.parent) j["parent"] = *r.parent;
  if (r.plan) j["plan"] = *r.plan;
  if (r.style) j["style"] = *r.style;
  if (r.text) j["text"] = *r.text;
  if (r.explanation) j["explanation"] = explanation_to_json(*r.explanation);
  return j.dump();
}

std::string serialize_trace(std::span<const TraceRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += serialize(r);
    out += '\n';
  }
  return out;
}

TraceRecord parse_record(std::string_view line) {
  try {
    const Json j = Json::parse(line);
    TraceRecord r;
    r.step_no = j.at("step").get<std::uint64_t>();
    const auto kind = parse_record_kind(j.at("kind").get<std::string>());
    if (!kind) throw TraceError("unknown record kind " + j.at("kind").get<std::string>());
    r.kind = *kind;
    r.payload = j.at("payload").get<std::string>();
    if (j.contains("intention")) r.intention = j.at("intention").get<IntentionId>();
    if (j.contains("parent")) r.parent = j.at("parent").get<IntentionId>();
    if (j.contains("plan")) r.plan = j.at("plan").get<std::string>();
    if (j.contains("style")) r.style = j.at("style").get<std::string>();
    if (j.contains("text")) r.text = j.at("text").get<std::string>();
    if (j.contains("explanation")) r.explanation = explanation_from_json(j.at("explanation"));
    return r;
  } catch (const Json::exception& e) {
    throw TraceError(std::string("malformed trace record: ") + e.what());
  } catch (const ParseError& e) {
    throw TraceError(std::string("malformed term in trace record: ") + e.what());
  }
}

std::vector<TraceRecord> parse_trace(std::istream& in) {
  std::vector<TraceRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const TraceError& e) {
      throw TraceError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<TraceRecord> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceError("cannot open trace " + path);
  return parse_trace(in);
}

std::vector<ActionEpisode> episodes(std::span<const TraceRecord> records) {
  std::vector<ActionEpisode> out;
  for (const auto& r : records) {
    if (r.kind == RecordKind::Adopt && !r.parent) {
      ActionEpisode ep;
      if (r.payload.rfind("+!", 0) == 0) ep.order = parse_term(r.payload.substr(2));
      out.push_back(std::move(ep));
    } else if (r.kind == RecordKind::Action && !out.empty()) {
      out.back().actions.push_back(parse_term(r.payload));
    }
  }
  return out;
}

}  // namespace xbdi
