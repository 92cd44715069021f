#include "xbdi/users/profile_store.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "xbdi/lang/parser.hpp"

namespace xbdi {

using Json = nlohmann::json;

namespace {

constexpr const char* kFormat = "xbdi-profiles/1";

Json map_to_json(const ExpectedSuccessorModel::SuccessorMap& map) {
  Json j = Json::object();
  for (const auto& [key, values] : map) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    j[key.to_string()] = std::move(arr);
  }
  return j;
}

template <typename Learn>
void map_from_json(const Json& j, Learn learn) {
  for (const auto& [key, values] : j.items()) {
    const Term k = parse_term(key);
    for (const auto& v : values) learn(k, parse_term(v.template get<std::string>()));
  }
}

Json profile_to_json(const UserProfile& p) {
  Json j;
  j["created"] = p.created;
  j["updated"] = p.updated;
  j["init"] = p.init_strategy;
  j["successors"] = map_to_json(p.model.successors());
  j["first_actions"] = map_to_json(p.model.openers());
  return j;
}

UserProfile profile_from_json(const std::string& user, const Json& j) {
  UserProfile p;
  p.user_id = user;
  p.model.set_user_id(user);
  p.created = j.at("created").get<std::int64_t>();
  p.updated = j.at("updated").get<std::int64_t>();
  p.init_strategy = j.at("init").get<std::string>();
  map_from_json(j.at("successors"), [&](const Term& a, const Term& b) { p.model.learn(a, b); });
  map_from_json(j.at("first_actions"), [&](const Term& a, const Term& b) { p.model.learn_first(a, b); });
  return p;
}

}  // namespace

std::int64_t unix_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::map<std::string, UserProfile> load_store(const std::filesystem::path& store) {
  std::map<std::string, UserProfile> out;
  std::error_code ec;
  if (!std::filesystem::exists(store, ec)) return out;
  std::ifstream in(store);
  if (!in) throw StoreError("cannot read profile store " + store.string());
  try {
    const Json doc = Json::parse(in);
    if (doc.at("format").get<std::string>() != kFormat) {
      throw StoreError("profile store " + store.string() + " has unsupported format");
    }
    for (const auto& [user, body] : doc.at("profiles").items()) out.emplace(user, profile_from_json(user, body));
  } catch (const Json::exception& e) {
    throw StoreError("corrupt profile store " + store.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw StoreError("corrupt term in profile store " + store.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw StoreError("corrupt profile store " + store.string() + ": " + e.what());
  }
  return out;
}

UserProfile load_profile(const std::filesystem::path& store, const std::string& user_id, std::int64_t now) {
  auto all = load_store(store);
  if (auto it = all.find(user_id); it != all.end()) return it->second;
  UserProfile p;
  p.user_id = user_id;
  p.model.set_user_id(user_id);
  p.created = now;
  p.updated = now;
  return p;
}

std::string dump_store(const std::map<std::string, UserProfile>& profiles) {
  Json doc;
  doc["format"] = kFormat;
  doc["profiles"] = Json::object();
  for (const auto& [user, p] : profiles) doc["profiles"][user] = profile_to_json(p);
  return doc.dump(2) + "\n";
}

void save_profile(const std::filesystem::path& store, const UserProfile& profile) {
  if (profile.user_id.empty()) throw StoreError("profile has no user id");
  auto all = load_store(store);
  all[profile.user_id] = profile;

  const std::string text = dump_store(all);
  auto tmp = store;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw StoreError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, store, ec);
  if (ec) throw StoreError("cannot replace " + store.string() + ": " + ec.message());
}

}  // namespace xbdi
