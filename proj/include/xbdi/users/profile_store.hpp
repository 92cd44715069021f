#pragma once

// Per-user expected-successor models persisted in one JSON document:
//
//   {
//     "format": "xbdi-profiles/1",
//     "profiles": {
//       "alice": {
//         "created": 1760000000, "updated": 1760000000, "init": "empty",
//         "successors": {"navigateTo(dishwasher)": ["openDoor(dishwasher)"]},
//         "first_actions": {"storeCup(cup1)": ["navigateTo(dishwasher)"]}
//       }
//     }
//   }
//
// Single writer per store file; concurrent access is not supported.

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "xbdi/explain/expectations.hpp"

namespace xbdi {

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UserProfile {
  std::string user_id;
  ExpectedSuccessorModel model;
  std::int64_t created = 0;  // seconds since the epoch
  std::int64_t updated = 0;
  std::string init_strategy = "empty";

  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

std::int64_t unix_now();

/// All profiles in the store; an absent file is an empty store. Throws
/// StoreError for unreadable or malformed content.
std::map<std::string, UserProfile> load_store(const std::filesystem::path& store);

/// The stored profile, or a fresh one (empty model, "empty" strategy,
/// timestamps = `now`) when the user or the file does not exist.
UserProfile load_profile(const std::filesystem::path& store, const std::string& user_id,
                         std::int64_t now = unix_now());

/// Inserts or replaces the user's profile, keeping the others. Writes a
/// temporary file then renames it over the store. Throws StoreError.
void save_profile(const std::filesystem::path& store, const UserProfile& profile);

/// Serialized document for a set of profiles (stable key order).
std::string dump_store(const std::map<std::string, UserProfile>& profiles);

}  // namespace xbdi
