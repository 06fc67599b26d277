#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ppq/engine.hpp"

namespace httplib {
class Server;
}

namespace ppq {

struct ServiceOptions {
  using Clock = std::chrono::steady_clock;

  std::chrono::seconds idle_timeout{30 * 60};
  double default_c_weight = RelevanceConfig::kDefaultCWeight;
  std::function<Clock::time_point()> clock = [] { return Clock::now(); };
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Point-to-point query sessions over one compiled schema.
///
///   GET    /schema              object and relationship types by cweight
///   POST   /sessions            {points: [...], c_weight?} -> first listing per pair
///   POST   /sessions/{id}/more  {pair_index} -> newly released paths
///   GET    /sessions/{id}       everything released so far
///   DELETE /sessions/{id}
///
/// Each handler is callable directly; mount() wires them into an HTTP server.
/// Requests for different sessions run concurrently; requests for one session
/// are serialised.
class Service {
 public:
  explicit Service(std::shared_ptr<const Engine> engine, ServiceOptions options = {});

  Response get_schema() const;
  Response create_session(std::string_view body);
  Response more(const std::string& id, std::string_view body);
  Response get_session(const std::string& id);
  Response delete_session(const std::string& id);

  /// Swaps in a recompiled schema. Sessions opened against the old one
  /// answer 409 from then on.
  void replace_engine(std::shared_ptr<const Engine> engine);

  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t evict_idle();
  std::size_t session_count() const;

  void mount(httplib::Server& server);

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    std::string schema_hash;
    std::unique_ptr<Query> query;
    ServiceOptions::Clock::time_point created;
    ServiceOptions::Clock::time_point last_access;
  };

  std::shared_ptr<const Engine> engine() const;
  std::shared_ptr<Session> find(const std::string& id);
  std::string new_id();
  nlohmann::json session_json(const Session& session) const;

  ServiceOptions options_;
  mutable std::mutex engine_mutex_;
  std::shared_ptr<const Engine> engine_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 ids_;
};

}  // namespace ppq
