#include "ppq/service.hpp"

#include <algorithm>
#include <cstdio>

#include "httplib.h"
#include "ppq/error.hpp"

namespace ppq {
namespace {

using nlohmann::json;

Response error_response(int status, const std::string& message) { return {status, {{"error", message}}}; }

Response from_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::invalid_argument:
    case ErrorCode::syntax:
    case ErrorCode::semantic:
      return error_response(400, e.what());
    default:
      return error_response(500, e.what());
  }
}

std::optional<json> parse_body(std::string_view body) {
  if (body.empty()) return json::object();
  auto doc = json::parse(body.begin(), body.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  return doc;
}

json types_by_weight(const Engine& engine, bool relationships) {
  struct Entry {
    std::string name;
    std::uint64_t cweight;
  };
  std::vector<Entry> entries;
  const auto& s = engine.schema();
  if (relationships) {
    for (const auto& r : s.relationship_types()) entries.push_back({r.name, r.cweight});
  } else {
    for (const auto& o : s.object_types()) entries.push_back({o.name, o.cweight});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.cweight > b.cweight; });
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"name", e.name}, {"cweight", e.cweight}});
  return out;
}

json paths_json(const Engine& engine, std::span<const RankedPath> paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(path_json(engine, p));
  return out;
}

}  // namespace

Service::Service(std::shared_ptr<const Engine> engine, ServiceOptions options)
    : options_(std::move(options)), engine_(std::move(engine)), ids_(std::random_device{}()) {}

std::shared_ptr<const Engine> Service::engine() const {
  std::lock_guard lock(engine_mutex_);
  return engine_;
}

void Service::replace_engine(std::shared_ptr<const Engine> engine) {
  std::lock_guard lock(engine_mutex_);
  engine_ = std::move(engine);
}

Response Service::get_schema() const {
  auto e = engine();
  return {200,
          {{"schema_hash", e->schema_hash()},
           {"object_types", types_by_weight(*e, false)},
           {"relationship_types", types_by_weight(*e, true)}}};
}

std::string Service::new_id() {
  char buffer[33];
  std::snprintf(buffer, sizeof buffer, "%016llx%016llx", static_cast<unsigned long long>(ids_()),
                static_cast<unsigned long long>(ids_()));
  return buffer;
}

json Service::session_json(const Session& session) const {
  const auto& q = *session.query;
  const auto& g = q.engine().graph();
  json points = json::array();
  for (NodeId x : q.points()) points.push_back(g.name(x));
  json pairs = json::array();
  for (std::size_t i = 0; i < q.pair_count(); ++i) {
    const auto& state = q.pair(i).state();
    pairs.push_back({{"pair_index", i},
                     {"from", g.name(state.from())},
                     {"to", g.name(state.to())},
                     {"paths", paths_json(q.engine(), state.released())},
                     {"exhausted", state.exhausted()}});
  }
  return {{"session_id", session.id},
          {"schema_hash", session.schema_hash},
          {"c_weight", q.relevance().c_weight()},
          {"points", std::move(points)},
          {"pairs", std::move(pairs)}};
}

Response Service::create_session(std::string_view body) {
  evict_idle();
  auto doc = parse_body(body);
  if (!doc) return error_response(400, "request body must be a JSON object");
  auto points_it = doc->find("points");
  if (points_it == doc->end() || !points_it->is_array()) return error_response(400, "points must be a list");
  std::vector<std::string> points;
  for (const auto& p : *points_it) {
    if (!p.is_string()) return error_response(400, "points must be type names");
    points.push_back(p.get<std::string>());
  }
  if (points.size() < 2) return error_response(400, "need at least two points");
  double c_weight = options_.default_c_weight;
  if (auto it = doc->find("c_weight"); it != doc->end()) {
    if (!it->is_number()) return error_response(400, "c_weight must be a number");
    c_weight = it->get<double>();
  }

  auto session = std::make_shared<Session>();
  try {
    auto e = engine();
    session->schema_hash = e->schema_hash();
    session->query = std::make_unique<Query>(std::move(e), points, c_weight);
  } catch (const Error& err) {
    return from_error(err);
  }
  session->created = session->last_access = options_.clock();
  {
    std::lock_guard lock(sessions_mutex_);
    do {
      session->id = new_id();
    } while (sessions_.contains(session->id));
    sessions_.emplace(session->id, session);
  }
  return {200, session_json(*session)};
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response Service::more(const std::string& id, std::string_view body) {
  auto session = find(id);
  if (!session) return error_response(404, "unknown session");
  auto doc = parse_body(body);
  if (!doc) return error_response(400, "request body must be a JSON object");
  std::size_t pair_index = 0;
  if (auto it = doc->find("pair_index"); it != doc->end()) {
    if (!it->is_number_unsigned()) return error_response(400, "pair_index must be a natural number");
    pair_index = it->get<std::size_t>();
  }

  std::lock_guard lock(session->mutex);
  session->last_access = options_.clock();
  if (session->schema_hash != engine()->schema_hash()) {
    return error_response(409, "schema recompiled since the session started");
  }
  try {
    auto delta = session->query->more(pair_index);
    const auto& state = session->query->pair(pair_index).state();
    return {200,
            {{"session_id", session->id},
             {"pair_index", pair_index},
             {"delta", paths_json(session->query->engine(), delta)},
             {"released_count", state.released().size()},
             {"exhausted", state.exhausted()}}};
  } catch (const Error& err) {
    return from_error(err);
  }
}

Response Service::get_session(const std::string& id) {
  auto session = find(id);
  if (!session) return error_response(404, "unknown session");
  std::lock_guard lock(session->mutex);
  session->last_access = options_.clock();
  if (session->schema_hash != engine()->schema_hash()) {
    return error_response(409, "schema recompiled since the session started");
  }
  return {200, session_json(*session)};
}

Response Service::delete_session(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  if (sessions_.erase(id) == 0) return error_response(404, "unknown session");
  return {200, {{"deleted", id}}};
}

std::size_t Service::evict_idle() {
  const auto now = options_.clock();
  std::lock_guard lock(sessions_mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    std::unique_lock session_lock(entry.second->mutex, std::try_to_lock);
    return session_lock.owns_lock() && now - entry.second->last_access > options_.idle_timeout;
  });
}

std::size_t Service::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

void Service::mount(httplib::Server& server) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json; charset=utf-8");
  };
  server.Get("/schema", [this, reply](const httplib::Request&, httplib::Response& res) { reply(res, get_schema()); });
  server.Post("/sessions", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, create_session(req.body));
  });
  server.Post(R"(/sessions/([0-9a-f]+)/more)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, more(req.matches[1], req.body));
  });
  server.Get(R"(/sessions/([0-9a-f]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, get_session(req.matches[1]));
  });
  server.Delete(R"(/sessions/([0-9a-f]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, delete_session(req.matches[1]));
  });
}

}  // namespace ppq
