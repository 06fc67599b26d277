#include <atomic>
#include <chrono>
#include <memory>
#include <set>
#include <thread>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "httplib.h"
#include "json.hpp"
#include "ppq/service.hpp"

using namespace ppq;
using nlohmann::json;

namespace {

const std::string kFiveNode = "D . B . s . f . r~ . A . C";

std::shared_ptr<const Engine> example_engine() {
  return std::make_shared<const Engine>(Engine::compile(ppq::testing::example_schema()));
}

std::string more_body(std::size_t pair) { return json{{"pair_index", pair}}.dump(); }

}  // namespace

TEST_CASE("schema listing is ordered by weight") {
  auto schema = parse_schema(R"({
    "object_types": [{"name": "A", "cweight": 2}, {"name": "B", "cweight": 5}, {"name": "C", "cweight": 2}],
    "relationship_types": [
      {"name": "f", "cweight": 1, "roles": [{"name": "r", "player": "A"}, {"name": "s", "player": "B"}]},
      {"name": "g", "cweight": 4, "roles": [{"name": "t", "player": "C"}, {"name": "u", "player": "A"}]}]})");
  Service service(std::make_shared<const Engine>(Engine::compile(schema)));
  auto r = service.get_schema();
  CHECK(r.status == 200);
  CHECK(r.body["object_types"] == json::parse(R"([{"name": "B", "cweight": 5}, {"name": "A", "cweight": 2},
                                                  {"name": "C", "cweight": 2}])"));
  CHECK(r.body["relationship_types"][0]["name"] == "g");
  CHECK(r.body["schema_hash"] == schema_hash(schema));
}

TEST_CASE("session lifecycle") {
  Service service(example_engine());
  auto created = service.create_session(R"({"points": ["D", "C"]})");
  REQUIRE(created.status == 200);
  const auto& body = created.body;
  const std::string id = body["session_id"];
  CHECK(id.size() == 32);
  CHECK(body["c_weight"] == 0.5);
  CHECK(body["points"] == json({"D", "C"}));
  REQUIRE(body["pairs"].size() == 1);
  const auto& pair = body["pairs"][0];
  CHECK(pair["from"] == "D");
  CHECK(pair["to"] == "C");
  REQUIRE(pair["paths"].size() == 1);
  CHECK(pair["paths"][0]["expression"] == kFiveNode);
  CHECK(pair["paths"][0]["badness"] == 2.5);
  CHECK(pair["paths"][0]["nodes"] == json({"D", "B", "f", "A", "C"}));
  CHECK(pair["paths"][0]["labels"] == json({"SPEC", "s", "r", "POLY"}));

  auto m1 = service.more(id, more_body(0));
  REQUIRE(m1.status == 200);
  CHECK(m1.body["delta"].size() == 2);
  CHECK(m1.body["released_count"] == 3);

  auto m2 = service.more(id, more_body(0));
  CHECK(m2.status == 200);
  CHECK(m2.body["delta"].empty());
  CHECK(m2.body["exhausted"] == true);
  auto m3 = service.more(id, "");
  CHECK(m3.status == 200);
  CHECK(m3.body["delta"].empty());
  CHECK(m3.body["exhausted"] == true);

  auto state = service.get_session(id);
  CHECK(state.status == 200);
  CHECK(state.body["pairs"][0]["paths"].size() == 3);
  CHECK(state.body["pairs"][0]["exhausted"] == true);

  CHECK(service.delete_session(id).status == 200);
  CHECK(service.get_session(id).status == 404);
  CHECK(service.more(id, more_body(0)).status == 404);
  CHECK(service.delete_session(id).status == 404);
}

TEST_CASE("bad requests") {
  Service service(example_engine());
  auto one = service.create_session(R"({"points": ["D"]})");
  CHECK(one.status == 400);
  CHECK(one.body["error"] == "need at least two points");
  CHECK(service.create_session(R"({"points": ["D", "D"]})").body["error"] == "points must be distinct");
  CHECK(service.create_session(R"({"points": ["D", "Z"]})").status == 400);
  CHECK(service.create_session(R"({"points": ["D", "C"], "c_weight": 3})").status == 400);
  CHECK(service.create_session(R"({"points": "D"})").status == 400);
  CHECK(service.create_session("not json").status == 400);
  CHECK(service.session_count() == 0);

  auto id = service.create_session(R"({"points": ["D", "C"]})").body["session_id"].get<std::string>();
  CHECK(service.more(id, more_body(1)).status == 400);
  CHECK(service.more(id, R"({"pair_index": -1})").status == 400);
  CHECK(service.more("0123", more_body(0)).status == 404);
}

TEST_CASE("multi-point sessions and c_weight") {
  Service service(example_engine());
  auto r = service.create_session(R"({"points": ["D", "A", "C"], "c_weight": 0.25})");
  REQUIRE(r.status == 200);
  CHECK(r.body["pairs"].size() == 2);
  CHECK(r.body["c_weight"] == 0.25);
  CHECK(r.body["pairs"][1]["from"] == "A");
  const std::string id = r.body["session_id"];
  CHECK(service.more(id, more_body(1)).status == 200);
}

TEST_CASE("recompiled schema invalidates sessions") {
  Service service(example_engine());
  auto id = service.create_session(R"({"points": ["D", "C"]})").body["session_id"].get<std::string>();
  auto changed = parse_schema(R"({"object_types": [{"name": "C"}, {"name": "D", "cweight": 3}], "subtype": [["D", "C"]]})");
  service.replace_engine(std::make_shared<const Engine>(Engine::compile(changed)));
  CHECK(service.more(id, more_body(0)).status == 409);
  CHECK(service.get_session(id).status == 409);
  auto fresh = service.create_session(R"({"points": ["D", "C"]})");
  CHECK(fresh.status == 200);
  CHECK(fresh.body["pairs"][0]["paths"][0]["expression"] == "D . C");
}

TEST_CASE("idle sessions are evicted") {
  auto now = std::make_shared<ServiceOptions::Clock::time_point>(ServiceOptions::Clock::time_point{});
  ServiceOptions options;
  options.idle_timeout = std::chrono::minutes(30);
  options.clock = [now] { return *now; };
  Service service(example_engine(), options);
  auto old_id = service.create_session(R"({"points": ["D", "C"]})").body["session_id"].get<std::string>();
  *now += std::chrono::minutes(20);
  auto new_id = service.create_session(R"({"points": ["A", "C"]})").body["session_id"].get<std::string>();
  CHECK(service.evict_idle() == 0);
  *now += std::chrono::minutes(15);
  CHECK(service.evict_idle() == 1);
  CHECK(service.get_session(old_id).status == 404);
  CHECK(service.get_session(new_id).status == 200);
  *now += std::chrono::minutes(29);
  CHECK(service.evict_idle() == 0);
}

TEST_CASE("concurrent presses stay append-only") {
  auto schema = parse_schema(R"({
    "object_types": [{"name": "A"}, {"name": "B"}, {"name": "C"}, {"name": "D"}, {"name": "E"}],
    "relationship_types": [
      {"name": "f", "roles": [{"name": "f1", "player": "A"}, {"name": "f2", "player": "B"}, {"name": "f3", "player": "C"}]},
      {"name": "g", "roles": [{"name": "g1", "player": "B"}, {"name": "g2", "player": "C"}, {"name": "g3", "player": "D"}]},
      {"name": "h", "roles": [{"name": "h1", "player": "C"}, {"name": "h2", "player": "D"}, {"name": "h3", "player": "E"}]},
      {"name": "k", "roles": [{"name": "k1", "player": "A"}, {"name": "k2", "player": "E"}]}],
    "subtype": [["A", "C"], ["B", "D"]]})");
  Service service(std::make_shared<const Engine>(Engine::compile(schema)));
  auto shared = service.create_session(R"({"points": ["A", "E"]})").body["session_id"].get<std::string>();

  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  std::vector<std::vector<double>> seen(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      auto own = service.create_session(R"({"points": ["B", "E"]})").body["session_id"].get<std::string>();
      for (int i = 0; i < 30; ++i) {
        auto r = service.more(i % 2 ? own : shared, more_body(0));
        if (r.status != 200) ++failures;
        if (i % 2 == 0) {
          for (const auto& p : r.body["delta"]) seen[t].push_back(p["badness"]);
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(failures == 0);

  auto state = service.get_session(shared);
  const auto& paths = state.body["pairs"][0]["paths"];
  std::set<std::string> unique;
  double last = 0;
  for (const auto& p : paths) {
    unique.insert(p["expression"].get<std::string>() + "|" + p["labels"].dump());
    CHECK(p["badness"].get<double>() >= last);
    last = p["badness"];
  }
  CHECK(unique.size() == paths.size());
  std::size_t delivered = 0;
  for (const auto& s : seen) delivered += s.size();
  CHECK(delivered + 1 == paths.size());
  CHECK(state.body["pairs"][0]["exhausted"] == true);
}

TEST_CASE("http round trip") {
  Service service(example_engine());
  httplib::Server server;
  service.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread runner([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto schema = client.Get("/schema");
  REQUIRE(schema);
  CHECK(schema->status == 200);
  CHECK(json::parse(schema->body)["object_types"].size() == 4);

  auto created = client.Post("/sessions", R"({"points": ["D", "C"]})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 200);
  auto body = json::parse(created->body);
  CHECK(body["pairs"][0]["paths"][0]["expression"] == kFiveNode);
  const std::string id = body["session_id"];

  auto more = client.Post("/sessions/" + id + "/more", more_body(0), "application/json");
  REQUIRE(more);
  CHECK(json::parse(more->body)["delta"].size() == 2);
  more = client.Post("/sessions/" + id + "/more", more_body(0), "application/json");
  CHECK(json::parse(more->body)["exhausted"] == true);

  auto bad = client.Post("/sessions", R"({"points": ["D"]})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body)["error"] == "need at least two points");

  auto got = client.Get("/sessions/" + id);
  REQUIRE(got);
  CHECK(json::parse(got->body)["pairs"][0]["paths"].size() == 3);
  auto del = client.Delete("/sessions/" + id);
  REQUIRE(del);
  CHECK(del->status == 200);
  auto gone = client.Get("/sessions/" + id);
  REQUIRE(gone);
  CHECK(gone->status == 404);

  server.stop();
  runner.join();
}
