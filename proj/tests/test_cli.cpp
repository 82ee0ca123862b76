#include <string>
#include <vector>

#include "doctest.h"
#include "realsurf/cli.hpp"

using namespace realsurf::cli;

namespace {

Response run_json(const std::string& subcommand, const char* payload) {
  Response r = run({subcommand, json::parse(payload)});
  // Every response survives a serialization round trip.
  json doc = to_json(r);
  CHECK(response_from_json(json::parse(doc.dump())) == r);
  return r;
}

std::vector<std::pair<std::string, const char*>> examples() {
  return {
      {"classify", R"({"minimal": "MinimalConicBundle", "m": 3, "blowups": []})"},
      {"classify", R"({"minimal": "P2", "blowups": ["real", "pair", {"type": "real", "component": 0}]})"},
      {"lines", R"({"r": 7, "real": 7, "pairs": 0})"},
      {"lines", R"({"r": 6, "swapped": [[0, 1], [2, 3], [4, 5]]})"},
      {"equiv", R"({"first": {"sign": 1, "roots": ["0", "1", "2", "3"]}, "second": {"sign": 1, "roots": ["5", "6", "7", "8"]}})"},
      {"equiv", R"({"first": {"sign": 1, "roots": [0, 1, 2, 4]}, "second": {"sign": 1, "roots": [0, 1, 2, 5]}})"},
      {"surface-equiv", R"({"first": {"sign": 1, "roots": [0, 1, 2, 4]}, "second": {"sign": -1, "roots": [0, 1, 2, 5]}})"},
      {"normalize", R"({"g": {"factors": [{"linear": "1", "power": 2}, {"linear": "2"}, {"linear": "3"}]}})"},
      {"normalize", R"({"g": ["-2", "0", "1"]})"},
      {"normalize", R"({"numerator": [1, 1], "denominator": {"factors": [{"quadratic": ["0", "1"]}, {"linear": "-1"}]}})"},
      {"intervals", R"({"sign": 1, "roots": ["0", "1"]})"},
      {"intervals", R"({"g": {"constant": "-2", "factors": [{"linear": "0"}, {"linear": "1"}]}})"},
      {"topology", R"({"minimal": "DP1min", "blowups": ["real:4"]})"},
      {"topology", R"({"sign": 1, "roots": []})"},
      {"bitangents", R"({"d": 4})"},
      {"dp-table", R"({"degree": 8})"},
      {"dp-table", R"({"quartic": "nested"})"},
      {"dp-table", R"({"sextic": "split-1-1"})"},
      {"qf-split", R"({"form": ["1", "1", "-3"], "a": 2, "witness": [["1", "0"], ["0", "1"], ["1", "0"]]})"},
      {"bitangents", R"({"d": 7})"},
      {"lines", R"({"r": 9, "real": 9, "pairs": 0})"},
      {"topology", R"({"minimal": "Q40", "blowups": ["real"]})"},
      {"qf-split", R"({"form": ["1", "1"], "a": 2, "witness": [["1", "0"], ["1", "0"]]})"},
  };
}

}  // namespace

TEST_CASE("classify, lines and equiv examples") {
  Response c = run_json("classify", R"({"minimal": "MinimalConicBundle", "m": 3, "blowups": []})");
  REQUIRE(c.ok);
  CHECK(c.result["class"] == "ConicBundle");
  CHECK(c.result["m"] == 3);
  CHECK(c.result["components"] == 3);
  CHECK_FALSE(c.provenance.empty());

  Response l = run_json("lines", R"({"r": 7, "real": 7, "pairs": 0})");
  REQUIRE(l.ok);
  CHECK(l.result["count"] == 56);

  Response e = run_json("equiv", R"({"first": {"sign": 1, "roots": ["0", "1", "2", "3"]},
                                      "second": {"sign": 1, "roots": ["5", "6", "7", "8"]}})");
  REQUIRE(e.ok);
  CHECK(e.result["equivalent"] == true);
  CHECK(e.result["witness"]["matrix"] == json::parse(R"([["1", "5"], ["0", "1"]])"));
}

TEST_CASE("subcommand results") {
  Response n = run_json("normalize", R"({"g": {"factors": [{"linear": "1"}, {"linear": "2"}, {"linear": "3"}]}})");
  REQUIRE(n.ok);
  CHECK(n.result["roots"] == json::parse(R"(["0", "1/3", "1/2", "1"])"));
  CHECK(n.result["sign"] == -1);

  Response irr = run_json("normalize", R"({"g": ["-2", "0", "1"]})");
  REQUIRE(irr.ok);
  CHECK(irr.result["roots"][0].is_object());

  Response iv = run_json("intervals", R"({"sign": 1, "roots": ["0", "1"]})");
  REQUIRE(iv.ok);
  CHECK(iv.result["arcs"] == json::parse(R"([["1", "0"]])"));

  Response t = run_json("topology", R"({"minimal": "DP1min", "blowups": ["real:4"]})");
  REQUIRE(t.ok);
  CHECK(t.result["topology"]["render"] == "2 RP2 + 3 S2");

  Response s = run_json("surface-equiv", R"({"first": {"sign": 1, "roots": [0, 1, 2, 4]},
                                             "second": {"sign": -1, "roots": [0, 1, 2, 5]}})");
  REQUIRE(s.ok);
  CHECK(s.result["equivalent"] == true);

  Response dp = run_json("dp-table", R"({"degree": 8})");
  REQUIRE(dp.ok);
  CHECK(dp.result["types"].size() == 4);
  CHECK(dp.result["types"][3]["family_count"] == 2);

  Response q = run_json("qf-split", R"({"form": ["1", "1", "-3"], "a": 2, "witness": [["1", "0"], ["0", "1"], ["1", "0"]]})");
  REQUIRE(q.ok);
  CHECK(q.result["b"] == "1");
  CHECK(q.result["q_prime"] == json::parse(R"(["6"])"));
}

TEST_CASE("errors and exit codes") {
  Response bad_rank = run_json("lines", R"({"r": 9, "real": 9, "pairs": 0})");
  CHECK_FALSE(bad_rank.ok);
  CHECK(bad_rank.error_code == "BadRank");
  CHECK(exit_code(bad_rank) == 3);

  Response missing = run_json("lines", R"({"r": 7})");
  CHECK(missing.error_code == "SchemaError");
  CHECK(exit_code(missing) == 2);

  Response bad_rational = run_json("intervals", R"({"sign": 1, "roots": ["1/0", "2"]})");
  CHECK(bad_rational.error_code == "ParseError");
  CHECK(exit_code(bad_rational) == 2);

  Response wrong_type = run_json("bitangents", R"({"d": [1]})");
  CHECK(wrong_type.error_code == "SchemaError");

  Response unknown = run({"frobnicate", json::object()});
  CHECK(unknown.error_code == "SchemaError");

  Response empty_blowup = run_json("topology", R"({"minimal": "Q40", "blowups": ["real"]})");
  CHECK(empty_blowup.error_code == "RealBlowupOnEmptyLocus");

  Response degenerate = run_json("qf-split", R"({"form": ["1", "1"], "a": 2, "witness": [["1", "0"], ["1", "0"]]})");
  CHECK(degenerate.error_code == "NotAWitness");

  CHECK(exit_code(run_json("bitangents", R"({"d": 2})")) == 0);
}

TEST_CASE("round trips") {
  for (const auto& [sub, payload] : examples()) {
    Request req{sub, json::parse(payload)};
    CHECK(request_from_json(json::parse(to_json(req).dump())) == req);
    run_json(sub, payload);
  }
  CHECK_THROWS(response_from_json(json::parse(R"({"status": "maybe"})")));
  CHECK_THROWS(request_from_json(json::parse(R"({"payload": {}})")));
}

TEST_CASE("batch keeps order and matches single runs") {
  std::vector<Request> requests;
  for (const auto& [sub, payload] : examples()) requests.push_back({sub, json::parse(payload)});
  auto batch = run_batch(requests, 4);
  REQUIRE(batch.size() == requests.size());
  for (std::size_t i = 0; i < requests.size(); ++i) CHECK(batch[i] == run(requests[i]));
}

TEST_CASE("text rendering") {
  std::string text = render_text(run_json("bitangents", R"({"d": 4})"));
  CHECK(text.find("count: 28") != std::string::npos);
  std::string err = render_text(run_json("bitangents", R"({"d": 9})"));
  CHECK(err.rfind("error OutOfRange", 0) == 0);
}
