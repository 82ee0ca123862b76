#pragma once

// JSON request/response layer behind the realsurf command-line tool.
//
// A request is {"subcommand": ..., "payload": {...}}; a response is
// {"status": "ok"|"error", "result": {...}, "provenance": [...]} with
// "error": {"code": ..., "message": ...} on failure. Rationals travel as
// "p/q" strings, manifolds as render strings plus a component list.

#include <string>
#include <vector>

#include "json.hpp"

namespace realsurf::cli {

using json = nlohmann::ordered_json;

struct Request {
  std::string subcommand;
  json payload = json::object();

  friend bool operator==(const Request&, const Request&) = default;
};

struct Response {
  bool ok = true;
  json result = json::object();
  std::vector<std::string> provenance;
  std::string error_code;
  std::string error_message;

  friend bool operator==(const Response&, const Response&) = default;
};

const std::vector<std::string>& subcommands();

json to_json(const Request& request);
Request request_from_json(const json& doc);  // throws Error(SchemaError)
json to_json(const Response& response);
Response response_from_json(const json& doc);  // throws Error(SchemaError)

// Never throws for bad input; failures become error responses.
Response run(const Request& request);
// Order-preserving; requests are processed on up to `threads` workers.
std::vector<Response> run_batch(const std::vector<Request>& requests, unsigned threads = 0);

Response error_response(const std::string& code, const std::string& message);

// 0 ok, 2 malformed input, 3 mathematical precondition failed, 1 otherwise.
int exit_code(const Response& response);

std::string render_text(const Response& response);

}  // namespace realsurf::cli
