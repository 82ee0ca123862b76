// realsurf: classification queries for real algebraic surfaces.
//
//   realsurf classify --input req.json
//   echo '{"r": 7, "real": 7, "pairs": 0}' | realsurf lines
//   realsurf --batch --input requests.json --format text

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "realsurf/cli.hpp"
#include "realsurf/error.hpp"

using realsurf::cli::json;
using realsurf::cli::Request;
using realsurf::cli::Response;

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

bool read_all(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

Request to_request(const std::string& subcommand, const json& doc) {
  if (subcommand.empty()) return realsurf::cli::request_from_json(doc);
  return Request{subcommand, doc};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification queries for real conic bundles, Del Pezzo surfaces and rational surfaces"};
  std::string subcommand;
  std::string input;
  std::string output;
  std::string format = "json";
  bool batch = false;
  unsigned threads = 0;
  app.add_option("subcommand", subcommand, "One of: " + join(realsurf::cli::subcommands()) +
                                               ". Without it the input holds full requests.")
      ->check(CLI::IsMember(realsurf::cli::subcommands()));
  app.add_option("--input,-i", input, "Input JSON file (default: stdin)");
  app.add_option("--output,-o", output, "Output file (default: stdout)");
  app.add_option("--format,-f", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--batch", batch, "Input is a JSON array; requests run in parallel, output keeps their order");
  app.add_option("--threads", threads, "Worker threads for --batch (default: all cores)");
  CLI11_PARSE(app, argc, argv);

  std::vector<Response> responses;
  std::string text;
  if (!read_all(input, text)) {
    responses.push_back(realsurf::cli::error_response("ParseError", "cannot read input file '" + input + "'"));
  } else {
    try {
      json doc = json::parse(text);
      if (batch) {
        if (!doc.is_array()) throw realsurf::Error(realsurf::ErrorCode::SchemaError, "--batch input must be a JSON array");
        std::vector<Request> requests;
        std::vector<Response> early(doc.size());
        std::vector<std::size_t> slot;
        for (std::size_t i = 0; i < doc.size(); ++i) {
          try {
            requests.push_back(to_request(subcommand, doc[i]));
            slot.push_back(i);
          } catch (const realsurf::Error& e) {
            early[i] = realsurf::cli::error_response(std::string(realsurf::to_string(e.code())), e.what());
          }
        }
        auto done = realsurf::cli::run_batch(requests, threads);
        for (std::size_t k = 0; k < slot.size(); ++k) early[slot[k]] = std::move(done[k]);
        responses = std::move(early);
      } else {
        responses.push_back(realsurf::cli::run(to_request(subcommand, doc)));
      }
    } catch (const json::parse_error& e) {
      responses.push_back(realsurf::cli::error_response("ParseError", e.what()));
    } catch (const realsurf::Error& e) {
      responses.push_back(realsurf::cli::error_response(std::string(realsurf::to_string(e.code())), e.what()));
    }
  }

  std::string rendered;
  if (format == "text") {
    for (std::size_t i = 0; i < responses.size(); ++i) {
      if (batch) rendered += "# " + std::to_string(i) + "\n";
      rendered += realsurf::cli::render_text(responses[i]);
    }
  } else if (batch) {
    json arr = json::array();
    for (const auto& r : responses) arr.push_back(realsurf::cli::to_json(r));
    rendered = arr.dump(2) + "\n";
  } else {
    rendered = realsurf::cli::to_json(responses.front()).dump(2) + "\n";
  }

  if (output.empty() || output == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write '" << output << "'\n";
      return 1;
    }
    out << rendered;
  }

  int code = 0;
  for (const auto& r : responses) {
    int c = realsurf::cli::exit_code(r);
    if (c != 0) {
      code = c;
      break;
    }
  }
  return code;
}
