#pragma once

// Request/response front end shared by the chern3 binary and its tests.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chern3/json_io.hpp"

namespace chern3::cli {

using json = json_io::json;

enum class OutputMode { Table, Json };

struct Request {
  std::string command;  // threefold, chern, chi, moduli-dim, serre, ledger, dzero, verify
  json payload = json::object();
  OutputMode output = OutputMode::Table;
};

struct Response {
  bool ok = true;
  std::string command;
  json request;                 // echo of the request that produced this response
  json data = json::object();
  json audit = json::array();   // [{"name": ..., "value": ...}]
  std::vector<std::string> warnings;
  std::string error_kind;       // empty when ok
  std::string error_message;
  int exit_code = 0;            // 0 ok, 1 domain error, 2 schema/input error
};

/// Checks the command name and the payload keys; throws SchemaError.
void validate_request(const Request& req);

Request request_from_json(const json& j);
json request_to_json(const Request& req);

/// Strict reader for {"schema": "1", "command", "payload", "output"}.
/// Throws IOError for unreadable files and SchemaError (with line:column
/// where it can be located) for malformed or unknown content.
Request load_config(const std::filesystem::path& path);

/// Never throws for domain failures; they become status "error" responses.
Response run(const Request& req);

json response_to_json(const Response& resp);
std::string render_table(const Response& resp);
std::string render(const Response& resp, OutputMode mode);

/// One "path<spaces>value" line per scalar leaf, as used by the table view.
std::vector<std::pair<std::string, std::string>> flatten(const json& j, const std::string& prefix = "");

}  // namespace chern3::cli
