#include "chern3/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "chern3/error.hpp"

namespace chern3::cli {

namespace {

using namespace json_io;

const std::map<std::string, std::vector<std::string>>& command_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"threefold", {"preset", "threefold", "ambient", "degrees"}},
      {"chern", {"op", "preset", "threefold", "rank", "c1", "c2", "c3", "other", "L"}},
      {"chi", {"preset", "threefold", "rank", "c1", "c2", "c3"}},
      {"moduli-dim", {"preset", "threefold", "rank", "c1", "c2", "c3"}},
      {"serre", {"preset", "threefold", "direction", "det", "c2", "genus", "c3"}},
      {"ledger", {"h0_N", "h0_F", "h0_IF", "h1_IC_zero"}},
      {"dzero", {"preset", "threefold", "k", "c", "verify_paper"}},
      {"verify", {"suite", "max_rank", "trials", "seed", "closed_form"}},
  };
  return keys;
}

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

std::string get_string(const json& p, const char* key, const std::string& fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_string()) schema(std::string("payload.") + key + " must be a string");
  return p[key].get<std::string>();
}

struct ResolvedThreefold {
  Threefold X;
  std::string label;
  std::optional<CIPreset> preset;
};

ResolvedThreefold resolve_threefold(const json& p) {
  const int given = int(p.contains("preset")) + int(p.contains("threefold")) +
                    int(p.contains("ambient") || p.contains("degrees"));
  if (given != 1) schema("payload needs exactly one of \"preset\", \"threefold\" or \"ambient\"/\"degrees\"");
  if (p.contains("threefold")) {
    Threefold X = threefold_from_json(p["threefold"]);
    return {std::move(X), "custom", std::nullopt};
  }
  CIPreset preset = p.contains("preset")
                        ? CIPreset::parse(get_string(p, "preset", ""))
                        : preset_from_json(json{{"ambient", p.contains("ambient") ? p["ambient"] : json()},
                                                {"degrees", p.contains("degrees") ? p["degrees"] : json()}});
  return {build_ci(preset), preset.name(), preset};
}

ChernData sheaf_from_payload(const Threefold& X, const json& p) {
  json f = json::object();
  for (const char* key : {"rank", "c1", "c2", "c3"})
    if (p.contains(key)) f[key] = p[key];
  return chern_from_json(X, f, "payload");
}

void integrality_warnings(const Threefold& X, const ChernData& F, std::vector<std::string>& w) {
  if (!is_integral(F.c1)) w.push_back("c1(F) has non-integral coefficients");
  if (!in_curve_lattice(X, F.c2)) w.push_back("c2(F) is not in the declared curve lattice");
  if (!F.c3.value.is_integer()) w.push_back("c3(F) is not an integer");
}

void audit(Response& r, const std::string& name, const Rat& value) {
  r.audit.push_back({{"name", name}, {"value", rat_to_json(value)}});
}

void cmd_threefold(const json& p, Response& r) {
  auto [X, label, preset] = resolve_threefold(p);
  r.data["threefold_name"] = label;
  r.data["threefold"] = threefold_to_json(X);
  if (preset) {
    const TruncSeries c = tangent_chern(*preset);
    r.data["tangent_chern"] = {{"c1", rat_to_json(c.c[1])},
                               {"c2", rat_to_json(c.c[2])},
                               {"c3", rat_to_json(c.c[3])}};
    r.data["classification"] = std::string(to_string(classify(*preset)));
    for (auto& w : preset_warnings(*preset)) r.warnings.push_back(std::move(w));
  }
  r.data["todd_genus"] = rat_to_json(todd_genus(X));
  audit(r, "c1(X)c2(X)", pair_div_curve(X, X.c1X(), X.c2X()).value);
}

void cmd_chern(const json& p, Response& r) {
  const std::string op = get_string(p, "op", "");
  auto [X, label, preset] = resolve_threefold(p);
  const ChernData F = sheaf_from_payload(X, p);
  r.data["threefold"] = label;
  r.data["op"] = op;
  if (op == "tensor") {
    if (!p.contains("other")) schema("tensor needs payload.other");
    const ChernData G = chern_from_json(X, p["other"], "payload.other");
    r.data["result"] = chern_to_json(tensor(X, F, G));
  } else if (op == "dual") {
    r.data["result"] = chern_to_json(dual(X, F));
  } else if (op == "twist") {
    if (!p.contains("L")) schema("twist needs payload.L");
    r.data["result"] = chern_to_json(twist(X, F, div_from_json(p["L"], "payload.L")));
  } else if (op == "delta") {
    const CurveClass d = discriminant(X, F);
    r.data["discriminant"] = curve_to_json(d);
    audit(r, "c1(F)^2.c1(X)", triple(X, F.c1, F.c1, X.c1X()).value);
    audit(r, "c1(X).Delta(F)", pair_div_curve(X, X.c1X(), d).value);
  } else {
    schema("payload.op must be one of tensor, dual, twist, delta");
  }
}

void cmd_chi(const json& p, Response& r) {
  auto [X, label, preset] = resolve_threefold(p);
  const ChernData F = sheaf_from_payload(X, p);
  const RRTerms rr = euler_char_terms(X, F);
  r.data["threefold"] = label;
  r.data["sheaf"] = chern_to_json(F);
  json terms = json::object();
  for (std::size_t i = 0; i < rr.terms.size(); ++i)
    terms[std::string(RRTerms::labels()[i])] = rat_to_json(rr.terms[i]);
  r.data["terms"] = std::move(terms);
  r.data["chi"] = rat_to_json(rr.total());
  if (!rr.total().is_integer())
    r.warnings.push_back("chi = " + rr.total().str() + " is not an integer; no coherent sheaf has these classes");

  const DivClass& k = X.c1X();
  audit(r, "c1(F)^3", triple(X, F.c1, F.c1, F.c1).value);
  audit(r, "c1(F)c2(F)", pair_div_curve(X, F.c1, F.c2).value);
  audit(r, "c1(X)c2(F)", pair_div_curve(X, k, F.c2).value);
  audit(r, "c1(X)c1(F)^2", triple(X, k, F.c1, F.c1).value);
  audit(r, "c1(X)^2c1(F)", triple(X, k, k, F.c1).value);
  audit(r, "c2(X)c1(F)", pair_div_curve(X, F.c1, X.c2X()).value);
  audit(r, "c1(X)c2(X)", pair_div_curve(X, k, X.c2X()).value);
  audit(r, "c3(F)", F.c3.value);
  integrality_warnings(X, F, r.warnings);
}

void cmd_moduli(const json& p, Response& r) {
  auto [X, label, preset] = resolve_threefold(p);
  const ChernData F = sheaf_from_payload(X, p);
  const ModuliReport rep = moduli_report(X, F, label);
  r.data = moduli_to_json(rep);
  r.data["regime"] = numerically_trivial(X, X.c1X()) ? "trivial canonical class: Ext^3(F,F) is dual to Hom(F,F)"
                        : "expected dimension assuming F stable and either -K_X effective and "
                          "nontrivial or the H^0 twist condition";
  audit(r, "c1(X)c2(X)", rep.c1X_c2X);
  for (std::size_t i = 0; i < rep.discriminant.size(); ++i)
    audit(r, "Delta(F).D" + std::to_string(i), rep.discriminant[i]);
  audit(r, "c1(X).Delta(F)", rep.c1X_delta);
  integrality_warnings(X, F, r.warnings);
}

void cmd_serre(const json& p, Response& r) {
  auto [X, label, preset] = resolve_threefold(p);
  const std::string dir = get_string(p, "direction", "");
  const DivClass det = p.contains("det") ? div_from_json(p["det"], "payload.det") : DivClass::zero(X.rank());
  const CurveClass c2 = curve_from_json(require(p, "c2", "payload"), "payload.c2");
  check_length(X, det.size(), "det");
  check_length(X, c2.size(), "c2");
  r.data["threefold"] = label;
  r.data["direction"] = dir;
  audit(r, "c1(X)c2(F)", pair_div_curve(X, X.c1X(), c2).value);
  audit(r, "c1(F)c2(F)", pair_div_curve(X, det, c2).value);
  if (dir == "to-c3") {
    const Rat g = rat_from_json(require(p, "genus", "payload"), "payload.genus");
    r.data["genus"] = rat_to_json(g);
    r.data["c3"] = rat_to_json(serre_c3(X, det, c2, g));
  } else if (dir == "to-genus") {
    const Rat c3 = rat_from_json(require(p, "c3", "payload"), "payload.c3");
    GenusResult g = serre_genus(X, det, c2, c3);
    r.data["c3"] = rat_to_json(c3);
    r.data["genus"] = rat_to_json(g.genus);
    for (auto& w : g.warnings) r.warnings.push_back(std::move(w));
  } else {
    schema("payload.direction must be \"to-c3\" or \"to-genus\"");
  }
}

void cmd_ledger(const json& p, Response& r) {
  const CohomologyLedger l = ledger_from_json(p);
  r.data["ledger"] = ledger_to_json(l);
  r.data["ext1"] = ext1_ledger(l);
}

IntRange range_from_json(const json& p, const char* key, IntRange fallback) {
  if (!p.contains(key)) return fallback;
  const json& j = p[key];
  if (!j.is_array() || j.size() != 2) schema(std::string("payload.") + key + " must be [lo, hi]");
  return {long_from_json(j[0], std::string("payload.") + key + "[0]"),
          long_from_json(j[1], std::string("payload.") + key + "[1]")};
}

void cmd_dzero(const json& p, Response& r) {
  if (p.contains("verify_paper")) {
    if (!p["verify_paper"].is_boolean()) schema("payload.verify_paper must be a boolean");
    if (p["verify_paper"].get<bool>()) {
      if (p.size() != 1) schema("verify_paper takes no other keys");
      const PaperClaimsReport rep = check_paper_claims();
      r.data = claims_to_json(rep);
      if (!rep.all_ok())
        for (const auto& e : rep.entries)
          if (!e.ok) throw Error(ErrorKind::ClaimViolation, e.preset + ": " + e.note);
      return;
    }
  }
  json tp = json::object();
  for (const char* key : {"preset", "threefold"})
    if (p.contains(key)) tp[key] = p[key];
  auto [X, label, preset] = resolve_threefold(tp);
  const DZeroProblem prob{X, label, range_from_json(p, "k", {-10, 10}),
                          range_from_json(p, "c", {-50, 50})};
  r.data = dzero_to_json(solve_dzero(prob));
}

void cmd_verify(const json& p, Response& r) {
  const std::string suite = get_string(p, "suite", "paper");
  const std::string form = get_string(p, "closed_form", "printed");
  if (suite != "paper" && suite != "tensor") schema("payload.suite must be \"paper\" or \"tensor\"");
  if (form != "printed" && form != "corrected")
    schema("payload.closed_form must be \"printed\" or \"corrected\"");
  const long max_rank = p.contains("max_rank") ? long_from_json(p["max_rank"], "payload.max_rank") : 4;
  const long trials = p.contains("trials") ? long_from_json(p["trials"], "payload.trials") : 100;
  const long seed = p.contains("seed") ? long_from_json(p["seed"], "payload.seed") : 42;

  std::vector<std::string> failures;
  if (suite == "paper") {
    const PaperClaimsReport claims = check_paper_claims();
    r.data["paper_claims"] = claims_to_json(claims);
    for (const auto& e : claims.entries)
      if (!e.ok) failures.push_back(e.preset + ": " + e.note);
  }
  const ClosedForm cf = form == "printed" ? ClosedForm(tensor_closed_form)
                                          : ClosedForm(tensor_closed_form_corrected);
  const TensorVerifyReport tv =
      verify_tensor_formulas(max_rank, trials, static_cast<std::uint64_t>(seed), cf);
  r.data["tensor_formulas"] = tensor_report_to_json(tv);
  r.data["tensor_formulas"]["closed_form"] = form;
  for (const auto& pr : tv.pairs)
    if (!pr.passed)
      failures.push_back("tensor closed form fails at ranks (" + std::to_string(pr.r1) + ", " +
                         std::to_string(pr.r2) + ")");
  r.data["passed"] = failures.empty();
  if (!failures.empty()) {
    std::string msg;
    for (const auto& f : failures) msg += (msg.empty() ? "" : "; ") + f;
    throw Error(ErrorKind::ClaimViolation, msg);
  }
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void validate_request(const Request& req) {
  const auto it = command_keys().find(req.command);
  if (it == command_keys().end()) schema("unknown command \"" + req.command + "\"");
  if (!req.payload.is_object()) schema("payload must be an object");
  for (const auto& [key, _] : req.payload.items())
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
      schema("unknown key \"" + key + "\" in payload of command " + req.command);
}

Request request_from_json(const json& j) {
  require_keys_subset(j, {"schema", "command", "payload", "output"}, "request");
  if (j.contains("schema") && j["schema"] != "1") schema("unsupported schema version");
  const json& cmd = require(j, "command", "request");
  if (!cmd.is_string()) schema("request.command must be a string");
  Request req;
  req.command = cmd.get<std::string>();
  if (j.contains("payload")) req.payload = j["payload"];
  if (j.contains("output")) {
    const json& o = j["output"];
    if (o == "json") req.output = OutputMode::Json;
    else if (o == "table") req.output = OutputMode::Table;
    else schema("request.output must be \"table\" or \"json\"");
  }
  validate_request(req);
  return req;
}

json request_to_json(const Request& req) {
  return {{"schema", "1"},
          {"command", req.command},
          {"payload", req.payload},
          {"output", req.output == OutputMode::Json ? "json" : "table"}};
}

Request load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    schema(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
           ": malformed JSON");
  }
  try {
    return request_from_json(j);
  } catch (const Error& e) {
    // Point at the offending key when the message names one.
    std::string msg = e.what();
    const auto q1 = msg.find("unknown key \"");
    if (e.kind() == ErrorKind::SchemaError && q1 != std::string::npos) {
      const auto start = q1 + 12;
      const auto q2 = msg.find('"', start + 1);
      const std::string quoted = msg.substr(start, q2 - start + 1);
      const auto at = text.find(quoted);
      if (at != std::string::npos) {
        const auto [line, col] = line_col(text, at);
        schema(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
               msg.substr(msg.find(": ") + 2));
      }
    }
    throw;
  }
}

Response run(const Request& req) {
  Response r;
  r.command = req.command;
  r.request = request_to_json(req);
  try {
    validate_request(req);
    const json& p = req.payload;
    if (req.command == "threefold") cmd_threefold(p, r);
    else if (req.command == "chern") cmd_chern(p, r);
    else if (req.command == "chi") cmd_chi(p, r);
    else if (req.command == "moduli-dim") cmd_moduli(p, r);
    else if (req.command == "serre") cmd_serre(p, r);
    else if (req.command == "ledger") cmd_ledger(p, r);
    else if (req.command == "dzero") cmd_dzero(p, r);
    else if (req.command == "verify") cmd_verify(p, r);
  } catch (const Error& e) {
    r.ok = false;
    r.error_kind = std::string(to_string(e.kind()));
    const std::string what = e.what();
    r.error_message = what.substr(what.find(": ") + 2);
    const bool input = e.kind() == ErrorKind::SchemaError || e.kind() == ErrorKind::ParseError ||
                       e.kind() == ErrorKind::IOError;
    r.exit_code = input ? 2 : 1;
  }
  return r;
}

json response_to_json(const Response& resp) {
  json out = {{"schema", "1"}, {"command", resp.command}, {"status", resp.ok ? "ok" : "error"}};
  if (!resp.ok) out["error"] = {{"kind", resp.error_kind}, {"message", resp.error_message}};
  out["data"] = resp.data;
  out["audit"] = resp.audit;
  out["warnings"] = resp.warnings;
  out["request"] = resp.request;
  return out;
}

std::vector<std::pair<std::string, std::string>> flatten(const json& j, const std::string& prefix) {
  std::vector<std::pair<std::string, std::string>> out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      auto sub = flatten(v, prefix.empty() ? k : prefix + "." + k);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
    if (scalars) {
      std::string s = "[";
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
      out.emplace_back(prefix, s + "]");
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) {
        auto sub = flatten(j[i], prefix + "[" + std::to_string(i) + "]");
        out.insert(out.end(), sub.begin(), sub.end());
      }
    }
  } else {
    out.emplace_back(prefix, scalar_text(j));
  }
  return out;
}

std::string render_table(const Response& resp) {
  std::ostringstream os;
  os << resp.command << ": " << (resp.ok ? "ok" : "error") << "\n";
  if (!resp.ok) os << "  error  " << resp.error_kind << ": " << resp.error_message << "\n";

  auto section = [&](const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, _] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) os << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  };
  section(flatten(resp.data));
  if (!resp.audit.empty()) {
    os << "audit\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& a : resp.audit) rows.emplace_back(a["name"].get<std::string>(), a["value"].get<std::string>());
    section(rows);
  }
  for (const auto& w : resp.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string render(const Response& resp, OutputMode mode) {
  return mode == OutputMode::Json ? response_to_json(resp).dump(2) + "\n" : render_table(resp);
}

}  // namespace chern3::cli
