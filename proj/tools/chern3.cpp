// chern3: characteristic-class invariants of sheaves on threefolds.
//
// Every subcommand builds a Request payload from its flags and hands it to
// chern3::cli::run, so `--config request.json` and the flag form take exactly
// the same path.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chern3/cli.hpp"
#include "chern3/error.hpp"

namespace {

using chern3::cli::json;

struct ThreefoldOpts {
  std::string preset;
  std::string file;
};

struct SheafOpts {
  long rank = 2;
  std::vector<std::string> c1, c2;
  std::string c3;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chern3::Error(chern3::ErrorKind::IOError, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw chern3::Error(chern3::ErrorKind::SchemaError, path + ": " + e.what());
  }
}

json rat_list(const std::vector<std::string>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

void add_threefold_opts(CLI::App* app, ThreefoldOpts& o) {
  app->add_option("--preset", o.preset, "Complete intersection, e.g. \"[2,3] in P5\"");
  app->add_option("--threefold-file", o.file, "Threefold JSON document");
}

void add_sheaf_opts(CLI::App* app, SheafOpts& o, const std::string& prefix = "") {
  app->add_option("--" + prefix + "rank", o.rank, "Rank")->capture_default_str();
  app->add_option("--" + prefix + "c1", o.c1, "c1 coefficients (comma separated rationals)")->delimiter(',');
  app->add_option("--" + prefix + "c2", o.c2, "c2 pairings with the generators")->delimiter(',');
  app->add_option("--" + prefix + "c3", o.c3, "c3 degree");
}

void put_threefold(json& p, const ThreefoldOpts& o) {
  if (!o.preset.empty()) p["preset"] = o.preset;
  if (!o.file.empty()) p["threefold"] = read_json_file(o.file);
}

json sheaf_json(const SheafOpts& o) {
  json f = {{"rank", o.rank}};
  if (!o.c1.empty()) f["c1"] = rat_list(o.c1);
  if (!o.c2.empty()) f["c2"] = rat_list(o.c2);
  if (!o.c3.empty()) f["c3"] = o.c3;
  return f;
}

void put_sheaf(json& p, const SheafOpts& o) { p.update(sheaf_json(o)); }

json parse_range(const std::string& text, const char* name) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const long lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string rest = text.substr(dots + 2);
    const long hi = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return json::array({lo, hi});
  } catch (const std::exception&) {
    throw chern3::Error(chern3::ErrorKind::SchemaError,
                        std::string("--") + name + " expects lo..hi, got \"" + text + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chern3: exact Chern-class arithmetic and moduli dimension counts on threefolds"};
  app.set_version_flag("--version", "chern3 1.0");
  bool as_json = false;
  std::string config, out_path;
  std::optional<long> seed;
  app.add_flag("--json", as_json, "Emit the JSON response instead of a table");
  app.add_option("--config", config, "Read the whole request from a JSON file");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--seed", seed, "Seed for randomized verification");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto* threefold = app.add_subcommand("threefold", "Build a threefold model and its Chern classes");
  ThreefoldOpts tf_opts;
  int ambient = 0;
  std::vector<int> degrees;
  add_threefold_opts(threefold, tf_opts);
  threefold->add_option("--ambient", ambient, "Ambient projective dimension n");
  threefold->add_option("--degrees", degrees, "Hypersurface degrees")->delimiter(',');

  auto* chern = app.add_subcommand("chern", "Operations on Chern data");
  chern->require_subcommand(1);
  ThreefoldOpts ch_tf;
  SheafOpts ch_f, ch_other;
  std::vector<std::string> twist_L;
  std::string chern_op;
  for (const char* op : {"tensor", "dual", "twist", "delta"}) {
    auto* sub = chern->add_subcommand(op, std::string(op) + " of Chern data");
    add_threefold_opts(sub, ch_tf);
    add_sheaf_opts(sub, ch_f);
    if (std::string(op) == "tensor") add_sheaf_opts(sub, ch_other, "other-");
    if (std::string(op) == "twist")
      sub->add_option("--L", twist_L, "Twisting divisor")->delimiter(',')->required();
    sub->callback([&chern_op, op] { chern_op = op; });
  }

  auto* chi = app.add_subcommand("chi", "Riemann-Roch Euler characteristic, term by term");
  ThreefoldOpts chi_tf;
  SheafOpts chi_f;
  add_threefold_opts(chi, chi_tf);
  add_sheaf_opts(chi, chi_f);

  auto* moduli = app.add_subcommand("moduli-dim", "Ext Euler characteristic and expected dimension");
  ThreefoldOpts mod_tf;
  SheafOpts mod_f;
  add_threefold_opts(moduli, mod_tf);
  add_sheaf_opts(moduli, mod_f);

  auto* serre = app.add_subcommand("serre", "Convert between c3 and the genus of the associated curve");
  ThreefoldOpts serre_tf;
  bool to_c3 = false, to_genus = false;
  std::vector<std::string> serre_det, serre_c2;
  std::string serre_genus, serre_c3v;
  add_threefold_opts(serre, serre_tf);
  auto* f_to_c3 = serre->add_flag("--to-c3", to_c3, "genus -> c3");
  serre->add_flag("--to-genus", to_genus, "c3 -> genus")->excludes(f_to_c3);
  serre->add_option("--det", serre_det, "c1 of det F")->delimiter(',');
  serre->add_option("--c2", serre_c2, "c2(F) pairings")->delimiter(',');
  serre->add_option("--genus", serre_genus, "Arithmetic genus");
  serre->add_option("--c3", serre_c3v, "c3(F)");

  auto* ledger = app.add_subcommand("ledger", "dim Ext^1(F,F) from cohomology dimensions");
  std::optional<long> h0_N, h0_F, h0_IF;
  bool h1_zero = false;
  std::string ledger_file;
  ledger->add_option("--h0-N", h0_N, "h^0(C, N_C/X)");
  ledger->add_option("--h0-F", h0_F, "h^0(X, F)");
  ledger->add_option("--h0-IF", h0_IF, "h^0(X, I_C (x) F)");
  ledger->add_flag("--h1-IC-zero", h1_zero, "Assert H^1(X, I_C) = 0");
  ledger->add_option("--ledger-file", ledger_file, "Ledger JSON document");

  auto* dzero = app.add_subcommand("dzero", "Solve expected dimension = 0 over (k, c)");
  ThreefoldOpts dz_tf;
  std::string k_range, c_range;
  bool verify_paper = false;
  add_threefold_opts(dzero, dz_tf);
  dzero->add_option("--k", k_range, "Range lo..hi for c1 = kH (default -10..10)");
  dzero->add_option("--c", c_range, "Range lo..hi for c = H.c2 (default -50..50)");
  dzero->add_flag("--verify-paper", verify_paper, "Check the seven Fano complete-intersection cases");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "paper", closed_form = "printed";
  bool tensor_only = false;
  long max_rank = 4, trials = 100;
  verify->add_option("--suite", suite, "paper | tensor")->capture_default_str();
  verify->add_flag("--tensor-formulas", tensor_only, "Same as --suite tensor");
  verify->add_option("--max-rank", max_rank, "Largest rank pair checked")->capture_default_str();
  verify->add_option("--trials", trials, "Random specialisations per rank pair")->capture_default_str();
  verify->add_option("--closed-form", closed_form, "printed | corrected")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  chern3::cli::Request req;
  try {
    if (!config.empty()) {
      req = chern3::cli::load_config(config);
      if (as_json) req.output = chern3::cli::OutputMode::Json;
    } else {
      json p = json::object();
      if (threefold->parsed()) {
        req.command = "threefold";
        put_threefold(p, tf_opts);
        if (ambient != 0 || !degrees.empty()) {
          p["ambient"] = ambient;
          p["degrees"] = degrees;
        }
      } else if (chern->parsed()) {
        req.command = "chern";
        p["op"] = chern_op;
        put_threefold(p, ch_tf);
        put_sheaf(p, ch_f);
        if (chern_op == "tensor") p["other"] = sheaf_json(ch_other);
        if (chern_op == "twist") p["L"] = rat_list(twist_L);
      } else if (chi->parsed()) {
        req.command = "chi";
        put_threefold(p, chi_tf);
        put_sheaf(p, chi_f);
      } else if (moduli->parsed()) {
        req.command = "moduli-dim";
        put_threefold(p, mod_tf);
        put_sheaf(p, mod_f);
      } else if (serre->parsed()) {
        req.command = "serre";
        put_threefold(p, serre_tf);
        p["direction"] = to_c3 ? "to-c3" : (to_genus ? "to-genus" : "");
        if (!serre_det.empty()) p["det"] = rat_list(serre_det);
        if (!serre_c2.empty()) p["c2"] = rat_list(serre_c2);
        if (!serre_genus.empty()) p["genus"] = serre_genus;
        if (!serre_c3v.empty()) p["c3"] = serre_c3v;
      } else if (ledger->parsed()) {
        req.command = "ledger";
        if (!ledger_file.empty()) p = read_json_file(ledger_file);
        if (h0_N) p["h0_N"] = *h0_N;
        if (h0_F) p["h0_F"] = *h0_F;
        if (h0_IF) p["h0_IF"] = *h0_IF;
        if (h1_zero) p["h1_IC_zero"] = true;
      } else if (dzero->parsed()) {
        req.command = "dzero";
        if (verify_paper) {
          p["verify_paper"] = true;
        } else {
          put_threefold(p, dz_tf);
          if (!k_range.empty()) p["k"] = parse_range(k_range, "k");
          if (!c_range.empty()) p["c"] = parse_range(c_range, "c");
        }
      } else if (verify->parsed()) {
        req.command = "verify";
        p["suite"] = tensor_only ? "tensor" : suite;
        p["max_rank"] = max_rank;
        p["trials"] = trials;
        p["seed"] = seed.value_or(42);
        p["closed_form"] = closed_form;
      } else {
        std::cerr << app.help();
        return 2;
      }
      req.payload = std::move(p);
      req.output = as_json ? chern3::cli::OutputMode::Json : chern3::cli::OutputMode::Table;
      chern3::cli::validate_request(req);
    }
  } catch (const chern3::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == chern3::ErrorKind::SchemaError || e.kind() == chern3::ErrorKind::IOError ? 2 : 1;
  }

  const chern3::cli::Response resp = chern3::cli::run(req);
  const std::string text = chern3::cli::render(resp, req.output);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "IOError: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (!resp.ok) std::cerr << resp.error_kind << ": " << resp.error_message << "\n";
  return resp.exit_code;
}
