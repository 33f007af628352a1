// Command-line front end for the sum-rank code library; all math goes
// through the C API in sumrank.h.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumrank.h"

using nlohmann::json;

namespace {

int fail_with(char* err, int status) {
  if (err) {
    std::cerr << err;
    srk_string_free(err);
  } else {
    std::cerr << "{\"kind\":\"Internal\",\"message\":\"unknown error\"}\n";
  }
  return status;
}

int write_out(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "{\"kind\":\"Io\",\"message\":\"cannot open " << path
              << "\"}\n";
    return 2;
  }
  f << text;
  return 0;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sum-rank metric code toolkit"};
  app.require_subcommand(1);

  // shared options
  std::string family, out_path, format = "json", code_path, checks;
  std::string u_basis_path;
  unsigned q = 2, e = 0, m = 2, k = 2, t = 0, n = 0, sigma_power = 1;
  unsigned workers = 1;
  std::uint64_t budget = 1ull << 22, seed = 0;
  std::vector<unsigned> modulus, p_poly;
  std::optional<unsigned> gamma, delta;

  auto* con = app.add_subcommand("construct", "build a code from a family");
  con->add_option("--family", family, "family name")->required();
  con->add_option("--q", q, "subfield size");
  con->add_option("--e", e, "extension degree of q over its prime field");
  con->add_option("--m", m, "extension degree of the big field over F_q");
  con->add_option("--k", k, "code dimension");
  con->add_option("--t", t, "number of blocks");
  con->add_option("--n", n, "block length");
  con->add_option("--sigma-power", sigma_power, "Frobenius power defining sigma");
  con->add_option("--gamma", gamma, "first extension scalar (element code)");
  con->add_option("--delta", delta, "second extension scalar (element code)");
  con->add_option("--modulus", modulus, "field modulus, low-degree-first");
  con->add_option("--p-poly", p_poly, "Singer polynomial (element codes)");
  con->add_option("--U-basis", u_basis_path,
                  "JSON file with F_q-basis rows of U (element codes)");
  con->add_option("--seed", seed, "recorded in provenance");
  con->add_option("--out", out_path, "output file (default stdout)");

  auto* ana = app.add_subcommand("analyze", "metric report for a code file");
  ana->add_option("code", code_path, "code JSON file")->required();
  ana->add_option("--workers", workers, "sweep worker threads");
  ana->add_option("--budget", budget, "max projective sweep size");
  ana->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  ana->add_option("--out", out_path, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "cross-module checks on a code file");
  ver->add_option("code", code_path, "code JSON file")->required();
  ver->add_option("--checks", checks,
                  "comma-separated: duality,geometry-msrd,ext-formula,"
                  "bonisoli,line-cover")
      ->required();
  ver->add_option("--workers", workers, "sweep worker threads");
  ver->add_option("--budget", budget, "max projective sweep size");
  ver->add_option("--out", out_path, "output file (default stdout)");

  auto* sea = app.add_subcommand("search",
                                 "admissible one-weight MSRD block shapes");
  sea->add_option("--q", q, "subfield size")->required();
  sea->add_option("--m", m, "extension degree")->required();
  sea->add_option("--t", t, "number of blocks")->required();
  sea->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) return app.exit(ex);
    std::cerr << "{\"kind\":\"BadArguments\",\"message\":\""
              << ex.what() << "\"}\n";
    return 2;
  }

  char* err = nullptr;

  if (con->parsed()) {
    json params{{"family", family}, {"q", q}, {"m", m}, {"k", k},
                {"sigma_power", sigma_power}};
    if (e) params["e"] = e;
    if (t) params["t"] = t;
    if (n) params["n"] = n;
    if (gamma) params["gamma"] = *gamma;
    if (delta) params["delta"] = *delta;
    if (!modulus.empty()) params["modulus"] = modulus;
    if (!p_poly.empty()) params["p_poly"] = p_poly;
    if (!u_basis_path.empty()) {
      auto text = read_file(u_basis_path);
      if (!text) {
        std::cerr << "{\"kind\":\"Io\",\"message\":\"cannot read "
                  << u_basis_path << "\"}\n";
        return 2;
      }
      try {
        params["U_basis"] = json::parse(*text);
      } catch (const json::exception& ex2) {
        std::cerr << "{\"kind\":\"BadSchema\",\"message\":\"" << ex2.what()
                  << "\"}\n";
        return 2;
      }
    }
    srk_code* code = nullptr;
    int st = srk_construct(params.dump().c_str(), &code, &err);
    if (st != SRK_OK) return fail_with(err, st);
    char* code_json = nullptr;
    st = srk_code_serialize(code, &code_json, &err);
    srk_code_free(code);
    if (st != SRK_OK) return fail_with(err, st);
    json doc = json::parse(code_json);
    srk_string_free(code_json);
    doc["provenance"] = {{"family", family},
                         {"parameters", params},
                         {"seed", seed},
                         {"version", srk_version()}};
    return write_out(out_path, (doc.dump(2) + "\n").c_str());
  }

  srk_code* code = nullptr;
  if (ana->parsed() || ver->parsed()) {
    auto text = read_file(code_path);
    if (!text) {
      std::cerr << "{\"kind\":\"Io\",\"message\":\"cannot read " << code_path
                << "\"}\n";
      return 2;
    }
    int st = srk_code_parse(text->c_str(), &code, &err);
    if (st != SRK_OK) return fail_with(err, st);
  }

  if (ana->parsed()) {
    char* report = nullptr;
    int st = (format == "csv")
                 ? srk_weight_csv(code, workers, budget, &report, &err)
                 : srk_analyze(code, workers, budget, &report, &err);
    srk_code_free(code);
    if (st != SRK_OK) return fail_with(err, st);
    int rc = write_out(out_path, report);
    srk_string_free(report);
    return rc;
  }

  if (ver->parsed()) {
    char* report = nullptr;
    int st = srk_verify(code, checks.c_str(), workers, budget, &report, &err);
    srk_code_free(code);
    if (st != SRK_OK && st != SRK_VERIFY_FAILED) return fail_with(err, st);
    int rc = write_out(out_path, report);
    srk_string_free(report);
    return rc ? rc : st;
  }

  // search
  json params{{"q", q}, {"m", m}, {"t", t}};
  char* csv = nullptr;
  int st = srk_search(params.dump().c_str(), &csv, &err);
  if (st != SRK_OK) return fail_with(err, st);
  int rc = write_out(out_path, csv);
  srk_string_free(csv);
  return rc;
}
