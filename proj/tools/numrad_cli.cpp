// Command-line front end. Everything numeric goes through the C API in
// numrad.h; this file only shuffles files, flags and exit codes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "numrad.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;       // verify found a broken established entry
constexpr int kExitIo = 2;         // I/O or parse problem
constexpr int kExitNumeric = 3;    // inconclusive single-matrix computation

[[noreturn]] void die_io(const std::string& msg) {
  std::cerr << "numrad: " << msg << "\n";
  std::exit(kExitIo);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_io("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) die_io("read failed for " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die_io("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) die_io("write failed for " + path);
}

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { nr_string_free(s); }
};

struct OwnedMatrix {
  nr_matrix* m = nullptr;
  ~OwnedMatrix() { nr_matrix_free(m); }
};

OwnedMatrix load_matrix(const std::string& path) {
  OwnedMatrix m;
  const std::string text = read_file(path);
  const nr_status st = nr_matrix_from_json(text.c_str(), &m.m);
  if (st != NR_OK) die_io(path + ": " + nr_last_error());
  return m;
}

std::pair<int, int> parse_dims(const std::string& spec) {
  const auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(spec);
      return {d, d};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
  } catch (const std::exception&) {
    die_io("bad --dims \"" + spec + "\", expected lo..hi");
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_compute(const std::string& input, const std::string& quantity) {
  const OwnedMatrix m = load_matrix(input);
  double value = 0.0;
  const nr_status st = nr_compute(m.m, quantity.c_str(), &value);
  if (st == NR_ERR_INVALID_ARGUMENT || st == NR_ERR_PARSE) {
    die_io(nr_last_error());
  }
  if (st == NR_ERR_INCONCLUSIVE || st == NR_ERR_NO_CONVERGENCE) {
    std::printf("%#.12g\n", value);
    std::cerr << "numrad: " << nr_last_error() << "\n";
    return kExitNumeric;
  }
  if (st != NR_OK) {
    std::cerr << "numrad: " << nr_last_error() << "\n";
    return kExitNumeric;
  }
  std::printf("%#.12g\n", value);
  return kExitOk;
}

int cmd_verify(const std::string& ids, const std::string& dims, int trials,
               unsigned long long seed, const std::string& ensembles,
               const std::string& out_path) {
  nlohmann::ordered_json cfg;
  cfg["seed"] = seed;
  if (ids == "all") {
    cfg["ids"] = "all";
  } else {
    cfg["ids"] = split_csv(ids);
  }
  const auto [lo, hi] = parse_dims(dims);
  cfg["dims"] = {lo, hi};
  cfg["trials"] = trials;
  if (ensembles == "default") {
    cfg["ensembles"] = "default";
  } else {
    cfg["ensembles"] = split_csv(ensembles);
  }
  OwnedString report;
  int any_fail = 0;
  const nr_status st =
      nr_verify_json(cfg.dump().c_str(), &report.s, &any_fail);
  if (st != NR_OK) die_io(nr_last_error());
  write_file(out_path, report.s);
  return any_fail ? kExitFail : kExitOk;
}

int cmd_range(const std::string& input, int points, const std::string& out_path) {
  const OwnedMatrix m = load_matrix(input);
  OwnedString csv;
  const nr_status st = nr_range_boundary_csv(m.m, points, &csv.s);
  if (st == NR_ERR_INVALID_ARGUMENT) die_io(nr_last_error());
  if (st != NR_OK) {
    std::cerr << "numrad: " << nr_last_error() << "\n";
    return kExitNumeric;
  }
  write_file(out_path, csv.s);
  return kExitOk;
}

int cmd_expand(const std::string& a_path, const std::string& b_path, int n,
               const std::string& out_path) {
  const OwnedMatrix a = load_matrix(a_path);
  const OwnedMatrix b = load_matrix(b_path);
  OwnedString json;
  const nr_status st = nr_expand_binomial_json(a.m, b.m, n, &json.s);
  if (st == NR_ERR_INVALID_ARGUMENT || st == NR_ERR_CAP_EXCEEDED ||
      st == NR_ERR_DIMENSION_MISMATCH) {
    die_io(nr_last_error());
  }
  if (st != NR_OK) {
    std::cerr << "numrad: " << nr_last_error() << "\n";
    return kExitNumeric;
  }
  write_file(out_path, json.s);
  return kExitOk;
}

int cmd_search(const std::string& id, double alpha, bool has_alpha, double p,
               bool has_p, int n, bool has_n, const std::string& ensemble,
               const std::string& dims, int budget, unsigned long long seed) {
  nlohmann::ordered_json cfg;
  cfg["id"] = id;
  cfg["seed"] = seed;
  const auto [lo, hi] = parse_dims(dims);
  cfg["dims"] = {lo, hi};
  cfg["budget"] = budget;
  if (!ensemble.empty()) cfg["ensemble"] = ensemble;
  if (has_alpha) cfg["alpha"] = alpha;
  if (has_p) cfg["p"] = p;
  if (has_n) cfg["n"] = n;
  OwnedString report;
  const nr_status st = nr_search_json(cfg.dump().c_str(), &report.s);
  if (st == NR_ERR_UNKNOWN_ID || st == NR_ERR_PARSE ||
      st == NR_ERR_INVALID_ARGUMENT) {
    die_io(nr_last_error());
  }
  if (st != NR_OK) {
    std::cerr << "numrad: " << nr_last_error() << "\n";
    return kExitNumeric;
  }
  std::fputs(report.s, stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-inequality toolkit"};
  app.require_subcommand(1);

  // compute
  std::string in_path, quantity;
  auto* compute = app.add_subcommand("compute", "print one scalar quantity");
  compute->add_option("--input", in_path, "matrix JSON file")->required();
  compute->add_option("--quantity", quantity, "w|wmin|norm|ell|r|range-area")
      ->required()
      ->check(CLI::IsMember({"w", "wmin", "norm", "ell", "r", "range-area"}));

  // verify
  std::string ids = "all", dims = "2..8", ensembles = "default", out_path;
  int trials = 1000;
  unsigned long long seed = 42;
  auto* verify = app.add_subcommand("verify", "run the inequality suite");
  verify->add_option("--ids", ids, "all or comma-separated registry ids");
  verify->add_option("--dims", dims, "dimension range lo..hi");
  verify->add_option("--trials", trials, "trials per id")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "master seed (64-bit unsigned)");
  verify->add_option("--ensembles", ensembles, "default or comma-separated names");
  verify->add_option("--out", out_path, "report output path")->required();

  // range
  std::string range_in, range_out;
  int points = 512;
  auto* range = app.add_subcommand("range", "emit numerical-range boundary CSV");
  range->add_option("--input", range_in, "matrix JSON file")->required();
  range->add_option("--points", points, "number of boundary samples");
  range->add_option("--out", range_out, "CSV output path")->required();

  // expand
  std::string a_path, b_path, expand_out;
  int order = 3;
  auto* expand = app.add_subcommand("expand", "non-commutative binomial expansion");
  expand->add_option("--a", a_path, "first matrix JSON file")->required();
  expand->add_option("--b", b_path, "second matrix JSON file")->required();
  expand->add_option("--n", order, "expansion order")->required();
  expand->add_option("--out", expand_out, "JSON output path")->required();

  // search
  std::string search_id, search_ensemble, search_dims = "2..4";
  double alpha = 0.0, p_param = 0.0;
  int n_param = 0, budget = 1000;
  unsigned long long search_seed = 7;
  auto* search = app.add_subcommand("search", "hunt for tight or violating witnesses");
  search->add_option("--id", search_id, "registry id")->required();
  auto* alpha_opt = search->add_option("--alpha", alpha, "pin the exponent");
  auto* p_opt = search->add_option("--p", p_param, "pin the power p");
  auto* n_opt = search->add_option("--n", n_param, "pin the expansion order");
  search->add_option("--ensemble", search_ensemble, "instance ensemble");
  search->add_option("--dims", search_dims, "dimension range lo..hi");
  search->add_option("--budget", budget, "trial budget");
  search->add_option("--seed", search_seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "numrad: " << e.what() << "\n";
    return kExitIo;
  }

  if (compute->parsed()) return cmd_compute(in_path, quantity);
  if (verify->parsed())
    return cmd_verify(ids, dims, trials, seed, ensembles, out_path);
  if (range->parsed()) return cmd_range(range_in, points, range_out);
  if (expand->parsed()) return cmd_expand(a_path, b_path, order, expand_out);
  if (search->parsed()) {
    return cmd_search(search_id, alpha, alpha_opt->count() > 0, p_param,
                      p_opt->count() > 0, n_param, n_opt->count() > 0,
                      search_ensemble, search_dims, budget, search_seed);
  }
  return kExitIo;
}
