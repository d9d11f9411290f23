// octadet command line: exact charpoly computation, the three finite free
// convolutions (closed form, group sum, or both with comparison), the
// verification suite, and the four-subset permutation-sum explorer.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "octadet/freeconv.hpp"
#include "octadet/hyperoct.hpp"
#include "octadet/json_io.hpp"
#include "octadet/verify.hpp"

namespace {

using namespace octadet;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;  // a mathematical failure, verified
constexpr int kExitUsage = 2;    // usage, input, or guard error

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw parse_error("'" + path + "': " + e.what());
  }
  return j;
}

Matrix load_matrix(const std::string& path, const RingPtr& ring) {
  try {
    return matrix_from_json(load_json(path), ring);
  } catch (const parse_error& e) {
    throw parse_error(std::string("'" + path + "': ") + e.what());
  }
}

RingPtr ring_from_flag(const std::string& spec) {
  return spec.empty() ? nullptr : Ring::parse(spec);
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot write '" + out_path + "'");
    out << text;
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_charpoly(const std::string& ring_spec, const std::string& matrix_path) {
  Matrix a = load_matrix(matrix_path, ring_from_flag(ring_spec));
  if (!a.is_square())
    throw domain_error("'" + matrix_path + "': charpoly needs a square matrix");
  emit(coeffs_to_json(charpoly(a)), "");
  return kExitOk;
}

int run_convolve(const std::string& kind, const std::string& mode,
                 const std::string& ring_spec,
                 const std::map<char, std::string>& files) {
  RingPtr ring = ring_from_flag(ring_spec);
  auto need = [&](char key) {
    auto it = files.find(key);
    if (it == files.end() || it->second.empty())
      throw domain_error(std::string("convolve ") + kind + " needs --" + key);
    return load_matrix(it->second, ring);
  };
  bool want_closed = mode == "closed" || mode == "both";
  bool want_group = mode == "groupsum" || mode == "both";
  json out;
  CharPolyCoeffs group_side{nullptr, {}};
  ConvCoefficients closed_side{{nullptr, {}}, ""};
  if (kind == "add") {
    Matrix a = need('a'), b = need('b');
    if (want_closed) closed_side = conv_add_rhs(charpoly(a), charpoly(b));
    if (want_group) group_side = conv_add_lhs(a, b);
  } else if (kind == "mult") {
    Matrix a = need('a'), b = need('b'), c = need('c');
    if (want_closed)
      closed_side = conv_mult_rhs(charpoly(mat_mul(b, c)), charpoly(a));
    if (want_group) group_side = conv_mult_lhs(a, b, c);
  } else {  // rect
    Matrix a = need('a'), b = need('b'), c = need('c'), d = need('d');
    int n = a.rows(), m = a.cols();
    if (n > m) throw domain_error("convolve rect: needs n <= m");
    if (want_closed)
      closed_side = conv_rect_rhs(minor_sum_vector(mat_mul(a, c), n),
                                  minor_sum_vector(mat_mul(b, d), n), n, m);
    if (want_group) group_side = conv_rect_lhs(a, b, c, d);
  }
  if (want_closed) {
    json cj = coeffs_to_json(closed_side.poly);
    cj["provenance"] = closed_side.provenance;
    out["closed"] = std::move(cj);
  }
  if (want_group) out["groupsum"] = coeffs_to_json(group_side);
  bool equal = true;
  if (want_closed && want_group) {
    equal = closed_side.poly == group_side;
    out["equal"] = equal;
  }
  emit(out, "");
  return equal ? kExitOk : kExitMismatch;
}

int run_verify(const SuiteConfig& cfg, const std::string& out_path) {
  Report report = run_suite(cfg);
  emit(report.to_json(), out_path);
  std::cerr << "verify: " << report.total_failed() << " failure(s), "
            << report.wall_ms << " ms\n";
  return report.total_failed() == 0 ? kExitOk : kExitMismatch;
}

int run_explore(int n, int k, const std::string& out_path) {
  FourSetTable table = four_set_table(n, k);
  {
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot write '" + out_path + "'");
    write_csv(table, out);
  }
  std::map<Int, std::uint64_t> histogram;
  for (const auto& row : table.entries) ++histogram[std::get<4>(row)];
  std::cout << "rows: " << table.entries.size() << "\n";
  for (const auto& [value, count] : histogram)
    std::cout << "value " << value << ": " << count << " row(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinantal identities over commutative rings"};
  app.require_subcommand(1);

  std::string ring_spec, matrix_path;
  auto* cp = app.add_subcommand("charpoly",
                                "coefficients of det(xI + A), exact");
  cp->add_option("--ring", ring_spec, "ring spec: int | mod:<m> | poly:<spec>");
  cp->add_option("--matrix", matrix_path, "matrix JSON file")->required();

  std::string conv_kind, conv_mode = "both";
  std::map<char, std::string> conv_files;
  auto* conv = app.add_subcommand("convolve",
                                  "finite free convolution, closed form "
                                  "and/or group sum");
  conv->add_option("kind", conv_kind, "add | mult | rect")
      ->required()
      ->check(CLI::IsMember({"add", "mult", "rect"}));
  conv->add_option("--mode", conv_mode, "closed | groupsum | both")
      ->check(CLI::IsMember({"closed", "groupsum", "both"}));
  conv->add_option("--ring", ring_spec, "ring spec");
  conv->add_option("--a", conv_files['a'], "matrix A JSON file");
  conv->add_option("--b", conv_files['b'], "matrix B JSON file");
  conv->add_option("--c", conv_files['c'], "matrix C JSON file");
  conv->add_option("--d", conv_files['d'], "matrix D JSON file");

  SuiteConfig cfg;
  std::string rings_flag = "int,mod:6,mod:2";
  std::string identities_flag, verify_out, mutation_flag = "none";
  int max_dim = 3;
  auto* ver = app.add_subcommand("verify", "run the identity suite");
  ver->add_option("--seed", cfg.seed, "rng seed");
  ver->add_option("--trials", cfg.trials, "random trials per identity cell");
  ver->add_option("--max-dim", max_dim, "dimension cap (both n and m)");
  ver->add_option("--rings", rings_flag, "comma-separated ring specs");
  ver->add_option("--identities", identities_flag,
                  "comma-separated identity subset (default: all)");
  ver->add_option("--jobs", cfg.jobs, "worker threads (values are unaffected)");
  ver->add_option("--mutation", mutation_flag,
                  "sabotage one closed-form constant (harness self-test)");
  ver->add_option("--out", verify_out, "report file (default: stdout)");

  int ex_n = 0, ex_k = 0;
  std::string ex_kind, ex_out;
  auto* ex = app.add_subcommand("explore", "tabulate open-problem group sums");
  ex->add_option("kind", ex_kind, "four-set")
      ->required()
      ->check(CLI::IsMember({"four-set"}));
  ex->add_option("--n", ex_n, "ambient dimension (n <= 6)")->required();
  ex->add_option("--k", ex_k, "subset size")->required();
  ex->add_option("--out", ex_out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cp->parsed()) return run_charpoly(ring_spec, matrix_path);
    if (conv->parsed())
      return run_convolve(conv_kind, conv_mode, ring_spec, conv_files);
    if (ver->parsed()) {
      cfg.max_n = cfg.max_m = max_dim;
      cfg.rings = split_csv(rings_flag);
      cfg.identities = split_csv(identities_flag);
      cfg.mutation = mutation_from_name(mutation_flag);
      return run_verify(cfg, verify_out);
    }
    if (ex->parsed()) return run_explore(ex_n, ex_k, ex_out);
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
