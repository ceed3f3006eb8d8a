// Command-line front end: pair validation, mld, widths, certificates,
// the lambda table and corpus generation. Results go to stdout as JSON
// (CSV for `table --csv`); errors go to stderr as {"error": {...}}.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toric/complement.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/toric_pair.hpp"
#include "toric/width_search.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace toric;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void print_error(const std::string& kind, const std::string& message) {
  Json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

Json functional_json(const DualFunctional& phi) {
  Json out = Json::array();
  for (const auto& c : phi.coords()) out.push_back(c.fits_slong_p() ? Json(c.get_si()) : Json(c.get_str()));
  return out;
}

Json report_json(const VerificationReport& report) {
  Json j;
  j["passed"] = report.passed();
  Json items = Json::array();
  for (const auto& item : report.items) {
    Json i;
    i["name"] = item.name;
    i["passed"] = item.passed;
    i["detail"] = item.detail;
    items.push_back(std::move(i));
  }
  j["checks"] = std::move(items);
  return j;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InputError("empty epsilon list");
  return out;
}

Rational radius_for(std::size_t d, const Rational& eps) {
  return Rational(static_cast<long>(d * (d + 1))) / eps;
}

int cmd_validate(const std::string& path) {
  const ToricPair pair = parse_pair_unchecked(read_file(path));
  const auto violations = validate(pair);
  Json j;
  j["valid"] = violations.empty();
  j["violations"] = violations;
  std::cout << j.dump(2) << "\n";
  return violations.empty() ? kOk : kCheckFailed;
}

int cmd_mld(const std::string& path) {
  std::cout << to_string(mld(parse_pair(read_file(path)))) << "\n";
  return kOk;
}

int cmd_width(const std::string& path, const std::string& radius_text) {
  const ToricPair pair = parse_pair(read_file(path));
  const VPolytope u = body(pair).hull;
  const Rational radius =
      radius_text.empty() ? radius_for(pair.dim, mld(pair)) : parse_rational(radius_text);
  const WidthResult r = min_width_functional(u, radius);
  Json j;
  j["functional"] = functional_json(r.functional);
  j["interval"] = {to_string(r.interval.lo), to_string(r.interval.hi)};
  j["width"] = to_string(r.width);
  j["radius"] = to_string(radius);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_construct(const std::string& path, const std::string& eps_text, const std::string& mode_text,
                  const std::string& n_text, const std::string& out_path) {
  const ToricPair pair = parse_pair(read_file(path));
  std::optional<Rational> eps;
  if (!eps_text.empty()) eps = parse_rational(eps_text);
  std::optional<Integer> n;
  if (!n_text.empty()) {
    const Rational value = parse_rational(n_text);
    if (value.get_den() != 1) throw InputError("--n must be an integer");
    n = value.get_num();
  }
  const ComplementCertificate cert = construct_complement(pair, eps, parse_mode(mode_text), n);
  const bool verified = verify_certificate(pair, cert).passed();
  const std::string text = emit_certificate(cert, verified);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out_path, text);
  }
  return verified ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& pair_path, const std::string& cert_path) {
  const ToricPair pair = parse_pair(read_file(pair_path));
  const ComplementCertificate cert = parse_certificate(read_file(cert_path), false);
  const VerificationReport report = verify_certificate(pair, cert);
  std::cout << report_json(report).dump(2) << "\n";
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_oracle(const std::string& path, const std::string& cap_text) {
  const ToricPair pair = parse_pair(read_file(path));
  if (pair.dim > 3) throw InputError("oracle-lambda supports dimension at most 3");
  const Rational cap =
      cap_text.empty() ? construct_complement(pair).witness : parse_rational(cap_text);
  const LambdaOracleResult r = lambda_exact_oracle(body(pair).hull, cap);
  Json j;
  j["lambda"] = to_string(r.lambda);
  Json basis = Json::array();
  for (const auto& phi : r.basis) basis.push_back(functional_json(phi));
  j["basis"] = std::move(basis);
  j["cap"] = to_string(cap);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_table(std::size_t dim, const std::string& eps_text, bool csv) {
  if (dim < 1) throw InputError("--dim must be at least 1");
  const auto epsilons = parse_rational_list(eps_text);
  if (csv) {
    std::cout << "dim,epsilon,lambda,sum_bound\n";
    for (const auto& eps : epsilons) {
      std::cout << dim << "," << to_string(eps) << "," << to_string(lambda_budget(dim, eps)) << ","
                << to_string(lambda_sum_bound(dim, eps)) << "\n";
    }
    return kOk;
  }
  Json rows = Json::array();
  for (const auto& eps : epsilons) {
    Json row;
    row["dim"] = dim;
    row["epsilon"] = to_string(eps);
    row["lambda"] = to_string(lambda_budget(dim, eps));
    row["sum_bound"] = to_string(lambda_sum_bound(dim, eps));
    rows.push_back(std::move(row));
  }
  std::cout << rows.dump(2) << "\n";
  return kOk;
}

int cmd_volume(const std::string& path) {
  const ToricPair pair = parse_pair(read_file(path));
  const Rational vol = anticanonical_volume(pair);
  const Rational witness = construct_complement(pair).witness;
  Rational bound(1);
  for (std::size_t k = 0; k < pair.dim; ++k) bound /= witness;
  const bool holds = vol >= bound;
  Json j;
  j["volume"] = to_string(vol);
  j["witness"] = to_string(witness);
  j["witness_power"] = to_string(bound);
  j["holds"] = holds;
  std::cout << j.dump(2) << "\n";
  return holds ? kOk : kCheckFailed;
}

int cmd_corpus(std::size_t dim, std::size_t count, std::uint64_t seed, const std::string& out_dir,
               std::size_t rays, unsigned denominator) {
  if (const char* env = std::getenv("SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("SEED is not an unsigned integer: ") + env);
    }
  }
  if (rays == 0) rays = dim == 1 ? 2 : dim + 2;
  std::filesystem::create_directories(out_dir);
  Json files = Json::array();
  for (std::size_t k = 0; k < count; ++k) {
    ToricPair pair = random_pair(dim, rays, denominator, seed + k);
    char name[32];
    std::snprintf(name, sizeof name, "pair-%04zu.json", k);
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    write_file_atomic(path, emit_pair(pair));
    files.push_back(path.string());
  }
  Json j;
  j["seed"] = seed;
  j["files"] = std::move(files);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric pair computations: mld, widths, bounded complements"};
  app.require_subcommand(1);

  std::string pair_path;
  std::string cert_path;
  std::string radius;
  std::string epsilon;
  std::string mode = "scaled";
  std::string n;
  std::string out;
  std::string cap;
  std::string epsilons;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::size_t rays = 0;
  unsigned denominator = 4;
  std::uint64_t seed = 1;
  bool csv = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the standing hypotheses of a pair");
  validate_cmd->add_option("pair", pair_path, "Pair JSON")->required();

  auto* mld_cmd = app.add_subcommand("mld", "Minimal log discrepancy as p/q");
  mld_cmd->add_option("pair", pair_path, "Pair JSON")->required();

  auto* width_cmd = app.add_subcommand("width", "Minimal-width primitive functional");
  width_cmd->add_option("pair", pair_path, "Pair JSON")->required();
  width_cmd->add_option("--radius", radius, "Search radius p/q (default d(d+1)/mld)");

  auto* construct_cmd = app.add_subcommand("construct", "Build a complement certificate");
  construct_cmd->add_option("pair", pair_path, "Pair JSON")->required();
  construct_cmd->add_option("--epsilon", epsilon, "mld lower bound p/q (default mld)");
  construct_cmd->add_option("--mode", mode, "scaled or sharp")
      ->check(CLI::IsMember({"scaled", "sharp", "sharpened"}));
  construct_cmd->add_option("--n", n, "Complement index (default ceil(witness))");
  construct_cmd->add_option("-o,--output", out, "Write the certificate here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate against a pair");
  verify_cmd->add_option("pair", pair_path, "Pair JSON")->required();
  verify_cmd->add_option("certificate", cert_path, "Certificate JSON")->required();

  auto* oracle_cmd = app.add_subcommand("oracle-lambda", "Exact lambda by exhaustive search (d <= 3)");
  oracle_cmd->add_option("pair", pair_path, "Pair JSON")->required();
  oracle_cmd->add_option("--cap", cap, "Width cap p/q (default constructed witness)");

  auto* table_cmd = app.add_subcommand("table", "lambda(d, eps) and the sum upper bound");
  table_cmd->add_option("--dim", dim, "Dimension")->required();
  table_cmd->add_option("--epsilons", epsilons, "Comma-separated p/q values")->required();
  table_cmd->add_flag("--csv", csv, "CSV instead of JSON");

  auto* volume_cmd = app.add_subcommand("volume", "Anticanonical volume against witness^-d");
  volume_cmd->add_option("pair", pair_path, "Pair JSON")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Write deterministic random pairs");
  corpus_cmd->add_option("--dim", dim, "Dimension 1 to 4")->required();
  corpus_cmd->add_option("--count", count, "Number of pairs")->required();
  corpus_cmd->add_option("--seed", seed, "Base seed (SEED overrides)");
  corpus_cmd->add_option("--out", out, "Output directory")->required();
  corpus_cmd->add_option("--rays", rays, "Rays per pair (default dim + 2)");
  corpus_cmd->add_option("--denominator", denominator, "Coefficient denominator bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(pair_path);
    if (*mld_cmd) return cmd_mld(pair_path);
    if (*width_cmd) return cmd_width(pair_path, radius);
    if (*construct_cmd) return cmd_construct(pair_path, epsilon, mode, n, out);
    if (*verify_cmd) return cmd_verify(pair_path, cert_path);
    if (*oracle_cmd) return cmd_oracle(pair_path, cap);
    if (*table_cmd) return cmd_table(dim, epsilons, csv);
    if (*volume_cmd) return cmd_volume(pair_path);
    if (*corpus_cmd) return cmd_corpus(dim, count, seed, out, rays, denominator);
  } catch (const InputError& e) {
    print_error(e.kind(), e.what());
    return kUsage;
  } catch (const ContractError& e) {
    print_error(e.kind(), e.what());
    return kUsage;
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return kCheckFailed;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kCheckFailed;
  }
  return kUsage;
}
