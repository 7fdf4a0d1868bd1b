// Command-line front end. Exit codes: 0 success or agreement, 1 verification
// disagreement, 2 usage or parse error, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "cohsys/campaign.hpp"
#include "cohsys/classification.hpp"
#include "cohsys/delta.hpp"
#include "cohsys/json_io.hpp"
#include "cohsys/stability.hpp"

namespace {

using namespace cohsys;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void print(const Json& j, const std::string& format) {
  if (format == "compact") {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int cmd_classify(int n, int d, int k, const std::string& format) {
  print(to_json(classify(n, d, k)), format);
  return kExitOk;
}

int cmd_cross_check(int n, int d, const std::string& format) {
  const CrossCheckReport r = cross_check(n, d);
  print(to_json(r), format);
  return r.all_agree() ? kExitOk : kExitDisagree;
}

int cmd_table(const std::string& n, const std::string& d, const std::string& k, const std::string& format) {
  const auto rows = make_table(parse_int_range(n), parse_int_range(d), parse_int_range(k));
  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << kTableHeader << '\n';
    for (const auto& r : rows) std::cout << to_csv(r) << '\n';
  }
  return kExitOk;
}

int cmd_verify(VerifyCampaignConfig config, const std::string& n, const std::string& d, const std::string& k,
               const std::string& rule, const std::string& alphas, const std::string& format) {
  config.n = parse_int_range(n);
  config.d = parse_int_range(d);
  config.k = parse_int_range(k);
  config.rule = parse_alpha_rule(rule);
  if (!alphas.empty()) {
    config.alphas = parse_rational_list(alphas);
    if (rule == "interval-midpoint") config.rule = AlphaRule::List;
  }
  const CampaignReport report = run_campaign(config);
  print(to_json(report), format);
  return report.agree() ? kExitOk : kExitDisagree;
}

int cmd_delta_check(int a, int t, std::uint32_t q, int trials, std::uint64_t seed, const std::string& format) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  const PrimeField F(q);
  const int formula = delta_formula(a, t);
  std::mt19937_64 rng(seed);
  int observed_max = -1;
  int matches = 0;
  int exceed = 0;
  for (int i = 0; i < trials; ++i) {
    const int v = delta_bruteforce(F, random_delta_input(F, a, t, rng));
    observed_max = std::max(observed_max, v);
    matches += v == formula ? 1 : 0;
    exceed += v > formula ? 1 : 0;
  }
  Json j{{"a", a},         {"t", t},           {"q", q},
         {"seed", seed},   {"trials", trials}, {"formula", formula},
         {"observed_max", observed_max},       {"exceeding", exceed},
         {"matches", matches},                 {"match_fraction", static_cast<double>(matches) / trials}};
  const bool ok = observed_max == formula && exceed == 0;
  j["agree"] = ok;
  print(j, format);
  return ok ? kExitOk : kExitDisagree;
}

int cmd_check_instance(const std::string& path, const std::string& alpha, bool force_large, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cannot parse '") + path + "': " + e.what());
  }
  const SystemInstance inst = instance_from_json(j);
  print(to_json(is_alpha_stable(inst, parse_rational(alpha), CheckerOptions{force_large})), format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent systems on the projective line: classification and alpha-stability checks"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::string format = "pretty";

  int n = 0;
  int d = 0;
  int k = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Non-emptiness verdict for (n, d, k) as JSON");
  classify_cmd->add_option("n", n, "rank")->required();
  classify_cmd->add_option("d", d, "degree")->required();
  classify_cmd->add_option("k", k, "number of sections")->required();
  classify_cmd->add_option("--format", format, "pretty or compact JSON")->check(CLI::IsMember({"pretty", "compact"}));

  auto* cross_cmd = app.add_subcommand("cross-check", "Compare overlapping case formulas at (n, d)");
  cross_cmd->add_option("n", n, "rank")->required();
  cross_cmd->add_option("d", d, "degree")->required();
  cross_cmd->add_option("--format", format, "pretty or compact JSON")->check(CLI::IsMember({"pretty", "compact"}));

  std::string n_range = "2";
  std::string d_range = "2";
  std::string k_range = "1";
  std::string table_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "Classification rows over ranges such as 2..5");
  table_cmd->add_option("--n", n_range, "rank range");
  table_cmd->add_option("--d", d_range, "degree range");
  table_cmd->add_option("--k", k_range, "section count range");
  table_cmd->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  VerifyCampaignConfig config;
  std::string rule = "interval-midpoint";
  std::string alphas;
  auto* verify_cmd = app.add_subcommand("verify", "Sample instances and compare their stability with the verdicts");
  verify_cmd->add_option("--n", n_range, "rank range");
  verify_cmd->add_option("--d", d_range, "degree range");
  verify_cmd->add_option("--k", k_range, "section count range");
  verify_cmd->add_option("--q", config.q, "field size (prime)");
  verify_cmd->add_option("--trials", config.trials, "instances per cell");
  verify_cmd->add_option("--seed", config.seed, "campaign seed");
  verify_cmd->add_option("--alpha-rule", rule, "interval-midpoint, cell-midpoints or list")
      ->check(CLI::IsMember({"interval-midpoint", "cell-midpoints", "list"}));
  verify_cmd->add_option("--alphas", alphas, "comma-separated alpha values, e.g. 1/2,1,10");
  verify_cmd->add_option("--min-stable-fraction", config.min_stable_fraction,
                         "fraction of instances required stable where stability is predicted")
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--empty-samples", config.empty_samples, "alpha probed per cell predicted empty");
  verify_cmd->add_flag("--generating", config.generating, "sample only systems whose sections generate E");
  verify_cmd->add_flag("--force-large", config.force_large, "allow k > 3 at q > 31");
  verify_cmd->add_option("--format", format, "pretty or compact JSON")->check(CLI::IsMember({"pretty", "compact"}));

  int a = 1;
  int t = 1;
  std::uint32_t q = PrimeField::kDefaultModulus;
  int trials = 50;
  std::uint64_t seed = 1;
  auto* delta_cmd = app.add_subcommand("delta-check", "Compare the delta formula with the brute-force oracle");
  delta_cmd->add_option("a", a, "degree parameter")->required();
  delta_cmd->add_option("t", t, "number of columns")->required();
  delta_cmd->add_option("--q", q, "field size (prime)");
  delta_cmd->add_option("--trials", trials, "random draws");
  delta_cmd->add_option("--seed", seed, "seed");
  delta_cmd->add_option("--format", format, "pretty or compact JSON")->check(CLI::IsMember({"pretty", "compact"}));

  std::string path;
  std::string alpha;
  bool force_large = false;
  auto* check_cmd = app.add_subcommand("check-instance", "Alpha-stability report for an instance file");
  check_cmd->add_option("path", path, "instance JSON file")->required();
  check_cmd->add_option("alpha", alpha, "alpha as p/q")->required();
  check_cmd->add_flag("--force-large", force_large, "allow k > 3 at q > 31");
  check_cmd->add_option("--format", format, "pretty or compact JSON")->check(CLI::IsMember({"pretty", "compact"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(n, d, k, format);
    if (*cross_cmd) return cmd_cross_check(n, d, format);
    if (*table_cmd) return cmd_table(n_range, d_range, k_range, table_format);
    if (*verify_cmd) return cmd_verify(config, n_range, d_range, k_range, rule, alphas, format);
    if (*delta_cmd) return cmd_delta_check(a, t, q, trials, seed, format);
    if (*check_cmd) return cmd_check_instance(path, alpha, force_large, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CostGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
