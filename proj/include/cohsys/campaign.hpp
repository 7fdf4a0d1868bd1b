#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohsys/classification.hpp"
#include "cohsys/json_io.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

/// Inclusive integer range written "lo..hi" or "v".
struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// Throws std::invalid_argument on bad syntax or lo > hi.
IntRange parse_int_range(std::string_view text);

/// Comma-separated rationals, e.g. "1/2,1,10".
std::vector<Rational> parse_rational_list(std::string_view text);

/// One row of the classification table.
struct TableRow {
  int n = 0;
  int d = 0;
  int k = 0;
  std::int64_t beta = 0;
  int a = 0;
  int t = 0;
  std::optional<int> l;
  std::optional<int> m;
  std::string lower;
  std::string upper;
  std::string status;
};

inline constexpr std::string_view kTableHeader = "n,d,k,beta,a,t,l,m,lower,upper,status";

/// Rows for every n >= 2, k >= 1 in the ranges, ordered by (n, d, k).
std::vector<TableRow> make_table(IntRange n, IntRange d, IntRange k);
std::string to_csv(const TableRow& row);
Json to_json(const TableRow& row);

enum class AlphaRule { IntervalMidpoint, CellMidpoints, List };

/// Throws std::invalid_argument on an unknown name.
AlphaRule parse_alpha_rule(std::string_view text);
std::string_view to_string(AlphaRule rule);

struct VerifyCampaignConfig {
  IntRange n{2, 2};
  IntRange d{2, 2};
  IntRange k{1, 1};
  std::uint32_t q = 101;
  int trials = 20;
  AlphaRule rule = AlphaRule::IntervalMidpoint;
  /// Used with AlphaRule::List.
  std::vector<Rational> alphas;
  std::uint64_t seed = 1;
  /// Fraction of instances that must be stable where stability is predicted.
  double min_stable_fraction = 0.8;
  /// Number of alpha probed in a cell predicted empty.
  int empty_samples = 10;
  /// Sample only systems whose sections generate E.
  bool generating = false;
  bool force_large = false;
};

/// Throws std::invalid_argument on empty ranges or trials < 1.
void validate(const VerifyCampaignConfig& config);

enum class Expectation { Stable, Unstable, Unknown };
std::string_view to_string(Expectation e);

struct AlphaSample {
  Rational alpha;
  Expectation expect = Expectation::Unknown;
  int total = 0;
  int stable = 0;
  int semistable = 0;
  /// Instances for which alpha is one of their critical values.
  int critical_hits = 0;
  bool agree = true;
};

struct CellReport {
  int n = 0;
  int d = 0;
  int k = 0;
  Verdict verdict;
  std::vector<AlphaSample> samples;
  /// Non-empty when no instance could be sampled for the cell.
  std::string skipped;
  bool agree = true;
};

struct CampaignReport {
  VerifyCampaignConfig config;
  std::vector<CellReport> cells;
  bool agree() const;
};

/// What the classification predicts for stability at alpha.
Expectation expectation(const Verdict& verdict, const Rational& alpha);

/// The alpha probed for a cell under the given rule.
std::vector<Rational> sample_alphas(const Verdict& verdict, const VerifyCampaignConfig& config);

/// Seed of trial `trial` in cell (n, d, k).
std::uint64_t trial_seed(std::uint64_t seed, int n, int d, int k, int trial);

CampaignReport run_campaign(const VerifyCampaignConfig& config);
Json to_json(const CampaignReport& report);

}  // namespace cohsys
