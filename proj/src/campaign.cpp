#include "cohsys/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "cohsys/numerology.hpp"
#include "cohsys/stability.hpp"

namespace cohsys {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string bound_text(const AlphaInterval::Bound& b, const char* infinite) {
  return b ? to_string(*b) : std::string(infinite);
}

// Offset keeping probes of an empty cell off critical values, whose
// denominators never exceed n k.
const Rational kOffset(1, 1009);

std::vector<Rational> spread(const Rational& lo, const Rational& hi, int count) {
  std::vector<Rational> out;
  for (int i = 1; i <= count; ++i) out.push_back(Rational(lo + (hi - lo) * i / (count + 1) + kOffset));
  return out;
}

}  // namespace

IntRange parse_int_range(std::string_view text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<TableRow> make_table(IntRange n, IntRange d, IntRange k) {
  std::vector<TableRow> rows;
  for (int nn = std::max(n.lo, 2); nn <= n.hi; ++nn) {
    for (int dd = d.lo; dd <= d.hi; ++dd) {
      for (int kk = std::max(k.lo, 1); kk <= k.hi; ++kk) {
        const Numerology num = decompose(nn, dd, kk);
        const Verdict v = classify(nn, dd, kk);
        TableRow row{nn, dd, kk, v.beta, num.a, num.t, num.l, num.m, "", "", std::string(to_string(v.status))};
        if (!v.stable_interval.is_empty()) {
          row.lower = bound_text(v.stable_interval.lower(), "-inf");
          row.upper = bound_text(v.stable_interval.upper(), "+inf");
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string to_csv(const TableRow& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  return std::to_string(r.n) + "," + std::to_string(r.d) + "," + std::to_string(r.k) + "," + std::to_string(r.beta) +
         "," + std::to_string(r.a) + "," + std::to_string(r.t) + "," + opt(r.l) + "," + opt(r.m) + "," + r.lower + "," +
         r.upper + "," + r.status;
}

Json to_json(const TableRow& r) {
  auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  auto str = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); };
  return Json{{"n", r.n},         {"d", r.d},         {"k", r.k},          {"beta", r.beta},
              {"a", r.a},         {"t", r.t},         {"l", opt(r.l)},     {"m", opt(r.m)},
              {"lower", str(r.lower)}, {"upper", str(r.upper)}, {"status", r.status}};
}

AlphaRule parse_alpha_rule(std::string_view text) {
  if (text == "interval-midpoint") return AlphaRule::IntervalMidpoint;
  if (text == "cell-midpoints") return AlphaRule::CellMidpoints;
  if (text == "list") return AlphaRule::List;
  throw std::invalid_argument("unknown alpha rule '" + std::string(text) + "'");
}

std::string_view to_string(AlphaRule rule) {
  switch (rule) {
    case AlphaRule::IntervalMidpoint: return "interval-midpoint";
    case AlphaRule::CellMidpoints: return "cell-midpoints";
    case AlphaRule::List: return "list";
  }
  return "?";
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::Stable: return "stable";
    case Expectation::Unstable: return "unstable";
    case Expectation::Unknown: return "unknown";
  }
  return "?";
}

void validate(const VerifyCampaignConfig& c) {
  for (const IntRange* r : {&c.n, &c.d, &c.k}) {
    if (r->lo > r->hi) throw std::invalid_argument("campaign range is empty");
  }
  if (c.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (c.empty_samples < 1) throw std::invalid_argument("empty_samples must be at least 1");
  if (c.rule == AlphaRule::List && c.alphas.empty()) throw std::invalid_argument("alpha list is empty");
  for (const Rational& a : c.alphas) {
    if (a < 0) throw std::invalid_argument("alpha must be non-negative");
  }
  PrimeField check(c.q);
}

bool CampaignReport::agree() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellReport& c) { return c.agree; });
}

Expectation expectation(const Verdict& v, const Rational& alpha) {
  switch (v.status) {
    case Status::ExactNonEmpty:
      return v.stable_interval.contains(alpha) ? Expectation::Stable : Expectation::Unstable;
    case Status::Empty:
      return Expectation::Unstable;
    case Status::NecessaryOnly:
    case Status::PartiallyKnown:
      if (!v.stable_interval.contains(alpha) || !v.necessary_region.contains(alpha)) return Expectation::Unstable;
      if (v.sufficient_region.contains(alpha)) return Expectation::Stable;
      return Expectation::Unknown;
  }
  return Expectation::Unknown;
}

std::vector<Rational> sample_alphas(const Verdict& v, const VerifyCampaignConfig& config) {
  std::vector<Rational> out;
  const Rational half(1, 2);
  switch (config.rule) {
    case AlphaRule::List:
      return config.alphas;
    case AlphaRule::CellMidpoints: {
      std::vector<Rational> cuts{Rational(0)};
      for (const AlphaInterval* iv : {&v.stable_interval, &v.necessary_region, &v.sufficient_region}) {
        if (iv->is_empty()) continue;
        for (const auto* b : {&iv->lower(), &iv->upper()}) {
          if (*b && **b > 0) cuts.push_back(**b);
        }
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back(Rational((cuts[i] + cuts[i + 1]) / 2));
      out.push_back(Rational(cuts.back() + 1));
      return out;
    }
    case AlphaRule::IntervalMidpoint:
      break;
  }
  if (v.status == Status::Empty) {
    AlphaInterval region = v.necessary_region;
    if (region.is_empty() && v.k < v.n && v.d > 0) {
      region = AlphaInterval::make(Rational(0), true, Rational(v.d, v.n - v.k), false);
    }
    if (region.is_empty()) region = AlphaInterval::open(Rational(0), Rational(10));
    const Rational lo = region.lower() ? *region.lower() : Rational(0);
    const Rational hi = region.upper() ? *region.upper() : Rational(lo + 10);
    return spread(lo, hi, config.empty_samples);
  }
  // The interval of interest: exact, or the proven-sufficient part, or the outer bound.
  const AlphaInterval& inner = v.status == Status::ExactNonEmpty || v.sufficient_region.is_empty()
                                   ? v.stable_interval
                                   : v.sufficient_region;
  const AlphaInterval& outer = v.stable_interval;
  if (!inner.is_empty()) {
    const Rational lo = inner.lower() ? std::max(*inner.lower(), Rational(0)) : Rational(0);
    out.push_back(inner.upper() ? Rational((lo + *inner.upper()) / 2) : Rational(lo + 1));
  }
  if (!outer.is_empty()) {
    if (outer.lower() && *outer.lower() - half > 0) out.push_back(Rational(*outer.lower() - half));
    if (outer.upper()) out.push_back(Rational(*outer.upper() + half));
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, int n, int d, int k, int trial) {
  std::uint64_t h = splitmix64(seed);
  for (std::int64_t v : {std::int64_t{n}, std::int64_t{d}, std::int64_t{k}, std::int64_t{trial}}) {
    h = splitmix64(h ^ static_cast<std::uint64_t>(v));
  }
  return h;
}

CampaignReport run_campaign(const VerifyCampaignConfig& config) {
  validate(config);
  CampaignReport report;
  report.config = config;
  const CheckerOptions options{config.force_large};
  for (int n = std::max(config.n.lo, 2); n <= config.n.hi; ++n) {
    for (int d = config.d.lo; d <= config.d.hi; ++d) {
      for (int k = std::max(config.k.lo, 1); k <= config.k.hi; ++k) {
        CellReport cell;
        cell.n = n;
        cell.d = d;
        cell.k = k;
        cell.verdict = classify(n, d, k);
        for (const Rational& a : sample_alphas(cell.verdict, config)) {
          cell.samples.push_back(AlphaSample{a, expectation(cell.verdict, a)});
        }
        for (int trial = 0; trial < config.trials; ++trial) {
          const std::uint64_t s = trial_seed(config.seed, n, d, k, trial);
          std::optional<SystemInstance> inst;
          try {
            inst = config.generating ? sample_generating_instance(n, d, k, config.q, s) : sample_instance(n, d, k, config.q, s);
          } catch (const std::invalid_argument& e) {
            cell.skipped = e.what();
          } catch (const std::runtime_error& e) {
            cell.skipped = e.what();
          }
          if (!inst) break;
          const SubsystemCandidates cands = enumerate_candidates(*inst, options);
          const std::vector<Rational> crit = critical_alphas(cands);
          for (AlphaSample& sample : cell.samples) {
            const StabilityReport r = is_alpha_stable(cands, sample.alpha);
            ++sample.total;
            sample.stable += r.stable ? 1 : 0;
            sample.semistable += r.semistable ? 1 : 0;
            sample.critical_hits += std::binary_search(crit.begin(), crit.end(), sample.alpha) ? 1 : 0;
          }
        }
        for (AlphaSample& sample : cell.samples) {
          if (sample.total == 0) continue;
          if (sample.expect == Expectation::Stable) {
            sample.agree = sample.stable >= config.min_stable_fraction * sample.total;
          } else if (sample.expect == Expectation::Unstable) {
            sample.agree = sample.stable == 0;
          }
          cell.agree = cell.agree && sample.agree;
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

Json to_json(const CampaignReport& report) {
  const VerifyCampaignConfig& c = report.config;
  Json j;
  j["seed"] = c.seed;
  j["q"] = c.q;
  j["trials"] = c.trials;
  j["rule"] = std::string(to_string(c.rule));
  j["min_stable_fraction"] = c.min_stable_fraction;
  j["generating"] = c.generating;
  j["agree"] = report.agree();
  j["cells"] = Json::array();
  for (const CellReport& cell : report.cells) {
    Json jc{{"n", cell.n},
            {"d", cell.d},
            {"k", cell.k},
            {"status", std::string(to_string(cell.verdict.status))},
            {"stable_interval", cell.verdict.stable_interval.to_string()},
            {"agree", cell.agree}};
    if (!cell.skipped.empty()) jc["skipped"] = cell.skipped;
    jc["samples"] = Json::array();
    for (const AlphaSample& s : cell.samples) {
      jc["samples"].push_back({{"alpha", to_string(s.alpha)},
                               {"expect", std::string(to_string(s.expect))},
                               {"total", s.total},
                               {"stable", s.stable},
                               {"semistable", s.semistable},
                               {"critical_hits", s.critical_hits},
                               {"agree", s.agree}});
    }
    j["cells"].push_back(std::move(jc));
  }
  return j;
}

}  // namespace cohsys
