#include "cohsys/classification.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohsys/numerology.hpp"

namespace cohsys {

namespace {

void validate(int n, int k) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  if (k < 1) throw std::invalid_argument("number of sections k must be at least 1");
}

/// d/(n-k) - m n / (k (n-k)) for k < n.
Rational upper_bound(const Numerology& num) {
  const int nk = num.n - num.k;
  return Rational(num.d, nk) - Rational(static_cast<long long>(*num.m) * num.n, static_cast<long long>(num.k) * nk);
}

Rational lower_bound(const Numerology& num) { return std::max(Rational(0), Rational(num.t, num.k)); }

/// d >= n(n-2)/2 + 3/2, evaluated exactly.
bool two_section_brill_noether(int n, int d) { return Rational(d) >= Rational(n * (n - 2), 2) + Rational(3, 2); }

Verdict base_verdict(int n, int d, int k) {
  Verdict v;
  v.n = n;
  v.d = d;
  v.k = k;
  v.beta = brill_noether(n, d, k);
  v.necessary_region = necessary_region(n, d, k);
  return v;
}

void mark_empty(Verdict& v) {
  v.status = Status::Empty;
  v.stable_interval = AlphaInterval::empty();
  v.sufficient_region = AlphaInterval::empty();
}

void mark_exact(Verdict& v, const AlphaInterval& interval) {
  if (interval.is_empty()) {
    mark_empty(v);
    return;
  }
  v.status = Status::ExactNonEmpty;
  v.stable_interval = interval;
  v.sufficient_region = interval;
}

void add_semistable_note(Verdict& v, AlphaInterval interval) {
  v.semistable_notes.push_back({interval, "semistable " + interval.to_string()});
}

Verdict classify_one_section(int n, int d) {
  Verdict v = base_verdict(n, d, 1);
  v.rule = "one-section";
  const Numerology num = decompose(n, d, 1);
  mark_exact(v, AlphaInterval::open(Rational(num.t), Rational(d - *num.m * n, n - 1)));
  return v;
}

Verdict classify_two_sections_rank_two(int d) {
  Verdict v = base_verdict(2, d, 2);
  v.rule = "two-sections-rank-two";
  const Numerology num = decompose(2, d, 2);
  if (d > 2) {
    mark_exact(v, AlphaInterval::open(Rational(num.t, 2), std::nullopt));
  } else {
    mark_empty(v);
  }
  return v;
}

Verdict classify_two_sections(int n, int d) {
  Verdict v = base_verdict(n, d, 2);
  v.rule = "two-sections";
  const Numerology num = decompose(n, d, 2);
  const AlphaInterval interval = AlphaInterval::open(Rational(num.t, 2), upper_bound(num));
  const bool exceptional = n == 4 && d == 6;
  if (!interval.is_empty() && two_section_brill_noether(n, d) && !exceptional) {
    mark_exact(v, interval);
    return v;
  }
  mark_empty(v);
  if (exceptional) {
    v.notes.push_back("exceptional pair (n,d)=(4,6): no alpha-stable systems");
    add_semistable_note(v, AlphaInterval::closed(1, 3));
  }
  if (n == 3 && d == 2) add_semistable_note(v, AlphaInterval::closed(2, 2));
  if (n % 2 == 0 && n >= 4) {
    const int r = n / 2;
    if (d == 2 * r * (r - 1)) add_semistable_note(v, AlphaInterval::closed(0, r));
  }
  return v;
}

Verdict classify_corank_one(int n, int d) {
  const int k = n - 1;
  Verdict v = base_verdict(n, d, k);
  v.rule = "k=n-1";
  if (d < n) {
    mark_empty(v);
    return v;
  }
  const Numerology num = decompose(n, d, k);
  v.status = Status::PartiallyKnown;
  v.stable_interval = v.necessary_region;
  v.lower_endpoint_bounds = AlphaInterval::make(lower_bound(num), false, Rational(d), true);
  v.notes.push_back("non-empty for some alpha; upper endpoint is exactly " + std::to_string(d) +
                    "; lower endpoint not determined");
  return v;
}

Verdict classify_square(int n, int d) {
  Verdict v = base_verdict(n, d, n);
  v.rule = "k=n";
  if (d <= n) {
    mark_empty(v);
    return v;
  }
  const Numerology num = decompose(n, d, n);
  v.status = Status::PartiallyKnown;
  v.stable_interval = v.necessary_region;
  v.lower_endpoint_bounds = AlphaInterval::make(lower_bound(num), false, std::nullopt, true);
  v.notes.push_back("non-empty for some alpha; no upper bound on alpha; lower endpoint not determined");
  return v;
}

Verdict classify_corank_minus_one(int n, int d) {
  const int k = n + 1;
  Verdict v = base_verdict(n, d, k);
  v.rule = "k=n+1";
  if (d < n) {
    mark_empty(v);
    return v;
  }
  const Numerology num = decompose(n, d, k);
  v.status = Status::PartiallyKnown;
  v.stable_interval = v.necessary_region;
  v.sufficient_region = AlphaInterval::open(Rational(num.t), std::nullopt);
  v.lower_endpoint_bounds = AlphaInterval::closed(lower_bound(num), Rational(num.t));
  if (num.t == 0) {
    v.notes.push_back("t=0: the interval (0,+inf) is exact");
  } else {
    v.notes.push_back("non-empty for alpha > " + std::to_string(num.t) + "; exact lower endpoint lies in " +
                      v.lower_endpoint_bounds->to_string());
  }
  return v;
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ExactNonEmpty:
      return "ExactNonEmpty";
    case Status::Empty:
      return "Empty";
    case Status::NecessaryOnly:
      return "NecessaryOnly";
    case Status::PartiallyKnown:
      return "PartiallyKnown";
  }
  return "?";
}

AlphaInterval necessary_region(int n, int d, int k) {
  validate(n, k);
  const Numerology num = decompose(n, d, k);
  if (d <= 0 || num.beta < 0) return AlphaInterval::empty();
  if (k < n) return AlphaInterval::open(lower_bound(num), upper_bound(num));
  return AlphaInterval::open(lower_bound(num), std::nullopt);
}

Verdict classify(int n, int d, int k) {
  validate(n, k);
  // Exact results take precedence where cases overlap (k = 2 = n - 1 at n = 3,
  // k = 2 = n at n = 2, k = 1 = n - 1 at n = 2).
  if (k == 1) return classify_one_section(n, d);
  if (k == 2 && n == 2) return classify_two_sections_rank_two(d);
  if (k == 2) return classify_two_sections(n, d);
  if (k == n - 1) return classify_corank_one(n, d);
  if (k == n) return classify_square(n, d);
  if (k == n + 1) return classify_corank_minus_one(n, d);

  Verdict v = base_verdict(n, d, k);
  v.rule = "bounds-only";
  if (v.necessary_region.is_empty()) {
    mark_empty(v);
  } else {
    v.status = Status::NecessaryOnly;
    v.stable_interval = v.necessary_region;
  }
  return v;
}

bool CrossCheckReport::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const CrossCheckItem& c) { return c.agree; });
}

CrossCheckReport cross_check(int n, int d) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  CrossCheckReport report;
  report.n = n;
  report.d = d;

  const Rational bn_general = Rational(n * n - 1, 2) - (n - 2);
  const Rational bn_two = Rational(n * (n - 2), 2) + Rational(3, 2);
  report.checks.push_back({"two-section Brill-Noether threshold", to_string(bn_general), to_string(bn_two),
                           bn_general == bn_two});

  const Numerology one = decompose(n, d, 1);
  const auto valid = valid_degrees_k1(n, std::max(d, 0));
  const bool listed = std::find(valid.begin(), valid.end(), d) != valid.end();
  report.checks.push_back({"one-section attainable degree vs l>0", listed ? "listed" : "not listed",
                           *one.l > 0 ? "l>0" : "l<=0", listed == (*one.l > 0)});

  if (n == 3) {
    const Numerology two = decompose(3, d, 2);
    const Rational upper = upper_bound(two);
    report.checks.push_back({"two-section upper bound equals d (k=n-1)", to_string(upper), std::to_string(d),
                             upper == Rational(d)});
    const bool exact = classify(3, d, 2).status == Status::ExactNonEmpty;
    report.checks.push_back({"two-section non-emptiness vs d>=n (k=n-1)", exact ? "non-empty" : "empty",
                             d >= 3 ? "d>=n" : "d<n", exact == (d >= 3)});
  }
  if (n == 2) {
    const Verdict v1 = classify(2, d, 1);
    const bool exact = v1.status == Status::ExactNonEmpty;
    report.checks.push_back({"one-section non-emptiness vs d>=n (k=n-1)", exact ? "non-empty" : "empty",
                             d >= 2 ? "d>=n" : "d<n", exact == (d >= 2)});
    if (exact) {
      const Rational upper = *v1.stable_interval.upper();
      report.checks.push_back({"one-section upper bound equals d (k=n-1)", to_string(upper), std::to_string(d),
                               upper == Rational(d)});
    }
    const Verdict v2 = classify(2, d, 2);
    const bool exact2 = v2.status == Status::ExactNonEmpty;
    report.checks.push_back({"rank-two two-section non-emptiness vs d>n (k=n)", exact2 ? "non-empty" : "empty",
                             d > 2 ? "d>n" : "d<=n", exact2 == (d > 2)});
    if (exact2) {
      report.checks.push_back({"rank-two two-section has no upper bound (k=n)",
                               v2.stable_interval.upper() ? "bounded" : "unbounded", "unbounded",
                               !v2.stable_interval.upper()});
    }
  }

  if (n == 4 && d == 6) report.flags.push_back("exceptional pair (4,6): no stable systems with k=2");
  if (n == 3 && d == 2) report.flags.push_back("exceptional pair (3,2): k=2 semistable only at alpha=2");
  if (n % 2 == 0 && n >= 4 && d == (n / 2) * (n - 2)) {
    report.flags.push_back("exceptional pair: E=O(" + std::to_string(n / 2 - 1) + ")^" + std::to_string(n) +
                           ", k=2 semistable on [0," + std::to_string(n / 2) + "] but never stable");
  }
  return report;
}

}  // namespace cohsys
