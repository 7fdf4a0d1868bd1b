#include <doctest.h>

#include <stdexcept>

#include "cohsys/alpha_interval.hpp"
#include "cohsys/classification.hpp"
#include "cohsys/numerology.hpp"

using namespace cohsys;

namespace {

Rational q(long long p, long long r = 1) { return make_rational(p, r); }

}  // namespace

TEST_CASE("alpha intervals") {
  const AlphaInterval a = AlphaInterval::open(q(1), q(7, 2));
  CHECK(a.to_string() == "(1,7/2)");
  CHECK(a.contains(q(2)));
  CHECK_FALSE(a.contains(q(1)));
  CHECK(AlphaInterval::closed(q(1), q(3)).to_string() == "[1,3]");
  CHECK(AlphaInterval::closed(q(2), q(2)).to_string() == "[2,2]");
  CHECK(AlphaInterval::open(q(2), q(2)).is_empty());
  CHECK(AlphaInterval::open(q(3), q(2)) == AlphaInterval::empty());
  CHECK(AlphaInterval::open(q(0), std::nullopt).to_string() == "(0,+inf)");
  CHECK(AlphaInterval::empty().to_string() == "empty");
  CHECK(AlphaInterval::make(std::nullopt, false, q(1), false).to_string() == "(-inf,1]");
  CHECK(a.is_subset_of(AlphaInterval::closed(q(1), q(4))));
  CHECK_FALSE(AlphaInterval::closed(q(1), q(3)).is_subset_of(a));
  CHECK(AlphaInterval::empty().is_subset_of(a));
  CHECK(a.intersect(AlphaInterval::closed(q(3), q(9))) == AlphaInterval::make(q(3), false, q(7, 2), true));
  CHECK(a.intersect(AlphaInterval::open(q(7, 2), std::nullopt)).is_empty());
  CHECK(AlphaInterval::real_line().contains(q(-100)));
}

TEST_CASE("necessary region examples") {
  CHECK(necessary_region(5, 13, 2) == AlphaInterval::open(q(1), q(7, 2)));
  CHECK(necessary_region(3, 7, 1).is_empty());
  CHECK(necessary_region(4, -1, 2).is_empty());
  CHECK(necessary_region(3, 3, 4) == AlphaInterval::open(q(0), std::nullopt));
  CHECK_THROWS_AS(necessary_region(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(necessary_region(3, 3, 0), std::invalid_argument);
}

TEST_CASE("classification examples") {
  const Verdict v462 = classify(4, 6, 2);
  CHECK(v462.status == Status::Empty);
  REQUIRE(v462.semistable_notes.size() == 1);
  CHECK(v462.semistable_notes[0].interval == AlphaInterval::closed(q(1), q(3)));
  CHECK(v462.semistable_notes[0].text == "semistable [1,3]");

  const Verdict v231 = classify(2, 3, 1);
  CHECK(v231.status == Status::ExactNonEmpty);
  CHECK(v231.stable_interval == AlphaInterval::open(q(1), q(3)));

  const Verdict v334 = classify(3, 3, 4);
  CHECK(v334.status == Status::PartiallyKnown);
  CHECK(v334.beta == 0);
  CHECK(v334.sufficient_region == AlphaInterval::open(q(0), std::nullopt));
  CHECK(v334.stable_interval == AlphaInterval::open(q(0), std::nullopt));

  const Verdict v322 = classify(3, 2, 2);
  CHECK(v322.status == Status::Empty);
  REQUIRE(v322.semistable_notes.size() == 1);
  CHECK(v322.semistable_notes[0].interval == AlphaInterval::closed(q(2), q(2)));

  const Verdict v642 = classify(6, 12, 2);
  CHECK(v642.status == Status::Empty);
  REQUIRE(v642.semistable_notes.size() == 1);
  CHECK(v642.semistable_notes[0].interval == AlphaInterval::closed(q(0), q(3)));

  CHECK(classify(2, 2, 2).status == Status::Empty);
  CHECK(classify(2, 5, 2).stable_interval == AlphaInterval::open(q(1, 2), std::nullopt));
  CHECK(classify(5, 13, 2).stable_interval == AlphaInterval::open(q(1), q(7, 2)));
  CHECK(classify(3, 7, 1).status == Status::Empty);
  CHECK_THROWS_AS(classify(1, 5, 1), std::invalid_argument);
}

TEST_CASE("partially known cases") {
  const Verdict corank = classify(4, 9, 3);
  CHECK(corank.status == Status::PartiallyKnown);
  REQUIRE(corank.lower_endpoint_bounds.has_value());
  CHECK(*corank.stable_interval.upper() == q(9));
  CHECK(classify(4, 3, 3).status == Status::Empty);
  CHECK(classify(4, 4, 4).status == Status::Empty);
  CHECK(classify(4, 5, 4).status == Status::PartiallyKnown);
  CHECK_FALSE(classify(4, 5, 4).stable_interval.upper().has_value());
  CHECK(classify(4, 3, 5).status == Status::Empty);
  const Verdict plus = classify(3, 5, 4);
  CHECK(plus.status == Status::PartiallyKnown);
  CHECK(plus.sufficient_region == AlphaInterval::open(q(1), std::nullopt));
  CHECK(classify(6, 30, 3).status == Status::NecessaryOnly);
}

TEST_CASE("classification invariants on the sweep grid") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = -40; d <= 40; ++d) {
      for (int k = 1; k <= 10; ++k) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(k);
        const Verdict v = classify(n, d, k);
        CHECK(v.stable_interval.is_subset_of(v.necessary_region));
        CHECK(v.sufficient_region.is_subset_of(v.stable_interval));
        CHECK(v.necessary_region == necessary_region(n, d, k));
        CHECK(v.beta == brill_noether(n, d, k));
        CHECK((v.status == Status::Empty) == v.stable_interval.is_empty());
        if (k <= 2) {
          CHECK(v.stable_interval.is_open());
          CHECK((v.status == Status::ExactNonEmpty || v.status == Status::Empty));
        }
        if (v.status == Status::ExactNonEmpty) CHECK(v.beta >= 0);
      }
    }
  }
}

TEST_CASE("one-section verdicts match the necessary region") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = -40; d <= 40; ++d) {
      const Verdict v = classify(n, d, 1);
      CHECK(v.stable_interval == v.necessary_region);
      CHECK((v.status == Status::ExactNonEmpty) == (*decompose(n, d, 1).l > 0));
    }
  }
}

TEST_CASE("cross-checks between overlapping formulas") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = -40; d <= 40; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(cross_check(n, d).all_agree());
    }
  }
  const CrossCheckReport r39 = cross_check(3, 9);
  CHECK(r39.all_agree());
  CHECK(r39.flags.empty());
  CHECK(cross_check(4, 6).flags.size() == 1);
  CHECK(cross_check(3, 2).flags.size() == 1);
  CHECK(cross_check(8, 24).flags.size() == 1);
}
