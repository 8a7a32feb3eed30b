#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sact/monoid.hpp"

using sact::errc;
using sact::Error;
using sact::Monoid;

namespace {

Monoid two_element_absorber() {
  return sact::validate_monoid({{0, 1}, {1, 1}}, 0);
}

Monoid two_element_group() {
  return sact::validate_monoid({{0, 1}, {1, 0}}, 0);
}

}  // namespace

TEST_CASE("validate_monoid accepts the classics") {
  CHECK(sact::trivial_monoid().size() == 1);
  CHECK(two_element_absorber().mul(1, 1) == 1);
  CHECK(two_element_group().mul(1, 1) == 0);

  // three-element: adjoined identity over the two-element right-zero band
  Monoid rz = sact::validate_monoid({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0);
  CHECK(rz.mul(1, 2) == 2);
  CHECK(rz.mul(2, 1) == 1);
}

TEST_CASE("validate_monoid rejects broken tables with witnesses") {
  SECTION("identity out of range") {
    CHECK_THROWS_AS(sact::validate_monoid({{0}}, 3), Error);
  }
  SECTION("claimed identity does not act as one") {
    try {
      sact::validate_monoid({{0, 1}, {1, 1}}, 1);
      FAIL("expected a bad_identity error");
    } catch (Error const& e) {
      CHECK(e.code() == errc::bad_identity);
    }
  }
  SECTION("ragged table") {
    CHECK_THROWS_AS(sact::validate_monoid({{0, 1}, {1}}, 0), Error);
  }
  SECTION("entry out of range") {
    CHECK_THROWS_AS(sact::validate_monoid({{0, 1}, {1, 5}}, 0), Error);
  }
  SECTION("non-associative magma with identity") {
    // (1*1)*2 = 2*2 = 1 but 1*(1*2) = 1*1 = 2
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    try {
      sact::validate_monoid(t, 0);
      FAIL("expected a non_associative error");
    } catch (Error const& e) {
      CHECK(e.code() == errc::non_associative);
    }
  }
}

TEST_CASE("canonical_monoid is invariant under relabelling") {
  Monoid rz = sact::validate_monoid({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0);
  // relabel the non-identity elements with the transposition 1 <-> 2
  std::vector<int> p = {0, 2, 1};
  std::vector<std::vector<int>> relabeled(3, std::vector<int>(3));
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) relabeled[p[s]][p[t]] = p[rz.mul(s, t)];
  Monoid other = sact::validate_monoid(relabeled, 0);
  CHECK(sact::canonical_monoid(rz) == sact::canonical_monoid(other));
  CHECK(sact::monoid_key(rz) == sact::monoid_key(other));
}

TEST_CASE("canonical_monoid fixes the identity at zero") {
  // identity listed last; canonical form must move it to the front
  Monoid m = sact::validate_monoid({{0, 0}, {0, 1}}, 1);
  Monoid c = sact::canonical_monoid(m);
  CHECK(c.identity() == 0);
  CHECK(c == sact::canonical_monoid(two_element_absorber()));
}

TEST_CASE("enumerate_monoids counts match brute force and pinned values") {
  auto of_order = [](int n) { return sact::enumerate_monoids(n); };
  CHECK(of_order(1).size() == 1);
  CHECK(of_order(2).size() == 2);
  CHECK(of_order(3).size() == 7);
  CHECK(of_order(4).size() == 35);

  for (int n = 1; n <= 3; ++n)
    CHECK(static_cast<int>(of_order(n).size()) == oracle::monoid_count(n));

  SECTION("every enumerated table is canonical and strictly ordered") {
    auto all = of_order(3);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(sact::canonical_monoid(all[i]) == all[i]);
      if (i) CHECK(sact::monoid_key(all[i - 1]) < sact::monoid_key(all[i]));
    }
  }
}

TEST_CASE("enumerate_monoids respects the order bound") {
  try {
    sact::enumerate_monoids(5);
    FAIL("expected bound_exceeded");
  } catch (Error const& e) {
    CHECK(e.code() == errc::bound_exceeded);
  }
}
