#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <memory>
#include <vector>

#include "oracles.hpp"
#include "sact/radical.hpp"

using sact::ActClass;
using sact::Congruence;
using sact::errc;
using sact::Error;
using sact::RadicalAssignment;
using sact::RadicalFilter;
using sact::Report;
using sact::Status;
using sact::Universe;

namespace {

std::shared_ptr<const sact::Monoid> trivial() {
  return std::make_shared<const sact::Monoid>(sact::trivial_monoid());
}

std::shared_ptr<const sact::Monoid> absorber() {
  return std::make_shared<const sact::Monoid>(
      sact::validate_monoid({{0, 1}, {1, 1}}, 0));
}

std::shared_ptr<const sact::Monoid> group2() {
  return std::make_shared<const sact::Monoid>(
      sact::validate_monoid({{0, 1}, {1, 0}}, 0));
}

// Diagonal everywhere except one act, which gets an explicit congruence.
RadicalAssignment patched_diagonal(Universe const& u, int index,
                                   Congruence value, std::string label) {
  std::vector<Congruence> v;
  for (int i = 0; i < u.size(); ++i)
    v.push_back(i == index ? value : Congruence::diagonal(u.act(i).size()));
  RadicalAssignment r(u, std::move(v));
  r.set_label(std::move(label));
  return r;
}

// The one assignment over the two-element group at size 3 that satisfies
// the functor and factor conditions but is not hereditary: diagonal
// everywhere except the act with a swapped two-element orbit, where the
// orbit is collapsed.
RadicalAssignment orbit_collapse(Universe const& u) {
  REQUIRE(u.index_by_name("a3_1") == 5);
  return patched_diagonal(u, 5, Congruence::from_blocks(3, {{0}, {1, 2}}),
                          "orbit_collapse");
}

std::vector<std::vector<int>> reps_of(RadicalAssignment const& r) {
  std::vector<std::vector<int>> out;
  for (auto const& c : r.values()) out.push_back(c.reps());
  return out;
}

std::vector<std::vector<std::vector<int>>> reps_of_list(
    std::vector<RadicalAssignment> const& rs) {
  std::vector<std::vector<std::vector<int>>> out;
  for (auto const& r : rs) out.push_back(reps_of(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<int>>> reps_of_oracle(
    std::vector<oracle::Candidate> const& cs) {
  std::vector<std::vector<std::vector<int>>> out;
  for (auto const& cand : cs) {
    std::vector<std::vector<int>> one;
    for (auto const& ids : cand)
      one.push_back(Congruence::from_class_ids(ids).reps());
    out.push_back(std::move(one));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the extreme assignments pass every radical property") {
  for (auto const& u :
       {Universe(trivial(), 3), Universe(absorber(), 3), Universe(group2(), 3)})
    for (auto const& r :
         {RadicalAssignment::diagonal(u), RadicalAssignment::total(u)}) {
      INFO(r.label());
      CHECK(sact::check_hoehnke(u, r).ok());
      CHECK(sact::check_hereditary(u, r).ok());
      CHECK(sact::check_ka(u, r).ok());
      CHECK(sact::reflect(u, r) == r);
    }
}

TEST_CASE("assignment validation rejects malformed input") {
  Universe u(group2(), 3);
  SECTION("value count must match the universe") {
    try {
      RadicalAssignment r(u, {});
      FAIL("expected act_mismatch");
    } catch (Error const& e) {
      CHECK(e.code() == errc::act_mismatch);
    }
  }
  SECTION("values must be congruences of their act") {
    // {0 1 | 2} on the act whose swap exchanges 1 and 2: 0~1 forces 0~2
    std::vector<Congruence> v;
    for (int i = 0; i < u.size(); ++i)
      v.push_back(Congruence::diagonal(u.act(i).size()));
    v[5] = Congruence::from_blocks(3, {{0, 1}, {2}});
    try {
      RadicalAssignment r(u, std::move(v));
      FAIL("expected not_a_congruence");
    } catch (Error const& e) {
      CHECK(e.code() == errc::not_a_congruence);
    }
  }
}

TEST_CASE("enumeration counts match the frozen census and the oracle") {
  struct Row {
    std::shared_ptr<const sact::Monoid> m;
    int max_size;
    int hoehnke, hereditary, ka;
  };
  std::vector<Row> rows = {{trivial(), 3, 2, 2, 2},
                           {absorber(), 2, 4, 4, 4},
                           {group2(), 2, 4, 4, 4},
                           {group2(), 3, 6, 4, 5},
                           {absorber(), 3, 4, 4, 4}};
  for (auto const& row : rows) {
    Universe u(row.m, row.max_size);
    auto hoehnke = sact::enumerate_radicals(u, RadicalFilter::hoehnke);
    auto hereditary = sact::enumerate_radicals(u, RadicalFilter::hereditary);
    auto ka = sact::enumerate_radicals(u, RadicalFilter::ka);
    INFO("monoid size " << row.m->size() << " bound " << row.max_size);
    CHECK(static_cast<int>(hoehnke.size()) == row.hoehnke);
    CHECK(static_cast<int>(hereditary.size()) == row.hereditary);
    CHECK(static_cast<int>(ka.size()) == row.ka);

    CHECK(reps_of_list(hoehnke) ==
          reps_of_oracle(oracle::radicals(u, oracle::Kind::hoehnke)));
    CHECK(reps_of_list(hereditary) ==
          reps_of_oracle(oracle::radicals(u, oracle::Kind::hereditary)));
    CHECK(reps_of_list(ka) ==
          reps_of_oracle(oracle::radicals(u, oracle::Kind::ka)));

    // hereditary and KA refine the functor/factor list
    auto all_reps = reps_of_list(hoehnke);
    for (auto const& r : hereditary)
      CHECK(std::binary_search(all_reps.begin(), all_reps.end(), reps_of(r)));
    for (auto const& r : ka)
      CHECK(std::binary_search(all_reps.begin(), all_reps.end(), reps_of(r)));

    // the extremes always appear
    auto diag = reps_of(RadicalAssignment::diagonal(u));
    auto total = reps_of(RadicalAssignment::total(u));
    for (auto const* list : {&hoehnke, &hereditary, &ka}) {
      auto sorted = reps_of_list(*list);
      CHECK(std::binary_search(sorted.begin(), sorted.end(), diag));
      CHECK(std::binary_search(sorted.begin(), sorted.end(), total));
    }
  }
}

TEST_CASE("enumeration refuses oversized search spaces") {
  Universe u(absorber(), 4);
  try {
    sact::enumerate_radicals(u);
    FAIL("expected bound_exceeded");
  } catch (Error const& e) {
    CHECK(e.code() == errc::bound_exceeded);
  }
}

TEST_CASE("the orbit-collapse assignment separates the property sets") {
  Universe u(group2(), 3);
  RadicalAssignment w = orbit_collapse(u);

  CHECK(sact::check_hoehnke(u, w).ok());

  Report hered = sact::check_hereditary(u, w);
  CHECK_FALSE(hered.ok());
  bool saw = false;
  for (auto const& f : hered.findings())
    if (f.status == Status::fail) {
      saw = true;
      CHECK(f.check == "hereditary.restriction");
      CHECK(f.subject.find("subact {1 2} of a3_1 (= a2_1)") !=
            std::string::npos);
      CHECK(f.witness.find("restriction is {0 1}") != std::string::npos);
      CHECK(f.witness.find("assigned value is {0 | 1}") != std::string::npos);
    }
  CHECK(saw);

  Report ka = sact::check_ka(u, w);
  CHECK_FALSE(ka.ok());
  for (auto const& f : ka.findings()) {
    if (f.check == "ka.members-radical") {
      CHECK(f.status == Status::fail);
      CHECK(f.witness.find("{1 2}") != std::string::npos);
    } else {
      CHECK(f.status == Status::pass);
    }
  }

  // collapsing a single orbit leaves the radical class at the trivials, so
  // the reflection drops to the finest assignment
  CHECK(sact::reflect(u, w) == RadicalAssignment::diagonal(u));

  // it is exactly the one enumerated functor/factor assignment outside the
  // Kurosh-Amitsur list
  auto hoehnke = sact::enumerate_radicals(u, RadicalFilter::hoehnke);
  auto ka_list = sact::enumerate_radicals(u, RadicalFilter::ka);
  auto ka_reps = reps_of_list(ka_list);
  std::vector<RadicalAssignment> extra;
  for (auto const& r : hoehnke)
    if (!std::binary_search(ka_reps.begin(), ka_reps.end(), reps_of(r)))
      extra.push_back(r);
  REQUIRE(extra.size() == 1);
  CHECK(extra[0] == w);
}

TEST_CASE("reflect rejects assignments without the functor property") {
  Universe u(group2(), 3);
  // total on the three-point still act, diagonal elsewhere: any surjection
  // onto the two-point still act breaks preservation
  RadicalAssignment bad =
      patched_diagonal(u, 4, Congruence::total(3), "bad");
  REQUIRE_FALSE(sact::check_hoehnke(u, bad).ok());
  try {
    sact::reflect(u, bad);
    FAIL("expected not_hoehnke");
  } catch (Error const& e) {
    CHECK(e.code() == errc::not_hoehnke);
  }
}

TEST_CASE("class-induced radicals hit their pinned extremes") {
  for (auto const& u : {Universe(absorber(), 3), Universe(group2(), 3)}) {
    CHECK(sact::radical_from_semisimple(u, ActClass::all(u)) ==
          RadicalAssignment::diagonal(u));
    CHECK(sact::radical_from_semisimple(u, ActClass::trivials(u)) ==
          RadicalAssignment::total(u));
    CHECK(sact::radical_from_radical_class(u, ActClass::trivials(u)) ==
          RadicalAssignment::diagonal(u));
    CHECK(sact::radical_from_radical_class(u, ActClass::all(u)) ==
          RadicalAssignment::total(u));
  }
}

TEST_CASE("semisimple-induced radicals extend the class and then stabilize") {
  Universe u(absorber(), 2);
  for (ActClass const& cls : sact::all_act_classes(u)) {
    RadicalAssignment r = sact::radical_from_semisimple(u, cls);
    ActClass ss = sact::semisimple_class(u, r);
    for (int i : cls.members()) CHECK(ss.contains(i));
    CHECK(sact::radical_from_semisimple(u, ss) == r);
  }
}

TEST_CASE("pair conditions hold exactly for the induced class pairs") {
  Universe u(group2(), 2);
  auto ka = sact::enumerate_radicals(u, RadicalFilter::ka);

  std::vector<std::pair<std::vector<bool>, std::vector<bool>>> induced;
  for (auto const& r : ka)
    induced.emplace_back(sact::radical_class(u, r).mask(),
                         sact::semisimple_class(u, r).mask());
  std::sort(induced.begin(), induced.end());

  std::vector<std::pair<std::vector<bool>, std::vector<bool>>> qualifying;
  for (ActClass const& rc : sact::all_act_classes(u))
    for (ActClass const& sc : sact::all_act_classes(u))
      if (sact::check_pair_conditions(u, rc, sc).ok()) {
        qualifying.emplace_back(rc.mask(), sc.mask());
        // the pair arises from a radical rebuilt out of its radical class
        RadicalAssignment r = sact::radical_from_radical_class(u, rc);
        CHECK(sact::check_ka(u, r).ok());
        CHECK(sact::radical_class(u, r) == rc);
        CHECK(sact::semisimple_class(u, r) == sc);
      }
  std::sort(qualifying.begin(), qualifying.end());
  CHECK(induced == qualifying);
}

TEST_CASE("pair conditions fail where they should") {
  Universe u(group2(), 2);
  Report both_all =
      sact::check_pair_conditions(u, ActClass::all(u), ActClass::all(u));
  CHECK_FALSE(both_all.ok());
  bool saw = false;
  for (auto const& f : both_all.findings())
    if (f.check == "pair.intersection-trivial" && f.status == Status::fail)
      saw = true;
  CHECK(saw);

  Report both_trivial = sact::check_pair_conditions(u, ActClass::trivials(u),
                                                    ActClass::trivials(u));
  CHECK_FALSE(both_trivial.ok());
  saw = false;
  for (auto const& f : both_trivial.findings())
    if (f.check == "pair.factor-system" && f.status == Status::fail) saw = true;
  CHECK(saw);
}

TEST_CASE("classes of enumerated KA radicals pass their closure batteries") {
  Universe u(group2(), 3);
  for (auto const& r : sact::enumerate_radicals(u, RadicalFilter::ka)) {
    INFO(r.label());
    Report rad = sact::check_radical_closure(u, sact::radical_class(u, r));
    CHECK(rad.count(Status::fail) == 0);
    Report ss = sact::check_semisimple_closure(u, sact::semisimple_class(u, r));
    CHECK(ss.count(Status::fail) == 0);
  }
}

TEST_CASE("reflection verifies against the full enumerations") {
  Universe u(group2(), 3);
  auto hoehnke = sact::enumerate_radicals(u, RadicalFilter::hoehnke);
  auto ka = sact::enumerate_radicals(u, RadicalFilter::ka);
  for (auto const& r : hoehnke) {
    INFO(r.label());
    Report rep = sact::verify_reflection(u, r, ka, hoehnke);
    CHECK(rep.ok());
    CHECK(rep.count(Status::skip) == 0);
  }
  // monotone: r <= q forces reflect(r) <= reflect(q)
  for (auto const& r : hoehnke)
    for (auto const& q : hoehnke)
      if (sact::pointwise_leq(r, q))
        CHECK(sact::pointwise_leq(sact::reflect(u, r), sact::reflect(u, q)));
}

TEST_CASE("pointwise order: the extremes bound every assignment") {
  Universe u(absorber(), 2);
  RadicalAssignment bottom = RadicalAssignment::diagonal(u);
  RadicalAssignment top = RadicalAssignment::total(u);
  for (auto const& r : sact::enumerate_radicals(u, RadicalFilter::hoehnke)) {
    CHECK(sact::pointwise_leq(bottom, r));
    CHECK(sact::pointwise_leq(r, top));
    CHECK(sact::pointwise_meet(r, top) == r);
    CHECK(sact::pointwise_join(r, bottom) == r);
    CHECK(sact::pointwise_meet(r, bottom) == bottom);
    CHECK(sact::pointwise_join(r, top) == top);
  }
}

TEST_CASE("the first two KA properties force the third") {
  Universe u(group2(), 3);
  int premise_holders = 0;
  for (auto const& r : sact::enumerate_radicals(u, RadicalFilter::ka)) {
    Report rep = sact::check_ka_redundancy(u, r);
    CHECK(rep.ok());
    CHECK(rep.count(Status::skip) == 0);
    ++premise_holders;
  }
  CHECK(premise_holders == 5);

  // a failing premise yields skips, never failures
  Report rep = sact::check_ka_redundancy(u, orbit_collapse(u));
  CHECK(rep.count(Status::fail) == 0);
  CHECK(rep.count(Status::skip) == 2);
  CHECK(rep.verdict() == sact::Verdict::partial);
}
