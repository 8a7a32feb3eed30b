#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <memory>

#include "oracles.hpp"
#include "sact/congruence.hpp"
#include "sact/universe.hpp"

using sact::Act;
using sact::Congruence;
using sact::errc;
using sact::Error;

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

std::vector<Congruence> oracle_lattice(Act const& a) {
  std::vector<Congruence> out;
  for (auto const& ids : oracle::congruences(a))
    out.push_back(Congruence::from_class_ids(ids));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("all_partitions counts follow the Bell numbers") {
  for (int n = 0; n <= 6; ++n)
    CHECK(static_cast<long long>(sact::all_partitions(n).size()) ==
          oracle::bell(n));
}

TEST_CASE("congruence enumeration equals the partition filter") {
  for (auto const& m : {trivial(), absorber(), group2()})
    for (int n = 0; n <= 4; ++n) {
      sact::Universe u(m, 4);
      for (int i = 0; i < u.size(); ++i) {
        if (u.act(i).size() != n) continue;
        auto got = sact::enumerate_congruences(u.act(i)).elements();
        CHECK(got == oracle_lattice(u.act(i)));
      }
    }
}

TEST_CASE("over the one-element monoid congruences are all partitions") {
  long long pinned[] = {1, 1, 2, 5, 15, 52};
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::vector<int>> rows;
    if (n) {
      rows.emplace_back(n);
      for (int x = 0; x < n; ++x) rows[0][x] = x;
    }
    Act a = sact::validate_act(trivial(), rows);
    CHECK(static_cast<long long>(sact::enumerate_congruences(a).size()) ==
          pinned[n]);
    CHECK(pinned[n] == oracle::bell(n));
  }
}

TEST_CASE("diagonal and total bound the lattice") {
  Act swap = sact::validate_act(group2(), {{0, 1}, {1, 0}});
  sact::ConLattice lattice = sact::enumerate_congruences(swap);
  // representative vectors sort the total relation first, the diagonal last
  CHECK(lattice.at(0) == Congruence::total(2));
  CHECK(lattice.at(lattice.size() - 1) == Congruence::diagonal(2));
  for (int i = 0; i < lattice.size(); ++i) {
    CHECK(sact::refines(Congruence::diagonal(2), lattice.at(i)));
    CHECK(sact::refines(lattice.at(i), Congruence::total(2)));
  }
}

TEST_CASE("meet and join are the lattice operations") {
  Act a = sact::validate_act(group2(), {{0, 1, 2, 3}, {1, 0, 3, 2}});
  auto all = sact::enumerate_congruences(a).elements();
  for (auto const& c1 : all)
    for (auto const& c2 : all) {
      Congruence m = sact::meet(a, c1, c2);
      Congruence j = sact::join(a, c1, c2);
      CHECK(sact::refines(m, c1));
      CHECK(sact::refines(m, c2));
      CHECK(sact::refines(c1, j));
      CHECK(sact::refines(c2, j));
      for (auto const& other : all) {
        if (sact::refines(other, c1) && sact::refines(other, c2))
          CHECK(sact::refines(other, m));
        if (sact::refines(c1, other) && sact::refines(c2, other))
          CHECK(sact::refines(j, other));
      }
    }
}

TEST_CASE("principal congruences are least among those relating the pair") {
  Act a = sact::validate_act(group2(), {{0, 1, 2}, {0, 2, 1}});
  auto all = sact::enumerate_congruences(a).elements();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      Congruence p = sact::principal_congruence(a, x, y);
      CHECK(p.related(x, y));
      CHECK(sact::is_congruence(a, p));
      for (auto const& c : all)
        if (c.related(x, y)) CHECK(sact::refines(p, c));
    }
}

TEST_CASE("Rees congruences and systems invert each other") {
  for (auto const& m : {trivial(), absorber(), group2()}) {
    sact::Universe u(m, 4);
    for (int i = 0; i < u.size(); ++i) {
      Act const& a = u.act(i);
      // systems -> congruence -> systems
      for (auto const& sys :
           sact::systems_from(a, sact::nontrivial_subacts(a))) {
        Congruence rho = sact::rees_of_system(a, sys);
        CHECK(sact::is_rees(a, rho));
        auto norm = [](std::vector<std::vector<int>> ms) {
          std::sort(ms.begin(), ms.end());
          return ms;
        };
        CHECK(norm(sact::system_of(a, rho).members) == norm(sys.members));
      }
      // congruence -> system -> congruence, on the Rees ones
      for (auto const& c : sact::enumerate_congruences(a).elements()) {
        if (!sact::is_rees(a, c)) continue;
        CHECK(sact::rees_of_system(a, sact::system_of(a, c)) == c);
      }
    }
  }
}

TEST_CASE("validate_system rejects overlap and junk") {
  Act a = sact::validate_act(group2(), {{0, 1, 2, 3}, {1, 0, 3, 2}});
  CHECK_THROWS_AS(sact::rees_of_members(a, {{0}}), Error);           // trivial
  CHECK_THROWS_AS(sact::rees_of_members(a, {{0, 2}}), Error);        // not closed
  CHECK_THROWS_AS(sact::rees_of_members(a, {{0, 1}, {1, 2, 3}}), Error);
  CHECK(sact::rees_of_members(a, {{0, 1}, {2, 3}}).block_count() == 2);
}

TEST_CASE("rees_part keeps exactly the subact classes") {
  Act a = sact::validate_act(absorber(), {{0, 1, 2}, {0, 0, 2}});
  // classes {0,1} (subact: e0=0, e1=0) and {2}: already Rees
  Congruence c = Congruence::from_blocks(3, {{0, 1}, {2}});
  CHECK(sact::rees_part(a, c) == c);

  // a congruence pairing the two swap orbits crosswise: no class is a
  // subact, so the Rees part collapses to the diagonal
  Act two_orbits = sact::validate_act(group2(), {{0, 1, 2, 3}, {1, 0, 3, 2}});
  Congruence cross = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(sact::is_congruence(two_orbits, cross));
  CHECK_FALSE(sact::is_rees(two_orbits, cross));
  CHECK(sact::rees_part(two_orbits, cross) == Congruence::diagonal(4));
}

TEST_CASE("quotient projection is equivariant with the right kernel") {
  Act a = sact::validate_act(group2(), {{0, 1, 2}, {0, 2, 1}});
  for (auto const& c : sact::enumerate_congruences(a).elements()) {
    sact::Quotient q = sact::quotient(a, c);
    CHECK(q.act.size() == c.block_count());
    for (int s = 0; s < 2; ++s)
      for (int x = 0; x < 3; ++x)
        CHECK(q.projection(a.apply(s, x)) == q.act.apply(s, q.projection(x)));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        CHECK((q.projection(x) == q.projection(y)) == c.related(x, y));
  }
}

TEST_CASE("transport along a relabelling preserves structure") {
  Congruence c = Congruence::from_blocks(3, {{0, 1}, {2}});
  std::vector<int> relabel = {2, 1, 0};  // old -> new
  Congruence t = sact::transport(c, relabel);
  CHECK(t.related(2, 1));
  CHECK_FALSE(t.related(0, 1));
}

TEST_CASE("restriction and extension move congruences along a subact") {
  Act a = sact::validate_act(group2(), {{0, 1, 2}, {0, 2, 1}});
  std::vector<int> orbit = {1, 2};
  Congruence big = Congruence::from_blocks(3, {{0}, {1, 2}});
  Congruence small = sact::restrict_congruence(big, orbit);
  CHECK(small == Congruence::total(2));

  Congruence back = sact::extend_congruence(a, orbit, small);
  CHECK(sact::is_congruence(a, back));
  CHECK(back.related(1, 2));
  CHECK_FALSE(back.related(0, 1));
  // extension is the least congruence restricting to at least the input
  CHECK(sact::refines(sact::restrict_congruence(back, orbit), small));

  CHECK_THROWS_AS(sact::extend_congruence(a, {1}, Congruence::diagonal(1)),
                  Error);
}

TEST_CASE("from_blocks rejects non-partitions with positions") {
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}}), Error);  // 2 missing
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}, {2}, {}}), Error);
  CHECK_THROWS_AS(Congruence::from_blocks(2, {{0, 1}, {2}}), Error);
  try {
    Congruence::from_blocks(3, {{0, 1}});
    FAIL("expected not_a_partition");
  } catch (Error const& e) {
    CHECK(e.code() == errc::not_a_partition);
  }
}

TEST_CASE("ConLattice indexes its own members") {
  Act a = sact::validate_act(absorber(), {{0, 1, 2}, {0, 0, 2}});
  sact::ConLattice lattice = sact::enumerate_congruences(a);
  for (int i = 0; i < lattice.size(); ++i)
    CHECK(lattice.index_of(lattice.at(i)) == i);
}

TEST_CASE("congruence size bound is enforced") {
  std::vector<int> row(7);
  for (int x = 0; x < 7; ++x) row[x] = x;
  Act big = sact::validate_act(trivial(), {row});
  try {
    sact::enumerate_congruences(big);
    FAIL("expected bound_exceeded");
  } catch (Error const& e) {
    CHECK(e.code() == errc::bound_exceeded);
  }
}
