#include <catch2/catch_amalgamated.hpp>

#include "sact/sact.hpp"

TEST_CASE("umbrella header compiles and the trivial monoid acts") {
  auto m = std::make_shared<const sact::Monoid>(sact::trivial_monoid());
  sact::Universe u(m, 3);
  CHECK(u.size() == 4);
}
