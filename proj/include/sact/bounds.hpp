#pragma once

namespace sact {

/// Size ceilings for the exhaustive searches. Everything in this library is
/// desk-scale by design; the bounds keep accidental blow-ups loud instead of
/// slow. Operations that hit a bound throw errc::bound_exceeded or record a
/// skip finding, never silently truncate.
struct Bounds {
  /// Largest monoid order enumerate_monoids will attempt.
  int max_monoid_order = 4;

  /// Largest carrier size admitted into a universe. The trivial monoid is
  /// allowed one more because its act count grows so slowly.
  int max_universe_size = 4;
  int max_universe_size_trivial = 5;

  /// Largest act size for which the congruence lattice is enumerated.
  int max_congruence_size = 6;

  /// Cap on the pre-pruning candidate count of a radical enumeration,
  /// i.e. the product of the congruence lattice sizes over the universe.
  long long max_radical_candidates = 10'000'000;
};

}  // namespace sact
