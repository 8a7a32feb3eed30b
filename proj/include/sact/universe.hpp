#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sact/act.hpp"
#include "sact/bounds.hpp"
#include "sact/congruence.hpp"
#include "sact/error.hpp"
#include "sact/monoid.hpp"

namespace sact {

/// All acts over a monoid with a given carrier size, up to isomorphism, as
/// canonical forms in sorted order. Backtracking over the non-identity
/// action rows with compatibility checked on every closed triple.
inline std::vector<Act> enumerate_acts(std::shared_ptr<const Monoid> monoid,
                                       int size) {
  assert(monoid != nullptr && size >= 0);
  Monoid const& m = *monoid;
  int k = m.size();
  int n = size;
  std::vector<int> flat(static_cast<std::size_t>(k) * n, -1);
  for (int a = 0; a < n; ++a) flat[m.identity() * n + a] = a;
  std::vector<std::pair<int, int>> cells;
  for (int s = 0; s < k; ++s) {
    if (s == m.identity()) continue;
    for (int a = 0; a < n; ++a) cells.emplace_back(s, a);
  }
  auto compatible_so_far = [&]() {
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t)
        for (int a = 0; a < n; ++a) {
          int ta = flat[t * n + a];
          if (ta < 0) continue;
          int lhs = flat[s * n + ta];
          int rhs = flat[m.mul(s, t) * n + a];
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
        }
    return true;
  };
  std::vector<std::vector<int>> canon;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      Act a(monoid, n, flat);
      canon.push_back(canonical_act(a).action());
      return;
    }
    auto [s, x] = cells[i];
    for (int v = 0; v < n; ++v) {
      flat[s * n + x] = v;
      if (compatible_so_far()) self(self, i + 1);
    }
    flat[s * n + x] = -1;
  };
  if (n == 0) {
    canon.push_back({});
  } else {
    rec(rec, 0);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<Act> out;
  out.reserve(canon.size());
  for (auto& t : canon) out.push_back(Act(monoid, n, std::move(t)));
  return out;
}

/// The finite slice of all acts over one monoid up to a carrier size bound:
/// one canonical representative per isomorphism class, ordered by size and
/// then by action table. Closed under subacts and quotients by
/// construction, since those never grow the carrier.
///
/// Hom sets and congruence lattices are memoized behind a mutex; concurrent
/// fills compute the same value, so the first insert wins and later ones
/// are discarded.
class Universe {
 public:
  struct Placement {
    int index;                 // position of the canonical form
    std::vector<int> relabel;  // relabel[element of the queried act] = element
                               // of the stored canonical act
  };

  Universe(std::shared_ptr<const Monoid> monoid, int max_size,
           Bounds bounds = {})
      : monoid_(std::move(monoid)), max_size_(max_size), bounds_(bounds) {
    assert(monoid_ != nullptr);
    int cap = monoid_->size() == 1 ? bounds_.max_universe_size_trivial
                                   : bounds_.max_universe_size;
    if (max_size_ < 0 || max_size_ > cap)
      fail(errc::bound_exceeded,
           "universe size bound " + std::to_string(max_size_) +
               " exceeds the configured cap " + std::to_string(cap));
    for (int n = 0; n <= max_size_; ++n)
      for (Act& a : enumerate_acts(monoid_, n)) acts_.push_back(std::move(a));
    finish_build();
  }

  /// Rebuilds a universe from stored parts (e.g. a disk cache). The act
  /// list is revalidated: laws, canonical form, sort order, uniqueness and
  /// the presence of both trivial acts. Completeness is not re-derived.
  static Universe from_parts(std::shared_ptr<const Monoid> monoid,
                             int max_size, std::vector<Act> acts,
                             Bounds bounds = {}) {
    if (acts.size() < 2 || acts[0].size() != 0 || acts[1].size() != 1)
      fail(errc::invalid_system, "universe parts lack the trivial acts");
    for (std::size_t i = 0; i < acts.size(); ++i) {
      Act const& a = acts[i];
      if (!(*a.monoid_ptr() == *monoid))
        fail(errc::monoid_mismatch, "universe parts mix monoids");
      if (a.size() > max_size)
        fail(errc::bound_exceeded, "universe parts exceed the size bound");
      if (!act_laws_hold(a))
        fail(errc::compatibility_violation,
             "stored act " + std::to_string(i) + " breaks the act laws");
      if (canonical_act(a).action() != a.action())
        fail(errc::invalid_system,
             "stored act " + std::to_string(i) + " is not canonical");
      if (i > 0 && !(act_key(acts[i - 1]) < act_key(a)))
        fail(errc::invalid_system, "stored acts are not sorted and unique");
    }
    return Universe(std::move(monoid), max_size, std::move(acts), bounds);
  }

  Monoid const& monoid() const noexcept { return *monoid_; }
  std::shared_ptr<const Monoid> const& monoid_ptr() const noexcept {
    return monoid_;
  }
  int max_size() const noexcept { return max_size_; }
  Bounds const& bounds() const noexcept { return bounds_; }

  int size() const noexcept { return static_cast<int>(acts_.size()); }
  Act const& act(int i) const { return acts_[i]; }
  std::string const& act_name(int i) const { return names_[i]; }

  int count_of_size(int n) const {
    int c = 0;
    for (auto const& a : acts_)
      if (a.size() == n) ++c;
    return c;
  }

  /// Indices of the trivial acts (sizes 0 and 1).
  std::vector<int> const& trivial_indices() const noexcept {
    return trivial_indices_;
  }

  /// Index lookup by name ("a<size>_<k>"); throws errc::unknown_target.
  int index_by_name(std::string const& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
      fail(errc::unknown_target, "no act named " + name + " in this universe");
    return it->second;
  }

  /// Canonicalize an arbitrary act over the same monoid and find it.
  /// Empty when the act is larger than the bound.
  std::optional<Placement> try_locate(Act const& a) const {
    if (!(*a.monoid_ptr() == *monoid_))
      fail(errc::monoid_mismatch, "act lives over a different monoid");
    if (a.size() > max_size_) return std::nullopt;
    CanonicalAct c = canonical_form(a);
    auto it = by_key_.find(act_key(c.act));
    assert(it != by_key_.end());  // the universe is complete up to max_size_
    return Placement{it->second, std::move(c.relabel)};
  }

  Placement locate(Act const& a) const {
    auto p = try_locate(a);
    if (!p)
      fail(errc::bound_exceeded, "act of size " + std::to_string(a.size()) +
                                     " lies outside the universe bound " +
                                     std::to_string(max_size_));
    return *std::move(p);
  }

  /// Memoized hom set between two member acts, sorted by map vector.
  std::vector<Hom> const& homs_between(int i, int j) const {
    {
      std::lock_guard<std::mutex> lock(*mutex_);
      auto it = hom_cache_.find({i, j});
      if (it != hom_cache_.end()) return *it->second;
    }
    auto computed =
        std::make_shared<std::vector<Hom>>(homs(acts_[i], acts_[j]));
    std::lock_guard<std::mutex> lock(*mutex_);
    auto [it, fresh] = hom_cache_.emplace(std::make_pair(i, j), computed);
    (void)fresh;
    return *it->second;
  }

  /// Memoized congruence lattice of a member act.
  ConLattice const& congruences(int i) const {
    {
      std::lock_guard<std::mutex> lock(*mutex_);
      auto it = con_cache_.find(i);
      if (it != con_cache_.end()) return *it->second;
    }
    auto computed =
        std::make_shared<ConLattice>(enumerate_congruences(acts_[i], bounds_));
    std::lock_guard<std::mutex> lock(*mutex_);
    auto [it, fresh] = con_cache_.emplace(i, computed);
    (void)fresh;
    return *it->second;
  }

 private:
  Universe(std::shared_ptr<const Monoid> monoid, int max_size,
           std::vector<Act> acts, Bounds bounds)
      : monoid_(std::move(monoid)),
        max_size_(max_size),
        bounds_(bounds),
        acts_(std::move(acts)) {
    finish_build();
  }

  void finish_build() {
    // Size-major order is already guaranteed by construction order or by
    // the from_parts validation; derive names and lookup tables.
    std::vector<int> per_size(max_size_ + 1, 0);
    for (int i = 0; i < size(); ++i) {
      int n = acts_[i].size();
      names_.push_back("a" + std::to_string(n) + "_" +
                       std::to_string(per_size[n]++));
      by_key_.emplace(act_key(acts_[i]), i);
      by_name_.emplace(names_[i], i);
      if (n <= 1) trivial_indices_.push_back(i);
    }
  }

  std::shared_ptr<const Monoid> monoid_;
  int max_size_;
  Bounds bounds_;
  std::vector<Act> acts_;
  std::vector<std::string> names_;
  std::map<std::vector<int>, int> by_key_;
  std::map<std::string, int> by_name_;
  std::vector<int> trivial_indices_;

  // unique_ptr keeps the type movable; caches move with their universe.
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::map<std::pair<int, int>, std::shared_ptr<std::vector<Hom>>>
      hom_cache_;
  mutable std::map<int, std::shared_ptr<ConLattice>> con_cache_;
};

}  // namespace sact
