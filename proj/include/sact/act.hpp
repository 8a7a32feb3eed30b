#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sact/error.hpp"
#include "sact/monoid.hpp"

namespace sact {

/// A finite left act over a finite monoid: a carrier {0..size-1} together
/// with one carrier map per monoid element, subject to s(t a) = (st) a and
/// 1 a = a. The empty carrier is allowed.
///
/// The monoid is held by shared_ptr so that the many acts of a universe
/// share one table; equality compares the monoid structurally, not by
/// pointer.
class Act {
 public:
  /// Trusted constructor: callers uphold the act laws. External input goes
  /// through validate_act instead.
  Act(std::shared_ptr<const Monoid> monoid, int size, std::vector<int> action)
      : monoid_(std::move(monoid)), size_(size), action_(std::move(action)) {
    assert(monoid_ != nullptr);
    assert(static_cast<int>(action_.size()) == monoid_->size() * size_);
  }

  Monoid const& monoid() const noexcept { return *monoid_; }
  std::shared_ptr<const Monoid> const& monoid_ptr() const noexcept {
    return monoid_;
  }

  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// The element s·a.
  int apply(int s, int a) const { return action_[s * size_ + a]; }

  /// Row-major action table, one row per monoid element.
  std::vector<int> const& action() const noexcept { return action_; }

  bool same_monoid(Act const& other) const { return *monoid_ == *other.monoid_; }

  bool operator==(Act const& other) const {
    return size_ == other.size_ && action_ == other.action_ &&
           *monoid_ == *other.monoid_;
  }

 private:
  std::shared_ptr<const Monoid> monoid_;
  int size_;
  std::vector<int> action_;
};

/// Carrier size plus flat action table; total order used wherever acts are
/// sorted or deduplicated.
inline std::vector<int> act_key(Act const& a) {
  std::vector<int> key;
  key.reserve(a.action().size() + 1);
  key.push_back(a.size());
  key.insert(key.end(), a.action().begin(), a.action().end());
  return key;
}

/// Checks the unit and compatibility laws over explicit action rows (one row
/// per monoid element) and returns the act. Throws errc::unit_violation or
/// errc::compatibility_violation naming a witness.
inline Act validate_act(std::shared_ptr<const Monoid> monoid,
                        std::vector<std::vector<int>> const& rows) {
  assert(monoid != nullptr);
  Monoid const& m = *monoid;
  // An empty act has nothing to list; no rows at all denotes it.
  if (rows.empty()) return Act(std::move(monoid), 0, {});
  if (static_cast<int>(rows.size()) != m.size())
    fail(errc::compatibility_violation,
         "expected " + std::to_string(m.size()) + " action rows, got " +
             std::to_string(rows.size()));
  int n = static_cast<int>(rows[0].size());
  for (int s = 0; s < m.size(); ++s) {
    if (static_cast<int>(rows[s].size()) != n)
      fail(errc::compatibility_violation,
           "action row " + std::to_string(s) + " has " +
               std::to_string(rows[s].size()) + " entries, expected " +
               std::to_string(n));
    for (int a = 0; a < n; ++a)
      if (rows[s][a] < 0 || rows[s][a] >= n)
        fail(errc::compatibility_violation,
             "entry (" + std::to_string(s) + "," + std::to_string(a) + ") = " +
                 std::to_string(rows[s][a]) + " is out of range");
  }
  for (int a = 0; a < n; ++a)
    if (rows[m.identity()][a] != a)
      fail(errc::unit_violation,
           "identity moves element " + std::to_string(a));
  for (int s = 0; s < m.size(); ++s)
    for (int t = 0; t < m.size(); ++t)
      for (int a = 0; a < n; ++a)
        if (rows[s][rows[t][a]] != rows[m.mul(s, t)][a])
          fail(errc::compatibility_violation,
               "s=" + std::to_string(s) + " t=" + std::to_string(t) +
                   " a=" + std::to_string(a) +
                   ": s(t a) != (st) a");
  std::vector<int> flat(static_cast<std::size_t>(m.size()) * n);
  for (int s = 0; s < m.size(); ++s)
    for (int a = 0; a < n; ++a) flat[s * n + a] = rows[s][a];
  return Act(std::move(monoid), n, std::move(flat));
}

/// True once the act laws hold; re-assertable form of validate_act used by
/// property tests.
inline bool act_laws_hold(Act const& a) {
  Monoid const& m = a.monoid();
  int n = a.size();
  for (int x = 0; x < n; ++x)
    if (a.apply(m.identity(), x) != x) return false;
  for (int s = 0; s < m.size(); ++s)
    for (int t = 0; t < m.size(); ++t)
      for (int x = 0; x < n; ++x)
        if (a.apply(s, a.apply(t, x)) != a.apply(m.mul(s, t), x)) return false;
  return true;
}

/// An act is trivial when its carrier has at most one element.
inline bool is_trivial(Act const& a) { return a.size() <= 1; }

/// Elements z with s z = z for every s, in ascending order.
inline std::vector<int> zeros(Act const& a) {
  std::vector<int> out;
  for (int z = 0; z < a.size(); ++z) {
    bool fixed = true;
    for (int s = 0; s < a.monoid().size() && fixed; ++s)
      fixed = a.apply(s, z) == z;
    if (fixed) out.push_back(z);
  }
  return out;
}

/// The subact generated by a single element: its orbit under the monoid
/// (which contains the element itself since 1 a = a), sorted ascending.
inline std::vector<int> generated_subact(Act const& a, int x) {
  assert(x >= 0 && x < a.size());
  std::vector<int> orbit;
  for (int s = 0; s < a.monoid().size(); ++s) orbit.push_back(a.apply(s, x));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

inline bool is_subact(Act const& a, std::vector<int> const& elems) {
  std::vector<char> in(a.size(), 0);
  for (int x : elems) {
    if (x < 0 || x >= a.size()) return false;
    in[x] = 1;
  }
  for (int x : elems)
    for (int s = 0; s < a.monoid().size(); ++s)
      if (!in[a.apply(s, x)]) return false;
  return true;
}

/// All subacts (closed subsets, the empty one included), each sorted
/// ascending, the list ordered by size then lexicographically.
inline std::vector<std::vector<int>> subacts(Act const& a) {
  int n = a.size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (int s = 0; s < a.monoid().size(); ++s)
        if (!(mask >> a.apply(s, x) & 1u)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](auto const& l, auto const& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
  return out;
}

/// The subacts with at least two elements, ordered as in subacts().
inline std::vector<std::vector<int>> nontrivial_subacts(Act const& a) {
  std::vector<std::vector<int>> out;
  for (auto& b : subacts(a))
    if (b.size() >= 2) out.push_back(std::move(b));
  return out;
}

/// The act on a subact's elements, reindexed by ascending position. Throws
/// errc::not_a_subact when the subset is not closed.
inline Act restrict_act(Act const& a, std::vector<int> const& elems) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!is_subact(a, sorted)) {
    std::string what = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i)
      what += (i ? " " : "") + std::to_string(sorted[i]);
    fail(errc::not_a_subact, what + "} is not closed under the action");
  }
  int n = static_cast<int>(sorted.size());
  std::vector<int> pos(a.size(), -1);
  for (int i = 0; i < n; ++i) pos[sorted[i]] = i;
  std::vector<int> flat(static_cast<std::size_t>(a.monoid().size()) * n);
  for (int s = 0; s < a.monoid().size(); ++s)
    for (int i = 0; i < n; ++i) flat[s * n + i] = pos[a.apply(s, sorted[i])];
  return Act(a.monoid_ptr(), n, std::move(flat));
}

/// An equivariant map between acts over the same monoid: f(s a) = s f(a).
class Hom {
 public:
  /// Validates equivariance; throws errc::monoid_mismatch or
  /// errc::not_equivariant.
  Hom(Act source, Act target, std::vector<int> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {
    if (!source_.same_monoid(target_))
      fail(errc::monoid_mismatch, "hom endpoints live over different monoids");
    if (static_cast<int>(map_.size()) != source_.size())
      fail(errc::not_equivariant, "map has " + std::to_string(map_.size()) +
                                      " entries, expected " +
                                      std::to_string(source_.size()));
    for (int a = 0; a < source_.size(); ++a)
      if (map_[a] < 0 || map_[a] >= target_.size())
        fail(errc::not_equivariant,
             "f(" + std::to_string(a) + ") is out of range");
    for (int s = 0; s < source_.monoid().size(); ++s)
      for (int a = 0; a < source_.size(); ++a)
        if (map_[source_.apply(s, a)] != target_.apply(s, map_[a]))
          fail(errc::not_equivariant, "f(s a) != s f(a) at s=" +
                                          std::to_string(s) + " a=" +
                                          std::to_string(a));
  }

  Act const& source() const noexcept { return source_; }
  Act const& target() const noexcept { return target_; }
  std::vector<int> const& map() const noexcept { return map_; }
  int operator()(int a) const { return map_[a]; }

  bool operator==(Hom const& other) const {
    return map_ == other.map_ && source_ == other.source_ &&
           target_ == other.target_;
  }

 private:
  Act source_;
  Act target_;
  std::vector<int> map_;
};

inline Hom identity_hom(Act const& a) {
  std::vector<int> id(a.size());
  std::iota(id.begin(), id.end(), 0);
  return Hom(a, a, std::move(id));
}

/// Image of a hom, sorted ascending; always a subact of the target.
inline std::vector<int> image_of(Hom const& f) {
  std::vector<int> img(f.map());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

/// A hom is zero when its image has at most one element. A one-point image
/// is automatically fixed by the whole monoid, which the assert records.
inline bool is_zero_hom(Hom const& f) {
  auto img = image_of(f);
  if (img.size() > 1) return false;
  if (img.size() == 1) {
    auto zs = zeros(f.target());
    assert(std::find(zs.begin(), zs.end(), img[0]) != zs.end());
    (void)zs;
  }
  return true;
}

/// All homomorphisms from a to b, sorted by map vector. Backtracking over
/// f(0), f(1), ...; each action constraint (s, x) is tested as soon as both
/// f(x) and f(s x) are set. Throws errc::monoid_mismatch.
inline std::vector<Hom> homs(Act const& a, Act const& b) {
  if (!a.same_monoid(b))
    fail(errc::monoid_mismatch, "hom endpoints live over different monoids");
  std::vector<Hom> out;
  int n = a.size();
  if (n == 0) {
    out.push_back(Hom(a, b, {}));
    return out;
  }
  if (b.size() == 0) return out;
  int k = a.monoid().size();
  std::vector<int> f(n, -1);
  auto consistent_at = [&](int x) {
    for (int s = 0; s < k; ++s) {
      int y = a.apply(s, x);
      if (f[y] >= 0 && f[y] != b.apply(s, f[x])) return false;
    }
    for (int w = 0; w < x; ++w)
      for (int s = 0; s < k; ++s)
        if (a.apply(s, w) == x && f[x] != b.apply(s, f[w])) return false;
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(Hom(a, b, f));
      return;
    }
    for (int v = 0; v < b.size(); ++v) {
      f[x] = v;
      if (consistent_at(x)) self(self, x + 1);
    }
    f[x] = -1;
  };
  rec(rec, 0);
  return out;
}

/// Product act on pairs, indexed (a, b) -> a * |B| + b, with the two
/// projections.
struct Product {
  Act act;
  Hom first;
  Hom second;
};

inline Product product(Act const& a, Act const& b) {
  if (!a.same_monoid(b))
    fail(errc::monoid_mismatch, "product factors live over different monoids");
  int na = a.size(), nb = b.size();
  int n = na * nb;
  int k = a.monoid().size();
  std::vector<int> flat(static_cast<std::size_t>(k) * n);
  for (int s = 0; s < k; ++s)
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y)
        flat[s * n + (x * nb + y)] = a.apply(s, x) * nb + b.apply(s, y);
  Act p(a.monoid_ptr(), n, std::move(flat));
  std::vector<int> p1(n), p2(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      p1[x * nb + y] = x;
      p2[x * nb + y] = y;
    }
  Hom f1(p, a, std::move(p1));
  Hom f2(p, b, std::move(p2));
  return Product{std::move(p), std::move(f1), std::move(f2)};
}

/// Coproduct (disjoint union), a's elements first, with the two injections.
struct Coproduct {
  Act act;
  Hom left;
  Hom right;
};

inline Coproduct coproduct(Act const& a, Act const& b) {
  if (!a.same_monoid(b))
    fail(errc::monoid_mismatch,
         "coproduct summands live over different monoids");
  int na = a.size(), nb = b.size();
  int n = na + nb;
  int k = a.monoid().size();
  std::vector<int> flat(static_cast<std::size_t>(k) * n);
  for (int s = 0; s < k; ++s) {
    for (int x = 0; x < na; ++x) flat[s * n + x] = a.apply(s, x);
    for (int y = 0; y < nb; ++y) flat[s * n + na + y] = na + b.apply(s, y);
  }
  Act c(a.monoid_ptr(), n, std::move(flat));
  std::vector<int> l(na), r(nb);
  std::iota(l.begin(), l.end(), 0);
  std::iota(r.begin(), r.end(), na);
  Hom fl(a, c, std::move(l));
  Hom fr(b, c, std::move(r));
  return Coproduct{std::move(c), std::move(fl), std::move(fr)};
}

/// Canonical representative of an act's isomorphism class plus the relabel
/// that realizes it (relabel[old] = new). Exhaustive minimization of the
/// flat action table over carrier permutations, with early abort once a
/// permutation's table compares worse than the best so far.
struct CanonicalAct {
  Act act;
  std::vector<int> relabel;
};

inline CanonicalAct canonical_form(Act const& a) {
  int n = a.size();
  int k = a.monoid().size();
  if (n <= 1) {
    return CanonicalAct{a, std::vector<int>(n, 0)};
  }
  std::vector<int> perm(n), inv(n), best_perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, cand(static_cast<std::size_t>(k) * n);
  do {
    for (int x = 0; x < n; ++x) inv[perm[x]] = x;
    bool keep = best.empty();
    bool done = false;
    for (int s = 0; s < k && !done; ++s)
      for (int x = 0; x < n; ++x) {
        int idx = s * n + x;
        int v = perm[a.apply(s, inv[x])];
        cand[idx] = v;
        if (!keep) {
          if (v > best[idx]) {
            done = true;
            break;
          }
          if (v < best[idx]) keep = true;
        }
      }
    // Once keep flips on, the remaining cells are still written, so cand is
    // complete here; done implies the permutation lost the comparison.
    if (keep && !done) {
      best = cand;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalAct{Act(a.monoid_ptr(), n, std::move(best)),
                      std::move(best_perm)};
}

inline Act canonical_act(Act const& a) { return canonical_form(a).act; }

inline bool is_isomorphic(Act const& a, Act const& b) {
  if (!a.same_monoid(b) || a.size() != b.size()) return false;
  return canonical_act(a).action() == canonical_act(b).action();
}

}  // namespace sact
