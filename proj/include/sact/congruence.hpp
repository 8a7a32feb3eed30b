#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sact/act.hpp"
#include "sact/error.hpp"

namespace sact {

namespace detail {

/// Minimal union-find over 0..n-1; merge-by-representative, path halving.
struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool merge(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;  // keep the least element as root
    return true;
  }
  bool same(int x, int y) { return find(x) == find(y); }
  std::vector<int> parent;
};

}  // namespace detail

/// An equivalence relation on {0..n-1}, stored as rep[a] = least element of
/// a's class. The normal form makes equality and ordering structural.
class Congruence {
 public:
  Congruence() = default;

  static Congruence diagonal(int n) {
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    return Congruence(std::move(rep));
  }

  static Congruence total(int n) { return Congruence(std::vector<int>(n, 0)); }

  /// From an arbitrary class-id labelling; ids are normalized away.
  static Congruence from_class_ids(std::vector<int> const& ids) {
    int n = static_cast<int>(ids.size());
    std::vector<int> rep(n, -1);
    std::map<int, int> first_seen;
    for (int a = 0; a < n; ++a) {
      auto [it, fresh] = first_seen.emplace(ids[a], a);
      rep[a] = it->second;
      (void)fresh;
    }
    return Congruence(std::move(rep));
  }

  /// From explicit blocks; they must partition {0..n-1} exactly.
  /// Throws errc::not_a_partition.
  static Congruence from_blocks(int n,
                                std::vector<std::vector<int>> const& blocks) {
    std::vector<int> rep(n, -1);
    for (auto const& block : blocks) {
      if (block.empty()) fail(errc::not_a_partition, "empty block");
      int least = *std::min_element(block.begin(), block.end());
      for (int x : block) {
        if (x < 0 || x >= n)
          fail(errc::not_a_partition,
               "element " + std::to_string(x) + " is out of range");
        if (rep[x] != -1)
          fail(errc::not_a_partition,
               "element " + std::to_string(x) + " appears twice");
        rep[x] = least;
      }
    }
    for (int x = 0; x < n; ++x)
      if (rep[x] == -1)
        fail(errc::not_a_partition,
             "element " + std::to_string(x) + " is missing");
    return Congruence(std::move(rep));
  }

  int size() const noexcept { return static_cast<int>(rep_.size()); }
  int rep_of(int a) const { return rep_[a]; }
  bool related(int a, int b) const { return rep_[a] == rep_[b]; }
  std::vector<int> const& reps() const noexcept { return rep_; }

  bool is_diagonal() const {
    for (int a = 0; a < size(); ++a)
      if (rep_[a] != a) return false;
    return true;
  }

  bool is_total() const {
    for (int a = 0; a < size(); ++a)
      if (rep_[a] != 0) return false;
    return true;
  }

  int block_count() const {
    int c = 0;
    for (int a = 0; a < size(); ++a)
      if (rep_[a] == a) ++c;
    return c;
  }

  /// Blocks ordered by least element, each ascending.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    std::vector<int> where(size(), -1);
    for (int a = 0; a < size(); ++a) {
      if (rep_[a] == a) {
        where[a] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[where[rep_[a]]].push_back(a);
    }
    return out;
  }

  auto operator<=>(Congruence const&) const = default;

 private:
  explicit Congruence(std::vector<int> rep) : rep_(std::move(rep)) {
#ifndef NDEBUG
    for (int a = 0; a < size(); ++a) {
      assert(rep_[a] >= 0 && rep_[a] <= a);
      assert(rep_[rep_[a]] == rep_[a]);
    }
#endif
  }

  std::vector<int> rep_;
};

/// finer <= coarser in the refinement order: every block of finer lies
/// inside one block of coarser.
inline bool refines(Congruence const& finer, Congruence const& coarser) {
  assert(finer.size() == coarser.size());
  for (int a = 0; a < finer.size(); ++a)
    if (coarser.rep_of(a) != coarser.rep_of(finer.rep_of(a))) return false;
  return true;
}

/// True when the relation is compatible with the action: a ~ b implies
/// s a ~ s b. Throws errc::act_mismatch on a size mismatch.
inline bool is_congruence(Act const& act, Congruence const& c) {
  if (c.size() != act.size())
    fail(errc::act_mismatch, "relation on " + std::to_string(c.size()) +
                                 " elements, act has " +
                                 std::to_string(act.size()));
  for (int a = 0; a < act.size(); ++a) {
    int r = c.rep_of(a);
    if (r == a) continue;
    for (int s = 0; s < act.monoid().size(); ++s)
      if (!c.related(act.apply(s, a), act.apply(s, r))) return false;
  }
  return true;
}

/// Smallest congruence relating a and b: saturate the generating pair under
/// the action until stable.
inline Congruence principal_congruence(Act const& act, int a, int b) {
  assert(a >= 0 && a < act.size() && b >= 0 && b < act.size());
  detail::UnionFind uf(act.size());
  uf.merge(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < act.size(); ++x)
      for (int y = x + 1; y < act.size(); ++y) {
        if (!uf.same(x, y)) continue;
        for (int s = 0; s < act.monoid().size(); ++s)
          if (uf.merge(act.apply(s, x), act.apply(s, y))) changed = true;
      }
  }
  std::vector<int> ids(act.size());
  for (int x = 0; x < act.size(); ++x) ids[x] = uf.find(x);
  return Congruence::from_class_ids(ids);
}

/// Meet: intersect the relations. A pure partition operation, but both
/// arguments must live on the act's carrier.
inline Congruence meet(Act const& act, Congruence const& c1,
                       Congruence const& c2) {
  if (c1.size() != act.size() || c2.size() != act.size())
    fail(errc::act_mismatch, "meet arguments must match the act's carrier");
  std::vector<int> ids(act.size());
  std::map<std::pair<int, int>, int> cls;
  for (int a = 0; a < act.size(); ++a) {
    auto [it, fresh] =
        cls.emplace(std::make_pair(c1.rep_of(a), c2.rep_of(a)),
                    static_cast<int>(cls.size()));
    (void)fresh;
    ids[a] = it->second;
  }
  return Congruence::from_class_ids(ids);
}

/// Join: transitive closure of the union. For congruences the result is
/// again a congruence, which the implementation asserts.
inline Congruence join(Act const& act, Congruence const& c1,
                       Congruence const& c2) {
  if (c1.size() != act.size() || c2.size() != act.size())
    fail(errc::act_mismatch, "join arguments must match the act's carrier");
  detail::UnionFind uf(act.size());
  for (int a = 0; a < act.size(); ++a) {
    uf.merge(a, c1.rep_of(a));
    uf.merge(a, c2.rep_of(a));
  }
  std::vector<int> ids(act.size());
  for (int a = 0; a < act.size(); ++a) ids[a] = uf.find(a);
  Congruence out = Congruence::from_class_ids(ids);
  assert(!is_congruence(act, c1) || !is_congruence(act, c2) ||
         is_congruence(act, out));
  return out;
}

/// All partitions of {0..n-1} via restricted growth strings, in RGS
/// lexicographic order (diagonal is generated; total appears too).
inline std::vector<Congruence> all_partitions(int n) {
  std::vector<Congruence> out;
  if (n == 0) {
    out.push_back(Congruence::diagonal(0));
    return out;
  }
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(Congruence::from_class_ids(rgs));
    // Next restricted growth string: rightmost position that can grow.
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

/// The congruence lattice of one act: all compatible partitions, sorted,
/// with membership lookup. Construction re-checks closure under meet and
/// join as a self-test.
class ConLattice {
 public:
  ConLattice(Act const& act, std::vector<Congruence> elements)
      : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j) {
        if (index_of(meet(act, elements_[i], elements_[j])) < 0 ||
            index_of(join(act, elements_[i], elements_[j])) < 0)
          fail(errc::not_a_congruence,
               "congruence set is not closed under meet/join");
      }
  }

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  Congruence const& at(int i) const { return elements_[i]; }
  std::vector<Congruence> const& elements() const& noexcept {
    return elements_;
  }
  // value overload so iterating a just-built temporary cannot dangle
  std::vector<Congruence> elements() && { return std::move(elements_); }

  /// Index in sorted order, or -1 when absent.
  int index_of(Congruence const& c) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), c);
    if (it == elements_.end() || !(*it == c)) return -1;
    return static_cast<int>(it - elements_.begin());
  }

 private:
  std::vector<Congruence> elements_;
};

/// Enumerates Con(A) by filtering all partitions of the carrier. Throws
/// errc::bound_exceeded above the configured act size.
inline ConLattice enumerate_congruences(Act const& act,
                                        Bounds const& bounds = {}) {
  if (act.size() > bounds.max_congruence_size)
    fail(errc::bound_exceeded,
         "act size " + std::to_string(act.size()) +
             " exceeds congruence enumeration bound " +
             std::to_string(bounds.max_congruence_size));
  std::vector<Congruence> kept;
  for (auto& p : all_partitions(act.size()))
    if (is_congruence(act, p)) kept.push_back(std::move(p));
  return ConLattice(act, std::move(kept));
}

/// A system: pairwise disjoint subacts of one act, each with at least two
/// elements. Members are sorted ascending and ordered by least element.
struct ReesSystem {
  std::vector<std::vector<int>> members;

  bool operator==(ReesSystem const&) const = default;
};

/// Sorts and checks a member list; throws errc::invalid_system (wrapping
/// errc::not_a_subact semantics for non-closed members).
inline ReesSystem validate_system(Act const& act,
                                  std::vector<std::vector<int>> members) {
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.size() < 2)
      fail(errc::invalid_system, "system members must have >= 2 elements");
    if (!is_subact(act, m)) {
      std::string what = "{";
      for (std::size_t i = 0; i < m.size(); ++i)
        what += (i ? " " : "") + std::to_string(m[i]);
      fail(errc::invalid_system, what + "} is not a subact");
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<char> seen(act.size(), 0);
  for (auto const& m : members)
    for (int x : m) {
      if (seen[x])
        fail(errc::invalid_system,
             "element " + std::to_string(x) + " lies in two members");
      seen[x] = 1;
    }
  return ReesSystem{std::move(members)};
}

/// The congruence that collapses each member of the system to a point and
/// fixes everything else.
inline Congruence rees_of_system(Act const& act, ReesSystem const& sys) {
  std::vector<int> ids(act.size());
  std::iota(ids.begin(), ids.end(), 0);
  for (auto const& m : sys.members) {
    int least = m.front();
    for (int x : m) ids[x] = least;
  }
  Congruence out = Congruence::from_class_ids(ids);
  assert(is_congruence(act, out));
  return out;
}

inline Congruence rees_of_members(Act const& act,
                                  std::vector<std::vector<int>> members) {
  return rees_of_system(act, validate_system(act, std::move(members)));
}

/// The non-singleton classes of a congruence, as a member list. For a Rees
/// congruence this inverts rees_of_system; in general the members need not
/// be subacts, so no validation happens here.
inline ReesSystem system_of([[maybe_unused]] Act const& act,
                            Congruence const& c) {
  assert(c.size() == act.size());
  ReesSystem out;
  for (auto& block : c.blocks())
    if (block.size() >= 2) out.members.push_back(std::move(block));
  return out;
}

/// A congruence is Rees exactly when each non-singleton class is a subact.
inline bool is_rees(Act const& act, Congruence const& c) {
  if (c.size() != act.size())
    fail(errc::act_mismatch, "relation does not match the act's carrier");
  for (auto const& m : system_of(act, c).members)
    if (!is_subact(act, m)) return false;
  return true;
}

/// Largest Rees congruence below c: keep only the non-singleton classes
/// that are subacts. The result is Rees and refines c.
inline Congruence rees_part(Act const& act, Congruence const& c) {
  if (c.size() != act.size())
    fail(errc::act_mismatch, "relation does not match the act's carrier");
  std::vector<std::vector<int>> members;
  for (auto& m : system_of(act, c).members)
    if (is_subact(act, m)) members.push_back(std::move(m));
  Congruence out = rees_of_system(act, ReesSystem{std::move(members)});
  assert(refines(out, c));
  return out;
}

/// Relation transport along a carrier relabelling (relabel[old] = new,
/// a bijection). x' ~ y' in the result iff their preimages were related.
inline Congruence transport(Congruence const& c,
                            std::vector<int> const& relabel) {
  int n = c.size();
  assert(static_cast<int>(relabel.size()) == n);
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    assert(relabel[a] >= 0 && relabel[a] < n && inv[relabel[a]] == -1);
    inv[relabel[a]] = a;
  }
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = c.rep_of(inv[x]);
  return Congruence::from_class_ids(ids);
}

/// Restriction of a relation on the act to a subset of its carrier, indexed
/// by ascending position in elems (which must be sorted).
inline Congruence restrict_congruence(Congruence const& c,
                                      std::vector<int> const& elems) {
  assert(std::is_sorted(elems.begin(), elems.end()));
  std::vector<int> ids(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) ids[i] = c.rep_of(elems[i]);
  return Congruence::from_class_ids(ids);
}

/// Smallest congruence on the whole act whose restriction to the subact
/// contains the given congruence on it: generated by the related pairs,
/// saturated under the action. elems must be a subact, sorted ascending.
/// Throws errc::not_a_subact.
inline Congruence extend_congruence(Act const& act,
                                    std::vector<int> const& elems,
                                    Congruence const& on_sub) {
  if (!std::is_sorted(elems.begin(), elems.end()) || !is_subact(act, elems))
    fail(errc::not_a_subact, "extension base must be a sorted subact");
  if (on_sub.size() != static_cast<int>(elems.size()))
    fail(errc::act_mismatch, "congruence does not match the subact's size");
  detail::UnionFind uf(act.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (on_sub.related(static_cast<int>(i), static_cast<int>(j)))
        uf.merge(elems[i], elems[j]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < act.size(); ++x)
      for (int y = x + 1; y < act.size(); ++y) {
        if (!uf.same(x, y)) continue;
        for (int s = 0; s < act.monoid().size(); ++s)
          if (uf.merge(act.apply(s, x), act.apply(s, y))) changed = true;
      }
  }
  std::vector<int> ids(act.size());
  for (int x = 0; x < act.size(); ++x) ids[x] = uf.find(x);
  return Congruence::from_class_ids(ids);
}

/// Quotient act A/c together with the projection hom. Classes are indexed
/// by their representative's ascending order. Throws errc::not_a_congruence.
struct Quotient {
  Act act;
  Hom projection;
};

inline Quotient quotient(Act const& act, Congruence const& c) {
  if (c.size() != act.size())
    fail(errc::act_mismatch, "relation does not match the act's carrier");
  if (!is_congruence(act, c))
    fail(errc::not_a_congruence,
         "the relation is not compatible with the action");
  std::vector<int> class_index(act.size(), -1);
  int m = 0;
  for (int a = 0; a < act.size(); ++a)
    if (c.rep_of(a) == a) class_index[a] = m++;
  std::vector<int> proj(act.size());
  for (int a = 0; a < act.size(); ++a) proj[a] = class_index[c.rep_of(a)];
  int k = act.monoid().size();
  std::vector<int> flat(static_cast<std::size_t>(k) * m);
  for (int a = 0; a < act.size(); ++a) {
    if (c.rep_of(a) != a) continue;
    for (int s = 0; s < k; ++s)
      flat[s * m + class_index[a]] = proj[act.apply(s, a)];
  }
  Act q(act.monoid_ptr(), m, std::move(flat));
  Hom pi(act, q, std::move(proj));
  return Quotient{std::move(q), std::move(pi)};
}

/// Every family of pairwise disjoint members drawn from the candidate list
/// (the empty family included), in deterministic member-list order. The
/// candidates are expected to be non-trivial subacts.
inline std::vector<ReesSystem> systems_from(
    Act const& act, std::vector<std::vector<int>> const& candidates) {
  std::vector<ReesSystem> out;
  std::vector<std::vector<int>> current;
  std::vector<char> used(act.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    out.push_back(ReesSystem{current});
    for (std::size_t i = k; i < candidates.size(); ++i) {
      bool free = true;
      for (int x : candidates[i])
        if (used[x]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int x : candidates[i]) used[x] = 1;
      current.push_back(candidates[i]);
      self(self, i + 1);
      current.pop_back();
      for (int x : candidates[i]) used[x] = 0;
    }
  };
  rec(rec, 0);
  for (auto& sys : out) std::sort(sys.members.begin(), sys.members.end());
  std::sort(out.begin(), out.end(), [](auto const& l, auto const& r) {
    return l.members < r.members;
  });
  return out;
}

/// Every family of pairwise disjoint non-trivial subacts, the empty family
/// included.
inline std::vector<ReesSystem> all_rees_systems(Act const& act) {
  return systems_from(act, nontrivial_subacts(act));
}

/// All Rees congruences of the act, sorted.
inline std::vector<Congruence> all_rees_congruences(Act const& act) {
  std::vector<Congruence> out;
  for (auto const& sys : all_rees_systems(act))
    out.push_back(rees_of_system(act, sys));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sact
