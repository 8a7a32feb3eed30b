#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sact/bounds.hpp"
#include "sact/error.hpp"

namespace sact {

/// A finite monoid given by its multiplication table. Instances are always
/// valid: the only public ways to obtain one are validate_monoid, the named
/// constructors below, and enumerate_monoids.
class Monoid {
 public:
  /// Default-constructs the trivial monoid.
  Monoid() : size_(1), identity_(0), table_(1, 0) {}

  int size() const noexcept { return size_; }
  int identity() const noexcept { return identity_; }

  /// Product s*t.
  int mul(int s, int t) const { return table_[s * size_ + t]; }

  /// Row-major multiplication table.
  std::vector<int> const& table() const noexcept { return table_; }

  bool operator==(Monoid const&) const = default;

 private:
  Monoid(int size, int identity, std::vector<int> table)
      : size_(size), identity_(identity), table_(std::move(table)) {}

  int size_;
  int identity_;
  std::vector<int> table_;

  friend Monoid validate_monoid(std::vector<std::vector<int>> const&, int);
  friend Monoid canonical_monoid(Monoid const&);
  friend std::vector<Monoid> enumerate_monoids(int, Bounds const&);
};

/// Checks the monoid laws over a square table and returns the monoid.
/// Throws errc::bad_identity naming the offending element, or
/// errc::non_associative naming the violating triple.
inline Monoid validate_monoid(std::vector<std::vector<int>> const& table,
                              int identity) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail(errc::bad_identity, "a monoid needs at least one element");
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(table[s].size()) != n)
      fail(errc::non_associative,
           "table row " + std::to_string(s) + " has " +
               std::to_string(table[s].size()) + " entries, expected " +
               std::to_string(n));
    for (int t = 0; t < n; ++t)
      if (table[s][t] < 0 || table[s][t] >= n)
        fail(errc::non_associative, "entry (" + std::to_string(s) + "," +
                                        std::to_string(t) + ") = " +
                                        std::to_string(table[s][t]) +
                                        " is out of range");
  }
  if (identity < 0 || identity >= n)
    fail(errc::bad_identity,
         "identity index " + std::to_string(identity) + " is out of range");
  for (int s = 0; s < n; ++s) {
    if (table[identity][s] != s || table[s][identity] != s)
      fail(errc::bad_identity,
           "element " + std::to_string(s) + " breaks the identity law");
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        if (table[table[s][t]][u] != table[s][table[t][u]])
          fail(errc::non_associative, "(" + std::to_string(s) + "*" +
                                          std::to_string(t) + ")*" +
                                          std::to_string(u) + " != " +
                                          std::to_string(s) + "*(" +
                                          std::to_string(t) + "*" +
                                          std::to_string(u) + ")");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) flat[s * n + t] = table[s][t];
  return Monoid(n, identity, std::move(flat));
}

inline Monoid trivial_monoid() { return Monoid(); }

/// Canonical representative of the isomorphism class: the identity is
/// relabelled to 0 and the flat table is minimized lexicographically over the
/// remaining element permutations.
inline Monoid canonical_monoid(Monoid const& m) {
  int n = m.size();
  std::vector<int> perm(n);  // perm[old] = new
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[m.identity()], perm[0]);
  // All perms with perm[identity] == 0: permute the non-identity images.
  std::vector<int> others;
  for (int s = 0; s < n; ++s)
    if (s != m.identity()) others.push_back(s);
  std::vector<int> targets(others.size());
  std::iota(targets.begin(), targets.end(), 1);

  std::vector<int> best;
  std::vector<int> cand(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(n);
  do {
    for (std::size_t k = 0; k < others.size(); ++k) perm[others[k]] = targets[k];
    perm[m.identity()] = 0;
    for (int s = 0; s < n; ++s) inv[perm[s]] = s;
    bool worse = false;
    for (int s = 0; s < n && !worse; ++s)
      for (int t = 0; t < n; ++t) {
        int v = perm[m.mul(inv[s], inv[t])];
        int idx = s * n + t;
        cand[idx] = v;
        if (!best.empty()) {
          if (v > best[idx]) {
            worse = true;
            break;
          }
          if (v < best[idx]) {
            // Strictly better prefix: finish the table without comparing.
            for (int s2 = s; s2 < n; ++s2)
              for (int t2 = (s2 == s ? t + 1 : 0); t2 < n; ++t2)
                cand[s2 * n + t2] = perm[m.mul(inv[s2], inv[t2])];
            best = cand;
            worse = true;  // stop scanning, result recorded
            break;
          }
        }
      }
    if (best.empty()) best = cand;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return Monoid(n, 0, std::move(best));
}

/// Stable text key for a monoid's isomorphism class; used to name caches.
inline std::string monoid_key(Monoid const& m) {
  Monoid c = canonical_monoid(m);
  std::string key = std::to_string(c.size());
  for (int v : c.table()) {
    key.push_back('.');
    key += std::to_string(v);
  }
  return key;
}

/// All monoids of the given order up to isomorphism, as canonical forms in
/// lexicographic table order. The search fixes element 0 as the identity and
/// fills the remaining table cells with backtracking; associativity is
/// checked on every fully determined triple as soon as it closes.
inline std::vector<Monoid> enumerate_monoids(int order,
                                             Bounds const& bounds = {}) {
  if (order < 1) fail(errc::bad_identity, "monoid order must be positive");
  if (order > bounds.max_monoid_order)
    fail(errc::bound_exceeded,
         "monoid order " + std::to_string(order) + " exceeds bound " +
             std::to_string(bounds.max_monoid_order));
  int n = order;
  std::vector<int> flat(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    flat[0 * n + s] = s;
    flat[s * n + 0] = s;
  }
  // Undetermined cells in row-major order; all have s,t >= 1.
  std::vector<int> cells;
  for (int s = 1; s < n; ++s)
    for (int t = 1; t < n; ++t) cells.push_back(s * n + t);

  auto associative_so_far = [&](int) {
    // Check every triple whose three products are all determined. The cell
    // just filled can close many triples at once, so rescan; n <= 4 keeps
    // this cheap.
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        int st = flat[s * n + t];
        if (st < 0) continue;
        for (int u = 0; u < n; ++u) {
          int tu = flat[t * n + u];
          if (tu < 0) continue;
          int left = flat[st * n + u];
          int right = flat[s * n + tu];
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    return true;
  };

  std::vector<std::vector<int>> canon_tables;
  auto emit = [&]() {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) rows[s][t] = flat[s * n + t];
    Monoid c = canonical_monoid(validate_monoid(rows, 0));
    canon_tables.push_back(c.table());
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      emit();
      return;
    }
    int cell = cells[k];
    for (int v = 0; v < n; ++v) {
      flat[cell] = v;
      if (associative_so_far(cell)) self(self, k + 1);
    }
    flat[cell] = -1;
  };
  rec(rec, 0);

  std::sort(canon_tables.begin(), canon_tables.end());
  canon_tables.erase(std::unique(canon_tables.begin(), canon_tables.end()),
                     canon_tables.end());
  std::vector<Monoid> out;
  out.reserve(canon_tables.size());
  for (auto& t : canon_tables) out.push_back(Monoid(n, 0, std::move(t)));
  return out;
}

}  // namespace sact
