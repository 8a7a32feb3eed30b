#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "sact/act_class.hpp"
#include "sact/radical.hpp"
#include "sact/report.hpp"
#include "sact/universe.hpp"

namespace sact {

/// Hom-triviality between two acts: every homomorphism from a to b has at
/// most one image point. Covers all the cases of the definition at once:
/// an empty hom set passes, a one-point image is necessarily a zero of b,
/// and a non-empty hom set into a zero-free b cannot pass (a one-point
/// image would be a zero). Throws errc::monoid_mismatch.
inline bool hom_condition(Act const& a, Act const& b) {
  for (auto const& f : homs(a, b))
    if (!is_zero_hom(f)) return false;
  return true;
}

/// Same predicate through the universe's hom cache.
inline bool hom_condition(Universe const& u, int i, int j) {
  for (auto const& f : u.homs_between(i, j))
    if (!is_zero_hom(f)) return false;
  return true;
}

/// Acts b with hom-triviality from every member of the class.
inline ActClass right_orthogonal(Universe const& u, ActClass const& cls) {
  std::vector<bool> mask(u.size(), true);
  for (int j = 0; j < u.size(); ++j)
    for (int i : cls.members())
      if (!hom_condition(u, i, j)) {
        mask[j] = false;
        break;
      }
  return ActClass(u, std::move(mask),
                  "rightorth(" + cls.label() + ")");
}

/// Acts a with hom-triviality into every member of the class.
inline ActClass left_orthogonal(Universe const& u, ActClass const& cls) {
  std::vector<bool> mask(u.size(), true);
  for (int i = 0; i < u.size(); ++i)
    for (int j : cls.members())
      if (!hom_condition(u, i, j)) {
        mask[i] = false;
        break;
      }
  return ActClass(u, std::move(mask), "leftorth(" + cls.label() + ")");
}

/// A candidate torsion theory: a torsion class and a torsion-free class.
/// Stored with both classes even though each determines the other; the
/// checker verifies the mutual determination.
struct TorsionPair {
  ActClass torsion;
  ActClass torsion_free;
  std::string label;
};

/// The defining conditions: pairwise hom-triviality, and each class is
/// exactly the orthogonal of the other. The trivial-intersection
/// consequence is asserted as its own finding.
inline Report check_torsion_theory(Universe const& u, TorsionPair const& tau) {
  Report report("torsion");
  report.assume(
      "hom-triviality reads: every homomorphism has at most one image point; "
      "a non-empty hom set into a zero-free act therefore fails it");
  std::string who = tau.label.empty() ? "pair" : tau.label;

  int violations = 0;
  for (int i : tau.torsion.members())
    for (int j : tau.torsion_free.members())
      if (!hom_condition(u, i, j)) {
        ++violations;
        report.fail("torsion.hom-triviality", who,
                    "a non-zero hom " + u.act_name(i) + " -> " +
                        u.act_name(j) + " crosses the pair");
      }
  if (violations == 0)
    report.pass("torsion.hom-triviality", who,
                "all homs across the pair are trivial");

  ActClass l = left_orthogonal(u, tau.torsion_free);
  if (l == tau.torsion)
    report.pass("torsion.left-complete", who,
                "torsion class equals the left orthogonal of the free class");
  else {
    std::string diff;
    for (int i = 0; i < u.size(); ++i)
      if (l.contains(i) != tau.torsion.contains(i))
        diff += (diff.empty() ? "" : " ") + u.act_name(i);
    report.fail("torsion.left-complete", who,
                "left orthogonal differs at: " + diff);
  }

  ActClass r = right_orthogonal(u, tau.torsion);
  if (r == tau.torsion_free)
    report.pass("torsion.right-complete", who,
                "free class equals the right orthogonal of the torsion class");
  else {
    std::string diff;
    for (int j = 0; j < u.size(); ++j)
      if (r.contains(j) != tau.torsion_free.contains(j))
        diff += (diff.empty() ? "" : " ") + u.act_name(j);
    report.fail("torsion.right-complete", who,
                "right orthogonal differs at: " + diff);
  }

  violations = 0;
  for (int i = 0; i < u.size(); ++i)
    if (tau.torsion.contains(i) && tau.torsion_free.contains(i) &&
        u.act(i).size() > 1) {
      ++violations;
      report.fail("torsion.intersection-trivial", who,
                  u.act_name(i) + " lies in both classes");
    }
  if (violations == 0)
    report.pass("torsion.intersection-trivial", who,
                "the classes meet only in trivial acts");

  return report;
}

/// t(A): the join of the Rees congruences of all systems whose members lie
/// in the torsion class. When a report is supplied, the claimed properties
/// are re-derived as findings: the join is Rees, its non-singleton classes
/// are torsion, and it dominates every qualifying Rees congruence.
inline Congruence t_congruence(Universe const& u, ActClass const& torsion,
                               Act const& a, Report* report = nullptr) {
  std::vector<std::vector<int>> allowed;
  for (auto& b : nontrivial_subacts(a)) {
    int sub_index = u.locate(restrict_act(a, b)).index;
    if (torsion.contains(sub_index)) allowed.push_back(std::move(b));
  }
  Congruence acc = Congruence::diagonal(a.size());
  for (auto const& sys : systems_from(a, allowed))
    acc = join(a, acc, rees_of_system(a, sys));

  if (report) {
    auto pl = u.try_locate(a);
    std::string who = pl ? "t(" + u.act_name(pl->index) + ")"
                         : "t on an act of size " + std::to_string(a.size());
    if (is_rees(a, acc))
      report->pass("torsion.t-rees", who, "the join is a Rees congruence");
    else
      report->fail("torsion.t-rees", who,
                   detail::partition_text(acc) + " is not Rees");
    bool classes_ok = true;
    for (auto const& m : system_of(a, acc).members) {
      if (!is_subact(a, m)) {
        classes_ok = false;
        break;
      }
      if (!torsion.contains(u.locate(restrict_act(a, m)).index))
        classes_ok = false;
    }
    if (classes_ok)
      report->pass("torsion.t-classes-torsion", who,
                   "all non-singleton classes are torsion acts");
    else
      report->fail("torsion.t-classes-torsion", who,
                   detail::partition_text(acc) +
                       " has a non-torsion non-singleton class");
    bool largest = true;
    for (auto const& sys : systems_from(a, allowed))
      if (!refines(rees_of_system(a, sys), acc)) largest = false;
    if (largest)
      report->pass("torsion.t-largest", who,
                   "every qualifying Rees congruence is dominated");
    else
      report->fail("torsion.t-largest", who,
                    "a qualifying Rees congruence escapes the join");
  }
  return acc;
}

/// The radical assignment of a torsion theory: A -> t(A). Throws
/// errc::not_a_torsion_theory when the pair fails its definition. The
/// returned assignment satisfies the Kurosh-Amitsur properties; callers
/// verify via check_ka.
inline RadicalAssignment ka_from_torsion(Universe const& u,
                                         TorsionPair const& tau,
                                         Report* report = nullptr) {
  if (!check_torsion_theory(u, tau).ok())
    fail(errc::not_a_torsion_theory,
         (tau.label.empty() ? std::string("pair") : tau.label) +
             " fails the torsion-theory conditions");
  std::vector<Congruence> values;
  for (int i = 0; i < u.size(); ++i)
    values.push_back(t_congruence(u, tau.torsion, u.act(i), report));
  std::string who = tau.label.empty() ? "tau" : tau.label;
  return RadicalAssignment(u, std::move(values), "t(" + who + ")");
}

/// The torsion theory of a Kurosh-Amitsur radical: (radical class,
/// semisimple class). Throws errc::not_ka when the assignment fails the
/// functor/factor or the Kurosh-Amitsur properties.
inline TorsionPair torsion_from_ka(Universe const& u,
                                   RadicalAssignment const& r) {
  if (!detail::hoehnke_ok(u, r) || !detail::ka_ok(u, r))
    fail(errc::not_ka,
         (r.label().empty() ? std::string("assignment") : r.label()) +
             " is not a Kurosh-Amitsur radical");
  std::string who = r.label().empty() ? "r" : r.label();
  return TorsionPair{radical_class(u, r), semisimple_class(u, r),
                     "tau(" + who + ")"};
}

/// Factor-act facts behind the torsion/radical equivalence, re-derived per
/// act: A/t(A) is torsion-free, and for every torsion B, a hom from B into
/// A/t(A) has a one-point image whose projection preimage is torsion.
inline Report check_torsion_factor(Universe const& u, TorsionPair const& tau) {
  Report report("torsion-factor");
  std::string who = tau.label.empty() ? "pair" : tau.label;
  for (int i = 0; i < u.size(); ++i) {
    Act const& a = u.act(i);
    Congruence t = t_congruence(u, tau.torsion, a, &report);
    Quotient q = quotient(a, t);
    Universe::Placement pl = u.locate(q.act);
    if (tau.torsion_free.contains(pl.index))
      report.pass("torsion.factor-free", who + ": " + u.act_name(i),
                  "factor act " + u.act_name(pl.index) + " is torsion-free");
    else
      report.fail("torsion.factor-free", who + ": " + u.act_name(i),
                  "factor act " + u.act_name(pl.index) +
                      " is not in the torsion-free class");

    // Projection onto the canonical factor act.
    std::vector<int> proj(a.size());
    for (int x = 0; x < a.size(); ++x)
      proj[x] = pl.relabel[q.projection(x)];
    bool preimage_ok = true;
    for (int bi : tau.torsion.members()) {
      for (auto const& f : u.homs_between(bi, pl.index)) {
        auto img = image_of(f);
        if (img.size() > 1) {
          preimage_ok = false;
          report.fail("torsion.factor-preimage",
                      who + ": " + u.act_name(bi) + " -> factor of " +
                          u.act_name(i),
                      "image has " + std::to_string(img.size()) + " points");
          continue;
        }
        std::vector<int> pre;
        for (int x = 0; x < a.size(); ++x)
          if (std::binary_search(img.begin(), img.end(), proj[x]))
            pre.push_back(x);
        if (img.empty()) continue;  // empty source, nothing to check
        if (!is_subact(a, pre) ||
            !tau.torsion.contains(u.locate(restrict_act(a, pre)).index)) {
          preimage_ok = false;
          report.fail("torsion.factor-preimage",
                      who + ": " + u.act_name(bi) + " -> factor of " +
                          u.act_name(i),
                      "preimage " + detail::subset_text(pre) +
                          " is not a torsion subact");
        }
      }
    }
    if (preimage_ok)
      report.pass("torsion.factor-preimage", who + ": " + u.act_name(i),
                  "one-point images with torsion preimages");
  }
  return report;
}

/// Coproduct-closure probe for a class: checks every in-bound pair of
/// members and reports each violation with its witness; out-of-bound pairs
/// are recorded as skips.
inline Report coproduct_closure_check(Universe const& u, ActClass const& cls) {
  Report report("coproduct");
  std::string who = cls.label().empty() ? "class" : cls.label();
  auto members = cls.members();
  int violations = 0, skips = 0;
  for (int i : members)
    for (int j : members) {
      if (j < i) continue;
      int csize = u.act(i).size() + u.act(j).size();
      if (csize > u.max_size()) {
        ++skips;
        report.skip("coproduct.closure",
                    who + ": " + u.act_name(i) + " + " + u.act_name(j),
                    "coproduct size " + std::to_string(csize) +
                        " exceeds universe bound " +
                        std::to_string(u.max_size()));
        continue;
      }
      Coproduct c = coproduct(u.act(i), u.act(j));
      int ci = u.locate(c.act).index;
      if (!cls.contains(ci)) {
        ++violations;
        report.fail("coproduct.closure", who,
                    u.act_name(i) + " + " + u.act_name(j) + " = " +
                        u.act_name(ci) + " is outside the class");
      }
    }
  if (violations == 0 && skips == 0)
    report.pass("coproduct.closure", who, "closed under in-bound coproducts");
  else if (violations == 0)
    report.pass("coproduct.closure", who,
                "closed under the in-bound coproducts; " +
                    std::to_string(skips) + " pairs skipped");
  return report;
}

/// All torsion theories over the universe: classes fixed by the double
/// orthogonal, paired with their right orthogonal. Deterministic order.
inline std::vector<TorsionPair> enumerate_torsion_pairs(Universe const& u) {
  std::vector<TorsionPair> out;
  for (ActClass& t : all_act_classes(u)) {
    ActClass f = right_orthogonal(u, t);
    if (!(left_orthogonal(u, f) == t)) continue;
    std::string label = "tau" + std::to_string(out.size());
    t.set_label(label + ".torsion");
    f.set_label(label + ".free");
    out.push_back(TorsionPair{std::move(t), std::move(f), std::move(label)});
  }
  return out;
}

}  // namespace sact
