#pragma once

#include <algorithm>
#include <cassert>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "sact/act_class.hpp"
#include "sact/congruence.hpp"
#include "sact/report.hpp"
#include "sact/universe.hpp"

namespace sact {

/// A choice of congruence on every act of a universe, the raw material for
/// radical checking. Values are congruences by construction.
class RadicalAssignment {
 public:
  RadicalAssignment(Universe const& u, std::vector<Congruence> values,
                    std::string label = "")
      : u_(&u), values_(std::move(values)), label_(std::move(label)) {
    if (static_cast<int>(values_.size()) != u.size())
      fail(errc::act_mismatch,
           "assignment has " + std::to_string(values_.size()) +
               " values, universe has " + std::to_string(u.size()) + " acts");
    for (int i = 0; i < u.size(); ++i)
      if (!is_congruence(u.act(i), values_[i]))
        fail(errc::not_a_congruence,
             "value on " + u.act_name(i) + " is not a congruence");
  }

  /// Finest radical: the diagonal on every act.
  static RadicalAssignment diagonal(Universe const& u) {
    std::vector<Congruence> v;
    for (int i = 0; i < u.size(); ++i)
      v.push_back(Congruence::diagonal(u.act(i).size()));
    return RadicalAssignment(u, std::move(v), "delta");
  }

  /// Coarsest radical: the total relation on every act.
  static RadicalAssignment total(Universe const& u) {
    std::vector<Congruence> v;
    for (int i = 0; i < u.size(); ++i)
      v.push_back(Congruence::total(u.act(i).size()));
    return RadicalAssignment(u, std::move(v), "nabla");
  }

  Universe const& universe() const noexcept { return *u_; }
  Congruence const& at(int i) const { return values_[i]; }
  std::vector<Congruence> const& values() const noexcept { return values_; }
  std::string const& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Extensional equality; labels are cosmetic.
  bool operator==(RadicalAssignment const& other) const {
    return values_ == other.values_;
  }

 private:
  Universe const* u_;
  std::vector<Congruence> values_;
  std::string label_;
};

/// Pointwise refinement order: r(A) contained in q(A) on every act.
inline bool pointwise_leq(RadicalAssignment const& r,
                          RadicalAssignment const& q) {
  for (int i = 0; i < r.universe().size(); ++i)
    if (!refines(r.at(i), q.at(i))) return false;
  return true;
}

inline RadicalAssignment pointwise_meet(RadicalAssignment const& r,
                                        RadicalAssignment const& q) {
  Universe const& u = r.universe();
  std::vector<Congruence> v;
  for (int i = 0; i < u.size(); ++i) v.push_back(meet(u.act(i), r.at(i), q.at(i)));
  return RadicalAssignment(u, std::move(v));
}

inline RadicalAssignment pointwise_join(RadicalAssignment const& r,
                                        RadicalAssignment const& q) {
  Universe const& u = r.universe();
  std::vector<Congruence> v;
  for (int i = 0; i < u.size(); ++i) v.push_back(join(u.act(i), r.at(i), q.at(i)));
  return RadicalAssignment(u, std::move(v));
}

namespace detail {

/// Witness text helpers shared by the report builders.
inline std::string partition_text(Congruence const& c) {
  std::string out = "{";
  auto blocks = c.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += " | ";
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      if (k) out += " ";
      out += std::to_string(blocks[b][k]);
    }
  }
  return out + "}";
}

inline std::string subset_text(std::vector<int> const& elems) {
  std::string out = "{";
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(elems[k]);
  }
  return out + "}";
}

/// Does f carry every related pair of `ra` to a related pair of `rb`?
inline bool hom_preserves(Congruence const& ra, Hom const& f,
                          Congruence const& rb, int* wa = nullptr,
                          int* wb = nullptr) {
  int n = ra.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (ra.related(a, b) && !rb.related(f(a), f(b))) {
        if (wa) *wa = a;
        if (wb) *wb = b;
        return false;
      }
  return true;
}

/// Functoriality scan. visit(i, j, hom index, a, b) is called per violating
/// (hom, pair); return false from visit to stop. Returns true when clean.
template <typename V>
bool scan_functoriality(Universe const& u, RadicalAssignment const& r,
                        V&& visit) {
  bool clean = true;
  for (int i = 0; i < u.size(); ++i)
    for (int j = 0; j < u.size(); ++j) {
      auto const& fs = u.homs_between(i, j);
      for (std::size_t h = 0; h < fs.size(); ++h) {
        int a = -1, b = -1;
        if (!hom_preserves(r.at(i), fs[h], r.at(j), &a, &b)) {
          clean = false;
          if (!visit(i, j, static_cast<int>(h), a, b)) return clean;
        }
      }
    }
  return clean;
}

/// Factor-semisimplicity scan: r on the quotient A/r(A) must be diagonal.
/// visit(i, quotient index) per violation.
template <typename V>
bool scan_factor_semisimple(Universe const& u, RadicalAssignment const& r,
                            V&& visit) {
  bool clean = true;
  for (int i = 0; i < u.size(); ++i) {
    Quotient q = quotient(u.act(i), r.at(i));
    int qi = u.locate(q.act).index;
    if (!r.at(qi).is_diagonal()) {
      clean = false;
      if (!visit(i, qi)) return clean;
    }
  }
  return clean;
}

inline bool hoehnke_ok(Universe const& u, RadicalAssignment const& r) {
  auto stop = [](auto&&...) { return false; };
  return scan_functoriality(u, r, stop) && scan_factor_semisimple(u, r, stop);
}

/// The stored value of r on a subact, moved onto the subact's canonical
/// form: restriction of r(A) to elems, transported along the relabelling.
inline Congruence restricted_value(Universe const& u,
                                   RadicalAssignment const& r, int i,
                                   std::vector<int> const& elems,
                                   int* sub_index = nullptr) {
  Act sub = restrict_act(u.act(i), elems);
  Universe::Placement pl = u.locate(sub);
  if (sub_index) *sub_index = pl.index;
  return transport(restrict_congruence(r.at(i), elems), pl.relabel);
}

/// Hereditary scan: r(B) must equal the restriction of r(A) for every
/// subact B. visit(i, elems, sub index, restricted, stored) per violation.
template <typename V>
bool scan_hereditary(Universe const& u, RadicalAssignment const& r,
                     V&& visit) {
  bool clean = true;
  for (int i = 0; i < u.size(); ++i)
    for (auto const& elems : subacts(u.act(i))) {
      int sub_index = -1;
      Congruence got = restricted_value(u, r, i, elems, &sub_index);
      if (!(got == r.at(sub_index))) {
        clean = false;
        if (!visit(i, elems, sub_index, got, r.at(sub_index))) return clean;
      }
    }
  return clean;
}

inline bool hereditary_ok(Universe const& u, RadicalAssignment const& r) {
  return scan_hereditary(u, r, [](auto&&...) { return false; });
}

/// Membership mask of the radical class: acts with r(A) total.
inline std::vector<bool> radical_mask(Universe const& u,
                                      RadicalAssignment const& r) {
  std::vector<bool> mask(u.size());
  for (int i = 0; i < u.size(); ++i) mask[i] = r.at(i).is_total();
  return mask;
}

/// Rees-valuedness scan. visit(i) per act whose value is not Rees.
template <typename V>
bool scan_ka_rees(Universe const& u, RadicalAssignment const& r, V&& visit) {
  bool clean = true;
  for (int i = 0; i < u.size(); ++i)
    if (!is_rees(u.act(i), r.at(i))) {
      clean = false;
      if (!visit(i)) return clean;
    }
  return clean;
}

/// System-member scan: each non-singleton class of r(A) that is a subact
/// must itself be radical (value total). Members that are not subacts are
/// left to scan_ka_rees. visit(i, member) per violation.
template <typename V>
bool scan_ka_members(Universe const& u, RadicalAssignment const& r,
                     V&& visit) {
  bool clean = true;
  for (int i = 0; i < u.size(); ++i)
    for (auto const& member : system_of(u.act(i), r.at(i)).members) {
      if (!is_subact(u.act(i), member)) continue;
      int sub_index = -1;
      restricted_value(u, r, i, member, &sub_index);
      if (!r.at(sub_index).is_total()) {
        clean = false;
        if (!visit(i, member)) return clean;
      }
    }
  return clean;
}

/// System-domination scan: every system whose members all lie in the
/// radical class must embed memberwise into the system of r(A).
/// visit(i, system, member) per uncovered member.
template <typename V>
bool scan_ka_systems(Universe const& u, RadicalAssignment const& r,
                     V&& visit) {
  std::vector<bool> mask = radical_mask(u, r);
  bool clean = true;
  for (int i = 0; i < u.size(); ++i) {
    Act const& a = u.act(i);
    std::vector<std::vector<int>> allowed;
    for (auto& b : nontrivial_subacts(a)) {
      int sub_index = u.locate(restrict_act(a, b)).index;
      if (mask[sub_index]) allowed.push_back(std::move(b));
    }
    auto target = system_of(a, r.at(i));
    for (auto const& sys : systems_from(a, allowed))
      for (auto const& member : sys.members) {
        bool covered = false;
        for (auto const& c : target.members)
          if (std::includes(c.begin(), c.end(), member.begin(), member.end())) {
            covered = true;
            break;
          }
        if (!covered) {
          clean = false;
          if (!visit(i, sys, member)) return clean;
        }
      }
  }
  return clean;
}

inline bool ka_ok(Universe const& u, RadicalAssignment const& r) {
  auto stop = [](auto&&...) { return false; };
  return scan_ka_rees(u, r, stop) && scan_ka_members(u, r, stop) &&
         scan_ka_systems(u, r, stop);
}

}  // namespace detail

/// Radical-style functor check: every hom carries related pairs to related
/// pairs, and the value on each factor act A/r(A) is the diagonal.
inline Report check_hoehnke(Universe const& u, RadicalAssignment const& r) {
  Report report("hoehnke");
  std::string who = r.label().empty() ? "assignment" : r.label();
  int violations = 0;
  detail::scan_functoriality(u, r, [&](int i, int j, int h, int a, int b) {
    ++violations;
    report.fail("hoehnke.functorial",
                who + ": hom #" + std::to_string(h) + " " + u.act_name(i) +
                    " -> " + u.act_name(j),
                "pair (" + std::to_string(a) + "," + std::to_string(b) +
                    ") related at the source, images unrelated");
    return true;
  });
  if (violations == 0)
    report.pass("hoehnke.functorial", who, "all hom pairs preserved");
  violations = 0;
  detail::scan_factor_semisimple(u, r, [&](int i, int qi) {
    ++violations;
    report.fail("hoehnke.factor-semisimple", who + ": " + u.act_name(i),
                "value on factor act " + u.act_name(qi) + " is " +
                    detail::partition_text(r.at(qi)) + ", not the diagonal");
    return true;
  });
  if (violations == 0)
    report.pass("hoehnke.factor-semisimple", who,
                "factor act values all diagonal");
  return report;
}

/// Hereditary check: the value on a subact equals the restriction of the
/// value on the ambient act, compared on canonical forms.
inline Report check_hereditary(Universe const& u, RadicalAssignment const& r) {
  Report report("hereditary");
  std::string who = r.label().empty() ? "assignment" : r.label();
  int violations = 0;
  detail::scan_hereditary(u, r, [&](int i, std::vector<int> const& elems,
                                    int sub_index, Congruence const& got,
                                    Congruence const& stored) {
    ++violations;
    report.fail("hereditary.restriction",
                who + ": subact " + detail::subset_text(elems) + " of " +
                    u.act_name(i) + " (= " + u.act_name(sub_index) + ")",
                "restriction is " + detail::partition_text(got) +
                    ", assigned value is " + detail::partition_text(stored));
    return true;
  });
  if (violations == 0)
    report.pass("hereditary.restriction", who,
                "all subact restrictions agree");
  return report;
}

/// The acts with r(A) total.
inline ActClass radical_class(Universe const& u, RadicalAssignment const& r) {
  std::string who = r.label().empty() ? "r" : r.label();
  return ActClass(u, detail::radical_mask(u, r), "radical(" + who + ")");
}

/// The acts with r(A) diagonal.
inline ActClass semisimple_class(Universe const& u,
                                 RadicalAssignment const& r) {
  std::vector<bool> mask(u.size());
  for (int i = 0; i < u.size(); ++i) mask[i] = r.at(i).is_diagonal();
  std::string who = r.label().empty() ? "r" : r.label();
  return ActClass(u, std::move(mask), "semisimple(" + who + ")");
}

/// The radical induced by a candidate semisimple class: on each act, the
/// meet of all congruences whose factor act lies in the class. The total
/// relation always qualifies (trivial factor), so the candidate set is
/// non-empty; errc::empty_candidate_set guards the impossible case.
inline RadicalAssignment radical_from_semisimple(Universe const& u,
                                                 ActClass const& cls) {
  std::vector<Congruence> values;
  for (int i = 0; i < u.size(); ++i) {
    Act const& a = u.act(i);
    ConLattice const& lattice = u.congruences(i);
    bool seen = false;
    Congruence acc;
    for (int c = 0; c < lattice.size(); ++c) {
      Quotient q = quotient(a, lattice.at(c));
      if (!cls.contains(u.locate(q.act).index)) continue;
      acc = seen ? meet(a, acc, lattice.at(c)) : lattice.at(c);
      seen = true;
    }
    if (!seen)
      fail(errc::empty_candidate_set,
           "no congruence on " + u.act_name(i) + " has its factor act in " +
               cls.label());
    values.push_back(std::move(acc));
  }
  std::string who = cls.label().empty() ? "class" : cls.label();
  return RadicalAssignment(u, std::move(values), "from_semisimple(" + who + ")");
}

/// The radical induced by a candidate radical class: on each act, the join
/// of the Rees congruences of all systems whose members lie in the class.
/// The empty system always qualifies, contributing the diagonal.
inline RadicalAssignment radical_from_radical_class(Universe const& u,
                                                    ActClass const& cls) {
  std::vector<Congruence> values;
  for (int i = 0; i < u.size(); ++i) {
    Act const& a = u.act(i);
    std::vector<std::vector<int>> allowed;
    for (auto& b : nontrivial_subacts(a)) {
      int sub_index = u.locate(restrict_act(a, b)).index;
      if (cls.contains(sub_index)) allowed.push_back(std::move(b));
    }
    Congruence acc = Congruence::diagonal(a.size());
    for (auto const& sys : systems_from(a, allowed))
      acc = join(a, acc, rees_of_system(a, sys));
    values.push_back(std::move(acc));
  }
  std::string who = cls.label().empty() ? "class" : cls.label();
  return RadicalAssignment(u, std::move(values),
                           "from_radical_class(" + who + ")");
}

/// The three defining properties of a Kurosh-Amitsur radical, each reported
/// independently. Callers are expected to have check_hoehnke pass first.
inline Report check_ka(Universe const& u, RadicalAssignment const& r) {
  Report report("ka");
  std::string who = r.label().empty() ? "assignment" : r.label();
  int violations = 0;
  detail::scan_ka_rees(u, r, [&](int i) {
    ++violations;
    report.fail("ka.rees-valued", who + ": " + u.act_name(i),
                detail::partition_text(r.at(i)) +
                    " has a non-singleton class that is not a subact");
    return true;
  });
  if (violations == 0)
    report.pass("ka.rees-valued", who, "every value is a Rees congruence");
  violations = 0;
  detail::scan_ka_members(u, r, [&](int i, std::vector<int> const& member) {
    ++violations;
    report.fail("ka.members-radical",
                who + ": " + u.act_name(i),
                "system member " + detail::subset_text(member) +
                    " is not radical (its value is not total)");
    return true;
  });
  if (violations == 0)
    report.pass("ka.members-radical", who,
                "all system members are radical acts");
  violations = 0;
  detail::scan_ka_systems(
      u, r, [&](int i, ReesSystem const&, std::vector<int> const& member) {
        ++violations;
        report.fail("ka.systems-dominated", who + ": " + u.act_name(i),
                    "radical-class system member " +
                        detail::subset_text(member) +
                        " is not contained in any class of " +
                        detail::partition_text(r.at(i)));
        return true;
      });
  if (violations == 0)
    report.pass("ka.systems-dominated", who,
                "every radical-class system is covered by the value");
  return report;
}

/// The four conditions characterizing (radical class, semisimple class)
/// pairs of Kurosh-Amitsur radicals.
inline Report check_pair_conditions(Universe const& u, ActClass const& rc,
                                    ActClass const& sc) {
  Report report("pair");
  std::string who = "(" + rc.label() + ", " + sc.label() + ")";

  int violations = 0;
  for (int i = 0; i < u.size(); ++i)
    if (rc.contains(i) && sc.contains(i) && u.act(i).size() > 1) {
      ++violations;
      report.fail("pair.intersection-trivial", who,
                  u.act_name(i) + " lies in both classes");
    }
  if (violations == 0)
    report.pass("pair.intersection-trivial", who,
                "intersection holds only trivial acts");

  violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (!rc.contains(i)) continue;
    for (int j = 0; j < u.size(); ++j)
      for (auto const& f : u.homs_between(i, j)) {
        int img_index = u.locate(restrict_act(u.act(j), image_of(f))).index;
        if (!rc.contains(img_index)) {
          ++violations;
          report.fail("pair.radical-homomorphic", who,
                      "image " + u.act_name(img_index) + " of " +
                          u.act_name(i) + " under a hom to " + u.act_name(j) +
                          " left the radical class");
        }
      }
  }
  if (violations == 0)
    report.pass("pair.radical-homomorphic", who,
                "radical class is closed under homomorphic images");

  violations = 0;
  for (int j = 0; j < u.size(); ++j) {
    if (!sc.contains(j)) continue;
    for (auto const& elems : subacts(u.act(j))) {
      int sub_index = u.locate(restrict_act(u.act(j), elems)).index;
      if (!sc.contains(sub_index)) {
        ++violations;
        report.fail("pair.semisimple-subacts", who,
                    "subact " + detail::subset_text(elems) + " of " +
                        u.act_name(j) + " left the semisimple class");
      }
    }
  }
  if (violations == 0)
    report.pass("pair.semisimple-subacts", who,
                "semisimple class is closed under subacts");

  violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    Act const& a = u.act(i);
    bool found = false;
    for (auto const& sys : all_rees_systems(a)) {
      bool members_ok = true;
      for (auto const& m : sys.members)
        if (!rc.contains(u.locate(restrict_act(a, m)).index)) {
          members_ok = false;
          break;
        }
      if (!members_ok) continue;
      Quotient q = quotient(a, rees_of_system(a, sys));
      if (sc.contains(u.locate(q.act).index)) {
        found = true;
        break;
      }
    }
    if (!found) {
      ++violations;
      report.fail("pair.factor-system", who,
                  u.act_name(i) +
                      " has no radical-class system with semisimple factor");
    }
  }
  if (violations == 0)
    report.pass("pair.factor-system", who,
                "every act factors through a radical-class system");

  return report;
}

/// Closure battery for a candidate semisimple class: subacts, bounded
/// products, and congruence extensions.
inline Report check_semisimple_closure(Universe const& u,
                                       ActClass const& cls) {
  Report report("semisimple-closure");
  report.assume(
      "congruence-extension closure is read as: a factor act in the class "
      "plus all non-singleton classes in the class force membership");
  std::string who = cls.label().empty() ? "class" : cls.label();

  int violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (!cls.contains(i)) continue;
    for (auto const& elems : subacts(u.act(i))) {
      int sub_index = u.locate(restrict_act(u.act(i), elems)).index;
      if (!cls.contains(sub_index)) {
        ++violations;
        report.fail("ssclosure.subacts", who,
                    "subact " + detail::subset_text(elems) + " of " +
                        u.act_name(i) + " (= " + u.act_name(sub_index) +
                        ") is outside the class");
      }
    }
  }
  if (violations == 0)
    report.pass("ssclosure.subacts", who, "closed under subacts");

  violations = 0;
  int skips = 0;
  auto members = cls.members();
  for (int i : members)
    for (int j : members) {
      if (j < i) continue;
      long long psize = static_cast<long long>(u.act(i).size()) *
                        static_cast<long long>(u.act(j).size());
      if (psize > u.max_size()) {
        ++skips;
        report.skip("ssclosure.products",
                    who + ": " + u.act_name(i) + " x " + u.act_name(j),
                    "product size " + std::to_string(psize) +
                        " exceeds universe bound " +
                        std::to_string(u.max_size()));
        continue;
      }
      Product p = product(u.act(i), u.act(j));
      int pi = u.locate(p.act).index;
      if (!cls.contains(pi)) {
        ++violations;
        report.fail("ssclosure.products", who,
                    u.act_name(i) + " x " + u.act_name(j) + " = " +
                        u.act_name(pi) + " is outside the class");
      }
    }
  if (violations == 0 && skips == 0)
    report.pass("ssclosure.products", who, "closed under products in bound");
  else if (violations == 0 && skips > 0)
    report.pass("ssclosure.products", who,
                "closed under the in-bound products; " +
                    std::to_string(skips) + " pairs skipped");

  violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (cls.contains(i)) continue;
    Act const& a = u.act(i);
    ConLattice const& lattice = u.congruences(i);
    for (int c = 0; c < lattice.size(); ++c) {
      Congruence const& chi = lattice.at(c);
      Quotient q = quotient(a, chi);
      if (!cls.contains(u.locate(q.act).index)) continue;
      bool members_in = true;
      for (auto const& m : system_of(a, chi).members) {
        if (!is_subact(a, m) ||
            !cls.contains(u.locate(restrict_act(a, m)).index)) {
          members_in = false;
          break;
        }
      }
      if (members_in) {
        ++violations;
        report.fail("ssclosure.congruence-extensions", who,
                    u.act_name(i) + " with congruence " +
                        detail::partition_text(chi) +
                        ": factor and all classes are in the class, the act "
                        "is not");
        break;
      }
    }
  }
  if (violations == 0)
    report.pass("ssclosure.congruence-extensions", who,
                "closed under congruence extensions");

  return report;
}

/// Closure battery for a candidate radical class: homomorphic images,
/// Rees extensions, and chain unions (finite form).
inline Report check_radical_closure(Universe const& u, ActClass const& cls) {
  Report report("radical-closure");
  report.assume(
      "chain unions are checked over subact chains inside single universe "
      "acts; a finite ascending chain attains its union at the top member");
  std::string who = cls.label().empty() ? "class" : cls.label();

  int violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (!cls.contains(i)) continue;
    for (int j = 0; j < u.size(); ++j)
      for (auto const& f : u.homs_between(i, j)) {
        int img_index = u.locate(restrict_act(u.act(j), image_of(f))).index;
        if (!cls.contains(img_index)) {
          ++violations;
          report.fail("radclosure.homomorphic", who,
                      "image " + u.act_name(img_index) + " of " +
                          u.act_name(i) + " left the class");
        }
      }
  }
  if (violations == 0)
    report.pass("radclosure.homomorphic", who,
                "closed under homomorphic images");

  violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (cls.contains(i)) continue;
    Act const& a = u.act(i);
    for (auto const& sys : all_rees_systems(a)) {
      bool members_in = true;
      for (auto const& m : sys.members)
        if (!cls.contains(u.locate(restrict_act(a, m)).index)) {
          members_in = false;
          break;
        }
      if (!members_in) continue;
      Quotient q = quotient(a, rees_of_system(a, sys));
      if (cls.contains(u.locate(q.act).index)) {
        ++violations;
        report.fail("radclosure.rees-extensions", who,
                    u.act_name(i) + ": members and factor of a system are in "
                                    "the class, the act is not");
        break;
      }
    }
  }
  if (violations == 0)
    report.pass("radclosure.rees-extensions", who,
                "closed under Rees extensions");

  violations = 0;
  for (int i = 0; i < u.size(); ++i) {
    Act const& a = u.act(i);
    auto subs = subacts(a);
    for (auto const& b1 : subs)
      for (auto const& b2 : subs) {
        if (!std::includes(b2.begin(), b2.end(), b1.begin(), b1.end()))
          continue;
        if (!cls.contains(u.locate(restrict_act(a, b1)).index) ||
            !cls.contains(u.locate(restrict_act(a, b2)).index))
          continue;
        std::vector<int> chain_union;
        std::set_union(b1.begin(), b1.end(), b2.begin(), b2.end(),
                       std::back_inserter(chain_union));
        if (!cls.contains(u.locate(restrict_act(a, chain_union)).index)) {
          ++violations;
          report.fail("radclosure.inductive", who,
                      "chain " + detail::subset_text(b1) + " <= " +
                          detail::subset_text(b2) + " in " + u.act_name(i) +
                          " has its union outside the class");
        }
      }
  }
  if (violations == 0)
    report.pass("radclosure.inductive", who,
                "chain unions stay in the class (finite chains attain their "
                "top)");

  return report;
}

/// Which radical property set an enumeration should filter by.
enum class RadicalFilter { hoehnke, hereditary, ka };

inline const char* radical_filter_name(RadicalFilter f) noexcept {
  switch (f) {
    case RadicalFilter::hoehnke: return "hoehnke";
    case RadicalFilter::hereditary: return "hereditary";
    case RadicalFilter::ka: return "ka";
  }
  return "unknown";
}

/// All radical assignments on the universe satisfying the filter, in
/// lexicographic order of their congruence choices. Depth-first search over
/// acts in universe order; functoriality constraints against the assigned
/// prefix and the factor-semisimplicity constraint prune branches early
/// (the factor act of a proper value is smaller, so already assigned).
/// Throws errc::bound_exceeded when the pre-pruning candidate count
/// (the product of the congruence lattice sizes) exceeds the bound.
inline std::vector<RadicalAssignment> enumerate_radicals(
    Universe const& u, RadicalFilter filter = RadicalFilter::hoehnke,
    Bounds const& bounds = {}) {
  long long candidates = 1;
  for (int i = 0; i < u.size(); ++i) {
    candidates *= u.congruences(i).size();
    if (candidates > bounds.max_radical_candidates)
      fail(errc::bound_exceeded,
           "radical search space has at least " + std::to_string(candidates) +
               " candidates, bound is " +
               std::to_string(bounds.max_radical_candidates));
  }

  int n = u.size();
  std::vector<Congruence> values(n);
  std::vector<RadicalAssignment> out;

  auto consistent = [&](int i) {
    for (int j = 0; j <= i; ++j) {
      for (auto const& f : u.homs_between(j, i))
        if (!detail::hom_preserves(values[j], f, values[i])) return false;
      if (j < i)
        for (auto const& f : u.homs_between(i, j))
          if (!detail::hom_preserves(values[i], f, values[j])) return false;
    }
    if (!values[i].is_diagonal()) {
      Quotient q = quotient(u.act(i), values[i]);
      int qi = u.locate(q.act).index;
      assert(qi < i);  // proper quotients are smaller, hence earlier
      if (!values[qi].is_diagonal()) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      RadicalAssignment r(u, values);
      bool keep = true;
      if (filter == RadicalFilter::hereditary)
        keep = detail::hereditary_ok(u, r);
      else if (filter == RadicalFilter::ka)
        keep = detail::ka_ok(u, r);
      if (keep) {
        r.set_label("r" + std::to_string(out.size()));
        out.push_back(std::move(r));
      }
      return;
    }
    ConLattice const& lattice = u.congruences(i);
    for (int c = 0; c < lattice.size(); ++c) {
      values[i] = lattice.at(c);
      if (consistent(i)) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// The reflection of a Hoehnke radical into the Kurosh-Amitsur radicals:
/// the radical induced by its radical class. Throws errc::not_hoehnke.
inline RadicalAssignment reflect(Universe const& u,
                                 RadicalAssignment const& r) {
  if (!detail::hoehnke_ok(u, r))
    fail(errc::not_hoehnke,
         (r.label().empty() ? std::string("assignment") : r.label()) +
             " does not satisfy the functor and factor conditions");
  RadicalAssignment out = radical_from_radical_class(u, radical_class(u, r));
  std::string who = r.label().empty() ? "r" : r.label();
  out.set_label(who + "_k");
  return out;
}

/// Order-theoretic facts about one reflection, verified against full
/// enumerations: the join form over dominated KA radicals, the meet form
/// over Hoehnke radicals with the same radical class, membership in the KA
/// list, the adjunction law, and the memberwise system refinement.
inline Report verify_reflection(Universe const& u, RadicalAssignment const& r,
                                std::vector<RadicalAssignment> const& ka_list,
                                std::vector<RadicalAssignment> const& hoehnke_list) {
  Report report("reflection");
  std::string who = r.label().empty() ? "assignment" : r.label();
  RadicalAssignment rk = reflect(u, r);

  bool in_list = false;
  for (auto const& q : ka_list)
    if (q == rk) {
      in_list = true;
      break;
    }
  if (in_list)
    report.pass("reflection.ka-member", who, "reflection is a KA radical");
  else
    report.fail("reflection.ka-member", who,
                "reflection is missing from the enumerated KA radicals");

  RadicalAssignment join_side = RadicalAssignment::diagonal(u);
  for (auto const& q : ka_list)
    if (pointwise_leq(q, r)) join_side = pointwise_join(join_side, q);
  if (join_side == rk)
    report.pass("reflection.join-form", who,
                "reflection equals the join of the dominated KA radicals");
  else
    report.fail("reflection.join-form", who,
                "join of dominated KA radicals differs from the reflection");

  ActClass rc = radical_class(u, r);
  RadicalAssignment meet_side = RadicalAssignment::total(u);
  int same_class = 0;
  for (auto const& h : hoehnke_list)
    if (radical_class(u, h) == rc) {
      meet_side = pointwise_meet(meet_side, h);
      ++same_class;
    }
  if (same_class > 0 && meet_side == rk)
    report.pass("reflection.meet-form", who,
                "reflection equals the meet of the " +
                    std::to_string(same_class) +
                    " Hoehnke radicals sharing its radical class");
  else
    report.fail("reflection.meet-form", who,
                same_class == 0
                    ? "no enumerated Hoehnke radical shares the radical class"
                    : "meet of same-class Hoehnke radicals differs from the "
                      "reflection");

  if (radical_class(u, rk) == rc)
    report.pass("reflection.class-preserved", who,
                "reflection keeps the radical class");
  else
    report.fail("reflection.class-preserved", who,
                "reflection changed the radical class");

  if (pointwise_leq(rk, r))
    report.pass("reflection.deflationary", who, "reflect(r) <= r");
  else
    report.fail("reflection.deflationary", who, "reflect(r) is not below r");

  if (reflect(u, rk) == rk)
    report.pass("reflection.idempotent", who,
                "reflect(reflect(r)) = reflect(r)");
  else
    report.fail("reflection.idempotent", who, "reflection is not idempotent");

  bool adj_ok = true;
  for (auto const& q : ka_list)
    if (pointwise_leq(q, r) != pointwise_leq(q, rk)) {
      adj_ok = false;
      report.fail("reflection.adjunction", who,
                  q.label() + " <= r and " + q.label() +
                      " <= reflect(r) disagree");
    }
  if (adj_ok)
    report.pass("reflection.adjunction", who,
                "q <= r iff q <= reflect(r) for every KA q");

  bool dominance_ok = true;
  for (int i = 0; i < u.size(); ++i) {
    for (auto const& member : system_of(u.act(i), rk.at(i)).members) {
      // Refinement puts each member inside one class of r(A); that class
      // must be non-singleton since the member has >= 2 elements.
      int rep = r.at(i).rep_of(member.front());
      for (int x : member)
        if (r.at(i).rep_of(x) != rep) {
          dominance_ok = false;
          report.fail("reflection.system-dominance",
                      who + ": " + u.act_name(i),
                      "member " + detail::subset_text(member) +
                          " of the reflected system straddles classes of r");
        }
    }
  }
  if (dominance_ok)
    report.pass("reflection.system-dominance", who,
                "reflected system members sit inside classes of r");

  return report;
}

/// Checks that the first two KA properties force the third, and that such
/// an assignment is a fixed point of reflection. Preconditions failing are
/// recorded as skips, never as failures.
inline Report check_ka_redundancy(Universe const& u,
                                  RadicalAssignment const& r) {
  Report report("redundancy");
  std::string who = r.label().empty() ? "assignment" : r.label();
  auto stop = [](auto&&...) { return false; };
  bool hoehnke = detail::hoehnke_ok(u, r);
  bool rees = detail::scan_ka_rees(u, r, stop);
  bool members = detail::scan_ka_members(u, r, stop);
  if (!hoehnke || !rees || !members) {
    std::string why = !hoehnke ? "the functor/factor conditions"
                      : !rees  ? "Rees-valuedness"
                               : "radical system members";
    report.skip("redundancy.systems-dominated", who,
                "premise fails: " + why + " do not hold");
    report.skip("redundancy.reflect-fixpoint", who,
                "premise fails: " + why + " do not hold");
    return report;
  }
  report.pass("redundancy.premise", who,
              "functor/factor, Rees-valuedness and member conditions hold");
  if (detail::scan_ka_systems(u, r, stop))
    report.pass("redundancy.systems-dominated", who,
                "system domination follows from the first two properties");
  else
    report.fail("redundancy.systems-dominated", who,
                "a radical-class system escapes the value; the first two "
                "properties did not force the third");
  if (reflect(u, r) == r)
    report.pass("redundancy.reflect-fixpoint", who, "reflect(r) = r");
  else
    report.fail("redundancy.reflect-fixpoint", who,
                "assignment moved under reflection despite the premise");
  return report;
}

}  // namespace sact
