// End-to-end acceptance gate. Each check prints one pass/fail line with its
// elapsed time; the process exits nonzero when any check fails. Checks are
// exact: no tolerances beyond the stated size bounds.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "sact/fixture.hpp"
#include "sact/torsion.hpp"

#ifndef SACT_CLI_PATH
#error "SACT_CLI_PATH must point at the command-line binary"
#endif
#ifndef SACT_FIXTURES_DIR
#error "SACT_FIXTURES_DIR must point at the fixture directory"
#endif

namespace fs = std::filesystem;

using sact::Act;
using sact::ActClass;
using sact::Congruence;
using sact::RadicalAssignment;
using sact::RadicalFilter;
using sact::Report;
using sact::Status;
using sact::TorsionPair;
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

/// Collects failure messages for one check; keeps the first few verbatim.
struct Check {
  std::vector<std::string> details;
  int failures = 0;

  void require(bool cond, std::string const& msg) {
    if (cond) return;
    ++failures;
    if (details.size() < 8) details.push_back(msg);
  }

  void require_report(Report const& rep, std::string const& who,
                      bool forbid_skips = true) {
    for (auto const& f : rep.findings()) {
      require(f.status != Status::fail,
              who + ": " + f.check + " failed on " + f.subject +
                  (f.witness.empty() ? "" : " (" + f.witness + ")"));
      if (forbid_skips)
        require(f.status != Status::skip,
                who + ": " + f.check + " skipped on " + f.subject);
    }
  }
};

int failed_checks = 0;

void run(int index, std::string const& name, long long budget_ms,
         std::function<void(Check&)> body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (std::exception const& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  long long ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (budget_ms > 0)
    c.require(ms <= budget_ms,
              "took " + std::to_string(ms) + " ms, budget " +
                  std::to_string(budget_ms) + " ms");
  bool ok = c.failures == 0;
  if (!ok) ++failed_checks;
  std::printf("[%s] %02d %s (%lld ms)\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), ms);
  for (auto const& d : c.details) std::printf("       - %s\n", d.c_str());
  if (c.failures > static_cast<int>(c.details.size()))
    std::printf("       - ... and %d more\n",
                c.failures - static_cast<int>(c.details.size()));
  std::fflush(stdout);
}

/// Every monoid of order 1 or 2 up to isomorphism, shared for act building.
std::vector<std::shared_ptr<const sact::Monoid>> small_monoids() {
  std::vector<std::shared_ptr<const sact::Monoid>> out;
  for (int order = 1; order <= 2; ++order)
    for (auto& m : sact::enumerate_monoids(order))
      out.push_back(std::make_shared<const sact::Monoid>(std::move(m)));
  return out;
}

std::pair<std::vector<bool>, std::vector<bool>> mask_pair(
    TorsionPair const& tau) {
  return {tau.torsion.mask(), tau.torsion_free.mask()};
}

/// Runs a command with stderr folded in; returns exit code and output bytes.
struct RunResult {
  int code;
  std::string out;
};

RunResult run_shell(std::string const& command) {
  std::string wrapped = command + " 2>&1";
  FILE* pipe = popen(wrapped.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, std::move(out)};
}

}  // namespace

int main() {
  run(1, "congruence enumeration matches the brute-force partition filter",
      10000, [](Check& c) {
        for (auto const& m : small_monoids()) {
          Universe u(m, 4);
          for (int i = 0; i < u.size(); ++i) {
            Act const& a = u.act(i);
            std::vector<Congruence> mine = u.congruences(i).elements();
            std::vector<Congruence> ref;
            for (auto const& ids : oracle::congruences(a))
              ref.push_back(Congruence::from_class_ids(ids));
            std::sort(ref.begin(), ref.end());
            c.require(mine == ref,
                      "congruence lists differ on " + u.act_name(i) +
                          " over a monoid of order " +
                          std::to_string(m->size()));
          }
        }
        std::vector<long long> expected = {1, 1, 2, 5, 15, 52};
        Universe u(trivial(), 5);
        c.require(u.size() == 6, "trivial-monoid universe should hold a0..a5");
        for (int i = 0; i < u.size(); ++i) {
          int n = u.act(i).size();
          auto count =
              static_cast<long long>(u.congruences(i).elements().size());
          c.require(count == expected[n] && expected[n] == oracle::bell(n),
                    "|Con| on a set of size " + std::to_string(n) + " is " +
                        std::to_string(count) + ", expected Bell " +
                        std::to_string(oracle::bell(n)));
        }
      });

  run(2, "rees congruences and disjoint subact systems are in bijection",
      10000, [](Check& c) {
        for (auto const& m : small_monoids()) {
          Universe u(m, 4);
          for (int i = 0; i < u.size(); ++i) {
            Act const& a = u.act(i);
            auto systems = sact::all_rees_systems(a);
            for (auto const& sys : systems) {
              Congruence rho = sact::rees_of_system(a, sys);
              c.require(sact::is_rees(a, rho),
                        "collapse of a system is not Rees on " + u.act_name(i));
              c.require(sact::system_of(a, rho) == sys,
                        "system -> congruence -> system moved on " +
                            u.act_name(i));
            }
            int rees_count = 0;
            for (auto const& chi : u.congruences(i).elements()) {
              if (!sact::is_rees(a, chi)) continue;
              ++rees_count;
              Congruence back =
                  sact::rees_of_system(a, sact::system_of(a, chi));
              c.require(back == chi,
                        "congruence -> system -> congruence moved on " +
                            u.act_name(i));
            }
            c.require(static_cast<std::size_t>(rees_count) == systems.size(),
                      "Rees congruence and system counts differ on " +
                          u.act_name(i));
          }
        }
      });

  run(3, "the pair conditions characterize induced radical class pairs",
      120000, [](Check& c) {
        std::vector<Universe> universes;
        universes.emplace_back(absorber(), 2);
        universes.emplace_back(trivial(), 3);
        for (auto const& u : universes) {
          std::string tag = "universe of " + std::to_string(u.size()) +
                            " acts";
          std::set<std::pair<std::vector<bool>, std::vector<bool>>> induced;
          for (auto const& q :
               sact::enumerate_radicals(u, RadicalFilter::ka)) {
            ActClass rc = sact::radical_class(u, q);
            ActClass sc = sact::semisimple_class(u, q);
            Report rep = sact::check_pair_conditions(u, rc, sc);
            c.require_report(rep, tag + ", " + q.label());
            induced.insert({rc.mask(), sc.mask()});
          }
          std::set<std::pair<std::vector<bool>, std::vector<bool>>> passing;
          for (auto const& rc : sact::all_act_classes(u))
            for (auto const& sc : sact::all_act_classes(u)) {
              if (!sact::check_pair_conditions(u, rc, sc).ok()) continue;
              passing.insert({rc.mask(), sc.mask()});
              RadicalAssignment q = sact::radical_from_radical_class(u, rc);
              c.require(sact::check_ka(u, q).ok(),
                        tag + ": induced assignment for " + rc.label() +
                            " is not a Kurosh-Amitsur radical");
              c.require(sact::radical_class(u, q) == rc,
                        tag + ": radical class moved for " + rc.label());
              c.require(sact::semisimple_class(u, q) == sc,
                        tag + ": semisimple class moved for " + rc.label());
            }
          c.require(passing == induced,
                    tag + ": passing pairs and induced pairs differ");
        }
      });

  run(4, "torsion theories and kurosh-amitsur radicals invert each other",
      120000, [](Check& c) {
        std::vector<Universe> universes;
        universes.emplace_back(absorber(), 2);
        universes.emplace_back(trivial(), 3);
        for (auto const& u : universes) {
          std::string tag = "universe of " + std::to_string(u.size()) +
                            " acts";
          auto kas = sact::enumerate_radicals(u, RadicalFilter::ka);
          auto taus = sact::enumerate_torsion_pairs(u);
          c.require(kas.size() == taus.size(),
                    tag + ": radical and torsion counts differ");
          std::set<std::pair<std::vector<bool>, std::vector<bool>>> tau_keys;
          for (auto const& tau : taus) tau_keys.insert(mask_pair(tau));
          for (auto const& q : kas) {
            TorsionPair tau = sact::torsion_from_ka(u, q);
            c.require(tau_keys.count(mask_pair(tau)) == 1,
                      tag + ": " + q.label() +
                          " maps outside the enumerated theories");
            c.require(sact::ka_from_torsion(u, tau) == q,
                      tag + ": radical -> theory -> radical moved " +
                          q.label());
          }
          for (auto const& tau : taus) {
            RadicalAssignment q = sact::ka_from_torsion(u, tau);
            c.require(sact::check_ka(u, q).ok(),
                      tag + ": t-assignment of " + tau.label +
                          " is not a Kurosh-Amitsur radical");
            c.require(mask_pair(sact::torsion_from_ka(u, q)) ==
                          mask_pair(tau),
                      tag + ": theory -> radical -> theory moved " +
                          tau.label);
            Report trep("acceptance");
            for (int i = 0; i < u.size(); ++i) {
              Act const& a = u.act(i);
              Congruence t = sact::t_congruence(u, tau.torsion, a, &trep);
              c.require(sact::is_rees(a, t),
                        tag + ": t(" + u.act_name(i) + ") is not Rees");
              for (auto const& blk : sact::system_of(a, t).members)
                c.require(tau.torsion.contains(
                              u.locate(sact::restrict_act(a, blk)).index),
                          tag + ": a t-class of " + u.act_name(i) +
                              " is not torsion");
              Act factor = sact::quotient(a, t).act;
              c.require(tau.torsion_free.contains(u.locate(factor).index),
                        tag + ": " + u.act_name(i) +
                            " modulo t is not torsion-free");
            }
            trep.merge(sact::check_torsion_factor(u, tau));
            c.require_report(trep, tag + ", " + tau.label);
          }
        }
      });

  run(5, "reflection is the ka join below and the same-class hoehnke meet",
      300000, [](Check& c) {
        std::vector<Universe> universes;
        universes.emplace_back(trivial(), 3);
        universes.emplace_back(group2(), 3);
        for (auto const& u : universes) {
          std::string tag = "universe of " + std::to_string(u.size()) +
                            " acts";
          auto hoehnkes = sact::enumerate_radicals(u, RadicalFilter::hoehnke);
          auto kas = sact::enumerate_radicals(u, RadicalFilter::ka);
          for (auto const& r : hoehnkes) {
            RadicalAssignment rk = sact::reflect(u, r);
            RadicalAssignment joined = RadicalAssignment::diagonal(u);
            for (auto const& q : kas)
              if (sact::pointwise_leq(q, r))
                joined = sact::pointwise_join(joined, q);
            c.require(joined == rk,
                      tag + ": join form differs from reflection of " +
                          r.label());
            ActClass rc = sact::radical_class(u, r);
            RadicalAssignment met = RadicalAssignment::total(u);
            for (auto const& h : hoehnkes)
              if (sact::radical_class(u, h) == rc)
                met = sact::pointwise_meet(met, h);
            c.require(met == rk,
                      tag + ": meet form differs from reflection of " +
                          r.label());
            c.require_report(sact::verify_reflection(u, r, kas, hoehnkes),
                             tag + ", " + r.label());
          }
        }
      });

  run(6, "rees values with radical members force system dominance", 300000,
      [](Check& c) {
        std::vector<Universe> universes;
        universes.emplace_back(trivial(), 3);
        universes.emplace_back(group2(), 3);
        for (auto const& u : universes) {
          std::string tag = "universe of " + std::to_string(u.size()) +
                            " acts";
          int premise_holders = 0;
          for (auto const& r :
               sact::enumerate_radicals(u, RadicalFilter::hoehnke)) {
            Report karep = sact::check_ka(u, r);
            bool rees_valued = true;
            bool members_radical = true;
            for (auto const& f : karep.findings()) {
              if (f.status != Status::fail) continue;
              if (f.check == "ka.rees-valued") rees_valued = false;
              if (f.check == "ka.members-radical") members_radical = false;
            }
            Report red = sact::check_ka_redundancy(u, r);
            c.require(red.ok(), tag + ": redundancy battery failed for " +
                                    r.label());
            if (!(rees_valued && members_radical)) continue;
            ++premise_holders;
            for (auto const& f : karep.findings())
              c.require(!(f.check == "ka.systems-dominated" &&
                          f.status == Status::fail),
                        tag + ": " + r.label() +
                            " has Rees values and radical members but a " +
                            "dominating system escapes (" + f.witness + ")");
            c.require(sact::reflect(u, r) == r,
                      tag + ": " + r.label() +
                          " meets the premises but moves under reflection");
            c.require_report(red, tag + ", " + r.label());
          }
          c.require(premise_holders >= 2,
                    tag + ": too few premise holders to be meaningful");
        }
      });

  run(7, "reflection is a deflationary idempotent right adjoint", 300000,
      [](Check& c) {
        std::vector<Universe> universes;
        universes.emplace_back(trivial(), 3);
        universes.emplace_back(group2(), 3);
        for (auto const& u : universes) {
          std::string tag = "universe of " + std::to_string(u.size()) +
                            " acts";
          auto hoehnkes = sact::enumerate_radicals(u, RadicalFilter::hoehnke);
          auto kas = sact::enumerate_radicals(u, RadicalFilter::ka);
          std::vector<RadicalAssignment> reflected;
          for (auto const& r : hoehnkes) reflected.push_back(sact::reflect(u, r));
          for (std::size_t i = 0; i < hoehnkes.size(); ++i) {
            auto const& r = hoehnkes[i];
            auto const& rk = reflected[i];
            for (auto const& q : kas)
              c.require(sact::pointwise_leq(q, r) ==
                            sact::pointwise_leq(q, rk),
                        tag + ": adjunction fails between " + q.label() +
                            " and " + r.label());
            c.require(sact::pointwise_leq(rk, r),
                      tag + ": reflection inflates " + r.label());
            c.require(sact::reflect(u, rk) == rk,
                      tag + ": reflection is not idempotent on " + r.label());
            for (std::size_t j = 0; j < hoehnkes.size(); ++j)
              if (sact::pointwise_leq(r, hoehnkes[j]))
                c.require(sact::pointwise_leq(rk, reflected[j]),
                          tag + ": reflection is not monotone between " +
                              r.label() + " and " + hoehnkes[j].label());
          }
        }
      });

  run(8, "subact and bounded-product closed classes induce radical classes",
      120000, [](Check& c) {
        Universe u(absorber(), 2);
        int qualified = 0;
        for (auto const& cls : sact::all_act_classes(u)) {
          Report closure = sact::check_semisimple_closure(u, cls);
          bool closed = true;
          for (auto const& f : closure.findings())
            if (f.status == Status::fail &&
                (f.check == "ssclosure.subacts" ||
                 f.check == "ssclosure.products"))
              closed = false;
          if (!closed) continue;
          ++qualified;
          RadicalAssignment r = sact::radical_from_semisimple(u, cls);
          ActClass rc = sact::radical_class(u, r);
          c.require_report(sact::check_radical_closure(u, rc),
                           "class " + cls.label());
        }
        c.require(qualified >= 2,
                  "no class beyond the forced extremes qualified");
      });

  run(9, "coproduct closure reports witnesses for every torsion class", 30000,
      [](Check& c) {
        Universe u2(absorber(), 2);
        Report rep =
            sact::coproduct_closure_check(u2, ActClass::trivials(u2));
        c.require(!rep.ok(), "gluing two one-point acts went unreported");
        bool witnessed = false;
        for (auto const& f : rep.findings())
          if (f.status == Status::fail &&
              f.witness.find("a1_0 + a1_0") != std::string::npos) {
            witnessed = true;
            auto pos = f.witness.find("= a");
            c.require(pos != std::string::npos &&
                          f.witness.compare(pos, 4, "= a2") == 0,
                      "the coproduct of two one-point acts should have two "
                      "elements, witness says: " +
                          f.witness);
          }
        c.require(witnessed,
                  "no witness names the coproduct of two one-point acts");

        Universe u3(group2(), 3);
        auto taus = sact::enumerate_torsion_pairs(u3);
        c.require(!taus.empty(), "no torsion theories enumerated");
        for (auto const& tau : taus) {
          Report r = sact::coproduct_closure_check(u3, tau.torsion);
          c.require(!r.findings().empty(),
                    tau.label + ": coproduct check reported nothing");
          for (auto const& f : r.findings())
            if (f.status == Status::fail)
              c.require(!f.witness.empty(),
                        tau.label + ": a violation carries no witness");
        }
      });

  run(10, "theorem reports are byte-identical across runs", 0, [](Check& c) {
    fs::path root = fs::temp_directory_path() /
                    ("sact-acceptance-" + std::to_string(::getpid()));
    fs::path ws = root / "ws";
    fs::path cache = root / "cache";
    fs::create_directories(ws);
    fs::create_directories(cache);
    for (auto const& entry : fs::directory_iterator(SACT_FIXTURES_DIR))
      if (entry.path().extension() == ".sact")
        fs::copy_file(entry.path(), ws / entry.path().filename());
    std::string cmd = "SACT_CACHE_DIR=" + cache.string() + " " +
                      SACT_CLI_PATH + " theorems --monoid g2 --max-size 3 " +
                      "--format records --workspace " + ws.string();
    RunResult first = run_shell(cmd);
    RunResult second = run_shell(cmd);
    c.require(first.code == 0,
              "first run exited " + std::to_string(first.code));
    c.require(second.code == 0,
              "second run exited " + std::to_string(second.code));
    c.require(!first.out.empty(), "first run printed nothing");
    c.require(first.out == second.out, "reports differ between runs");
    c.require(first.out.find("\"kind\":\"verdict\"") != std::string::npos,
              "no verdict record in the report stream");
    fs::remove_all(root);
  });

  std::printf("%d of 10 checks passed\n", 10 - failed_checks);
  return failed_checks == 0 ? 0 : 1;
}
