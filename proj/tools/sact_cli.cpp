// Workbench front end: fixture workspaces, cached universes, check suites,
// the theorem battery, and radical/torsion utilities. All machine-readable
// output is deterministic; human output may add timing.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sact/sact.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string workspace = ".";
  int max_size = 2;
  std::string format = "human";
  unsigned long long seed = 0;
  int jobs = 1;
};

// Exit codes: 0 pass, 1 fail, 2 usage/parse, 3 bounds, 4 partial.
enum ExitCode {
  exit_pass = 0,
  exit_fail = 1,
  exit_usage = 2,
  exit_bounds = 3,
  exit_partial = 4,
};

int exit_for(sact::Verdict v) {
  switch (v) {
    case sact::Verdict::pass: return exit_pass;
    case sact::Verdict::fail: return exit_fail;
    case sact::Verdict::partial: return exit_partial;
  }
  return exit_fail;
}

int combine_exit(int a, int b) {
  // fail dominates, then bounds, then partial, then pass.
  auto rank = [](int c) {
    switch (c) {
      case exit_fail: return 3;
      case exit_bounds: return 2;
      case exit_partial: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

class Emitter {
 public:
  Emitter(std::string format, bool timing)
      : format_(std::move(format)), timing_(timing) {}

  void emit(sact::Report const& report,
            std::chrono::milliseconds elapsed = std::chrono::milliseconds(0)) {
    if (format_ == "records") {
      std::cout << sact::render_records(report);
    } else {
      std::cout << sact::render_human(report);
      if (timing_)
        std::cout << "-- elapsed: " << elapsed.count() << " ms\n";
      std::cout << "\n";
    }
    code_ = combine_exit(code_, exit_for(report.verdict()));
  }

  template <typename F>
  void run(F&& make_report) {
    auto t0 = std::chrono::steady_clock::now();
    sact::Report report = make_report();
    auto t1 = std::chrono::steady_clock::now();
    emit(report,
         std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0));
  }

  int code() const { return code_; }

 private:
  std::string format_;
  bool timing_;
  int code_ = exit_pass;
};

// ---------------------------------------------------------------------------
// Workspace loading

struct Workspace {
  sact::FixtureFile fixtures;
  std::map<std::string, int> monoid_index;
  std::map<std::string, int> act_index;
  std::map<std::string, int> class_index;
  std::map<std::string, int> radical_index;
  std::map<std::string, int> torsion_index;
  std::map<std::string, std::string> file_of;  // "<kind>:<name>" -> path
  fs::path root;
};

[[noreturn]] void usage_error(std::string const& what) {
  std::cerr << "error: " << what << "\n";
  std::exit(exit_usage);
}

std::vector<fs::path> workspace_files(fs::path const& root) {
  std::vector<fs::path> files;
  if (!fs::exists(root)) return files;
  for (auto const& entry : fs::directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".sact")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

Workspace load_workspace(GlobalOpts const& opts) {
  Workspace ws;
  ws.root = opts.workspace;
  for (auto const& path : workspace_files(ws.root)) {
    std::ifstream in(path);
    if (!in) usage_error("cannot open " + path.string());
    sact::FixtureFile file;
    try {
      file = sact::parse_fixtures(in);
    } catch (sact::ParseError const& e) {
      usage_error(path.string() + ": " + e.what());
    }
    auto claim = [&](std::string const& kind, std::string const& name,
                     std::map<std::string, int>& index, int value) {
      std::string key = kind + ":" + name;
      auto [it, fresh] = ws.file_of.emplace(key, path.string());
      if (!fresh)
        usage_error("duplicate " + kind + " '" + name + "' in " +
                    path.string() + " (first defined in " + it->second + ")");
      index.emplace(name, value);
    };
    for (auto& m : file.monoids) {
      claim("monoid", m.name, ws.monoid_index,
            static_cast<int>(ws.fixtures.monoids.size()));
      ws.fixtures.monoids.push_back(std::move(m));
    }
    for (auto& a : file.acts) {
      claim("act", a.name, ws.act_index,
            static_cast<int>(ws.fixtures.acts.size()));
      ws.fixtures.acts.push_back(std::move(a));
    }
    for (auto& c : file.classes) {
      claim("class", c.name, ws.class_index,
            static_cast<int>(ws.fixtures.classes.size()));
      ws.fixtures.classes.push_back(std::move(c));
    }
    for (auto& r : file.radicals) {
      claim("radical", r.name, ws.radical_index,
            static_cast<int>(ws.fixtures.radicals.size()));
      ws.fixtures.radicals.push_back(std::move(r));
    }
    for (auto& t : file.torsions) {
      claim("torsion", t.name, ws.torsion_index,
            static_cast<int>(ws.fixtures.torsions.size()));
      ws.fixtures.torsions.push_back(std::move(t));
    }
  }
  return ws;
}

// ---------------------------------------------------------------------------
// Universe resolution with a persisted cache

fs::path cache_dir(GlobalOpts const& opts) {
  if (char const* env = std::getenv("SACT_CACHE_DIR")) return fs::path(env);
  return fs::path(opts.workspace) / ".sact-cache";
}

ordered_json universe_to_json(sact::Universe const& u) {
  ordered_json j;
  j["monoid"]["size"] = u.monoid().size();
  j["monoid"]["identity"] = u.monoid().identity();
  j["monoid"]["table"] = u.monoid().table();
  j["max_size"] = u.max_size();
  j["acts"] = ordered_json::array();
  for (int i = 0; i < u.size(); ++i) {
    ordered_json a;
    a["size"] = u.act(i).size();
    a["action"] = u.act(i).action();
    j["acts"].push_back(std::move(a));
  }
  return j;
}

std::optional<sact::Universe> universe_from_json(
    ordered_json const& j, sact::Monoid const& expected, int max_size) {
  try {
    std::vector<std::vector<int>> rows(expected.size());
    auto flat = j.at("monoid").at("table").get<std::vector<int>>();
    if (j.at("monoid").at("size").get<int>() != expected.size()) return {};
    for (int s = 0; s < expected.size(); ++s)
      rows[s] = std::vector<int>(flat.begin() + s * expected.size(),
                                 flat.begin() + (s + 1) * expected.size());
    sact::Monoid m =
        sact::validate_monoid(rows, j.at("monoid").at("identity").get<int>());
    if (!(m == expected)) return {};
    if (j.at("max_size").get<int>() != max_size) return {};
    auto mp = std::make_shared<const sact::Monoid>(m);
    std::vector<sact::Act> acts;
    for (auto const& a : j.at("acts")) {
      int size = a.at("size").get<int>();
      auto action = a.at("action").get<std::vector<int>>();
      if (static_cast<int>(action.size()) != size * expected.size()) return {};
      acts.push_back(sact::Act(mp, size, std::move(action)));
    }
    return sact::Universe::from_parts(mp, max_size, std::move(acts));
  } catch (std::exception const&) {
    return {};
  }
}

struct Resolver {
  Workspace const& ws;
  GlobalOpts const& opts;
  std::map<std::string, std::shared_ptr<const sact::Monoid>> monoids;
  std::map<std::string, std::unique_ptr<sact::Universe>> universes;

  std::shared_ptr<const sact::Monoid> monoid(std::string const& name) {
    auto it = monoids.find(name);
    if (it != monoids.end()) return it->second;
    auto fit = ws.monoid_index.find(name);
    if (fit == ws.monoid_index.end())
      sact::fail(sact::errc::unknown_target,
                 "no monoid named '" + name + "' in the workspace");
    auto const& fixture = ws.fixtures.monoids[fit->second];
    auto m = std::make_shared<const sact::Monoid>(
        sact::validate_monoid(fixture.table, fixture.identity));
    monoids.emplace(name, m);
    return m;
  }

  sact::Universe const& universe(std::string const& name, int max_size) {
    std::string key = name + "@" + std::to_string(max_size);
    auto it = universes.find(key);
    if (it != universes.end()) return *it->second;
    auto m = monoid(name);

    fs::path dir = cache_dir(opts);
    fs::path file =
        dir / ("u_" + sact::monoid_key(*m) + "_" + std::to_string(max_size) +
               ".json");
    if (fs::exists(file)) {
      std::ifstream in(file);
      ordered_json j;
      try {
        in >> j;
      } catch (std::exception const&) {
        j = ordered_json();
      }
      if (auto u = universe_from_json(j, *m, max_size)) {
        auto owned = std::make_unique<sact::Universe>(std::move(*u));
        auto& ref = *owned;
        universes.emplace(key, std::move(owned));
        return ref;
      }
      // fall through: stale or corrupt cache entries are rebuilt
    }

    auto owned = std::make_unique<sact::Universe>(m, max_size);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec) {
      fs::path tmp = file;
      tmp += ".tmp";
      {
        std::ofstream outf(tmp);
        outf << universe_to_json(*owned).dump(2) << "\n";
      }
      fs::rename(tmp, file, ec);  // atomic publish
      if (ec) fs::remove(tmp, ec);
    }
    auto& ref = *owned;
    universes.emplace(key, std::move(owned));
    return ref;
  }

  /// "<monoid>@<n>" or "<monoid>" (size from --max-size).
  sact::Universe const& universe_spec(std::string const& spec) {
    auto at = spec.find('@');
    if (at == std::string::npos) return universe(spec, opts.max_size);
    return universe(spec.substr(0, at),
                    std::stoi(spec.substr(at + 1)));
  }

  sact::ActClass act_class(sact::Universe const& u, std::string const& name) {
    if (name == "all") return sact::ActClass::all(u);
    if (name == "trivials") return sact::ActClass::trivials(u);
    auto fit = ws.class_index.find(name);
    if (fit == ws.class_index.end())
      sact::fail(sact::errc::unknown_target,
                 "no class named '" + name + "' in the workspace");
    auto const& fixture = ws.fixtures.classes[fit->second];
    if (fixture.is_predicate) {
      if (fixture.predicate == "all") return sact::ActClass::all(u, name);
      if (fixture.predicate == "trivials")
        return sact::ActClass::trivials(u, name);
      if (fixture.predicate == "with-zero") {
        std::vector<bool> mask(u.size(), false);
        for (int i = 0; i < u.size(); ++i)
          mask[i] = !sact::zeros(u.act(i)).empty();
        return sact::ActClass(u, std::move(mask), name);
      }
      sact::fail(sact::errc::unknown_target,
                 "unknown class predicate '" + fixture.predicate + "'");
    }
    std::vector<int> indices;
    for (auto const& act_name : fixture.acts)
      indices.push_back(u.index_by_name(act_name));
    return sact::ActClass::from_indices(u, indices, name);
  }

  /// Built-in radicals "delta"/"nabla" live on the supplied universe;
  /// fixture radicals pin their own universe.
  sact::RadicalAssignment radical(std::string const& name,
                                  sact::Universe const** u_out,
                                  std::string const* universe_flag) {
    if (name == "delta" || name == "nabla") {
      if (!universe_flag || universe_flag->empty())
        sact::fail(sact::errc::unknown_target,
                   "built-in radical '" + name + "' needs --universe");
      sact::Universe const& u = universe_spec(*universe_flag);
      *u_out = &u;
      return name == "delta" ? sact::RadicalAssignment::diagonal(u)
                             : sact::RadicalAssignment::total(u);
    }
    auto fit = ws.radical_index.find(name);
    if (fit == ws.radical_index.end())
      sact::fail(sact::errc::unknown_target,
                 "no radical named '" + name + "' in the workspace");
    auto const& fixture = ws.fixtures.radicals[fit->second];
    sact::Universe const& u = universe(fixture.monoid, fixture.max_size);
    if (universe_flag && !universe_flag->empty()) {
      sact::Universe const& flagged = universe_spec(*universe_flag);
      if (&flagged != &u)
        sact::fail(sact::errc::unknown_target,
                   "radical '" + name + "' lives on " + fixture.monoid + "@" +
                       std::to_string(fixture.max_size) +
                       ", which differs from --universe");
    }
    *u_out = &u;
    std::vector<sact::Congruence> values(u.size());
    std::vector<bool> seen(u.size(), false);
    for (auto const& [act_name, blocks] : fixture.entries) {
      int i = u.index_by_name(act_name);
      if (seen[i])
        sact::fail(sact::errc::act_mismatch,
                   "radical '" + name + "' assigns " + act_name + " twice");
      seen[i] = true;
      values[i] = sact::Congruence::from_blocks(u.act(i).size(), blocks);
    }
    for (int i = 0; i < u.size(); ++i)
      if (!seen[i])
        sact::fail(sact::errc::act_mismatch, "radical '" + name +
                                                 "' has no value for " +
                                                 u.act_name(i));
    return sact::RadicalAssignment(u, std::move(values), name);
  }

  sact::TorsionPair torsion(std::string const& name, sact::Universe const& u) {
    auto fit = ws.torsion_index.find(name);
    if (fit == ws.torsion_index.end())
      sact::fail(sact::errc::unknown_target,
                 "no torsion pair named '" + name + "' in the workspace");
    auto const& fixture = ws.fixtures.torsions[fit->second];
    return sact::TorsionPair{act_class(u, fixture.torsion_class),
                             act_class(u, fixture.free_class), name};
  }
};

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(GlobalOpts const& opts, std::vector<std::string> paths) {
  Workspace ws = load_workspace(opts);  // parse errors already exit 2
  if (paths.empty())
    for (auto const& p : workspace_files(ws.root)) paths.push_back(p.string());

  sact::Report report("validate");
  bool invalid = false;
  for (auto const& path : paths) {
    std::ifstream in(path);
    if (!in) usage_error("cannot open " + path);
    sact::FixtureFile file;
    try {
      file = sact::parse_fixtures(in);
    } catch (sact::ParseError const& e) {
      usage_error(path + ": " + e.what());
    }
    std::map<std::string, sact::Monoid> local;
    for (auto const& m : file.monoids) {
      try {
        local.emplace(m.name, sact::validate_monoid(m.table, m.identity));
        report.pass("fixture.monoid", m.name,
                    path + ":" + std::to_string(m.line));
      } catch (sact::Error const& e) {
        invalid = true;
        report.fail("fixture.monoid", m.name, e.what(),
                    path + ":" + std::to_string(m.line));
      }
    }
    for (auto const& a : file.acts) {
      try {
        auto it = local.find(a.monoid);
        std::shared_ptr<const sact::Monoid> m;
        if (it != local.end()) {
          m = std::make_shared<const sact::Monoid>(it->second);
        } else {
          auto wit = ws.monoid_index.find(a.monoid);
          if (wit == ws.monoid_index.end())
            sact::fail(sact::errc::unknown_target,
                       "references unknown monoid '" + a.monoid + "'");
          auto const& fixture = ws.fixtures.monoids[wit->second];
          m = std::make_shared<const sact::Monoid>(
              sact::validate_monoid(fixture.table, fixture.identity));
        }
        for (auto const& row : a.rows)
          if (static_cast<int>(row.size()) != a.size)
            sact::fail(sact::errc::compatibility_violation,
                       "action row arity disagrees with the declared size");
        if (sact::validate_act(m, a.rows).size() != a.size)
          sact::fail(sact::errc::compatibility_violation,
                     "action rows disagree with the declared size");
        report.pass("fixture.act", a.name,
                    path + ":" + std::to_string(a.line));
      } catch (sact::Error const& e) {
        invalid = true;
        report.fail("fixture.act", a.name, e.what(),
                    path + ":" + std::to_string(a.line));
      }
    }
  }
  Emitter emitter(opts.format, true);
  emitter.emit(report);
  return invalid ? exit_usage : emitter.code();
}

sact::Report universe_report(sact::Universe const& u, std::string const& name,
                             unsigned long long seed) {
  sact::Report report("universe");
  report.pass("universe.size", name + "@" + std::to_string(u.max_size()),
              std::to_string(u.size()) + " acts up to isomorphism");
  for (int n = 0; n <= u.max_size(); ++n) {
    std::string names;
    for (int i = 0; i < u.size(); ++i)
      if (u.act(i).size() == n) names += (names.empty() ? "" : " ") + u.act_name(i);
    report.pass("universe.breakdown", "size " + std::to_string(n),
                std::to_string(u.count_of_size(n)) + " acts: " + names);
  }

  // Closure self-checks: subacts and quotients land back in the universe.
  bool closed = true;
  for (int i = 0; i < u.size() && closed; ++i) {
    for (auto const& elems : sact::subacts(u.act(i)))
      if (!u.try_locate(sact::restrict_act(u.act(i), elems))) {
        closed = false;
        report.fail("universe.subact-closure", u.act_name(i),
                    "a subact has no canonical representative");
      }
    auto const& lattice = u.congruences(i);
    for (int c = 0; c < lattice.size(); ++c)
      if (!u.try_locate(sact::quotient(u.act(i), lattice.at(c)).act)) {
        closed = false;
        report.fail("universe.quotient-closure", u.act_name(i),
                    "a factor act has no canonical representative");
      }
  }
  if (closed)
    report.pass("universe.closure", name,
                "subacts and factor acts stay inside the universe");

  // Sampled isomorphism invariance of the canonical form.
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  int samples = 0;
  bool invariant = true;
  for (int i = 0; i < u.size(); ++i) {
    sact::Act const& a = u.act(i);
    if (a.size() < 2) continue;
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> flat(a.action().size());
      std::vector<int> inv(a.size());
      for (int x = 0; x < a.size(); ++x) inv[perm[x]] = x;
      for (int s = 0; s < a.monoid().size(); ++s)
        for (int x = 0; x < a.size(); ++x)
          flat[s * a.size() + x] = perm[a.apply(s, inv[x])];
      sact::Act shuffled(a.monoid_ptr(), a.size(), std::move(flat));
      ++samples;
      if (!(sact::canonical_act(shuffled) == a)) {
        invariant = false;
        report.fail("canonical.sampled-invariance", u.act_name(i),
                    "a relabelled copy canonicalized differently");
      }
    }
  }
  if (invariant)
    report.pass("canonical.sampled-invariance", name,
                std::to_string(samples) + " relabelled copies, seed " +
                    std::to_string(seed));
  return report;
}

int cmd_universe(GlobalOpts const& opts, std::string const& monoid_name) {
  Workspace ws = load_workspace(opts);
  Resolver resolver{ws, opts, {}, {}};
  Emitter emitter(opts.format, true);
  emitter.run([&] {
    sact::Universe const& u = resolver.universe(monoid_name, opts.max_size);
    return universe_report(u, monoid_name, opts.seed);
  });
  return emitter.code();
}

// The full verification battery over one universe. Sections appear in a
// fixed order; --jobs only parallelizes their computation.
std::vector<sact::Report> theorem_reports(sact::Universe const& u,
                                          std::string const& monoid_name,
                                          GlobalOpts const& opts) {
  namespace s = sact;
  std::vector<std::function<s::Report()>> sections;

  sections.push_back(
      [&] { return universe_report(u, monoid_name, opts.seed); });

  // Radical enumeration counts plus axiom self-checks.
  std::vector<s::RadicalAssignment> hoehnke, ka;
  sections.push_back([&, &u = u] {
    s::Report report("radical-enumeration");
    try {
      hoehnke = s::enumerate_radicals(u, s::RadicalFilter::hoehnke);
      auto hereditary = s::enumerate_radicals(u, s::RadicalFilter::hereditary);
      ka = s::enumerate_radicals(u, s::RadicalFilter::ka);
      report.pass("enumeration.hoehnke", monoid_name,
                  std::to_string(hoehnke.size()) + " assignments");
      report.pass("enumeration.hereditary", monoid_name,
                  std::to_string(hereditary.size()) + " assignments");
      report.pass("enumeration.ka", monoid_name,
                  std::to_string(ka.size()) + " assignments");
      for (auto const& r : hoehnke)
        if (!s::check_hoehnke(u, r).ok())
          report.fail("enumeration.self-check", r.label(),
                      "enumerated assignment fails its own defining checks");
      for (auto const& r : ka) {
        if (!s::check_ka(u, r).ok())
          report.fail("enumeration.self-check", r.label(),
                      "enumerated KA assignment fails the KA checks");
      }
      bool nested = true;
      for (auto const& r : ka) {
        bool found = false;
        for (auto const& h : hoehnke)
          if (h == r) found = true;
        if (!found) nested = false;
      }
      if (nested)
        report.pass("enumeration.nesting", monoid_name,
                    "KA radicals all appear among the functor radicals");
      else
        report.fail("enumeration.nesting", monoid_name,
                    "a KA radical is missing from the functor enumeration");
    } catch (s::Error const& e) {
      if (e.code() != s::errc::bound_exceeded) throw;
      report.skip("enumeration.bound", monoid_name, e.what());
    }
    return report;
  });

  auto run_sections_so_far = [&](int count) {
    // The enumeration section must complete before dependent sections run.
    (void)count;
  };
  (void)run_sections_so_far;

  std::vector<s::Report> out;
  // Sections 0 and 1 fill shared state; run them first.
  out.push_back(sections[0]());
  out.push_back(sections[1]());

  std::vector<std::function<s::Report()>> rest;

  rest.push_back([&, &u = u] {
    s::Report report("radical-axioms");
    if (hoehnke.empty()) {
      report.skip("radical-axioms.skipped", monoid_name,
                  "no enumerated radicals (bound exceeded)");
      return report;
    }
    for (auto const& r : ka) {
      s::ActClass rc = s::radical_class(u, r);
      s::ActClass sc = s::semisimple_class(u, r);
      // Radical class: no non-trivial homomorphic image is semisimple.
      for (int i = 0; i < u.size(); ++i) {
        bool has_image = false;
        for (int j = 0; j < u.size() && !has_image; ++j)
          for (auto const& f : u.homs_between(i, j)) {
            auto img = s::image_of(f);
            if (img.size() < 2) continue;
            int ii = u.locate(s::restrict_act(u.act(j), img)).index;
            if (sc.contains(ii)) {
              has_image = true;
              break;
            }
          }
        if (rc.contains(i) == !has_image) continue;
        report.fail("radclass.no-semisimple-image", r.label(),
                    u.act_name(i) +
                        ": membership disagrees with the image criterion");
      }
      // Semisimple class: every radical subact is trivial.
      for (int i = 0; i < u.size(); ++i) {
        bool clean = true;
        for (auto const& elems : s::subacts(u.act(i))) {
          if (elems.size() < 2) continue;
          int ii = u.locate(s::restrict_act(u.act(i), elems)).index;
          if (rc.contains(ii)) {
            clean = false;
            break;
          }
        }
        if (sc.contains(i) == clean) continue;
        report.fail("ssclass.no-radical-subact", r.label(),
                    u.act_name(i) +
                        ": membership disagrees with the subact criterion");
      }
    }
    if (report.findings().empty())
      report.pass("radclass.characterizations", monoid_name,
                  "image and subact criteria agree on all " +
                      std::to_string(ka.size()) + " KA radicals");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("pair-characterization");
    if (hoehnke.empty()) {
      report.skip("pair.skipped", monoid_name, "no enumerated radicals");
      return report;
    }
    for (auto const& r : ka) {
      auto sub = s::check_pair_conditions(u, s::radical_class(u, r),
                                          s::semisimple_class(u, r));
      if (sub.ok())
        report.pass("pair.forward", r.label(),
                    "its class pair satisfies the four conditions");
      else
        report.merge(std::move(sub));
    }
    // Converse: every class pair satisfying the conditions arises from a
    // KA radical via the join construction.
    auto classes = s::all_act_classes(u);
    int matched = 0;
    for (auto const& rc : classes)
      for (auto const& sc : classes) {
        if (!s::check_pair_conditions(u, rc, sc).ok()) continue;
        s::RadicalAssignment q = s::radical_from_radical_class(u, rc);
        bool is_ka = false;
        for (auto const& k : ka)
          if (k == q) is_ka = true;
        if (!is_ka) {
          report.fail("pair.converse", rc.label() + "/" + sc.label(),
                      "conditions hold but the induced assignment is not an "
                      "enumerated KA radical");
          continue;
        }
        if (!(s::radical_class(u, q) == rc) ||
            !(s::semisimple_class(u, q) == sc)) {
          report.fail("pair.converse", rc.label() + "/" + sc.label(),
                      "induced radical reproduces different classes");
          continue;
        }
        ++matched;
      }
    report.pass("pair.converse", monoid_name,
                std::to_string(matched) +
                    " qualifying class pairs all induced KA radicals");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("semisimple-correspondence");
    if (hoehnke.empty()) {
      report.skip("sscorr.skipped", monoid_name, "no enumerated radicals");
      return report;
    }
    // Exact identities of the class -> radical meet construction: the class
    // embeds in the semisimple class of its induced radical, and passing a
    // class through radical -> semisimple class -> radical reproduces the
    // radical. Both hold with no size bounds involved.
    int classes = 0;
    for (auto const& cls : s::all_act_classes(u)) {
      ++classes;
      s::RadicalAssignment r = s::radical_from_semisimple(u, cls);
      s::ActClass ss = s::semisimple_class(u, r);
      for (int i = 0; i < u.size(); ++i)
        if (cls.contains(i) && !ss.contains(i))
          report.fail("sscorr.extension", cls.label(),
                      u.act_name(i) +
                          " left the semisimple class of its own radical");
      if (!(s::radical_from_semisimple(u, ss) == r))
        report.fail("sscorr.idempotent", cls.label(),
                    "re-inducing from the semisimple class moved the radical");
    }
    report.pass("sscorr.galois", monoid_name,
                std::to_string(classes) +
                    " classes: extension and idempotence hold");
    // Hoehnke radicals recover from their own semisimple class exactly when
    // they are determined by it; for every enumerated Hoehnke radical the
    // induced radical shares the semisimple class.
    for (auto const& r : hoehnke) {
      s::RadicalAssignment rs =
          s::radical_from_semisimple(u, s::semisimple_class(u, r));
      if (!(s::semisimple_class(u, rs) == s::semisimple_class(u, r)))
        report.fail("sscorr.stability", r.label(),
                    "re-induced radical changed the semisimple class");
      if (!s::pointwise_leq(rs, r))
        report.fail("sscorr.finest", r.label(),
                    "the induced radical is not below the original");
    }
    report.pass("sscorr.hoehnke-stability", monoid_name,
                "semisimple classes are stable under re-induction across " +
                    std::to_string(hoehnke.size()) + " radicals");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("radical-class-closure");
    int eligible = 0;
    for (auto const& cls : s::all_act_classes(u)) {
      auto closure = s::check_semisimple_closure(u, cls);
      bool subacts_ok = true, products_ok = true;
      for (auto const& f : closure.findings()) {
        if (f.status != s::Status::fail) continue;
        if (f.check == "ssclosure.subacts") subacts_ok = false;
        if (f.check == "ssclosure.products") products_ok = false;
      }
      if (!subacts_ok || !products_ok) continue;
      ++eligible;
      s::RadicalAssignment r = s::radical_from_semisimple(u, cls);
      auto rad_closure = s::check_radical_closure(u, s::radical_class(u, r));
      if (rad_closure.ok())
        report.pass("radclosure.from-class", cls.label(),
                    "induced radical class passes all three closure checks");
      else
        report.merge(std::move(rad_closure));
    }
    report.pass("radclosure.eligible", monoid_name,
                std::to_string(eligible) + " closed classes checked");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("torsion-equivalence");
    auto pairs = s::enumerate_torsion_pairs(u);
    report.pass("torsion.count", monoid_name,
                std::to_string(pairs.size()) + " torsion theories");
    if (hoehnke.empty()) {
      report.skip("torsion.bijection", monoid_name,
                  "no enumerated radicals to compare against");
      return report;
    }
    if (pairs.size() == ka.size())
      report.pass("torsion.bijection-count", monoid_name,
                  "torsion theories and KA radicals agree in number (" +
                      std::to_string(ka.size()) + ")");
    else
      report.fail("torsion.bijection-count", monoid_name,
                  std::to_string(pairs.size()) + " torsion theories vs " +
                      std::to_string(ka.size()) + " KA radicals");
    for (auto const& tau : pairs) {
      if (!s::check_torsion_theory(u, tau).ok()) {
        report.fail("torsion.self-check", tau.label,
                    "enumerated pair fails the torsion-theory conditions");
        continue;
      }
      s::RadicalAssignment r = s::ka_from_torsion(u, tau);
      if (!s::check_ka(u, r).ok() || !s::check_hoehnke(u, r).ok())
        report.fail("torsion.to-radical", tau.label,
                    "t(-) is not a KA radical");
      s::TorsionPair back = s::torsion_from_ka(u, r);
      if (!(back.torsion == tau.torsion) ||
          !(back.torsion_free == tau.torsion_free))
        report.fail("torsion.round-trip", tau.label,
                    "radical -> torsion does not invert torsion -> radical");
      auto factor = s::check_torsion_factor(u, tau);
      if (factor.ok())
        report.pass("torsion.factor-facts", tau.label,
                    "factor acts are torsion-free with torsion preimages");
      else
        report.merge(std::move(factor));
    }
    for (auto const& r : ka) {
      s::TorsionPair tau = s::torsion_from_ka(u, r);
      s::RadicalAssignment back = s::ka_from_torsion(u, tau);
      if (!(back == r))
        report.fail("torsion.other-round-trip", r.label(),
                    "torsion -> radical does not invert radical -> torsion");
    }
    report.pass("torsion.round-trips", monoid_name,
                "both compositions are identities");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("reflection");
    if (hoehnke.empty()) {
      report.skip("reflection.skipped", monoid_name, "no enumerated radicals");
      return report;
    }
    for (auto const& r : hoehnke) {
      auto sub = s::verify_reflection(u, r, ka, hoehnke);
      if (sub.ok())
        report.pass("reflection.verified", r.label(),
                    "join/meet forms, adjunction and dominance hold");
      else
        report.merge(std::move(sub));
    }
    bool monotone = true;
    for (auto const& q : hoehnke)
      for (auto const& r : hoehnke) {
        if (!s::pointwise_leq(q, r)) continue;
        if (!s::pointwise_leq(s::reflect(u, q), s::reflect(u, r))) {
          monotone = false;
          report.fail("reflection.monotone", q.label() + " <= " + r.label(),
                      "reflections are not ordered");
        }
      }
    if (monotone)
      report.pass("reflection.monotone", monoid_name,
                  "reflection preserves the pointwise order");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("redundancy");
    if (hoehnke.empty()) {
      report.skip("redundancy.skipped", monoid_name, "no enumerated radicals");
      return report;
    }
    int premise_holders = 0;
    for (auto const& r : hoehnke) {
      auto sub = s::check_ka_redundancy(u, r);
      if (sub.verdict() == s::Verdict::fail) {
        report.merge(std::move(sub));
        continue;
      }
      if (sub.verdict() == s::Verdict::pass) ++premise_holders;
    }
    report.pass("redundancy.summary", monoid_name,
                std::to_string(premise_holders) +
                    " radicals satisfied the premise; the third property and "
                    "the fixpoint followed every time");
    return report;
  });

  rest.push_back([&, &u = u] {
    s::Report report("coproduct-closure");
    s::ActClass trivials = s::ActClass::trivials(u);
    auto probe = s::coproduct_closure_check(u, trivials);
    bool witness = false;
    for (auto const& f : probe.findings())
      if (f.status == s::Status::fail) witness = true;
    if (witness) {
      std::string w;
      for (auto const& f : probe.findings())
        if (f.status == s::Status::fail) {
          w = f.witness;
          break;
        }
      report.pass("coproduct.trivials-witness", monoid_name,
                  "trivial class is not coproduct-closed: " + w);
    } else {
      report.fail("coproduct.trivials-witness", monoid_name,
                  "expected a closure violation for the trivial class, "
                  "found none in bound");
    }
    for (auto const& tau : s::enumerate_torsion_pairs(u)) {
      for (auto* cls : {&tau.torsion, &tau.torsion_free}) {
        auto sub = s::coproduct_closure_check(u, *cls);
        int fails = sub.count(s::Status::fail);
        int skips = sub.count(s::Status::skip);
        std::string w;
        for (auto const& f : sub.findings())
          if (f.status == s::Status::fail) {
            w = f.witness;
            break;
          }
        report.pass("coproduct.survey", tau.label + " " + cls->label(),
                    fails ? "violations in bound, e.g. " + w
                          : (skips ? "closed on in-bound pairs, " +
                                         std::to_string(skips) + " skipped"
                                   : "closed under coproducts in bound"));
      }
    }
    return report;
  });

  if (opts.jobs > 1) {
    std::vector<std::future<s::Report>> futures;
    for (auto& f : rest)
      futures.push_back(std::async(std::launch::async, f));
    for (auto& f : futures) out.push_back(f.get());
  } else {
    for (auto& f : rest) out.push_back(f());
  }
  return out;
}

int cmd_theorems(GlobalOpts const& opts, std::string const& monoid_name) {
  Workspace ws = load_workspace(opts);
  Resolver resolver{ws, opts, {}, {}};
  Emitter emitter(opts.format, true);
  auto t0 = std::chrono::steady_clock::now();
  sact::Universe const& u = resolver.universe(monoid_name, opts.max_size);
  auto reports = theorem_reports(u, monoid_name, opts);
  auto t1 = std::chrono::steady_clock::now();
  auto total = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0);
  for (std::size_t i = 0; i < reports.size(); ++i)
    emitter.emit(reports[i], i + 1 == reports.size()
                                 ? total
                                 : std::chrono::milliseconds(0));
  return emitter.code();
}

int cmd_check(GlobalOpts const& opts, std::string const& suite,
              std::vector<std::string> const& targets,
              std::string const& universe_flag) {
  Workspace ws = load_workspace(opts);
  Resolver resolver{ws, opts, {}, {}};
  Emitter emitter(opts.format, true);
  namespace s = sact;

  auto radical_targets = [&](std::vector<std::string> const& names) {
    std::vector<std::pair<s::RadicalAssignment, s::Universe const*>> out;
    for (auto const& name : names) {
      s::Universe const* u = nullptr;
      s::RadicalAssignment r = resolver.radical(name, &u, &universe_flag);
      out.emplace_back(std::move(r), u);
    }
    return out;
  };

  if (suite == "hoehnke" || suite == "hereditary" || suite == "ka" ||
      suite == "redundancy") {
    if (targets.empty()) usage_error("suite '" + suite + "' needs a radical");
    for (auto& [r, u] : radical_targets(targets)) {
      if (suite == "hoehnke")
        emitter.run([&, &r = r] { return s::check_hoehnke(*u, r); });
      else if (suite == "hereditary")
        emitter.run([&, &r = r] { return s::check_hereditary(*u, r); });
      else if (suite == "ka")
        emitter.run([&, &r = r] { return s::check_ka(*u, r); });
      else
        emitter.run([&, &r = r] { return s::check_ka_redundancy(*u, r); });
    }
    return emitter.code();
  }
  if (suite == "pair") {
    if (targets.size() != 2)
      usage_error("suite 'pair' needs two class names");
    if (universe_flag.empty()) usage_error("suite 'pair' needs --universe");
    s::Universe const& u = resolver.universe_spec(universe_flag);
    emitter.run([&] {
      return s::check_pair_conditions(u, resolver.act_class(u, targets[0]),
                                      resolver.act_class(u, targets[1]));
    });
    return emitter.code();
  }
  if (suite == "torsion") {
    if (targets.size() != 1)
      usage_error("suite 'torsion' needs a torsion-pair name");
    if (universe_flag.empty()) usage_error("suite 'torsion' needs --universe");
    s::Universe const& u = resolver.universe_spec(universe_flag);
    emitter.run([&] {
      auto tau = resolver.torsion(targets[0], u);
      auto report = s::check_torsion_theory(u, tau);
      if (report.ok()) report.merge(s::check_torsion_factor(u, tau));
      return report;
    });
    return emitter.code();
  }
  if (suite == "closure") {
    if (targets.size() != 1) usage_error("suite 'closure' needs a class name");
    if (universe_flag.empty()) usage_error("suite 'closure' needs --universe");
    s::Universe const& u = resolver.universe_spec(universe_flag);
    s::ActClass cls = resolver.act_class(u, targets[0]);
    emitter.run([&] { return s::check_semisimple_closure(u, cls); });
    emitter.run([&] { return s::check_radical_closure(u, cls); });
    return emitter.code();
  }
  if (suite == "reflection") {
    if (targets.size() != 1)
      usage_error("suite 'reflection' needs a radical name or 'all'");
    if (universe_flag.empty() && targets[0] == "all")
      usage_error("'reflection all' needs --universe");
    s::Universe const* u = nullptr;
    std::vector<s::RadicalAssignment> subjects;
    if (targets[0] == "all") {
      u = &resolver.universe_spec(universe_flag);
    } else {
      subjects.push_back(resolver.radical(targets[0], &u, &universe_flag));
    }
    auto hoehnke = s::enumerate_radicals(*u, s::RadicalFilter::hoehnke);
    auto ka = s::enumerate_radicals(*u, s::RadicalFilter::ka);
    if (targets[0] == "all") subjects = hoehnke;
    for (auto const& r : subjects)
      emitter.run([&] { return s::verify_reflection(*u, r, ka, hoehnke); });
    return emitter.code();
  }
  usage_error("unknown check suite '" + suite + "'");
}

int cmd_reflect(GlobalOpts const& opts, std::string const& radical_name,
                std::string const& universe_flag) {
  Workspace ws = load_workspace(opts);
  Resolver resolver{ws, opts, {}, {}};
  namespace s = sact;
  s::Universe const* u = nullptr;
  s::RadicalAssignment r = resolver.radical(radical_name, &u, &universe_flag);
  s::RadicalAssignment rk = s::reflect(*u, r);  // not_hoehnke exits 1 below

  std::string monoid_name;
  auto fit = ws.radical_index.find(radical_name);
  if (fit != ws.radical_index.end())
    monoid_name = ws.fixtures.radicals[fit->second].monoid;
  else {
    // built-in target: find a workspace monoid matching the universe
    for (auto const& [name, idx] : ws.monoid_index) {
      (void)idx;
      if (*resolver.monoid(name) == u->monoid()) {
        monoid_name = name;
        break;
      }
    }
    if (monoid_name.empty()) monoid_name = "m";
  }

  std::string fixture_name = radical_name + "_k";
  std::string text = s::radical_fixture_text(fixture_name, monoid_name, *u, rk);
  fs::path out_path = fs::path(opts.workspace) / (fixture_name + ".sact");
  {
    fs::path tmp = out_path;
    tmp += ".tmp";
    std::ofstream outf(tmp);
    outf << text;
    outf.close();
    std::error_code ec;
    fs::rename(tmp, out_path, ec);
    if (ec) usage_error("cannot write " + out_path.string());
  }

  sact::Report report("reflect");
  bool moved = false;
  for (int i = 0; i < u->size(); ++i) {
    std::string note = s::partition_literal(rk.at(i));
    if (!(rk.at(i) == r.at(i))) {
      moved = true;
      note += " (was " + s::partition_literal(r.at(i)).substr(10) + ")";
    }
    report.pass("reflect.value", u->act_name(i), note);
  }
  report.pass("reflect.output", fixture_name,
              moved ? "assignment moved; fixture written"
                    : "assignment already a fixed point; fixture written");
  Emitter emitter(opts.format, true);
  emitter.emit(report);
  return emitter.code();
}

int cmd_enumerate(GlobalOpts const& opts, std::string const& universe_flag,
                  std::string const& filter_name) {
  Workspace ws = load_workspace(opts);
  Resolver resolver{ws, opts, {}, {}};
  namespace s = sact;
  if (universe_flag.empty()) usage_error("enumerate-radicals needs --universe");
  s::RadicalFilter filter = s::RadicalFilter::hoehnke;
  if (filter_name == "hereditary")
    filter = s::RadicalFilter::hereditary;
  else if (filter_name == "ka")
    filter = s::RadicalFilter::ka;
  else if (filter_name != "hoehnke")
    usage_error("unknown filter '" + filter_name + "'");
  s::Universe const& u = resolver.universe_spec(universe_flag);
  auto radicals = s::enumerate_radicals(u, filter);  // bound errors exit 3

  s::Report report("enumerate-radicals");
  report.pass("radical.count", universe_flag,
              std::to_string(radicals.size()) + " " + filter_name +
                  " assignments");
  for (auto const& r : radicals) {
    std::string note;
    for (int i = 0; i < u.size(); ++i) {
      if (i) note += " ; ";
      note += u.act_name(i) + " : " + s::partition_literal(r.at(i));
    }
    report.pass("radical.enumerated", r.label(), note);
  }
  Emitter emitter(opts.format, true);
  emitter.emit(report);
  return emitter.code();
}

int cmd_coproduct(GlobalOpts const& opts, std::string const& class_name,
                  std::string const& universe_flag) {
  Workspace ws = load_workspace(opts);
  Resolver resolver{ws, opts, {}, {}};
  if (universe_flag.empty()) usage_error("coproduct-check needs --universe");
  sact::Universe const& u = resolver.universe_spec(universe_flag);
  Emitter emitter(opts.format, true);
  emitter.run([&] {
    return sact::coproduct_closure_check(u,
                                         resolver.act_class(u, class_name));
  });
  return emitter.code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for radicals and torsion theories over finite "
               "monoid acts"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--workspace", opts.workspace,
                 "directory holding .sact fixture files");
  app.add_option("--max-size", opts.max_size, "universe carrier size bound");
  app.add_option("--format", opts.format, "output format: human or records")
      ->check(CLI::IsMember({"human", "records"}));
  app.add_option("--seed", opts.seed, "seed for sampled checks");
  app.add_option("--jobs", opts.jobs, "parallel suite execution");

  auto* validate = app.add_subcommand("validate", "validate fixture files");
  std::vector<std::string> validate_paths;
  validate->add_option("paths", validate_paths, "fixture files (default: all)");

  auto* universe = app.add_subcommand("universe", "build or load a universe");
  std::string universe_monoid;
  universe->add_option("monoid", universe_monoid, "monoid fixture name")
      ->required();

  auto* check = app.add_subcommand("check", "run one check suite");
  std::string check_suite;
  std::vector<std::string> check_targets;
  std::string check_universe;
  check->add_option("suite", check_suite,
                    "hoehnke|hereditary|ka|pair|torsion|reflection|"
                    "redundancy|closure")
      ->required();
  check->add_option("targets", check_targets, "radical/class/torsion names");
  check->add_option("--universe", check_universe, "universe spec <monoid>@<n>");

  auto* theorems = app.add_subcommand("theorems", "run the whole battery");
  std::string theorems_monoid;
  theorems->add_option("--monoid", theorems_monoid, "monoid fixture name")
      ->required();

  auto* reflect = app.add_subcommand("reflect", "reflect a radical");
  std::string reflect_radical, reflect_universe;
  reflect->add_option("radical", reflect_radical, "radical fixture name")
      ->required();
  reflect->add_option("--universe", reflect_universe,
                      "universe spec <monoid>@<n>");

  auto* enumerate =
      app.add_subcommand("enumerate-radicals", "list radical assignments");
  std::string enum_universe, enum_filter = "hoehnke";
  enumerate->add_option("--universe", enum_universe,
                        "universe spec <monoid>@<n>");
  enumerate->add_option("--filter", enum_filter, "hoehnke|hereditary|ka");

  auto* coproduct =
      app.add_subcommand("coproduct-check", "probe coproduct closure");
  std::string coproduct_class, coproduct_universe;
  coproduct->add_option("class", coproduct_class, "class name")->required();
  coproduct->add_option("--universe", coproduct_universe,
                        "universe spec <monoid>@<n>");

  // global flags may follow the subcommand
  for (auto* sub : {validate, universe, check, theorems, reflect, enumerate,
                    coproduct})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts, validate_paths);
    if (universe->parsed()) return cmd_universe(opts, universe_monoid);
    if (check->parsed())
      return cmd_check(opts, check_suite, check_targets, check_universe);
    if (theorems->parsed()) return cmd_theorems(opts, theorems_monoid);
    if (reflect->parsed())
      return cmd_reflect(opts, reflect_radical, reflect_universe);
    if (enumerate->parsed())
      return cmd_enumerate(opts, enum_universe, enum_filter);
    if (coproduct->parsed())
      return cmd_coproduct(opts, coproduct_class, coproduct_universe);
  } catch (sact::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (sact::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case sact::errc::unknown_target:
      case sact::errc::parse_error:
        return exit_usage;
      case sact::errc::bound_exceeded:
        return exit_bounds;
      default:
        return exit_fail;
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_usage;
}
