#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sact {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "unknown";
}

enum class Verdict { pass, fail, partial };

inline const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::partial: return "partial";
  }
  return "unknown";
}

/// One checked statement. `check` is a stable dotted identifier, `subject`
/// names what was examined, `witness` holds a counterexample when the check
/// failed, `note` carries free commentary (skip reasons, case counts).
struct Finding {
  std::string check;
  Status status = Status::pass;
  std::string subject;
  std::string witness;
  std::string note;
};

/// A batch of findings from one check suite, plus the assumptions the suite
/// leans on. The verdict derives from the findings: any fail wins, else any
/// skip yields partial, else pass. A fail verdict therefore always carries
/// at least one witness-bearing finding.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  std::string const& suite() const noexcept { return suite_; }

  void assume(std::string text) { assumptions_.push_back(std::move(text)); }

  void add(Finding f) { findings_.push_back(std::move(f)); }

  void pass(std::string check, std::string subject, std::string note = "") {
    add({std::move(check), Status::pass, std::move(subject), "",
         std::move(note)});
  }

  void fail(std::string check, std::string subject, std::string witness,
            std::string note = "") {
    add({std::move(check), Status::fail, std::move(subject),
         std::move(witness), std::move(note)});
  }

  void skip(std::string check, std::string subject, std::string note) {
    add({std::move(check), Status::skip, std::move(subject), "",
         std::move(note)});
  }

  void merge(Report other) {
    for (auto& a : other.assumptions_) assumptions_.push_back(std::move(a));
    for (auto& f : other.findings_) findings_.push_back(std::move(f));
  }

  std::vector<std::string> const& assumptions() const noexcept {
    return assumptions_;
  }
  std::vector<Finding> const& findings() const noexcept { return findings_; }

  int count(Status s) const {
    int c = 0;
    for (auto const& f : findings_)
      if (f.status == s) ++c;
    return c;
  }

  Verdict verdict() const {
    bool skipped = false;
    for (auto const& f : findings_) {
      if (f.status == Status::fail) return Verdict::fail;
      if (f.status == Status::skip) skipped = true;
    }
    return skipped ? Verdict::partial : Verdict::pass;
  }

  bool ok() const { return verdict() != Verdict::fail; }

 private:
  std::string suite_;
  std::vector<std::string> assumptions_;
  std::vector<Finding> findings_;
};

/// Machine format: one JSON object per line with a fixed key set in fixed
/// order, no timing, no environment data. Byte-identical across runs on
/// identical inputs.
inline std::string render_records(Report const& report) {
  std::string out;
  auto line = [&](char const* kind, std::string const& check,
                  std::string const& status, std::string const& subject,
                  std::string const& witness, std::string const& note) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite();
    j["kind"] = kind;
    j["check"] = check;
    j["status"] = status;
    j["subject"] = subject;
    j["witness"] = witness;
    j["note"] = note;
    out += j.dump();
    out += '\n';
  };
  for (auto const& a : report.assumptions())
    line("assumption", "", "", "", "", a);
  for (auto const& f : report.findings())
    line("finding", f.check, status_name(f.status), f.subject, f.witness,
         f.note);
  line("verdict", "", verdict_name(report.verdict()), "", "",
       std::to_string(report.count(Status::pass)) + " pass, " +
           std::to_string(report.count(Status::fail)) + " fail, " +
           std::to_string(report.count(Status::skip)) + " skip");
  return out;
}

/// Human format; allowed to be chatty, never parsed by tools.
inline std::string render_human(Report const& report) {
  std::string out = "== " + report.suite() + "\n";
  for (auto const& a : report.assumptions())
    out += "   assumption: " + a + "\n";
  for (auto const& f : report.findings()) {
    std::string tag = f.status == Status::pass   ? "[PASS]"
                      : f.status == Status::fail ? "[FAIL]"
                                                 : "[skip]";
    out += " " + tag + " " + f.check;
    if (!f.subject.empty()) out += "  " + f.subject;
    if (!f.witness.empty()) out += "  witness: " + f.witness;
    if (!f.note.empty()) out += "  (" + f.note + ")";
    out += "\n";
  }
  out += "verdict: " + std::string(verdict_name(report.verdict())) + " (" +
         std::to_string(report.count(Status::pass)) + " pass, " +
         std::to_string(report.count(Status::fail)) + " fail, " +
         std::to_string(report.count(Status::skip)) + " skip)\n";
  return out;
}

}  // namespace sact
