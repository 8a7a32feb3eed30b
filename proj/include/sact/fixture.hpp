#pragma once

#include <cctype>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "sact/act.hpp"
#include "sact/congruence.hpp"
#include "sact/error.hpp"
#include "sact/monoid.hpp"
#include "sact/radical.hpp"
#include "sact/universe.hpp"

namespace sact {

/// Raw fixture blocks as written in workspace files. Parsing is purely
/// syntactic; semantic validation (monoid laws, act laws, congruence
/// checks) happens when a workspace resolves the references.
struct MonoidFixture {
  std::string name;
  int line = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
};

struct ActFixture {
  std::string name;
  std::string monoid;
  int line = 0;
  int size = 0;
  std::vector<std::vector<int>> rows;
};

struct ClassFixture {
  std::string name;
  int line = 0;
  bool is_predicate = false;
  std::string predicate;           // "all", "trivials" or "with-zero"
  std::vector<std::string> acts;   // universe act names otherwise
};

struct RadicalFixture {
  std::string name;
  int line = 0;
  std::string monoid;
  int max_size = 0;
  // act name -> partition blocks, in file order
  std::vector<std::pair<std::string, std::vector<std::vector<int>>>> entries;
};

struct TorsionFixture {
  std::string name;
  int line = 0;
  std::string torsion_class;
  std::string free_class;
};

struct FixtureFile {
  std::vector<MonoidFixture> monoids;
  std::vector<ActFixture> acts;
  std::vector<ClassFixture> classes;
  std::vector<RadicalFixture> radicals;
  std::vector<TorsionFixture> torsions;
};

namespace detail {

struct SourceLine {
  std::string text;
  int number;
};

inline std::vector<SourceLine> logical_lines(std::istream& in) {
  std::vector<SourceLine> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    bool blank = true;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (!blank) out.push_back({raw, number});
  }
  return out;
}

/// Whitespace tokens with their 1-based starting columns.
inline std::vector<std::pair<std::string, int>> tokens_of(
    std::string const& line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.emplace_back(line.substr(start, i - start),
                     static_cast<int>(start) + 1);
  }
  return out;
}

inline int parse_int(std::string const& token, int line, int column) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (std::exception const&) {
    throw ParseError("expected an integer, got '" + token + "'", line, column);
  }
  if (pos != token.size())
    throw ParseError("expected an integer, got '" + token + "'", line, column);
  return value;
}

/// Parses "{0 1 | 2}" (or "{}") starting at the first '{' of text.
inline std::vector<std::vector<int>> parse_partition_body(
    std::string const& text, int line) {
  auto open = text.find('{');
  auto close = text.find('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected a {...} partition literal", line,
                     static_cast<int>(open == std::string::npos ? 1 : open) +
                         1);
  for (std::size_t i = close + 1; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected text after the partition literal", line,
                       static_cast<int>(i) + 1);
  std::string body = text.substr(open + 1, close - open - 1);
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  bool last_was_bar = false;
  for (auto const& [token, col] : tokens_of(body)) {
    if (token == "|") {
      if (current.empty())
        throw ParseError("empty partition block", line,
                         static_cast<int>(open) + 1 + col);
      blocks.push_back(std::move(current));
      current.clear();
      last_was_bar = true;
    } else {
      current.push_back(
          parse_int(token, line, static_cast<int>(open) + 1 + col));
      last_was_bar = false;
    }
  }
  if (last_was_bar)
    throw ParseError("empty partition block", line, static_cast<int>(open) + 1);
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

}  // namespace detail

/// Parses one fixture stream. Grammar, one block per construct:
///
///   monoid <name> / elements <n> / identity <i> / table / <n rows>
///   act <name> over <monoid> / size <m> / action / <#monoid-elements rows>
///   class <name> = acts <act> ...        (or: = predicate <id>)
///   radical <name> over <monoid>@<n> / <act> : partition {...} per act
///   torsion <name> = (<class>, <class>)
///
/// '#' starts a comment; blank lines separate nothing. Size-0 acts have an
/// action block with zero rows. Throws ParseError with line and column.
inline FixtureFile parse_fixtures(std::istream& in) {
  using detail::parse_int;
  using detail::tokens_of;
  FixtureFile out;
  auto lines = detail::logical_lines(in);
  std::size_t pos = 0;

  auto peek = [&]() -> detail::SourceLine const* {
    return pos < lines.size() ? &lines[pos] : nullptr;
  };
  auto take = [&](char const* what) -> detail::SourceLine const& {
    if (pos >= lines.size())
      throw ParseError(std::string("unexpected end of file, expected ") + what,
                       lines.empty() ? 1 : lines.back().number + 1);
    return lines[pos++];
  };
  auto keyword_line = [&](detail::SourceLine const& line,
                          std::string const& kw, std::size_t arity) {
    auto toks = tokens_of(line.text);
    if (toks.empty() || toks[0].first != kw)
      throw ParseError("expected '" + kw + "'", line.number,
                       toks.empty() ? 1 : toks[0].second);
    if (toks.size() != arity)
      throw ParseError("'" + kw + "' takes " + std::to_string(arity - 1) +
                           " argument(s)",
                       line.number, toks[0].second);
    return toks;
  };
  auto int_row = [&](char const* what, int expected) {
    auto const& line = take(what);
    auto toks = tokens_of(line.text);
    if (static_cast<int>(toks.size()) != expected)
      throw ParseError(std::string(what) + " needs " +
                           std::to_string(expected) + " entries, got " +
                           std::to_string(toks.size()),
                       line.number, toks.empty() ? 1 : toks[0].second);
    std::vector<int> row;
    row.reserve(toks.size());
    for (auto const& [t, c] : toks) row.push_back(parse_int(t, line.number, c));
    return row;
  };

  while (auto const* head = peek()) {
    auto toks = tokens_of(head->text);
    std::string const& kw = toks[0].first;
    if (kw == "monoid") {
      auto h = keyword_line(take("monoid"), "monoid", 2);
      MonoidFixture m;
      m.name = h[1].first;
      m.line = head->number;
      auto e = keyword_line(take("elements"), "elements", 2);
      int n = parse_int(e[1].first, lines[pos - 1].number, e[1].second);
      if (n < 1)
        throw ParseError("a monoid needs at least one element",
                         lines[pos - 1].number, e[1].second);
      auto id = keyword_line(take("identity"), "identity", 2);
      m.identity = parse_int(id[1].first, lines[pos - 1].number, id[1].second);
      keyword_line(take("table"), "table", 1);
      for (int s = 0; s < n; ++s) m.table.push_back(int_row("table row", n));
      out.monoids.push_back(std::move(m));
    } else if (kw == "act") {
      auto h = keyword_line(take("act"), "act", 4);
      if (h[2].first != "over")
        throw ParseError("expected 'over'", head->number, h[2].second);
      ActFixture a;
      a.name = h[1].first;
      a.monoid = h[3].first;
      a.line = head->number;
      auto sz = keyword_line(take("size"), "size", 2);
      a.size = parse_int(sz[1].first, lines[pos - 1].number, sz[1].second);
      if (a.size < 0)
        throw ParseError("act size cannot be negative", lines[pos - 1].number,
                         sz[1].second);
      keyword_line(take("action"), "action", 1);
      // Row count is the monoid's element count, resolved later; rows are
      // read while they look like pure integer rows of the right arity.
      while (a.size > 0) {
        auto const* next = peek();
        if (!next) break;
        auto row_toks = tokens_of(next->text);
        bool numeric = !row_toks.empty();
        for (auto const& [t, c] : row_toks) {
          (void)c;
          if (t.find_first_not_of("0123456789-") != std::string::npos) {
            numeric = false;
            break;
          }
        }
        if (!numeric) break;
        a.rows.push_back(int_row("action row", a.size));
      }
      out.acts.push_back(std::move(a));
    } else if (kw == "class") {
      auto line = take("class");
      auto t = tokens_of(line.text);
      if (t.size() < 4 || t[2].first != "=")
        throw ParseError("expected: class <name> = acts|predicate ...",
                         line.number, t.size() > 2 ? t[2].second : 1);
      ClassFixture c;
      c.name = t[1].first;
      c.line = line.number;
      if (t[3].first == "predicate") {
        if (t.size() != 5)
          throw ParseError("predicate classes take exactly one id",
                           line.number, t[3].second);
        c.is_predicate = true;
        c.predicate = t[4].first;
      } else if (t[3].first == "acts") {
        for (std::size_t i = 4; i < t.size(); ++i)
          c.acts.push_back(t[i].first);
      } else {
        throw ParseError("expected 'acts' or 'predicate'", line.number,
                         t[3].second);
      }
      out.classes.push_back(std::move(c));
    } else if (kw == "radical") {
      auto line = take("radical");
      auto t = tokens_of(line.text);
      if (t.size() != 4 || t[2].first != "over")
        throw ParseError("expected: radical <name> over <monoid>@<n>",
                         line.number, t.size() > 2 ? t[2].second : 1);
      RadicalFixture r;
      r.name = t[1].first;
      r.line = line.number;
      auto at = t[3].first.find('@');
      if (at == std::string::npos || at == 0 || at + 1 >= t[3].first.size())
        throw ParseError("universe spec must look like <monoid>@<n>",
                         line.number, t[3].second);
      r.monoid = t[3].first.substr(0, at);
      r.max_size = parse_int(t[3].first.substr(at + 1), line.number,
                             t[3].second + static_cast<int>(at) + 1);
      while (auto const* next = peek()) {
        auto et = tokens_of(next->text);
        if (et.size() < 2 || et[1].first != ":") break;
        if (et.size() < 3 || et[2].first != "partition")
          throw ParseError("radical entries read: <act> : partition {...}",
                           next->number, et.size() > 2 ? et[2].second : 1);
        auto const& entry = take("radical entry");
        r.entries.emplace_back(
            et[0].first,
            detail::parse_partition_body(entry.text, entry.number));
      }
      out.radicals.push_back(std::move(r));
    } else if (kw == "torsion") {
      auto line = take("torsion");
      auto t = tokens_of(line.text);
      if (t.size() < 4 || t[2].first != "=")
        throw ParseError("expected: torsion <name> = (<class>, <class>)",
                         line.number, t.size() > 2 ? t[2].second : 1);
      auto open = line.text.find('(');
      auto comma = line.text.find(',');
      auto close = line.text.find(')');
      if (open == std::string::npos || comma == std::string::npos ||
          close == std::string::npos || !(open < comma && comma < close))
        throw ParseError("expected: torsion <name> = (<class>, <class>)",
                         line.number, t[3].second);
      auto trim = [](std::string s) {
        while (!s.empty() &&
               std::isspace(static_cast<unsigned char>(s.front())))
          s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
          s.pop_back();
        return s;
      };
      TorsionFixture tf;
      tf.name = t[1].first;
      tf.line = line.number;
      tf.torsion_class = trim(line.text.substr(open + 1, comma - open - 1));
      tf.free_class = trim(line.text.substr(comma + 1, close - comma - 1));
      if (tf.torsion_class.empty() || tf.free_class.empty())
        throw ParseError("torsion pair needs two class names", line.number,
                         static_cast<int>(open) + 1);
      out.torsions.push_back(std::move(tf));
    } else {
      throw ParseError("unknown directive '" + kw + "'", head->number,
                       toks[0].second);
    }
  }
  return out;
}

/// Canonical partition literal: blocks by least element, members ascending.
inline std::string partition_literal(Congruence const& c) {
  std::string out = "partition {";
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

inline std::string monoid_fixture_text(std::string const& name,
                                       Monoid const& m) {
  std::string out = "monoid " + name + "\n";
  out += "elements " + std::to_string(m.size()) + "\n";
  out += "identity " + std::to_string(m.identity()) + "\n";
  out += "table\n";
  for (int s = 0; s < m.size(); ++s) {
    for (int t = 0; t < m.size(); ++t)
      out += (t ? " " : "") + std::to_string(m.mul(s, t));
    out += "\n";
  }
  return out;
}

inline std::string act_fixture_text(std::string const& name,
                                    std::string const& monoid_name,
                                    Act const& a) {
  std::string out = "act " + name + " over " + monoid_name + "\n";
  out += "size " + std::to_string(a.size()) + "\n";
  out += "action\n";
  if (a.size() > 0)
    for (int s = 0; s < a.monoid().size(); ++s) {
      for (int x = 0; x < a.size(); ++x)
        out += (x ? " " : "") + std::to_string(a.apply(s, x));
      out += "\n";
    }
  return out;
}

inline std::string radical_fixture_text(std::string const& name,
                                        std::string const& monoid_name,
                                        Universe const& u,
                                        RadicalAssignment const& r) {
  std::string out = "radical " + name + " over " + monoid_name + "@" +
                    std::to_string(u.max_size()) + "\n";
  for (int i = 0; i < u.size(); ++i)
    out += u.act_name(i) + " : " + partition_literal(r.at(i)) + "\n";
  return out;
}

}  // namespace sact
