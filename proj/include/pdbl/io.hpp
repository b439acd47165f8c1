#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pdbl/context.hpp>
#include <pdbl/kripke.hpp>

namespace pdbl::io {

/// File-format error carrying a 1-based line number.
class file_error : public std::runtime_error {
public:
  file_error(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A Burmeister .cxt document: the context plus the optional title line,
/// which is kept verbatim so that read/write round-trips bit-exactly.
struct CxtDocument {
  FormalContext context;
  std::optional<std::string> title;
};

namespace detail {

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}
  /// Reads the next line (without the newline); returns false at EOF.
  bool next(std::string& out) {
    if (!std::getline(in_, out)) return false;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    ++line_;
    return true;
  }
  std::string require(const char* what) {
    std::string s;
    if (!next(s)) throw file_error(line_ + 1, std::string("unexpected end of file, expected ") + what);
    return s;
  }
  std::size_t line() const { return line_; }

private:
  std::istream& in_;
  std::size_t line_ = 0;
};

inline bool parse_count(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) return false;
  }
  out = v;
  return true;
}

}  // namespace detail

/// Reads a Burmeister .cxt stream: "B", an optional title line, |G| and |M|
/// on their own lines, a blank separator, |G| object names, |M| attribute
/// names, and |G| rows of 'X'/'.'.
inline CxtDocument read_cxt(std::istream& in) {
  detail::LineReader r(in);
  std::string line = r.require("header 'B'");
  if (line != "B") throw file_error(r.line(), "expected 'B' as the first line");

  CxtDocument doc;
  std::size_t ng = 0, nm = 0;
  line = r.require("object count or title");
  if (!detail::parse_count(line, ng)) {
    doc.title = line;  // title line present (possibly empty)
    line = r.require("object count");
    if (!detail::parse_count(line, ng)) throw file_error(r.line(), "expected object count");
  }
  line = r.require("attribute count");
  if (!detail::parse_count(line, nm)) throw file_error(r.line(), "expected attribute count");
  line = r.require("blank separator");
  if (!line.empty()) throw file_error(r.line(), "expected blank line after counts");
  if (ng > 64 || nm > 64) throw file_error(r.line(), "context larger than 64x64 is not supported");

  std::vector<std::string> objects, attributes;
  for (std::size_t g = 0; g < ng; ++g) objects.push_back(r.require("object name"));
  for (std::size_t m = 0; m < nm; ++m) attributes.push_back(r.require("attribute name"));

  std::vector<std::vector<bool>> incidence(ng, std::vector<bool>(nm));
  for (std::size_t g = 0; g < ng; ++g) {
    line = r.require("incidence row");
    if (line.size() != nm)
      throw file_error(r.line(), "incidence row has length " + std::to_string(line.size()) +
                                     ", expected " + std::to_string(nm));
    for (std::size_t m = 0; m < nm; ++m) {
      if (line[m] == 'X') incidence[g][m] = true;
      else if (line[m] != '.')
        throw file_error(r.line(), std::string("invalid incidence character '") + line[m] + "'");
    }
  }
  try {
    doc.context = FormalContext(std::move(objects), std::move(attributes), incidence);
  } catch (const std::invalid_argument& e) {
    throw file_error(r.line(), e.what());
  }
  return doc;
}

inline void write_cxt(std::ostream& out, const CxtDocument& doc) {
  out << "B\n";
  if (doc.title) out << *doc.title << "\n";
  const auto& ctx = doc.context;
  out << ctx.object_count() << "\n" << ctx.attribute_count() << "\n\n";
  for (const auto& name : ctx.object_names()) out << name << "\n";
  for (const auto& name : ctx.attribute_names()) out << name << "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      out << (ctx.incidence(g, m) ? 'X' : '.');
    out << "\n";
  }
}

/// Kripke-context format: a .cxt block, then optional '#R' / '#S' sections
/// of 0-based index pairs. Missing sections mean empty relations.
struct KripkeDocument {
  KripkeContext context;
  std::optional<std::string> title;
};

inline KripkeDocument read_kripke(std::istream& in) {
  // The .cxt block ends after exactly |G| rows, so read_cxt leaves the stream
  // positioned at the first relation section.
  auto base = read_cxt(in);
  BinaryRelation r(base.context.object_count());
  BinaryRelation s(base.context.attribute_count());
  std::string line;
  std::size_t lineno = 0;
  BinaryRelation* current = nullptr;
  std::size_t carrier = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "#R") { current = &r; carrier = r.size(); continue; }
    if (line == "#S") { current = &s; carrier = s.size(); continue; }
    if (!current) throw file_error(lineno, "expected '#R' or '#S' before relation pairs");
    std::istringstream iss(line);
    std::size_t i = 0, j = 0;
    char extra;
    if (!(iss >> i >> j) || (iss >> extra))
      throw file_error(lineno, "expected a pair of indices, got '" + line + "'");
    if (i >= carrier || j >= carrier)
      throw file_error(lineno, "relation index out of range in '" + line + "'");
    current->add(i, j);
  }
  return {KripkeContext(std::move(base.context), std::move(r), std::move(s)),
          std::move(base.title)};
}

inline void write_kripke(std::ostream& out, const KripkeDocument& doc) {
  write_cxt(out, {doc.context.base(), doc.title});
  auto emit = [&out](const char* header, const BinaryRelation& rel) {
    auto ps = rel.pairs();  // pairs() is already lexicographic
    if (ps.empty()) return;
    out << header << "\n";
    for (auto [i, j] : ps) out << i << " " << j << "\n";
  };
  emit("#R", doc.context.object_relation());
  emit("#S", doc.context.attribute_relation());
}

/// Loads either a plain .cxt (empty relations) or the extended format.
inline KripkeDocument read_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_kripke(in);
}

/// One raw valuation entry: variable name plus the labels listed in braces.
struct ValuationEntry {
  std::string variable;  // "o<k>" or "a<k>"
  std::vector<std::string> labels;
  std::size_t line = 0;
};

/// Parses lines of the form `o1 = {Leech, Bream}` / `a2 = {b}`. Blank lines
/// and '#' comments are skipped. Label/semiconcept resolution happens later,
/// against a concrete context.
inline std::vector<ValuationEntry> read_valuation(std::istream& in) {
  std::vector<ValuationEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    auto issp = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw file_error(lineno, "expected 'var = {labels}'");
    ValuationEntry e;
    e.variable = trim(t.substr(0, eq));
    e.line = lineno;
    if (e.variable.size() < 2 || (e.variable[0] != 'o' && e.variable[0] != 'a'))
      throw file_error(lineno, "variable must be o<k> or a<k>, got '" + e.variable + "'");
    for (std::size_t i = 1; i < e.variable.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(e.variable[i])))
        throw file_error(lineno, "variable must be o<k> or a<k>, got '" + e.variable + "'");
    auto rhs = trim(t.substr(eq + 1));
    if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
      throw file_error(lineno, "expected a brace-enclosed label set");
    auto body = rhs.substr(1, rhs.size() - 2);
    std::string label;
    std::istringstream iss(body);
    while (std::getline(iss, label, ',')) {
      label = trim(label);
      if (!label.empty()) e.labels.push_back(label);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace pdbl::io
