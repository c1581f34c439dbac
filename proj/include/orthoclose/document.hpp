#pragma once

#include <cctype>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "poset.hpp"

namespace orthoclose {

/// Text form of a poset:
///
///   poset <name>
///   elements <label> <label> ...
///   rel <x> <y>          # x < y; any order assertion, not only covers
///
/// '#' starts a comment; blank lines are ignored.
struct PosetDocument {
  std::string name;
  std::vector<std::string> labels;
  std::vector<LabelPair> relations;
  /// 1-based source lines of each relation (0 when synthesized).
  std::vector<std::size_t> relation_lines;

  friend bool operator==(const PosetDocument& a, const PosetDocument& b) {
    return a.name == b.name && a.labels == b.labels && a.relations == b.relations;
  }
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line.substr(0, line.find('#')));
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline Error syntax_error(std::size_t line, const std::string& what) {
  return Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

/// Parses every document in `text`; each starts at a `poset` line.
inline std::vector<PosetDocument> parse_poset_documents(const std::string& text) {
  std::vector<PosetDocument> docs;
  std::unordered_set<std::string> known;
  bool have_elements = false;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = detail::tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "poset") {
      if (!docs.empty() && !have_elements)
        throw detail::syntax_error(line_no, "poset '" + docs.back().name + "' has no elements line");
      if (tok.size() != 2) throw detail::syntax_error(line_no, "expected 'poset <name>'");
      docs.push_back(PosetDocument{tok[1], {}, {}, {}});
      known.clear();
      have_elements = false;
    } else if (kw == "elements") {
      if (docs.empty()) throw detail::syntax_error(line_no, "'elements' before 'poset'");
      if (have_elements) throw detail::syntax_error(line_no, "second 'elements' line");
      if (tok.size() < 2) throw detail::syntax_error(line_no, "'elements' needs at least one label");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!known.insert(tok[i]).second)
          throw Error(ErrorCode::kDuplicateLabel,
                      "line " + std::to_string(line_no) + ": label '" + tok[i] + "' appears twice");
        docs.back().labels.push_back(tok[i]);
      }
      have_elements = true;
    } else if (kw == "rel") {
      if (!have_elements) throw detail::syntax_error(line_no, "'rel' before 'elements'");
      if (tok.size() != 3) throw detail::syntax_error(line_no, "expected 'rel <x> <y>'");
      for (std::size_t i = 1; i < 3; ++i)
        if (!known.contains(tok[i]))
          throw Error(ErrorCode::kUnknownLabel,
                      "line " + std::to_string(line_no) + ": no element '" + tok[i] + "'");
      docs.back().relations.emplace_back(tok[1], tok[2]);
      docs.back().relation_lines.push_back(line_no);
    } else {
      throw detail::syntax_error(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (docs.empty()) throw detail::syntax_error(line_no, "no 'poset' line");
  if (!have_elements) throw detail::syntax_error(line_no, "poset '" + docs.back().name + "' has no elements line");
  return docs;
}

/// Parses exactly one document.
inline PosetDocument parse_poset(const std::string& text) {
  auto docs = parse_poset_documents(text);
  if (docs.size() != 1)
    throw Error(ErrorCode::kSyntaxError, "expected one poset, found " + std::to_string(docs.size()));
  return std::move(docs.front());
}

inline std::string render(const PosetDocument& doc) {
  std::string out = "poset " + doc.name + "\nelements";
  for (const auto& l : doc.labels) out += " " + l;
  out += "\n";
  for (const auto& [x, y] : doc.relations) out += "rel " + x + " " + y + "\n";
  return out;
}

inline Poset to_poset(const PosetDocument& doc, std::size_t cap = default_carrier_cap()) {
  return build_poset(doc.labels, doc.relations, cap);
}

/// Document listing the cover relation of p.
inline PosetDocument document_from_poset(const Poset& p, std::string name) {
  PosetDocument doc{std::move(name), p.names(), {}, {}};
  for (const auto& [x, y] : transitive_reduction(p)) {
    doc.relations.emplace_back(p.name(x), p.name(y));
    doc.relation_lines.push_back(0);
  }
  return doc;
}

/// FNV-1a 64 of the rendered document.
inline std::string input_digest(const PosetDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : render(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += kHex[(h >> shift) & 0xF];
  return out;
}

}  // namespace orthoclose
