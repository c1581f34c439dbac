#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "document.hpp"
#include "ortho.hpp"
#include "poset.hpp"

namespace orthoclose {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

namespace detail {

inline Json labels_json(const Poset& p, const ElementSet& s) {
  Json arr = Json::array();
  s.for_each([&](Element x) { arr.push_back(p.name(x)); });
  return arr;
}

inline Json optional_flag(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

template <typename T>
Json optional_size(const std::optional<T>& v) {
  return v ? Json(v->count()) : Json(nullptr);
}

}  // namespace detail

/// Serialized analysis report. Keys and their order are fixed per
/// schema_version; identical input yields identical bytes.
inline Json report_json(const AnalysisReport& r, const PosetDocument& doc) {
  using detail::labels_json;
  using detail::optional_flag;
  const Poset& p = r.poset;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = std::string(kToolVersion);
  j["input_digest"] = input_digest(doc);
  j["name"] = doc.name;
  j["elements"] = p.names();
  Json covers = Json::array();
  for (const auto& [x, y] : transitive_reduction(p)) covers.push_back(Json::array({p.name(x), p.name(y)}));
  j["covers"] = covers;

  Json flags;
  flags["bounded"] = r.bounded;
  flags["has_bottom"] = r.has_bottom;
  flags["has_top"] = r.has_top;
  flags["meet_semilattice"] = r.meet_semilattice;
  flags["lattice"] = r.lattice;
  flags["atomic"] = optional_flag(r.atomic);
  flags["pseudocomplemented"] = optional_flag(r.pseudocomplemented);
  flags["skeleton_meet_semilattice"] = optional_flag(r.skeleton_meet_semilattice);
  flags["skeleton_lattice"] = optional_flag(r.skeleton_lattice);
  flags["compatibility"] = optional_flag(r.compatibility);
  flags["bcl_boolean"] = optional_flag(r.bcl_boolean);
  j["flags"] = flags;

  Json sizes;
  sizes["elements"] = p.size();
  sizes["atoms"] = detail::optional_size(r.atoms);
  sizes["skeleton"] = detail::optional_size(r.skeleton);
  sizes["closed_sets"] = r.has_bottom ? Json(r.closed_sets.size()) : Json(nullptr);
  j["sizes"] = sizes;

  j["atoms"] = r.atoms ? labels_json(p, *r.atoms) : Json(nullptr);
  Json closed = Json::array();
  for (const auto& c : r.closed_sets) closed.push_back(labels_json(p, c));
  j["closed_sets"] = r.has_bottom ? closed : Json(nullptr);
  if (r.star) {
    Json star;
    for (Element x = 0; x < p.size(); ++x) star[p.name(x)] = p.name((*r.star)[x]);
    j["star"] = star;
  } else {
    j["star"] = nullptr;
  }
  j["skeleton"] = r.skeleton ? labels_json(p, *r.skeleton) : Json(nullptr);

  Json w;
  if (r.powerset_iso) {
    const auto at = r.atoms->members();
    Json iso = Json::array();
    for (std::size_t mask = 0; mask < r.powerset_iso->forward.size(); ++mask) {
      Json subset = Json::array();
      for (std::size_t b = 0; b < at.size(); ++b)
        if ((mask >> b) & 1U) subset.push_back(p.name(at[b]));
      iso.push_back(Json{{"atoms", subset}, {"closed_set", labels_json(p, r.closed_sets[r.powerset_iso->forward[mask]])}});
    }
    w["powerset_iso"] = iso;
  } else {
    w["powerset_iso"] = nullptr;
  }
  if (r.forbidden) {
    Json cfg;
    for (std::size_t i = 0; i < kForbiddenRoles.size(); ++i)
      cfg[std::string(kForbiddenRoles[i])] = p.name(r.forbidden->roles[i]);
    w["forbidden_configuration"] = cfg;
  } else {
    w["forbidden_configuration"] = nullptr;
  }
  if (r.crossing) {
    Json cfg;
    for (std::size_t i = 0; i < kCrossingRoles.size(); ++i)
      cfg[std::string(kCrossingRoles[i])] = p.name(r.crossing->roles[i]);
    w["crossing_pattern"] = cfg;
  } else {
    w["crossing_pattern"] = nullptr;
  }
  w["non_pseudocomplemented"] =
      r.non_pseudocomplemented_witness ? Json(p.name(*r.non_pseudocomplemented_witness)) : Json(nullptr);
  if (r.compatibility_detail && !r.compatibility_detail->compatible) {
    const auto& c = *r.compatibility_detail;
    Json cw;
    cw["subset"] = labels_json(p, *c.subset);
    cw["base_infimum"] = c.base_infimum ? Json(p.name(*c.base_infimum)) : Json(nullptr);
    cw["skeleton_infimum"] = c.skeleton_infimum ? Json(p.name(*c.skeleton_infimum)) : Json(nullptr);
    cw["stray_lower_bound"] = c.stray_lower_bound ? Json(p.name(*c.stray_lower_bound)) : Json(nullptr);
    w["incompatible_subset"] = cw;
  } else {
    w["incompatible_subset"] = nullptr;
  }
  j["witnesses"] = w;

  Json theorems = Json::array();
  for (const auto& t : r.theorems)
    theorems.push_back(Json{{"id", t.id}, {"status", std::string(to_string(t.verdict))}, {"detail", t.detail}});
  j["theorems"] = theorems;
  return j;
}

inline std::string report_json_text(const AnalysisReport& r, const PosetDocument& doc) {
  return report_json(r, doc).dump(2) + "\n";
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

/// Hasse diagram as a DOT digraph: one node per element, one edge per cover.
inline std::string to_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x) out << "  n" << x << " [label=\"" << detail::dot_escape(p.name(x)) << "\"];\n";
  for (const auto& [x, y] : transitive_reduction(p)) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

namespace detail {
inline std::string flag_text(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }
inline std::string flag_text(bool b) { return b ? "yes" : "no"; }
}  // namespace detail

/// Plain-text summary of a report.
inline std::string report_text(const AnalysisReport& r, const PosetDocument& doc) {
  using detail::flag_text;
  const Poset& p = r.poset;
  std::ostringstream out;
  out << "poset " << doc.name << " (" << p.size() << " elements)\n";
  out << "  bounded: " << flag_text(r.bounded) << "  meet-semilattice: " << flag_text(r.meet_semilattice)
      << "  lattice: " << flag_text(r.lattice) << "\n";
  out << "  atomic: " << flag_text(r.atomic) << "  pseudocomplemented: " << flag_text(r.pseudocomplemented) << "\n";
  out << "  skeleton meet-semilattice: " << flag_text(r.skeleton_meet_semilattice)
      << "  compatibility: " << flag_text(r.compatibility) << "  BCl Boolean: " << flag_text(r.bcl_boolean) << "\n";
  if (r.atoms) out << "  atoms: " << set_label(p, *r.atoms) << "\n";
  if (r.has_bottom) out << "  closed sets: " << r.closed_sets.size() << "\n";
  if (r.star) {
    out << "  star:";
    for (Element x = 0; x < p.size(); ++x) out << " " << p.name(x) << "->" << p.name((*r.star)[x]);
    out << "\n  skeleton: " << set_label(p, *r.skeleton) << "\n";
  }
  if (r.non_pseudocomplemented_witness)
    out << "  not pseudocomplemented: witness " << p.name(*r.non_pseudocomplemented_witness) << "\n";
  if (r.forbidden) {
    out << "  forbidden configuration:";
    for (std::size_t i = 0; i < kForbiddenRoles.size(); ++i)
      out << " " << kForbiddenRoles[i] << "=" << p.name(r.forbidden->roles[i]);
    out << "\n";
  }
  for (const auto& t : r.theorems) {
    out << "  [" << to_string(t.verdict) << "] " << t.id;
    if (!t.detail.empty()) out << ": " << t.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace orthoclose
