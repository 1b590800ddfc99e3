#pragma once

// JSON certificate documents and harness reports.
//
//   {"n": int, "verdict": string, "complemented": bool, "certificate": {...}}
//
// certificate by verdict:
//   FiveHole / SixHole  {"cycle": [...]}                       (cyclic order)
//   Split               {"clique": [...], "stable": [...]}
//   ClassA              {"a","b","c","d","e": int, "X": [...]}
//   ClassB              {"X","Y","Z","W": [...], "x","y": int}
//   ClassC              {"X","Y": [...], "matching": [[u,v],[u',v']]}
//   NotFree             {"hole": [...], "hub": int, "in_complement": bool}

#include <nlohmann/json.hpp>

#include <string>

#include "wheelfree/classification.hpp"
#include "wheelfree/harness.hpp"
#include "wheelfree/io.hpp"

namespace wheelfree {

using nlohmann::json;

inline json certificate_document(std::size_t n, const Classification& c) {
  json cert = std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiveHole> || std::is_same_v<T, SixHole>) {
          return {{"cycle", v.cycle}};
        } else if constexpr (std::is_same_v<T, SplitPartition>) {
          return {{"clique", v.clique}, {"stable", v.stable}};
        } else if constexpr (std::is_same_v<T, ClassADecomposition>) {
          return {{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}, {"e", v.e}, {"X", v.X}};
        } else if constexpr (std::is_same_v<T, ClassBDecomposition>) {
          return {{"X", v.X}, {"Y", v.Y}, {"Z", v.Z}, {"W", v.W}, {"x", v.x}, {"y", v.y}};
        } else if constexpr (std::is_same_v<T, ClassCDecomposition>) {
          return {{"X", v.X},
                  {"Y", v.Y},
                  {"matching", json::array({json::array({v.m1.first, v.m1.second}),
                                            json::array({v.m2.first, v.m2.second})})}};
        } else {
          return {{"hole", v.hole.cycle}, {"hub", v.hub}, {"in_complement", v.in_complement}};
        }
      },
      c.certificate);
  return {{"n", n},
          {"verdict", std::string(c.verdict())},
          {"complemented", c.is_free() && c.complemented},
          {"certificate", std::move(cert)}};
}

namespace detail {

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("certificate: missing field '") + key + "'");
  return obj.at(key);
}

inline Vertex vertex_of(const json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xFFFFFFFFULL)
    throw ParseError(std::string("certificate: '") + what + "' is not a vertex index");
  return j.get<Vertex>();
}

inline VertexSet vertices_of(const json& obj, const char* key) {
  const json& arr = field(obj, key);
  if (!arr.is_array()) throw ParseError(std::string("certificate: '") + key + "' is not an array");
  VertexSet out;
  for (const auto& v : arr) out.push_back(vertex_of(v, key));
  return out;
}

inline Edge edge_of(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("certificate: matching edge must be a pair");
  return {vertex_of(j[0], "matching"), vertex_of(j[1], "matching")};
}

}  // namespace detail

/// Rebuilds a Classification from its document. Shape errors throw
/// ParseError; semantic validity is left to verify_classification.
/// The document's "n" is returned through n_out.
inline Classification parse_certificate_document(const json& doc, std::size_t* n_out = nullptr) {
  using detail::field;
  using detail::vertex_of;
  using detail::vertices_of;
  const json& n = field(doc, "n");
  if (!n.is_number_unsigned()) throw ParseError("certificate: 'n' is not a non-negative integer");
  if (n_out) *n_out = n.get<std::size_t>();
  const json& verdict = field(doc, "verdict");
  if (!verdict.is_string()) throw ParseError("certificate: 'verdict' is not a string");
  const json& comp = field(doc, "complemented");
  if (!comp.is_boolean()) throw ParseError("certificate: 'complemented' is not a boolean");
  const json& cert = field(doc, "certificate");
  if (!cert.is_object()) throw ParseError("certificate: 'certificate' is not an object");

  Classification c;
  c.complemented = comp.get<bool>();
  const std::string v = verdict.get<std::string>();
  if (v == "FiveHole") {
    c.certificate = FiveHole{vertices_of(cert, "cycle")};
  } else if (v == "SixHole") {
    c.certificate = SixHole{vertices_of(cert, "cycle")};
  } else if (v == "Split") {
    c.certificate = SplitPartition{vertices_of(cert, "clique"), vertices_of(cert, "stable")};
  } else if (v == "ClassA") {
    c.certificate = ClassADecomposition{vertex_of(field(cert, "a"), "a"), vertex_of(field(cert, "b"), "b"),
                                        vertex_of(field(cert, "c"), "c"), vertex_of(field(cert, "d"), "d"),
                                        vertex_of(field(cert, "e"), "e"), vertices_of(cert, "X")};
  } else if (v == "ClassB") {
    c.certificate = ClassBDecomposition{vertices_of(cert, "X"), vertices_of(cert, "Y"),
                                        vertices_of(cert, "Z"), vertices_of(cert, "W"),
                                        vertex_of(field(cert, "x"), "x"), vertex_of(field(cert, "y"), "y")};
  } else if (v == "ClassC") {
    const json& m = field(cert, "matching");
    if (!m.is_array() || m.size() != 2) throw ParseError("certificate: 'matching' must list two edges");
    c.certificate = ClassCDecomposition{vertices_of(cert, "X"), vertices_of(cert, "Y"), detail::edge_of(m[0]),
                                        detail::edge_of(m[1])};
  } else if (v == "NotFree") {
    const json& flag = field(cert, "in_complement");
    if (!flag.is_boolean()) throw ParseError("certificate: 'in_complement' is not a boolean");
    c.certificate = WheelWitness{Hole{vertices_of(cert, "hole")}, vertex_of(field(cert, "hub"), "hub"), flag.get<bool>()};
    c.complemented = false;
  } else {
    throw ParseError("certificate: unknown verdict '" + v + "'");
  }
  return c;
}

inline json report_document(const AgreementReport& r) {
  json dis = json::array();
  for (const auto& d : r.disagreements) {
    json entry = {{"graph6", d.graph6}, {"condition2", d.condition2}, {"verdict", d.verdict}};
    entry["condition1"] = d.condition1 ? json(*d.condition1) : json(nullptr);
    if (!d.note.empty()) entry["note"] = d.note;
    dis.push_back(std::move(entry));
  }
  return {{"graphs_checked", r.graphs_checked},
          {"condition1_checked", r.condition1_checked},
          {"certificate_failures", r.certificate_failures},
          {"verdicts", r.verdicts},
          {"disagreements", std::move(dis)},
          {"agree", r.ok()}};
}

}  // namespace wheelfree
