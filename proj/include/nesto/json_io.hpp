#pragma once

// JSON forms of the library objects. Building set members use ground labels
// 1..n; vertices of complexes and multidegrees use 1-based vertex numbers.

#include <json.hpp>
#include <string>

#include "nesto/buildsets.hpp"
#include "nesto/cohomology.hpp"
#include "nesto/complexes.hpp"
#include "nesto/massey.hpp"
#include "nesto/polyring.hpp"
#include "nesto/series.hpp"

namespace nesto {

using Json = nlohmann::ordered_json;

Json mask_json(Mask m);
Mask mask_from_json(const Json& j, int limit);

Json to_json(const BuildingSet& b);
BuildingSet buildset_from_json(const Json& j);

Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

/// Named symbols only; opaque factors are written with their key and cannot
/// be read back.
Json to_json(const RingElem& e);
RingElem ring_elem_from_json(const Json& j);

Json to_json(const Series& s);
Json to_json(const PdeReport& r);
Json to_json(const BigradedDims& d);
Json to_json(const HochsterReport& r);
Json to_json(const TripleScan& s);

/// {"J": [...], "tau": [...], "label": "..."}.
Json to_json(const MonomialSpec& m);
MonomialSpec monomial_from_json(const Json& j, int m);

template <class F>
Json coeffs_json(const Vec<F>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(field_elem_string(x));
  return a;
}

template <class F>
Json to_json(const Cochain<F>& c) {
  return Json{{"J", mask_json(c.J)}, {"h", c.h}, {"coeffs", coeffs_json(c.c)}};
}

template <class F>
Json to_json(const MasseyReport<F>& r) {
  Json j{{"k", r.k},
         {"defined", r.defined},
         {"trivial", triviality_name(r.trivial)},
         {"strictly_defined", r.strictly_defined},
         {"J", mask_json(r.J)},
         {"h", r.h},
         {"total_degree", 2 * popcount(r.J) - r.h},
         {"systems", r.systems},
         {"nodes", r.nodes}};
  Json vals = Json::array(), ind = Json::array(), wit = Json::array();
  for (const auto& v : r.values) vals.push_back(coeffs_json(v));
  for (const auto& v : r.indeterminacy) ind.push_back(coeffs_json(v));
  for (const auto& w : r.witness) wit.push_back(Json{{"i", w.i + 1}, {"j", w.j + 1}, {"cochain", to_json(w.c)}});
  j["values"] = vals;
  j["indeterminacy"] = ind;
  j["witness"] = wit;
  if (!r.witness.empty() || !r.witness_value.c.empty()) j["witness_value"] = to_json(r.witness_value);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// Parses a file; parse errors carry the file name and position.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace nesto
