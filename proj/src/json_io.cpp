#include "nesto/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nesto {

namespace {

// Wraps library-level json errors so callers only see nesto::Error.
template <class Fn>
auto guarded(const std::string& what, Fn fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    invalid_input(what + ": " + e.what());
  }
}

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid_input(std::string("missing field '") + key + "'");
  if (!j.at(key).is_number_integer()) invalid_input(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid_input(std::string("missing field '") + key + "'");
  if (!j.at(key).is_array()) invalid_input(std::string("field '") + key + "' must be an array");
  return j.at(key);
}

}  // namespace

Json mask_json(Mask m) {
  Json a = Json::array();
  for (int l : labels_of(m)) a.push_back(l);
  return a;
}

Mask mask_from_json(const Json& j, int limit) {
  if (!j.is_array()) invalid_input("expected an array of labels");
  Mask m = 0;
  for (const auto& x : j) {
    if (!x.is_number_integer()) invalid_input("labels must be integers");
    int l = x.get<int>();
    if (l < 1 || l > limit || l > 64) invalid_input("label " + std::to_string(l) + " out of range 1.." + std::to_string(limit));
    m |= Mask{1} << (l - 1);
  }
  return m;
}

Json to_json(const BuildingSet& b) {
  Json sets = Json::array();
  for (Mask s : b.sets()) sets.push_back(mask_json(s));
  return Json{{"ground", b.ground()}, {"sets", sets}};
}

BuildingSet buildset_from_json(const Json& j) {
  return guarded("building set", [&] {
    int n = get_int(j, "ground");
    std::vector<Mask> sets;
    for (const auto& s : get_array(j, "sets")) sets.push_back(mask_from_json(s, n));
    return BuildingSet(n, std::move(sets));
  });
}

Json to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json a = Json::array();
    f.for_each([&](int v) { a.push_back(v + 1); });
    facets.push_back(a);
  }
  Json j{{"m", k.m()}, {"facets", facets}};
  bool default_labels = true;
  for (int v = 0; v < k.m(); ++v) default_labels &= k.label(v) == std::to_string(v + 1);
  if (!default_labels) j["labels"] = k.labels();
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    int m = get_int(j, "m");
    if (m < 0 || m > VertexSet::kCapacity) invalid_input("vertex count out of range");
    std::vector<VertexSet> facets;
    for (const auto& f : get_array(j, "facets")) {
      if (!f.is_array()) invalid_input("facets must be arrays");
      VertexSet s;
      for (const auto& x : f) {
        int v = x.get<int>();
        if (v < 1 || v > m) invalid_input("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
        s.insert(v - 1);
      }
      facets.push_back(s);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return SimplicialComplex(m, std::move(facets), std::move(labels));
  });
}

Json to_json(const RingElem& e) {
  Json terms = Json::array();
  for (const auto& [mono, c] : e.terms()) {
    Json m = Json::array();
    for (const auto& s : mono) {
      Json sym{{"family", family_name(s.family)}, {"dim", s.dim}};
      if (s.family == Family::Opaque) sym["key"] = s.key;
      m.push_back(sym);
    }
    terms.push_back(Json{{"coeff", to_string(c)}, {"monomial", m}});
  }
  return Json{{"terms", terms}, {"text", e.to_string()}};
}

RingElem ring_elem_from_json(const Json& j) {
  return guarded("ring element", [&] {
    RingElem out;
    for (const auto& t : get_array(j, "terms")) {
      Rational c = t.at("coeff").is_string() ? parse_rational(t.at("coeff").get<std::string>())
                                             : Rational(t.at("coeff").get<long long>());
      RingElem term = RingElem::unit() * c;
      for (const auto& s : get_array(t, "monomial")) {
        auto f = parse_family(s.at("family").get<std::string>());
        if (f == Family::Opaque) invalid_input("opaque symbols cannot be read back");
        term = term * RingElem::of(Symbol::named(f, get_int(s, "dim")));
      }
      out += term;
    }
    return out;
  });
}

Json to_json(const Series& s) {
  Json terms = Json::array();
  for (const auto& [key, e] : s.coeffs()) {
    Json t{{"x", key.second}, {"value", to_json(e)}};
    if (s.is_two_var()) t["q"] = key.first;
    terms.push_back(t);
  }
  Json j{{"order_x", s.order_x()}, {"terms", terms}};
  if (s.is_two_var()) j["order_q"] = s.order_q();
  return j;
}

Json to_json(const PdeReport& r) {
  Json res = Json::array();
  for (const auto& x : r.residuals) res.push_back(Json{{"q", x.q}, {"x", x.x}, {"residual", to_json(x.value)}});
  return Json{{"identity", identity_name(r.identity)},
              {"order_q", r.order_q},
              {"order_x", r.order_x},
              {"partial", r.partial},
              {"residuals", res}};
}

Json to_json(const BigradedDims& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries) entries.push_back(Json{{"i", e.i}, {"J", mask_json(e.J)}, {"dim", e.dim}});
  return Json{{"bigraded", entries}, {"total", d.total}};
}

Json to_json(const HochsterReport& r) {
  Json mm = Json::array();
  for (const auto& m : r.mismatches)
    mm.push_back(Json{{"i", m.i}, {"J", mask_json(m.J)}, {"koszul", m.koszul}, {"hochster", m.hochster}});
  return Json{{"components", r.components}, {"mismatches", mm}};
}

Json to_json(const TripleScan& s) {
  Json ex = Json::array();
  for (const auto& t : s.nontrivial_examples) ex.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"classes", s.classes},     {"triples", s.triples},   {"overlapping", s.overlapping},
              {"defined", s.defined},     {"trivial", s.trivial},   {"nontrivial", s.nontrivial},
              {"nontrivial_examples", ex}};
}

Json to_json(const MonomialSpec& m) {
  return Json{{"J", mask_json(m.J)}, {"tau", mask_json(m.tau)}, {"label", m.label}};
}

MonomialSpec monomial_from_json(const Json& j, int m) {
  return guarded("class", [&] {
    if (!j.is_object() || !j.contains("J") || !j.contains("tau")) invalid_input("a class needs 'J' and 'tau'");
    MonomialSpec s{mask_from_json(j.at("J"), m), mask_from_json(j.at("tau"), m), ""};
    if ((s.tau & ~s.J) != 0) invalid_input("tau must be a subset of J");
    s.label = j.contains("label") ? j.at("label").get<std::string>() : "u" + mask_to_string(s.J & ~s.tau) + "v" + mask_to_string(s.tau);
    return s;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid_input("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    invalid_input(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) invalid_input("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace nesto
