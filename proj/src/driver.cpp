#include "nesto/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <set>
#include <thread>

namespace nesto {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Unknown || b == Status::Unknown) return Status::Unknown;
  return Status::Pass;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Unknown: return 2;
  }
  return 2;
}

void Report::add(Report r) {
  status = combine(status, r.status);
  seconds += r.seconds;
  items.push_back(std::move(r));
}

Json to_json(const Report& r, bool timing) {
  Json j{{"claim", r.claim}, {"status", status_name(r.status)}};
  if (timing) j["seconds"] = r.seconds;
  if (!r.params.is_null()) j["params"] = r.params;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.items.empty()) {
    Json items = Json::array();
    for (const auto& x : r.items) items.push_back(to_json(x, timing));
    j["items"] = items;
  }
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.claim = j.value("claim", "");
  auto st = j.value("status", "unknown");
  r.status = st == "pass" ? Status::Pass : st == "fail" ? Status::Fail : Status::Unknown;
  r.seconds = j.value("seconds", 0.0);
  if (j.contains("params")) r.params = j["params"];
  if (j.contains("witness")) r.witness = j["witness"];
  if (j.contains("items"))
    for (const auto& x : j["items"]) r.items.push_back(report_from_json(x));
  return r;
}

void print_report(std::ostream& out, const Report& r, int indent) {
  out << std::string(indent, ' ') << status_name(r.status) << "  " << r.claim;
  if (r.items.empty()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "  (%.2fs)", r.seconds);
    out << buf;
  }
  out << '\n';
  for (const auto& x : r.items) print_report(out, x, indent + 2);
}

// ---- helpers ----

namespace {

using Clock = std::chrono::steady_clock;

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string tag(Family f) { return lower(family_name(f)); }

int int_after(const std::string& s, std::size_t pos) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s.substr(pos), &used);
    if (pos + used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    invalid_input("bad complex name '" + s + "'");
  }
}

std::vector<std::string> unclassified_terms(const RingElem& e) {
  std::vector<std::string> out;
  for (const auto& [mono, c] : e.terms())
    for (const auto& s : mono)
      if (s.unclassified || s.family == Family::Opaque) out.push_back(s.to_string());
  return out;
}

// Inverse of compress: spreads the low bits of m over the positions of support.
Mask expand(Mask m, Mask support) {
  Mask out = 0;
  int i = 0;
  for_each_bit(support, [&](int b) {
    if (m >> i & 1) out |= Mask{1} << b;
    ++i;
  });
  return out;
}

ClassFamily canonical_family(const std::string& family, int n) {
  if (family == "q") return canonical_classes_q(n);
  if (family == "mas") return canonical_classes_mas(n);
  invalid_input("canonical classes exist for 'q' and 'mas', not '" + family + "'");
}

// ---- leaf checks ----

Report boundary_item(Family f, int n) {
  Report r;
  r.claim = "boundary/" + tag(f) + "/" + std::to_string(n);
  auto b = registry_building_set(f, n);
  if (!b) invalid_input(family_name(f) + " has no building set");
  RingElem generic = canonicalize(d_nestohedron(*b));
  r.witness = Json{{"generic", generic.to_string()}, {"facets", to_string(generic.total_coeff())}};
  if (auto un = unclassified_terms(generic); !un.empty()) {
    r.status = Status::Unknown;
    r.witness["unclassified"] = un;
    return r;
  }
  RingElem formula;
  try {
    RingElem raw = d_symbol(Symbol::named(f, n));
    r.witness["family_formula"] = raw.to_string();
    formula = canonicalize(raw);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedSymbol) throw;
    r.status = Status::Unknown;
    r.witness["note"] = e.what();
    return r;
  }
  r.witness["formula"] = formula.to_string();
  if (generic != formula) {
    r.status = Status::Fail;
    r.witness["difference"] = to_json(generic - formula);
  }
  return r;
}

constexpr int kSplitCheckLimit = 16;

Json direct_witness(const BuildingSet& b, const SimplicialComplex& k, const std::vector<Mask>& verts, Family f, int r,
                    Status& status) {
  auto target_b = registry_building_set(f, r);
  auto target_k = registry_complex(f, r);
  Json searched = Json::array();
  std::optional<Mask> found;
  for (Mask s : b.sets()) {
    if (popcount(s) != r + 1 || s == b.full()) continue;
    searched.push_back(mask_json(s));
    auto rb = restriction(b, s);
    bool ok = target_b && iso(rb, *target_b).has_value();
    if (!ok) ok = iso(nested_complex(rb), *target_k).status == IsoResult::Found;
    if (ok) {
      found = s;
      break;
    }
  }
  Json w{{"r", r}};
  if (!found) {
    status = combine(status, Status::Fail);
    w["found"] = false;
    w["candidates"] = searched;
    return w;
  }
  Mask s = *found;
  w["found"] = true;
  w["S"] = mask_json(s);
  // vertices of N_{B|_S} sit in N_B as the members strictly inside S
  VertexSet j;
  for (std::size_t v = 0; v < verts.size(); ++v)
    if ((verts[v] & ~s) == 0 && verts[v] != s) j.insert(static_cast<int>(v));
  w["J_size"] = j.size();
  auto full = full_subcomplex(k, j);
  auto sub = nested_complex(restriction(b, s));
  auto fi = iso(full, sub);
  w["full_subcomplex_matches"] = fi.status == IsoResult::Found;
  if (fi.status != IsoResult::Found) status = combine(status, fi.status == IsoResult::None ? Status::Fail : Status::Unknown);
  if (j.size() <= kSplitCheckLimit) {
    auto sr = split_check(k, j, Field::Q, kSplitCheckLimit);
    w["split_components"] = sr.components;
    w["split_ok"] = sr.ok();
    if (!sr.ok()) {
      status = combine(status, Status::Fail);
      w["split_mismatches"] = static_cast<long long>(sr.mismatches.size());
    }
  } else {
    w["split_check"] = "skipped: " + std::to_string(j.size()) + " vertices exceed " + std::to_string(kSplitCheckLimit);
  }
  return w;
}

Report direct_item(Family f, int lo, int hi) {
  Report r;
  r.claim = "direct/" + tag(f) + "/" + std::to_string(lo) + ".." + std::to_string(hi);
  Json per_n = Json::array();
  for (int n = lo; n <= hi; ++n) {
    auto b = registry_building_set(f, n);
    if (!b) invalid_input(family_name(f) + " has no building set");
    auto k = nested_complex(*b);
    auto verts = nested_vertices(*b);
    Json rs = Json::array();
    for (int rr = std::max(1, lo); rr < n; ++rr) rs.push_back(direct_witness(*b, k, verts, f, rr, r.status));
    per_n.push_back(Json{{"n", n}, {"witnesses", rs}});
  }
  r.witness = per_n;
  return r;
}

Report counterexample_item() {
  Report r;
  r.claim = "counterexample/contraction";
  auto b = standard(StdFamily::Mas, 4);
  Mask s = mask_of({1, 3});
  Mask rest = b.full() & ~s;
  auto c = contraction(b, s);
  std::vector<Mask> members;  // B/S in the original labels
  for (Mask t : c.sets()) members.push_back(expand(t, rest));
  std::vector<Mask> common;
  for (Mask t : members)
    if (b.contains(t)) common.push_back(t);

  Mask p2 = mask_of({2}), p4 = mask_of({4});
  auto kb = nested_complex(b);
  auto kc = nested_complex(c);
  auto vb = nested_vertices(b), vc = nested_vertices(c);
  auto index = [](const std::vector<Mask>& v, Mask m) {
    auto it = std::find(v.begin(), v.end(), m);
    if (it == v.end()) invalid_input("missing nested vertex " + mask_to_string(m));
    return static_cast<int>(it - v.begin());
  };
  int b2 = index(vb, p2), b4 = index(vb, p4);
  int c2 = index(vc, compress(p2, rest)), c4 = index(vc, compress(p4, rest));
  bool edge_b = kb.is_face(VertexSet::of({b2, b4}));
  bool edge_c = kc.is_face(VertexSet::of({c2, c4}));
  auto sub_b = full_subcomplex(kb, VertexSet::of({b2, b4}));
  auto sub_c = full_subcomplex(kc, VertexSet::of({c2, c4}));

  bool s_in_b = b.contains(s);
  bool union_in_quotient = std::find(members.begin(), members.end(), p2 | p4) != members.end();
  bool union_not_in_b = !b.contains(p2 | p4);
  bool big_in_b = b.contains(mask_of({1, 2, 3, 4}));
  bool singles_common = std::find(common.begin(), common.end(), p2) != common.end() &&
                        std::find(common.begin(), common.end(), p4) != common.end();

  Json mem = Json::array(), com = Json::array();
  for (Mask t : members) mem.push_back(mask_json(t));
  for (Mask t : common) com.push_back(mask_json(t));
  r.witness = Json{{"B", to_json(b)},
                   {"S", mask_json(s)},
                   {"S_in_B", s_in_b},
                   {"quotient_members", mem},
                   {"quotient_cap_B", com},
                   {"edge_in_N_B", edge_b},
                   {"edge_in_N_quotient", edge_c},
                   {"N_B_on_pair", to_json(sub_b)},
                   {"N_quotient_on_pair", to_json(sub_c)},
                   {"union_2_4_in_quotient", union_in_quotient},
                   {"union_2_4_not_in_B", union_not_in_b},
                   {"1234_in_B", big_in_b}};
  bool ok = s_in_b && edge_b && !edge_c && union_in_quotient && union_not_in_b && big_in_b && singles_common;
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

Report pde_item(Identity id, int oq, int ox) {
  Report r;
  r.claim = "series/pde/" + identity_name(id);
  auto rep = verify_pde(id, oq, ox);
  r.status = rep.partial ? Status::Unknown : rep.ok() ? Status::Pass : Status::Fail;
  r.witness = to_json(rep);
  return r;
}

Report closed_form_item(Family f, int oq, int ox) {
  Report r;
  r.claim = "series/closed_form/" + tag(f);
  auto cf = closed_form(f, oq, ox).canonical();
  auto tp = two_param(f, oq, ox).canonical();
  if (cf == tp) return r;
  r.status = Status::Fail;
  r.witness = Json{{"difference", to_json(cf - tp)}};
  return r;
}

Report complexity_item(Family f, int max_dim, const std::vector<std::string>& want) {
  Report r;
  r.claim = "complexity/" + tag(f);
  auto rep = complexity(f, max_dim);
  std::set<std::string> got, expected(want.begin(), want.end());
  for (Family g : rep.closure) got.insert(tag(g));
  r.witness = Json{{"closure", got}, {"complexity", rep.complexity}, {"exact", rep.exact}, {"complete", rep.complete}};
  if (!rep.unmatched.empty()) r.witness["unmatched"] = rep.unmatched;
  if (!rep.complete || !rep.exact)
    r.status = Status::Unknown;
  else if (got != expected)
    r.status = Status::Fail;
  return r;
}

Report hochster_item(const std::string& name, Field field, int threads) {
  Report r;
  r.claim = "cohomology/hochster/" + name + "/" + field_name(field);
  auto rep = hochster_check(named_complex(name), field, threads);
  r.status = rep.ok() ? Status::Pass : Status::Fail;
  r.witness = to_json(rep);
  return r;
}

template <class F>
Report massey_canonical(const std::string& family, int n, long long budget) {
  Report r;
  auto fam = canonical_family(family, n);
  Koszul<F> alg(fam.complex, 64);
  auto a = monomial_reps(alg, fam.classes);
  Json classes = Json::array();
  for (const auto& c : fam.classes) classes.push_back(to_json(c));
  r.witness = Json{{"classes", classes}};
  if (n == 2) {
    auto cls = alg.class_of(alg.mul(a[0], a[1]));
    r.witness["product"] = coeffs_json(cls.coords);
    r.status = cls.is_zero() ? Status::Fail : Status::Pass;
    return r;
  }
  MasseyReport<F> rep;
  if constexpr (std::is_same_v<F, F2>) {
    rep = kfold_f2(alg, a, budget);
  } else {
    if (n != 3) invalid_input("products of more than three classes are decided over f2 only");
    rep = triple_massey(alg, a);
  }
  r.witness["report"] = to_json(rep);
  if (rep.trivial == Triviality::Unknown)
    r.status = Status::Unknown;
  else
    r.status = rep.defined && rep.strictly_defined && rep.trivial == Triviality::No ? Status::Pass : Status::Fail;
  return r;
}

Report massey_item(const std::string& family, int n, Field field, long long budget) {
  Report r = field == Field::F2 ? massey_canonical<F2>(family, n, budget) : massey_canonical<Rational>(family, n, budget);
  r.claim = "massey/" + family + "/" + std::to_string(n) + "/" + field_name(field);
  return r;
}

template <class F>
std::set<std::vector<std::string>> value_keys(const std::vector<Vec<F>>& vs) {
  std::set<std::vector<std::string>> out;
  for (const auto& v : vs) {
    std::vector<std::string> k;
    for (const auto& x : v) k.push_back(field_elem_string(x));
    out.insert(k);
  }
  return out;
}

Report naturality_item(int n, int rr, Field field, long long budget) {
  Report r;
  r.claim = "massey/naturality/" + std::to_string(n) + "->" + std::to_string(rr) + "/" + field_name(field);
  auto e = mas_embedding(n, rr);
  r.witness = Json{{"S", mask_json(e.s)}};
  auto body = [&]<class F>() {
    Koszul<F> big(e.big.complex, 64), small(e.small.complex, 64);
    auto b = monomial_reps(big, e.big.classes), a = monomial_reps(small, e.small.classes);
    bool classes_map = true;
    for (std::size_t i = 0; i < a.size(); ++i) classes_map &= transfer(big, small, b[i], e.vertex_map).c == a[i].c;
    r.witness["classes_restrict"] = classes_map;
    if (!classes_map) {
      r.status = Status::Fail;
      return;
    }
    if constexpr (std::is_same_v<F, F2>) {
      auto vb = kfold_f2(big, b, budget), va = kfold_f2(small, a, budget);
      r.witness["big"] = to_json(vb);
      r.witness["small"] = to_json(va);
      if (vb.trivial == Triviality::Unknown || va.trivial == Triviality::Unknown) {
        r.status = Status::Unknown;
        return;
      }
      std::vector<Vec<F2>> moved;
      for (const auto& v : vb.values) {
        auto z = big.representative(CohomClass<F2>{vb.J, vb.h, v});
        moved.push_back(small.class_of(transfer(big, small, z, e.vertex_map)).coords);
      }
      bool same = value_keys(moved) == value_keys(va.values);
      r.witness["value_sets_agree"] = same;
      r.status = same && vb.trivial == Triviality::No && va.trivial == Triviality::No ? Status::Pass : Status::Fail;
    } else {
      if (rr != 3) invalid_input("naturality over q is checked for triple products");
      auto tb = triple_massey(big, b), ta = triple_massey(small, a);
      r.witness["big"] = to_json(tb);
      r.witness["small"] = to_json(ta);
      if (!tb.defined || !ta.defined) {
        r.status = Status::Fail;
        return;
      }
      auto moved = small.class_of(transfer(big, small, tb.witness_value, e.vertex_map)).coords;
      Vec<F> diff = moved;
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= ta.values[0][i];
      bool in = detail::in_span(ta.indeterminacy, diff, static_cast<int>(diff.size()));
      r.witness["restricted_value_in_coset"] = in;
      r.status = in && tb.trivial == Triviality::No && ta.trivial == Triviality::No ? Status::Pass : Status::Fail;
    }
  };
  with_field(field, body);
  return r;
}

Report scan_item(const std::string& name, int degree, Field field, int threads, const std::string& expect) {
  Report r;
  r.claim = "massey/scan/" + name + "/" + field_name(field);
  auto scan = scan_triples(named_complex(name), degree, field, threads, 64);
  r.witness = to_json(scan);
  if (expect == "trivial")
    r.status = scan.nontrivial == 0 && scan.classes > 0 ? Status::Pass : Status::Fail;
  else if (expect == "nontrivial")
    r.status = scan.nontrivial > 0 ? Status::Pass : Status::Fail;
  else
    invalid_input("scan expectation must be 'trivial' or 'nontrivial'");
  return r;
}

Report dispatch(const Json& p, int threads) {
  auto kind = p.at("kind").get<std::string>();
  auto str = [&](const char* k) { return p.at(k).get<std::string>(); };
  auto num = [&](const char* k) { return p.at(k).get<int>(); };
  auto field = [&] { return parse_field(p.value("field", "q")); };
  auto budget = [&] { return p.value("budget", 1LL << 20); };
  if (kind == "boundary") return boundary_item(parse_family(str("family")), num("n"));
  if (kind == "direct") return direct_item(parse_family(str("family")), num("lo"), num("hi"));
  if (kind == "counterexample") return counterexample_item();
  if (kind == "pde") return pde_item(parse_identity(str("identity")), num("order_q"), num("order_x"));
  if (kind == "closed_form") return closed_form_item(parse_family(str("family")), num("order_q"), num("order_x"));
  if (kind == "complexity")
    return complexity_item(parse_family(str("family")), num("max_dim"), p.at("closure").get<std::vector<std::string>>());
  if (kind == "hochster") return hochster_item(str("complex"), field(), threads);
  if (kind == "massey") return massey_item(str("family"), num("n"), field(), budget());
  if (kind == "naturality") return naturality_item(num("n"), num("r"), field(), budget());
  if (kind == "scan")
    return scan_item(str("complex"), p.value("degree", 3), field(), threads, p.value("expect", "trivial"));
  invalid_input("unknown report item kind '" + kind + "'");
}

Report suite(const std::string& name, const std::vector<Json>& params, int threads) {
  Report r;
  r.claim = name;
  for (auto& x : run_items(params, threads)) r.add(std::move(x));
  return r;
}

}  // namespace

SimplicialComplex named_complex(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) invalid_input("bad complex name '" + name + "'");
  auto head = name.substr(0, colon);
  if (head == "polygon") {
    int n = int_after(name, colon + 1);
    if (n < 3) invalid_input("a polygon needs at least 3 vertices");
    std::vector<VertexSet> facets;
    for (int i = 0; i < n; ++i) facets.push_back(VertexSet::of({i, (i + 1) % n}));
    return SimplicialComplex(n, facets);
  }
  if (head == "simplex_boundary") return boundary_simplex(int_after(name, colon + 1));
  if (head == "q") return q_complex(int_after(name, colon + 1));
  if (head == "nested") {
    auto second = name.find(':', colon + 1);
    if (second == std::string::npos) invalid_input("bad complex name '" + name + "'");
    auto f = parse_family(name.substr(colon + 1, second - colon - 1));
    if (f == Family::Q) return q_complex(int_after(name, second + 1));
    auto b = registry_building_set(f, int_after(name, second + 1));
    if (!b) invalid_input("no building set for '" + name + "'");
    return nested_complex(*b);
  }
  invalid_input("bad complex name '" + name + "'");
}

Report run_item(const Json& params, int threads) {
  auto start = Clock::now();
  Report r;
  try {
    r = dispatch(params, std::max(1, threads));
  } catch (const nlohmann::json::exception& e) {
    invalid_input(std::string("bad report item: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    r.claim = params.value("kind", "item");
    r.status = Status::Unknown;
    r.witness = Json{{"note", e.what()}};
  }
  if (params.value("expect", "") == "fail") {
    r.claim = "not " + r.claim;
    if (r.status != Status::Unknown) r.status = r.status == Status::Pass ? Status::Fail : Status::Pass;
  }
  r.params = params;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<Report> run_items(const std::vector<Json>& params, int threads) {
  std::vector<Report> out(params.size());
  std::vector<std::exception_ptr> errors(params.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= params.size()) return;
      try {
        out[i] = run_item(params[i], threads);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(params.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Report verify_boundary(Family f, int lo, int hi) {
  std::vector<Json> ps;
  for (int n = lo; n <= hi; ++n) ps.push_back(Json{{"kind", "boundary"}, {"family", tag(f)}, {"n", n}});
  return suite("boundary/" + tag(f), ps, 1);
}

Report verify_direct_family(Family f, int lo, int hi) {
  return run_item(Json{{"kind", "direct"}, {"family", tag(f)}, {"lo", lo}, {"hi", hi}});
}

Report contraction_counterexample() { return run_item(Json{{"kind", "counterexample"}}); }

Report massey_family_report(const SuiteOptions& o) {
  std::vector<Json> ps;
  int lo = std::max(2, o.dim_lo), hi = std::min(4, o.dim_hi);
  for (int n = lo; n <= hi; ++n)
    for (const char* fam : {"q", "mas"}) {
      if (n <= 3) ps.push_back(Json{{"kind", "massey"}, {"family", fam}, {"n", n}, {"field", "q"}});
      ps.push_back(Json{{"kind", "massey"}, {"family", fam}, {"n", n}, {"field", "f2"}, {"budget", o.budget}});
    }
  if (lo <= 3 && hi >= 4) {
    ps.push_back(Json{{"kind", "naturality"}, {"n", 4}, {"r", 3}, {"field", "q"}});
    ps.push_back(Json{{"kind", "naturality"}, {"n", 4}, {"r", 3}, {"field", "f2"}, {"budget", o.budget}});
  }
  ps.push_back(Json{{"kind", "scan"},
                    {"complex", "nested:pe:3"},
                    {"degree", 3},
                    {"field", "f2"},
                    {"expect", "trivial"}});
  return suite("massey", ps, o.threads);
}

Report series_report(const SuiteOptions& o) {
  std::vector<Json> ps;
  for (Identity id : all_identities())
    ps.push_back(Json{{"kind", "pde"}, {"identity", identity_name(id)}, {"order_q", o.order_q}, {"order_x", o.order_x}});
  for (const char* f : {"pe", "st"})
    ps.push_back(Json{{"kind", "closed_form"}, {"family", f}, {"order_q", o.order_q}, {"order_x", o.order_x}});
  return suite("series", ps, o.threads);
}

Report cohomology_report(const SuiteOptions& o) {
  std::vector<Json> ps;
  for (const char* f : {"q", "f2"})
    for (const char* k : {"polygon:4", "simplex_boundary:3", "q:3", "nested:mas:3"})
      ps.push_back(Json{{"kind", "hochster"}, {"complex", k}, {"field", f}});
  ps.push_back(Json{{"kind", "hochster"}, {"complex", "nested:pe:3"}, {"field", "f2"}});
  return suite("cohomology", ps, o.threads);
}

Report verify_all(const SuiteOptions& o) {
  if (o.dim_lo < 2 || o.dim_hi < o.dim_lo) invalid_input("dims must satisfy 2 <= A <= B");
  Report all;
  all.claim = "verify-all";

  std::vector<Json> ps;
  for (const char* f : {"mas", "gamma", "pe", "st", "cube"})
    for (int n = o.dim_lo; n <= o.dim_hi; ++n) ps.push_back(Json{{"kind", "boundary"}, {"family", f}, {"n", n}});
  all.add(suite("boundary", ps, o.threads));

  ps.clear();
  if (o.dim_hi > o.dim_lo) {
    for (const char* f : {"cube", "pe", "st", "as", "mas", "gamma"})
      ps.push_back(Json{{"kind", "direct"}, {"family", f}, {"lo", o.dim_lo}, {"hi", o.dim_hi}});
    // no member of a simplex or cyclohedron building set restricts to a smaller member
    for (const char* f : {"simplex", "cy"})
      ps.push_back(Json{{"kind", "direct"}, {"family", f}, {"lo", o.dim_lo}, {"hi", o.dim_hi}, {"expect", "fail"}});
  }
  ps.push_back(Json{{"kind", "counterexample"}});
  all.add(suite("direct", ps, o.threads));

  ps.clear();
  const std::vector<std::pair<const char*, std::vector<std::string>>> closures{
      {"pe", {"pe"}},        {"as", {"as"}},          {"cy", {"cy", "as"}},
      {"st", {"st", "pe"}},  {"gamma", {"gamma", "pe"}}, {"mas", {"mas", "st", "pe", "gamma"}}};
  for (const auto& [f, c] : closures)
    ps.push_back(Json{{"kind", "complexity"}, {"family", f}, {"max_dim", std::max(5, o.dim_hi)}, {"closure", c}});
  all.add(suite("complexity", ps, o.threads));

  all.add(series_report(o));
  all.add(cohomology_report(o));
  all.add(massey_family_report(o));
  return all;
}

namespace {

void collect_leaves(const Json& j, std::vector<Json>& out) {
  if (j.contains("params")) out.push_back(j.at("params"));
  if (j.contains("items"))
    for (const auto& x : j.at("items")) collect_leaves(x, out);
}

}  // namespace

Report replay(const Json& saved) {
  std::vector<Json> ps;
  collect_leaves(saved, ps);
  if (ps.empty()) invalid_input("report has no replayable items");
  return suite("replay", ps, 1);
}

}  // namespace nesto
