#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "nesto/driver.hpp"

namespace nesto {

namespace {

constexpr int kUsage = 64;

struct Range {
  int lo, hi;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    Range r{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    if (r.hi < r.lo) invalid_input("empty range '" + s + "'");
    return r;
  } catch (const std::logic_error&) {
    invalid_input("bad range '" + s + "', expected A..B");
  }
}

Mask parse_labels(const std::string& s, int limit) {
  Mask m = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    auto part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int l = 0;
    try {
      l = std::stoi(part);
    } catch (const std::logic_error&) {
      invalid_input("bad label list '" + s + "'");
    }
    if (l < 1 || l > limit) invalid_input("label " + std::to_string(l) + " out of range");
    m |= Mask{1} << (l - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return m;
}

Graph named_graph(const std::string& kind, int n) {
  if (kind == "complete") return Graph::complete(n);
  if (kind == "path") return Graph::path(n);
  if (kind == "star") return Graph::star(n);
  if (kind == "cycle") return Graph::cycle(n);
  invalid_input("unknown graph '" + kind + "'");
}

BuildingSet family_buildset(const std::string& family, int dim) {
  auto b = registry_building_set(parse_family(family), dim);
  if (!b) invalid_input("family '" + family + "' has no building set");
  return *b;
}

// Output sink shared by all subcommands.
struct Sink {
  std::ostream& out;
  bool json = false;
  std::string path;
  bool timing = true;

  void data(const Json& j, const std::string& text) {
    if (!path.empty()) write_json_file(path, j);
    if (json)
      out << j.dump(2) << '\n';
    else
      out << text;
  }
  int report(const Report& r) {
    Json j = to_json(r, timing);
    if (!path.empty()) write_json_file(path, j);
    if (json)
      out << j.dump(2) << '\n';
    else
      print_report(out, r);
    return exit_code(r.status);
  }
};

template <class F>
int run_massey(Sink& sink, const std::string& mode, const SimplicialComplex& k, const std::vector<MonomialSpec>& specs,
               long long budget) {
  Koszul<F> alg(k, 64);
  auto a = monomial_reps(alg, specs);
  MasseyReport<F> rep;
  if (mode == "triple") {
    rep = triple_massey(alg, a);
  } else if constexpr (std::is_same_v<F, F2>) {
    rep = kfold_f2(alg, a, budget);
  } else {
    invalid_input("kfold runs over f2");
  }
  Json j = to_json(rep);
  Json cls = Json::array();
  for (const auto& s : specs) cls.push_back(to_json(s));
  j["classes"] = cls;
  std::string text = "classes:";
  for (const auto& s : specs) text += " " + s.label;
  text += "\ndefined: " + std::string(rep.defined ? "yes" : "no") +
          "\nstrictly defined: " + (rep.strictly_defined ? "yes" : "no") + "\ntrivial: " + triviality_name(rep.trivial) +
          "\nvalue degree: " + std::to_string(2 * popcount(rep.J) - rep.h) + " in multidegree " + mask_to_string(rep.J) +
          "\nvalues: " + std::to_string(rep.values.size()) + "\n";
  if (!rep.note.empty()) text += "note: " + rep.note + "\n";
  sink.data(j, text);
  return rep.trivial == Triviality::Unknown ? 2 : 0;
}

std::vector<MonomialSpec> parse_classes(const std::string& spec, int m) {
  Json j;
  if (!spec.empty() && spec.front() == '[') {
    try {
      j = Json::parse(spec);
    } catch (const nlohmann::json::parse_error& e) {
      invalid_input(std::string("--classes: ") + e.what());
    }
  } else {
    j = read_json_file(spec);
  }
  if (!j.is_array()) invalid_input("--classes must be a JSON array");
  std::vector<MonomialSpec> out;
  for (const auto& x : j) out.push_back(monomial_from_json(x, m));
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nestohedra, the ring of polytopes and Massey products in moment-angle complexes", "nesto"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Sink sink{out, false, "", true};
  int threads = 1;
  std::string replay_path;
  bool no_timing = false;
  app.add_flag("--json", sink.json, "Print JSON instead of text");
  app.add_option("--out", sink.path, "Also write the JSON result to PATH");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--replay", replay_path, "Rerun every item of a saved report");
  app.add_flag("--no-timing", no_timing, "Omit timings from JSON reports");

  std::string family, field = "q", in_path, graph, restrict_s, contract_s, dims, identity, complex_path, complex_name,
                      classes, mode, kind;
  int dim = -1, vertices = 0, order_q = 0, order_x = 6, degree = 3;
  long long budget = 1 << 20;
  bool validate_only = false, generic = false, verify = false, hochster = false, betti = false, closed = false;

  auto* bs = app.add_subcommand("buildset", "Building sets: standard families, graphs, restriction, contraction");
  bs->add_option("--family", family, "simplex, cube, mas, gamma, pe, st, as or cy");
  bs->add_option("--dim", dim, "Dimension n (ground set [n+1])");
  bs->add_option("--graph", graph, "complete, path, star or cycle");
  bs->add_option("--vertices", vertices, "Vertex count for --graph");
  bs->add_option("--in", in_path, "Building set JSON");
  bs->add_option("--restrict", restrict_s, "Restrict to the labels, e.g. 1,2,5");
  bs->add_option("--contract", contract_s, "Contract the labels");
  bs->add_flag("--validate", validate_only, "Report building set conditions for --in");

  auto* cx = app.add_subcommand("complex", "Nested set complexes and nerves");
  cx->add_option("kind", kind, "nested, q or info")->required()->check(CLI::IsMember({"nested", "q", "info"}));
  cx->add_option("--family", family, "Family of the building set");
  cx->add_option("--dim", dim, "Dimension");
  cx->add_option("--in", in_path, "Building set JSON (nested) or complex JSON (info)");
  cx->add_option("--field", field, "q or f2");

  auto* bd = app.add_subcommand("boundary", "Boundary operator on the ring of polytopes");
  bd->add_option("--family", family, "Family");
  bd->add_option("--dim", dim, "Dimension");
  bd->add_option("--in", in_path, "Building set JSON; uses the generic boundary");
  bd->add_flag("--generic", generic, "Classify the boundary of the building set instead of the formula");
  bd->add_flag("--verify", verify, "Compare generic and formula boundaries");
  bd->add_option("--dims", dims, "Range A..B for --verify");

  auto* se = app.add_subcommand("series", "Generating series and their differential identities");
  se->add_option("--family", family, "pe, st, gamma or mas");
  se->add_option("--identity", identity, "dPe, dSt, dGamma_1p, dMas_1p, pe_cauchy, st_cauchy, gamma_cauchy, mas_cauchy");
  se->add_flag("--verify", verify, "Check every identity and the closed forms");
  se->add_flag("--closed-form", closed, "Expand the closed form instead of the series");
  se->add_option("--order-q", order_q, "Order in q (0 for one variable)")->check(CLI::NonNegativeNumber);
  se->add_option("--order-x", order_x, "Order in x")->check(CLI::NonNegativeNumber);

  auto* co = app.add_subcommand("cohomology", "Bigraded cohomology of moment-angle complexes");
  co->add_option("--complex", complex_path, "Complex JSON");
  co->add_option("--name", complex_name, "polygon:N, simplex_boundary:N, q:N or nested:FAMILY:N");
  co->add_option("--family", family, "Family of a nested complex");
  co->add_option("--dim", dim, "Dimension");
  co->add_option("--field", field, "q or f2");
  co->add_flag("--hochster", hochster, "Compare with full-subcomplex cohomology");
  co->add_flag("--betti", betti, "Total Betti numbers only");

  auto* ma = app.add_subcommand("massey", "Massey products of multigraded classes");
  ma->add_option("mode", mode, "triple, kfold, scan or family")->required()->check(
      CLI::IsMember({"triple", "kfold", "scan", "family"}));
  ma->add_option("--complex", complex_path, "Complex JSON");
  ma->add_option("--name", complex_name, "Named complex");
  ma->add_option("--classes", classes, "JSON array of {J, tau} (1-based) inline or as a file");
  ma->add_option("--family", family, "q or mas: use the canonical classes of that family");
  ma->add_option("--dim", dim, "Dimension for --family");
  ma->add_option("--field", field, "q or f2");
  ma->add_option("--budget", budget, "Partial defining systems to visit")->check(CLI::PositiveNumber);
  ma->add_option("--degree", degree, "Class degree for scan");
  ma->add_option("--dims", dims, "Range A..B for family");

  auto* va = app.add_subcommand("verify-all", "Run every verification suite");
  va->add_option("--dims", dims, "Dimension range A..B (default 2..4)");
  va->add_option("--order-q", order_q, "Order in q (default 4)");
  va->add_option("--order-x", order_x, "Order in x (default 6)");
  va->add_option("--budget", budget, "Massey search budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }
  sink.timing = !no_timing;

  try {
    if (!replay_path.empty()) return sink.report(replay(read_json_file(replay_path)));

    if (*bs) {
      if (validate_only) {
        if (in_path.empty()) invalid_input("--validate needs --in");
        auto j = read_json_file(in_path);
        int ground = j.at("ground").get<int>();
        std::vector<Mask> sets;
        for (const auto& s : j.at("sets")) sets.push_back(mask_from_json(s, ground));
        auto rep = validate(sets, ground);
        Json vs = Json::array();
        std::string text = std::string(rep.is_building_set ? "building set" : "not a building set") +
                           (rep.is_connected ? ", connected\n" : ", not connected\n");
        for (const auto& v : rep.violations) {
          Json w = Json::array();
          for (Mask m : v.witness) w.push_back(mask_json(m));
          vs.push_back(Json{{"condition", v.condition}, {"witness", w}});
          text += "  violates " + v.condition + ":";
          for (Mask m : v.witness) text += " " + mask_to_string(m);
          text += "\n";
        }
        sink.data(Json{{"is_building_set", rep.is_building_set}, {"is_connected", rep.is_connected}, {"violations", vs}},
                  text);
        return rep.is_building_set ? 0 : 1;
      }
      BuildingSet b;
      if (!in_path.empty())
        b = buildset_from_json(read_json_file(in_path));
      else if (!graph.empty())
        b = graphical(named_graph(graph, vertices));
      else if (!family.empty() && dim >= 0)
        b = family_buildset(family, dim);
      else
        invalid_input("buildset needs --in, --graph with --vertices, or --family with --dim");
      if (!restrict_s.empty()) b = restriction(b, parse_labels(restrict_s, b.ground()));
      if (!contract_s.empty()) b = contraction(b, parse_labels(contract_s, b.ground()));
      sink.data(to_json(b), b.to_string() + "\n" + std::to_string(b.size()) + " members on [" +
                                std::to_string(b.ground()) + "], " + (b.connected() ? "connected" : "not connected") +
                                "\n");
      return 0;
    }

    if (*cx) {
      SimplicialComplex k;
      if (kind == "nested") {
        BuildingSet b = !in_path.empty() ? buildset_from_json(read_json_file(in_path)) : family_buildset(family, dim);
        k = nested_complex(b);
      } else if (kind == "q") {
        k = q_complex(dim);
      } else if (!in_path.empty()) {
        k = complex_from_json(read_json_file(in_path));
      } else {
        k = named_complex(family == "q" ? "q:" + std::to_string(dim) : "nested:" + family + ":" + std::to_string(dim));
      }
      auto counts = k.face_counts();
      std::string text = std::to_string(k.m()) + " vertices, " + std::to_string(k.facets().size()) + " facets, dimension " +
                         std::to_string(k.dim()) + "\n";
      Json j = to_json(k);
      if (kind == "info") {
        auto fd = face_data(k);
        auto rb = reduced_betti(k, parse_field(field));
        j["face_counts"] = counts;
        j["flag"] = is_flag(k);
        j["reduced_betti"] = rb;
        j["dehn_sommerville"] = fd.ds_symmetric;
        text += "face counts:";
        for (auto c : counts) text += " " + std::to_string(c);
        text += "\nflag: " + std::string(is_flag(k) ? "yes" : "no") + "\nreduced betti (" + field + "):";
        for (auto x : rb) text += " " + std::to_string(x);
        text += "\n";
      }
      sink.data(j, text);
      return 0;
    }

    if (*bd) {
      if (verify) {
        Range r = dims.empty() ? Range{dim, dim} : parse_range(dims);
        return sink.report(verify_boundary(parse_family(family), r.lo, r.hi));
      }
      RingElem e;
      if (!in_path.empty())
        e = canonicalize(d_nestohedron(buildset_from_json(read_json_file(in_path))));
      else if (generic)
        e = canonicalize(d_nestohedron(family_buildset(family, dim)));
      else
        e = d_symbol(Symbol::named(parse_family(family), dim));
      sink.data(to_json(e), e.to_string() + "\n");
      return 0;
    }

    if (*se) {
      if (verify) {
        SuiteOptions o;
        if (se->count("--order-q")) o.order_q = order_q;
        if (se->count("--order-x")) o.order_x = order_x;
        o.threads = threads;
        return sink.report(series_report(o));
      }
      if (!identity.empty()) {
        auto rep = verify_pde(parse_identity(identity), order_q, order_x);
        std::string text = identity + " to q^" + std::to_string(order_q) + " x^" + std::to_string(order_x) + ": " +
                           (rep.ok() ? "zero residual" : rep.partial ? "undecided" : "nonzero residual") + "\n";
        for (const auto& x : rep.residuals)
          text += "  q^" + std::to_string(x.q) + " x^" + std::to_string(x.x) + "  " + x.value.to_string() + "\n";
        sink.data(to_json(rep), text);
        return rep.ok() ? 0 : rep.partial ? 2 : 1;
      }
      Family f = parse_family(family);
      Series s = closed ? closed_form(f, order_q, order_x)
                        : order_q > 0 ? two_param(f, order_q, order_x) : build_series(f, order_x);
      sink.data(to_json(s), s.to_string() + "\n");
      return 0;
    }

    auto load_complex = [&] {
      if (!complex_path.empty()) return complex_from_json(read_json_file(complex_path));
      if (!complex_name.empty()) return named_complex(complex_name);
      if (!family.empty() && dim >= 0)
        return named_complex(family == "q" ? "q:" + std::to_string(dim) : "nested:" + family + ":" + std::to_string(dim));
      invalid_input("give --complex, --name, or --family with --dim");
    };

    if (*co) {
      auto k = load_complex();
      Field fl = parse_field(field);
      if (hochster) {
        auto rep = hochster_check(k, fl, threads);
        sink.data(to_json(rep), std::to_string(rep.components) + " components compared, " +
                                    std::to_string(rep.mismatches.size()) + " mismatches\n");
        return rep.ok() ? 0 : 1;
      }
      if (betti) {
        auto b = betti_za(k, fl, threads);
        std::string text;
        for (auto x : b) text += std::to_string(x) + " ";
        sink.data(Json{{"betti", b}}, text + "\n");
        return 0;
      }
      auto d = koszul_cohomology(k, fl, threads);
      std::string text = "total:";
      for (auto x : d.total) text += " " + std::to_string(x);
      text += "\n";
      for (const auto& e : d.entries)
        text += "  H^{-" + std::to_string(e.i) + "," + std::to_string(2 * popcount(e.J)) + "} J=" + mask_to_string(e.J) +
                "  dim " + std::to_string(e.dim) + "\n";
      sink.data(to_json(d), text);
      return 0;
    }

    if (*ma) {
      Field fl = parse_field(field);
      if (mode == "family") {
        SuiteOptions o;
        if (!dims.empty()) {
          Range r = parse_range(dims);
          o.dim_lo = r.lo;
          o.dim_hi = r.hi;
        }
        o.budget = budget;
        o.threads = threads;
        return sink.report(massey_family_report(o));
      }
      if (mode == "scan") {
        auto scan = scan_triples(load_complex(), degree, fl, threads, 64);
        sink.data(to_json(scan), std::to_string(scan.classes) + " classes, " + std::to_string(scan.triples) +
                                     " triples, " + std::to_string(scan.defined) + " defined, " +
                                     std::to_string(scan.nontrivial) + " nontrivial\n");
        return 0;
      }
      SimplicialComplex k;
      std::vector<MonomialSpec> specs;
      if (!family.empty() && (classes.empty() || classes == "canonical")) {
        if (family != "q" && family != "mas") invalid_input("canonical classes exist for q and mas");
        ClassFamily fam = family == "q" ? canonical_classes_q(dim) : canonical_classes_mas(dim);
        k = fam.complex;
        specs = fam.classes;
      } else {
        if (classes.empty()) invalid_input("massey needs --classes or --family");
        k = load_complex();
        specs = parse_classes(classes, k.m());
      }
      if (fl == Field::F2) return run_massey<F2>(sink, mode, k, specs, budget);
      if (fl == Field::Q) return run_massey<Rational>(sink, mode, k, specs, budget);
      return run_massey<F3>(sink, mode, k, specs, budget);
    }

    if (*va) {
      SuiteOptions o;
      if (!dims.empty()) {
        Range r = parse_range(dims);
        o.dim_lo = r.lo;
        o.dim_hi = r.hi;
      }
      if (va->count("--order-q")) o.order_q = order_q;
      if (va->count("--order-x")) o.order_x = order_x;
      o.budget = budget;
      o.threads = threads;
      return sink.report(verify_all(o));
    }

    out << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidInput ? kUsage : 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nesto
