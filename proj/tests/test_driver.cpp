#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nesto/driver.hpp"

using namespace nesto;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nesto");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "nesto_test_" + name; }

const Report* find(const Report& r, const std::string& claim) {
  if (r.claim == claim) return &r;
  for (const auto& x : r.items)
    if (auto p = find(x, claim)) return p;
  return nullptr;
}

}  // namespace

TEST_CASE("building sets and complexes survive a JSON round trip", "[driver][json]") {
  for (auto b : {standard(StdFamily::Mas, 3), graphical(Graph::cycle(5)), standard(StdFamily::Gamma, 2)}) {
    Json j = to_json(b);
    CHECK(buildset_from_json(Json::parse(j.dump())) == b);
    auto k = nested_complex(b);
    auto k2 = complex_from_json(Json::parse(to_json(k).dump()));
    CHECK(k2 == k);
    CHECK(k2.labels() == k.labels());
  }
  auto j = to_json(standard(StdFamily::Mas, 2));
  CHECK(j.dump() == R"({"ground":3,"sets":[[1],[2],[3],[1,2],[1,2,3]]})");
  auto sq = to_json(q_complex(2));
  CHECK(sq["m"] == 4);
  CHECK(sq["facets"].size() == 4);
}

TEST_CASE("malformed JSON input is rejected with a diagnostic", "[driver][json]") {
  CHECK_THROWS_AS(buildset_from_json(Json::parse(R"({"ground":2,"sets":[[1],[1,2]]})")), Error);  // {2} missing
  CHECK_THROWS_AS(buildset_from_json(Json::parse(R"({"ground":2,"sets":[[1],[3]]})")), Error);
  CHECK_THROWS_AS(buildset_from_json(Json::parse(R"({"sets":[[1]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"m":2,"facets":[[1,5]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"m":"x","facets":[]})")), Error);

  auto path = temp_path("broken.json");
  std::ofstream(path) << "{\"ground\": 3,\n \"sets\": [[1], [2],, ]}";
  try {
    read_json_file(path);
    FAIL("parse should fail");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find(path) != std::string::npos);
    CHECK(what.find("line 2") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("ring elements round trip through JSON", "[driver][json]") {
  RingElem e = d_symbol(Symbol::named(Family::Pe, 3));
  Json j = to_json(e);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"] == "8");
  CHECK(ring_elem_from_json(Json::parse(j.dump())) == e);
  RingElem f = RingElem::of(Symbol::named(Family::Mas, 3), Rational(3, 4)) + RingElem::unit();
  CHECK(ring_elem_from_json(to_json(f)) == f);
  auto opaque = to_json(d_nestohedron(standard(StdFamily::Mas, 3)));
  CHECK_THROWS_AS(ring_elem_from_json(opaque), Error);
}

TEST_CASE("boundary verification", "[driver]") {
  for (auto [f, hi] : {std::pair{Family::Mas, 4}, {Family::Gamma, 4}, {Family::Pe, 5}, {Family::St, 5}}) {
    auto r = verify_boundary(f, 2, hi);
    INFO(family_name(f));
    CHECK(r.status == Status::Pass);
    CHECK(static_cast<int>(r.items.size()) == hi - 1);
  }
  auto pe3 = verify_boundary(Family::Pe, 3, 3).items.at(0);
  CHECK(pe3.witness["family_formula"] == "8Pe^2 + 6Pe^1*Pe^1");
  CHECK(pe3.witness["formula"] == "8Pe^2 + 6I*I");
  CHECK(pe3.witness["facets"] == "14");
  // no family formula for associahedra: reported as undecided, never as a pass
  CHECK(verify_boundary(Family::As, 3, 3).status == Status::Unknown);
}

TEST_CASE("direct family witnesses", "[driver]") {
  auto mas = verify_direct_family(Family::Mas, 2, 5);
  CHECK(mas.status == Status::Pass);
  // every witness restricts to the smaller member, and the split check ran where small enough
  for (const auto& n : mas.witness)
    for (const auto& w : n["witnesses"]) {
      CHECK(w["found"] == true);
      CHECK(w["full_subcomplex_matches"] == true);
      if (w["J_size"].get<int>() <= 16) CHECK(w["split_ok"] == true);
    }
  CHECK(verify_direct_family(Family::Pe, 2, 5).status == Status::Pass);
  CHECK(verify_direct_family(Family::Cube, 2, 5).status == Status::Pass);

  auto simplex = verify_direct_family(Family::Simplex, 2, 4);
  CHECK(simplex.status == Status::Fail);
  for (const auto& n : simplex.witness)
    for (const auto& w : n["witnesses"]) {
      CHECK(w["found"] == false);
      CHECK(w["candidates"].empty());
    }
  // induced subgraphs of a cycle are paths
  auto cy = verify_direct_family(Family::Cy, 2, 4);
  CHECK(cy.status == Status::Fail);
  CHECK_FALSE(cy.witness[1]["witnesses"][0]["candidates"].empty());
}

TEST_CASE("contraction counterexample", "[driver]") {
  auto r = contraction_counterexample();
  CHECK(r.status == Status::Pass);
  CHECK(r.witness["edge_in_N_B"] == true);
  CHECK(r.witness["edge_in_N_quotient"] == false);
  CHECK(r.witness["quotient_cap_B"] == Json::parse("[[2],[4],[5]]"));
  CHECK(r.witness["N_quotient_on_pair"]["facets"] == Json::parse("[[1],[2]]"));
  CHECK(r.witness["N_B_on_pair"]["facets"] == Json::parse("[[1,2]]"));
}

TEST_CASE("report status arithmetic and expectation flips", "[driver]") {
  CHECK(combine(Status::Pass, Status::Unknown) == Status::Unknown);
  CHECK(combine(Status::Unknown, Status::Fail) == Status::Fail);
  CHECK(exit_code(Status::Pass) == 0);
  CHECK(exit_code(Status::Fail) == 1);
  CHECK(exit_code(Status::Unknown) == 2);

  Json wrong{{"kind", "complexity"}, {"family", "pe"}, {"max_dim", 5}, {"closure", {"pe", "as"}}};
  auto r = run_item(wrong);
  CHECK(r.status == Status::Fail);
  CHECK(r.witness["closure"] == Json::parse(R"(["pe"])"));
  wrong["expect"] = "fail";
  auto flipped = run_item(wrong);
  CHECK(flipped.status == Status::Pass);
  CHECK(flipped.claim == "not complexity/pe");
  CHECK_THROWS_AS(run_item(Json{{"kind", "nonsense"}}), Error);
}

TEST_CASE("failing reports replay to the same verdict", "[driver]") {
  Report top;
  top.claim = "mixed";
  top.add(run_item(Json{{"kind", "boundary"}, {"family", "mas"}, {"n", 3}}));
  top.add(run_item(Json{{"kind", "complexity"}, {"family", "st"}, {"max_dim", 5}, {"closure", {"st"}}}));
  REQUIRE(top.status == Status::Fail);
  auto again = replay(to_json(top));
  REQUIRE(again.items.size() == 2);
  CHECK(again.items[0].status == Status::Pass);
  CHECK(again.items[1].status == Status::Fail);
  CHECK(again.items[1].witness == top.items[1].witness);
  CHECK(report_from_json(to_json(top)).items.size() == 2);
}

TEST_CASE("results do not depend on the worker count", "[driver][property]") {
  SuiteOptions o;
  o.dim_lo = 2;
  o.dim_hi = 3;
  o.order_q = 2;
  o.order_x = 4;
  o.threads = 1;
  auto one = to_json(verify_all(o), false);
  o.threads = 3;
  auto three = to_json(verify_all(o), false);
  CHECK(one == three);
  CHECK(one["status"] == "pass");
  CHECK(to_json(verify_all(o), false) == three);
}

TEST_CASE("named complexes", "[driver]") {
  CHECK(named_complex("polygon:4").m() == 4);
  CHECK(named_complex("simplex_boundary:3").facets().size() == 4);
  CHECK(named_complex("q:3").m() == 8);
  CHECK(named_complex("nested:pe:3").m() == 14);
  CHECK(named_complex("nested:q:2").m() == 4);
  CHECK_THROWS_AS(named_complex("polygon"), Error);
  CHECK_THROWS_AS(named_complex("polygon:x"), Error);
  CHECK_THROWS_AS(named_complex("nested:pe"), Error);
}

TEST_CASE("command line examples", "[driver][cli]") {
  auto b = cli({"boundary", "--family", "pe", "--dim", "3"});
  CHECK(b.code == 0);
  CHECK(b.out == "8Pe^2 + 6Pe^1*Pe^1\n");

  auto path = temp_path("k.json");
  auto c = cli({"complex", "nested", "--family", "mas", "--dim", "3", "--out", path});
  CHECK(c.code == 0);
  auto k = complex_from_json(read_json_file(path));
  CHECK(k.m() == 8);
  CHECK(k.m() == static_cast<int>(standard(StdFamily::Mas, 3).size()) - 1);

  // the triple product of the canonical classes, read back from the written complex
  auto fam = canonical_classes_mas(3);
  CHECK(k == fam.complex);
  Json cls = Json::array();
  for (const auto& s : fam.classes) cls.push_back(to_json(s));
  auto t = cli({"massey", "triple", "--complex", path, "--classes", cls.dump(), "--field", "q", "--json"});
  CHECK(t.code == 0);
  auto tj = Json::parse(t.out);
  CHECK(tj["trivial"] == "no");
  CHECK(tj["total_degree"] == 8);
  CHECK_FALSE(tj["witness"].empty());
  std::remove(path.c_str());

  auto kf = cli({"massey", "kfold", "--family", "q", "--dim", "4", "--field", "f2"});
  CHECK(kf.code == 0);
  CHECK(kf.out.find("trivial: no") != std::string::npos);
  CHECK(cli({"massey", "kfold", "--family", "q", "--dim", "4", "--field", "q"}).code == 64);

  auto bs = cli({"buildset", "--family", "mas", "--dim", "4", "--contract", "1,3", "--json"});
  CHECK(bs.code == 0);
  CHECK(Json::parse(bs.out)["sets"].size() == 6);

  auto s = cli({"series", "--identity", "dMas_1p", "--order-x", "6"});
  CHECK(s.code == 0);
  CHECK(s.out.find("zero residual") != std::string::npos);

  auto h = cli({"cohomology", "--name", "polygon:4", "--betti"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("1 0 0 2 0 0 1 ", 0) == 0);
}

TEST_CASE("command line exit codes", "[driver][cli]") {
  CHECK(cli({}).code == 64);
  CHECK(cli({"frobnicate"}).code == 64);
  CHECK(cli({"boundary", "--colour", "red"}).code == 64);
  CHECK(cli({"boundary", "--family", "nope", "--dim", "3"}).code == 64);
  CHECK(cli({"verify-all", "--dims", "4..2"}).code == 64);
  CHECK(cli({"--help"}).code == 0);
  auto missing = cli({"complex", "info", "--in", "no_such_file.json"});
  CHECK(missing.code == 64);
  CHECK(missing.err.find("no_such_file.json") != std::string::npos);

  auto va = cli({"verify-all", "--dims", "2..3", "--order-q", "2", "--order-x", "4", "--threads", "2"});
  CHECK(va.code == 0);
  CHECK(va.out.rfind("pass  verify-all", 0) == 0);

  // a failing report written with --out replays to exit status 1
  auto path = temp_path("fail.json");
  Report bad = run_item(Json{{"kind", "complexity"}, {"family", "gamma"}, {"max_dim", 5}, {"closure", {"gamma"}}});
  REQUIRE(bad.status == Status::Fail);
  write_json_file(path, to_json(bad));
  auto rp = cli({"--replay", path});
  CHECK(rp.code == 1);
  CHECK(rp.out.find("fail  complexity/gamma") != std::string::npos);
  std::remove(path.c_str());
}
