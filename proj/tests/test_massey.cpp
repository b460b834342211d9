#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nesto/massey.hpp"

using namespace nesto;

namespace {

template <class F>
std::vector<Cochain<F>> reps_of(const Koszul<F>& r, const ClassFamily& fam) {
  return monomial_reps(r, fam.classes);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<VertexSet> facets;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      VertexSet u = f;
      g.for_each([&](int v) { u.insert(v + a.m()); });
      facets.push_back(u);
    }
  return SimplicialComplex(a.m() + b.m(), facets);
}

// Every witness entry satisfies d c_ij = Σ c̄_ir c_rj and the value is -Σ c̄_0r c_rk.
template <class F>
bool check_defining_system(const Koszul<F>& r, const std::vector<Cochain<F>>& a, const MasseyReport<F>& rep) {
  int k = static_cast<int>(a.size());
  std::map<std::pair<int, int>, Cochain<F>> c;
  for (int i = 0; i < k; ++i) c[{i, i + 1}] = a[i];
  for (const auto& w : rep.witness) c[{w.i, w.j}] = w.c;
  auto sum = [&](int i, int j) {
    Cochain<F> t;
    for (int m = i + 1; m < j; ++m) t = Koszul<F>::add(t, r.mul(Koszul<F>::bar(c.at({i, m})), c.at({m, j})));
    return t;
  };
  for (const auto& w : rep.witness) {
    auto lhs = r.d(w.c), rhs = sum(w.i, w.j);
    if (lhs.c != rhs.c) return false;
  }
  auto v = Koszul<F>::scale(sum(0, k), F(-1));
  return v.c == rep.witness_value.c && r.is_cocycle(v);
}

}  // namespace

TEST_CASE("canonical classes are nonzero degree-3 classes", "[massey]") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& fam : {canonical_classes_q(n), canonical_classes_mas(n)}) {
      Koszul<Rational> r(fam.complex);
      REQUIRE(static_cast<int>(fam.classes.size()) == n);
      Mask seen = 0;
      for (const auto& c : fam.classes) {
        auto z = r.monomial(c.J, c.tau);
        CHECK(popcount(c.J) == 2);
        CHECK(z.h == 1);
        CHECK(z.total_degree() == 3);
        CHECK(r.is_cocycle(z));
        CHECK_FALSE(r.class_of(z).is_zero());
        CHECK((seen & c.J) == 0);
        seen |= c.J;
      }
    }
  }
  // on the square the two classes multiply to the top class
  auto fam = canonical_classes_q(2);
  Koszul<Rational> r(fam.complex);
  auto a = reps_of(r, fam);
  auto prod = r.class_of(r.mul(a[0], a[1]));
  CHECK(prod.total_degree() == 6);
  CHECK_FALSE(prod.is_zero());
  CHECK(fam.classes[0].label == "v1u3");
}

TEST_CASE("triple products of canonical classes are nontrivial", "[massey]") {
  for (const auto& fam : {canonical_classes_q(3), canonical_classes_mas(3)}) {
    Koszul<Rational> r(fam.complex);
    auto a = reps_of(r, fam);
    auto rep = triple_massey(r, a);
    CHECK(rep.defined);
    CHECK(rep.strictly_defined);
    CHECK(rep.trivial == Triviality::No);
    CHECK(check_defining_system(r, a, rep));
    // value degree: 3+3+3-3+2 = 8 in the union multidegree
    CHECK(rep.J == (a[0].J | a[1].J | a[2].J));
    CHECK(2 * popcount(rep.J) - rep.h == 8);

    // scaling the classes keeps the product nontrivial
    std::vector<Cochain<Rational>> scaled{Koszul<Rational>::scale(a[0], Rational(2)),
                                          Koszul<Rational>::scale(a[1], Rational(-3)),
                                          Koszul<Rational>::scale(a[2], Rational(1, 5))};
    CHECK(triple_massey(r, scaled).trivial == Triviality::No);

    Koszul<F2> r2(fam.complex);
    auto a2 = reps_of(r2, fam);
    CHECK(triple_massey(r2, a2).trivial == Triviality::No);
  }
}

TEST_CASE("triple products that are not defined or overlap", "[massey]") {
  auto sq = canonical_classes_q(2);
  auto k = join(sq.complex, sq.complex);
  Koszul<Rational> r(k);
  auto a = r.monomial(0b0101, 0b0001), b = r.monomial(0b1010, 0b0010), c = r.monomial(0b01010000, 0b00010000);
  auto rep = triple_massey(r, {a, b, c});
  CHECK_FALSE(rep.defined);
  auto over = triple_massey(r, {a, b, a});
  CHECK(over.defined);
  CHECK(over.trivial == Triviality::Yes);
}

TEST_CASE("F2 search agrees with the exact triple product", "[massey]") {
  for (const auto& fam : {canonical_classes_q(3), canonical_classes_mas(3)}) {
    Koszul<F2> r(fam.complex);
    auto a = reps_of(r, fam);
    auto exact = triple_massey(r, a);
    auto search = kfold_f2(r, a);
    CHECK(search.defined);
    CHECK(search.trivial == exact.trivial);
    CHECK(check_defining_system(r, a, search));
    // the value set is the coset value + indeterminacy
    int dim = r.h_dim(exact.J, exact.h);
    int ind = exact.indeterminacy.empty() ? 0 : rank(Matrix<F2>::from_columns(dim, exact.indeterminacy));
    CHECK(search.values.size() == (std::size_t{1} << ind));
    for (const auto& v : search.values) {
      Vec<F2> diff = v;
      for (int i = 0; i < dim; ++i) diff[i] -= exact.values[0][i];
      CHECK(detail::in_span(exact.indeterminacy, diff, dim));
    }
  }
}

TEST_CASE("two-fold products degenerate to the cup product", "[massey]") {
  auto fam = canonical_classes_q(3);
  Koszul<F2> r(fam.complex);
  auto a = reps_of(r, fam);
  auto rep = kfold_f2(r, {a[0], a[1]});
  CHECK(rep.defined);
  REQUIRE(rep.values.size() == 1);
  CHECK(rep.values[0] == r.class_of(r.mul(a[0], a[1])).coords);
  auto sq = canonical_classes_q(2);
  Koszul<F2> rs(sq.complex);
  auto b = reps_of(rs, sq);
  auto two = kfold_f2(rs, b);
  CHECK(two.trivial == Triviality::No);
}

TEST_CASE("four-fold products of canonical classes", "[massey][slow]") {
  for (const auto& fam : {canonical_classes_q(4), canonical_classes_mas(4)}) {
    Koszul<F2> r(fam.complex);
    auto a = reps_of(r, fam);
    auto rep = kfold_f2(r, a);
    INFO(rep.note);
    CHECK(rep.defined);
    CHECK(rep.strictly_defined);
    CHECK(rep.trivial == Triviality::No);
    CHECK(check_defining_system(r, a, rep));
    CHECK(rep.J == (a[0].J | a[1].J | a[2].J | a[3].J));
    CHECK(2 * popcount(rep.J) - rep.h == 4 * 3 - 4 + 2);
  }
}

TEST_CASE("value sets do not depend on representatives", "[massey][property]") {
  auto fam = canonical_classes_q(3);
  Koszul<F2> r(fam.complex);
  auto a = reps_of(r, fam);
  auto base = kfold_f2(r, a);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    auto b = a;
    for (auto& x : b) {
      Cochain<F2> y = r.zero(x.J, x.h + 1);
      for (auto& v : y.c) v = F2(static_cast<long long>(rng() & 1));
      x = Koszul<F2>::add(x, r.d(y));
    }
    auto moved = kfold_f2(r, b);
    CHECK(moved.values == base.values);
    CHECK(moved.trivial == base.trivial);
  }
}

TEST_CASE("search budget", "[massey]") {
  auto fam = canonical_classes_q(4);
  Koszul<F2> r(fam.complex);
  auto rep = kfold_f2(r, reps_of(r, fam), 4);
  CHECK(rep.trivial == Triviality::Unknown);
  CHECK(rep.note.find("budget") != std::string::npos);
}

TEST_CASE("triple scans", "[massey]") {
  auto sq = scan_triples(canonical_classes_q(2).complex, 3, Field::Q);
  CHECK(sq.classes == 2);
  CHECK(sq.triples == 8);
  CHECK(sq.nontrivial == 0);

  auto p3 = scan_triples(nested_complex(standard(StdFamily::Mas, 3)), 3, Field::Q, 2);
  CHECK(p3.nontrivial >= 1);
  CHECK(p3.defined >= p3.nontrivial + p3.trivial - p3.overlapping);
}

TEST_CASE("permutohedron triple products are trivial", "[massey][slow]") {
  auto k = nested_complex(graphical(Graph::complete(4)));
  auto scan = scan_triples(k, 3, Field::F2, 4);
  CHECK(scan.classes > 0);
  CHECK(scan.nontrivial == 0);
  CHECK(scan.defined > scan.overlapping);
}

TEST_CASE("restriction to an embedded face carries products to products", "[massey]") {
  auto e = mas_embedding(4, 3);
  CHECK(e.s == mask_of({1, 2, 3, 5}));
  REQUIRE(e.big.classes.size() == 3);
  CHECK(e.big.classes[2].label == "v{1,2,3}u{5}");

  Koszul<Rational> big(e.big.complex), small(e.small.complex);
  auto b = reps_of(big, e.big), a = reps_of(small, e.small);
  for (std::size_t i = 0; i < 3; ++i) CHECK(transfer(big, small, b[i], e.vertex_map).c == a[i].c);

  // products
  for (int i = 0; i + 1 < 3; ++i) {
    auto pb = transfer(big, small, big.mul(b[i], b[i + 1]), e.vertex_map);
    CHECK(small.class_of(pb).coords == small.class_of(small.mul(a[i], a[i + 1])).coords);
  }
  // triple products over Q: transferred value lies in the small coset
  auto tb = triple_massey(big, b), ta = triple_massey(small, a);
  REQUIRE(tb.defined);
  REQUIRE(ta.defined);
  CHECK(tb.trivial == Triviality::No);
  auto moved = small.class_of(transfer(big, small, tb.witness_value, e.vertex_map)).coords;
  int dim = small.h_dim(ta.J, ta.h);
  Vec<Rational> diff = moved;
  for (int i = 0; i < dim; ++i) diff[i] -= ta.values[0][i];
  CHECK(detail::in_span(ta.indeterminacy, diff, dim));

  // F2 value sets agree exactly
  Koszul<F2> big2(e.big.complex), small2(e.small.complex);
  auto b2 = reps_of(big2, e.big), a2 = reps_of(small2, e.small);
  auto vb = kfold_f2(big2, b2), va = kfold_f2(small2, a2);
  std::set<Vec<std::uint32_t>> moved_set, small_set;
  for (const auto& v : vb.values) {
    auto z = big2.representative(CohomClass<F2>{vb.J, vb.h, v});
    Vec<std::uint32_t> key;
    for (auto x : small2.class_of(transfer(big2, small2, z, e.vertex_map)).coords) key.push_back(x.v);
    moved_set.insert(key);
  }
  for (const auto& v : va.values) {
    Vec<std::uint32_t> key;
    for (auto x : v) key.push_back(x.v);
    small_set.insert(key);
  }
  CHECK(moved_set == small_set);
  CHECK(vb.trivial == Triviality::No);
}
