#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nesto/cohomology.hpp"

using namespace nesto;

namespace {

SimplicialComplex square() {
  return SimplicialComplex(4, {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({2, 3}), VertexSet::of({3, 0})});
}

SimplicialComplex two_points() { return SimplicialComplex(2, {VertexSet::of({0}), VertexSet::of({1})}); }

SimplicialComplex pe3() { return nested_complex(graphical(Graph::complete(4))); }

template <class F>
Cochain<F> random_cochain(const Koszul<F>& r, Mask J, int h, std::mt19937& rng) {
  Cochain<F> x = r.zero(J, h);
  std::uniform_int_distribution<int> c(-2, 2);
  for (auto& v : x.c) v = F(c(rng));
  return x;
}

template <class F>
bool same(const Cochain<F>& a, const Cochain<F>& b) {
  if (a.c.empty() || b.c.empty()) return a.is_zero() && b.is_zero();
  return a.J == b.J && a.h == b.h && a.c == b.c;
}

// Disjoint (J1, J2) pairs of a complex, sampled.
std::vector<std::pair<Mask, Mask>> disjoint_pairs(int m, std::mt19937& rng, int count) {
  std::vector<std::pair<Mask, Mask>> out;
  std::uniform_int_distribution<int> part(0, 2);
  for (int t = 0; t < count; ++t) {
    Mask a = 0, b = 0;
    for (int i = 0; i < m; ++i) {
      int p = part(rng);
      if (p == 1) a |= Mask{1} << i;
      if (p == 2) b |= Mask{1} << i;
    }
    out.push_back({a, b});
  }
  return out;
}

}  // namespace

TEST_CASE("Koszul differential squares to zero", "[cohomology][property]") {
  std::mt19937 rng(11);
  for (const auto& k : {square(), boundary_simplex(3), q_complex(3), nested_complex(standard(StdFamily::Mas, 3))}) {
    Koszul<Rational> r(k);
    for (Mask J = 0; J < (Mask{1} << k.m()); J += 7)
      for (int h = 2; h <= popcount(J); ++h) {
        auto x = random_cochain(r, J, h, rng);
        CHECK(r.d(r.d(x)).is_zero());
      }
    Koszul<F2> r2(k);
    for (Mask J = 0; J < (Mask{1} << k.m()); J += 5)
      for (int h = 2; h <= popcount(J); ++h) {
        auto x = random_cochain(r2, J, h, rng);
        CHECK(r2.d(r2.d(x)).is_zero());
      }
  }
}

TEST_CASE("Koszul product is an associative graded derivation algebra", "[cohomology][property]") {
  std::mt19937 rng(5);
  auto k = q_complex(3);
  Koszul<Rational> r(k);
  std::uniform_int_distribution<int> coin(0, 8);
  for (auto [a, b] : disjoint_pairs(k.m(), rng, 200)) {
    int ha = coin(rng) % (popcount(a) + 1), hb = coin(rng) % (popcount(b) + 1);
    auto x = random_cochain(r, a, ha, rng), y = random_cochain(r, b, hb, rng);
    // d(xy) = d(x) y + (-1)^{|x|} x d(y)
    auto lhs = r.d(r.mul(x, y));
    auto rhs = Koszul<Rational>::add(r.mul(r.d(x), y), Koszul<Rational>::scale(r.mul(x, r.d(y)), Rational(ha % 2 ? -1 : 1)));
    CHECK(same(lhs, rhs));
    // xy = (-1)^{|x||y|} yx
    auto xy = r.mul(x, y), yx = r.mul(y, x);
    CHECK(same(xy, Koszul<Rational>::scale(yx, Rational((ha * hb) % 2 ? -1 : 1))));
  }
  for (int t = 0; t < 100; ++t) {
    Mask a = 0, b = 0, c = 0;
    std::uniform_int_distribution<int> part(0, 3);
    for (int i = 0; i < k.m(); ++i) {
      int p = part(rng);
      (p == 1 ? a : p == 2 ? b : c) |= (p ? Mask{1} << i : 0);
    }
    auto x = random_cochain(r, a, popcount(a) / 2, rng);
    auto y = random_cochain(r, b, popcount(b) / 2, rng);
    auto z = random_cochain(r, c, (popcount(c) + 1) / 2, rng);
    CHECK(same(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z))));
  }
}

TEST_CASE("small moment-angle complexes", "[cohomology]") {
  // one missing edge: Z = S^3
  auto tp = koszul_cohomology(two_points(), Field::Q);
  CHECK(tp.total == std::vector<long long>{1, 0, 0, 1, 0});
  Koszul<Rational> r(two_points());
  CHECK(r.h_dim(0b11, 1) == 1);
  CHECK(r.class_of(r.monomial(0b11, 0b01)).coords == Vec<Rational>{1});

  std::vector<long long> sq{1, 0, 0, 2, 0, 0, 1, 0, 0};
  CHECK(koszul_cohomology(square(), Field::Q).total == sq);
  CHECK(koszul_cohomology(square(), Field::F2).total == sq);
  CHECK(betti_za(square(), Field::Q) == sq);
  CHECK(betti_za(q_complex(2), Field::F2) == sq);

  auto tri = koszul_cohomology(boundary_simplex(2), Field::Q).total;
  CHECK(tri == std::vector<long long>{1, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("sphere pattern for boundaries of simplices", "[cohomology]") {
  for (int n = 1; n <= 4; ++n) {
    auto b = betti_za(boundary_simplex(n), Field::Q);
    std::vector<long long> want(2 * (n + 1) + 1, 0);
    want[0] = 1;
    want[2 * n + 1] = 1;
    CHECK(b == want);
  }
}

TEST_CASE("Hochster decomposition matches the Koszul cohomology", "[cohomology][hochster]") {
  for (Field f : {Field::Q, Field::F2}) {
    for (const auto& k : {square(), boundary_simplex(3), q_complex(3), nested_complex(standard(StdFamily::Mas, 3)),
                          two_points()}) {
      auto rep = hochster_check(k, f, 2);
      CHECK(rep.ok());
      CHECK(rep.components > 0);
    }
  }
  // RP^2 separates the fields: six-vertex triangulation
  SimplicialComplex rp2(6, {VertexSet::of({0, 1, 2}), VertexSet::of({0, 2, 3}), VertexSet::of({0, 3, 4}),
                            VertexSet::of({0, 4, 5}), VertexSet::of({0, 5, 1}), VertexSet::of({1, 2, 4}),
                            VertexSet::of({2, 3, 5}), VertexSet::of({3, 4, 1}), VertexSet::of({4, 5, 2}),
                            VertexSet::of({5, 1, 3})});
  CHECK(hochster_check(rp2, Field::Q).ok());
  CHECK(hochster_check(rp2, Field::F2).ok());
  CHECK(koszul_cohomology(rp2, Field::Q).total != koszul_cohomology(rp2, Field::F2).total);
}

TEST_CASE("Hochster check on the permutohedron over F2", "[cohomology][hochster][slow]") {
  auto k = pe3();
  REQUIRE(k.m() == 14);
  auto rep = hochster_check(k, Field::F2, 4);
  CHECK(rep.ok());
  CHECK(rep.components > (1 << 14));
}

TEST_CASE("Koszul class dimensions agree with the rank computation", "[cohomology]") {
  auto k = q_complex(3);
  Koszul<Rational> r(k);
  auto dims = koszul_cohomology(k, Field::Q);
  long long sum = 0;
  for (const auto& e : dims.entries) {
    CHECK(r.h_dim(e.J, e.i) == e.dim);
    sum += e.dim;
  }
  long long total = 0;
  for (auto t : dims.total) total += t;
  CHECK(sum == total);
  // every basis representative is a cocycle and not a coboundary
  for (Mask J = 0; J < (Mask{1} << k.m()); J += 3)
    for (int h = 0; h <= popcount(J); ++h)
      for (const auto& rep : r.cohomology(J, h).reps) {
        Cochain<Rational> z{J, h, rep};
        CHECK(r.is_cocycle(z));
        CHECK_FALSE(r.bound(z).has_value());
      }
}

TEST_CASE("Poincare duality and Euler characteristic", "[cohomology][property]") {
  std::vector<SimplicialComplex> corpus{square(), boundary_simplex(3), q_complex(3), q_complex(4),
                                        nested_complex(standard(StdFamily::Mas, 3)), pe3(),
                                        nested_complex(graphical(Graph::cycle(4)))};
  for (const auto& k : corpus) {
    auto b = betti_za(k, Field::Q, 4);
    int m = k.m(), n = k.dim() + 1;
    for (int p = 0; p <= m + n; ++p) CHECK(b[p] == b[m + n - p]);
    for (int p = m + n + 1; p < static_cast<int>(b.size()); ++p) CHECK(b[p] == 0);
    long long chi = 0;
    for (std::size_t p = 0; p < b.size(); ++p) chi += (p % 2 ? -1 : 1) * b[p];
    if (m > n) CHECK(chi == 0);
  }
}

TEST_CASE("cup products", "[cohomology]") {
  auto k = square();
  Koszul<Rational> r(k);
  // [v1 u3] and [v2 u4] in 1-based labels
  auto a = r.class_of(r.monomial(0b0101, 0b0001));
  auto b = r.class_of(r.monomial(0b1010, 0b0010));
  REQUIRE_FALSE(a.is_zero());
  REQUIRE_FALSE(b.is_zero());
  auto ab = r.cup(a, b);
  CHECK(ab.J == 0b1111);
  CHECK(ab.total_degree() == 6);
  CHECK_FALSE(ab.is_zero());
  CHECK(r.h_dim(0b1111, 2) == 1);
  // the unit
  CohomClass<Rational> one{0, 0, {Rational(1)}};
  CHECK(r.cup(a, one).coords == a.coords);
  CHECK(r.cup(one, b).coords == b.coords);
  // overlapping multidegrees multiply to zero
  CHECK(r.cup(a, a).is_zero());
  // bilinearity and graded commutativity for odd classes
  CohomClass<Rational> a2 = a;
  a2.coords[0] *= 3;
  CHECK(r.cup(a2, b).coords[0] == 3 * ab.coords[0]);
  CHECK(r.cup(b, a).coords[0] == -ab.coords[0]);
}

TEST_CASE("split epimorphism witness", "[cohomology]") {
  auto k = square();
  auto rep = split_check(k, VertexSet::of({0, 2}), Field::Q);
  CHECK(rep.ok());
  CHECK(rep.components == 1 + 2 + 2 + 3);
  CHECK(split_check(k, VertexSet::range(4), Field::Q).ok());

  // full subcomplexes of nested complexes on restrictions B|_S
  for (int n : {3, 4}) {
    auto b = standard(StdFamily::Mas, n);
    auto k2 = nested_complex(b);
    auto verts = nested_vertices(b);
    for (Mask s : b.sets()) {
      if (s == b.full() || popcount(s) < 2) continue;
      VertexSet j;
      for (std::size_t v = 0; v < verts.size(); ++v)
        if ((verts[v] & ~s) == 0) j.insert(static_cast<int>(v));
      INFO(mask_to_string(s));
      CHECK(split_check(k2, j, Field::F2).ok());
    }
  }
}

TEST_CASE("connectivity of moment-angle complexes", "[cohomology]") {
  CHECK(connectivity(two_points(), Field::Q) == 2);
  CHECK(connectivity(square(), Field::Q) == 2);
  CHECK(connectivity(multiwedge(q_complex(2), {2, 2, 2, 2}), Field::Q) >= 3);
  for (const auto& k : {q_complex(3), pe3(), boundary_simplex(3)}) CHECK(connectivity(k, Field::F2) >= 2);
}

TEST_CASE("size limit", "[cohomology]") {
  auto k = nested_complex(standard(StdFamily::Mas, 6));
  REQUIRE(k.m() > kDefaultMaxVertices);
  CHECK_THROWS_AS(koszul_cohomology(k, Field::F2), Error);
  CHECK_THROWS_AS(Koszul<F2>(k), Error);
}
