#include <doctest.h>

#include <random>

#include "randcx/catalog.hpp"
#include "randcx/isomorphism.hpp"
#include "support.hpp"

using namespace randcx;
using testsupport::make;

namespace {

bool is_valid_map(const Complex2& a, const Complex2& b, const VertexMap& f) {
  std::set<Triangle> target(b.triangles().begin(), b.triangles().end());
  std::set<Vertex> img;
  for (const auto& [x, y] : f) img.insert(y);
  if (img.size() != f.size()) return false;
  for (const auto& t : a.triangles()) {
    if (!f.count(t.a) || !f.count(t.b) || !f.count(t.c)) return false;
    if (!target.count(make_triangle(f.at(t.a), f.at(t.b), f.at(t.c)))) return false;
  }
  return a.face_count() == b.face_count();
}

}  // namespace

TEST_CASE("isomorphism examples") {
  auto tet = tetrahedron_boundary();
  auto moved = testsupport::relabel(make(6, testsupport::tris_of(tet)), {5, 3, 0, 1, 2, 4});
  auto f = are_isomorphic(tet, moved);
  REQUIRE(f);
  CHECK(is_valid_map(tet, moved, *f));
  CHECK_FALSE(are_isomorphic(tet, s_k(1).complex));

  auto a = make(5, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {0, 2, 4}});
  auto b = make(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 4}});
  CHECK(are_isomorphic(a, b).has_value() == testsupport::brute_isomorphic(a, b));
}

TEST_CASE("anchored isomorphism") {
  // Path of two triangles: the anchor must go to the matching end.
  auto c = make(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(are_isomorphic(c, c, std::pair{Triangle{0, 1, 2}, Triangle{1, 2, 3}}));
  auto d = make(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK_FALSE(are_isomorphic(d, d, std::pair{Triangle{0, 1, 2}, Triangle{1, 2, 3}}));
  CHECK_THROWS_AS(are_isomorphic(d, d, std::pair{Triangle{0, 1, 3}, Triangle{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("canonical form is a complete invariant on small complexes") {
  std::mt19937_64 rng(41);
  std::vector<Complex2> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(testsupport::random_capped(rng, 6, 3, 3 + i % 4));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    auto moved = testsupport::relabel(pool[i], testsupport::random_perm(rng, 6));
    CHECK(canonical_form(pool[i]) == canonical_form(moved));
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const bool brute = testsupport::brute_isomorphic(pool[i], pool[j]);
      CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == brute);
      CHECK(are_isomorphic(pool[i], pool[j]).has_value() == brute);
    }
  }
}

TEST_CASE("anchored canonical form puts the anchor first") {
  auto s2 = s_k(2).complex;
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    auto perm = testsupport::random_perm(rng, s2.n_vertices());
    auto moved = testsupport::relabel(s2, perm);
    Triangle anchor = make_triangle(perm[0], perm[1], perm[2]);
    auto cf = canonical_form(moved, anchor);
    CHECK(cf.anchored);
    CHECK(cf == canonical_form(s2, Triangle{0, 1, 2}));
    CHECK(std::binary_search(cf.triangles.begin(), cf.triangles.end(), Triangle{0, 1, 2}));
  }
}

TEST_CASE("isomorphism is an equivalence matching the brute-force oracle") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = 5 + trial % 4;  // up to 8 vertices
    auto a = testsupport::random_capped(rng, n, 2 + trial % 2, 2 + trial % 6);
    CHECK(are_isomorphic(a, a));
    auto b = testsupport::relabel(a, testsupport::random_perm(rng, n));
    auto f = are_isomorphic(a, b);
    REQUIRE(f);
    CHECK(is_valid_map(a, b, *f));
    CHECK(are_isomorphic(b, a));

    auto c = testsupport::random_capped(rng, n, 2 + trial % 2, a.face_count());
    const bool brute = testsupport::brute_isomorphic(a, c);
    CHECK(are_isomorphic(a, c).has_value() == brute);
    CHECK(are_isomorphic(c, a).has_value() == brute);
  }
}
