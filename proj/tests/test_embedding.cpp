#include <doctest.h>

#include <random>

#include "randcx/catalog.hpp"
#include "randcx/embedding.hpp"
#include "randcx/random_model.hpp"
#include "support.hpp"

using namespace randcx;
using testsupport::make;

TEST_CASE("embedding examples") {
  std::mt19937_64 rng(61);
  auto host = testsupport::random_complex(rng, 7, 0.3);
  REQUIRE(host.face_count() > 0);
  CHECK(embeds(single_triangle(), host));

  auto w = embeds(tetrahedron_boundary(), full_two_skeleton(4));
  REQUIRE(w);
  CHECK(is_valid_embedding(tetrahedron_boundary(), full_two_skeleton(4), *w));
  CHECK_FALSE(embeds(s_k(1).complex, tetrahedron_boundary()));

  CHECK_THROWS_AS(embeds(Complex2::from_triangles(3, std::vector<Triangle>{}), host), std::invalid_argument);
}

TEST_CASE("contains_any") {
  auto l12 = enumerate_l(1, 2);
  auto m = contains_any(s_k(1).complex, std::span<const PseudoSurface>(l12.members));
  REQUIRE(m);
  CHECK(l12.members[m->index].complex.incident_vertices().size() == 6);
  CHECK_FALSE(contains_any(single_triangle(), std::span<const PseudoSurface>(l12.members)));

  auto y = sample(ModelParams{8, 0.5, 99});
  bool brute = false;
  for (const auto& s : l12.members) brute = brute || testsupport::brute_embeds(s.complex, y);
  auto found = contains_any(y, std::span<const PseudoSurface>(l12.members));
  CHECK(found.has_value() == brute);
  if (found) CHECK(is_valid_embedding(l12.members[found->index].complex, y, found->witness));
}

TEST_CASE("embedding is sound and complete against the exhaustive oracle") {
  std::mt19937_64 rng(67);
  std::vector<Complex2> patterns;
  for (const auto& s : enumerate_l(1, 3).members) {
    if (s.complex.incident_vertices().size() <= 6) patterns.push_back(s.complex);
  }
  for (int i = 0; i < 10; ++i) patterns.push_back(testsupport::random_capped(rng, 6, 3, 2 + i % 5));

  std::size_t cases = 0, positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto host = testsupport::random_complex(rng, 7 + trial % 3, 0.2 + 0.1 * (trial % 4));
    for (const auto& p : patterns) {
      if (p.face_count() == 0) continue;
      const bool oracle = testsupport::brute_embeds(p, host);
      auto w = embeds(p, host);
      CHECK(w.has_value() == oracle);
      if (w) {
        CHECK(is_valid_embedding(p, host, *w));
        ++positives;
      }
      ++cases;
    }
  }
  CHECK(cases >= 200);
  CHECK(positives > 0);
  CHECK(positives < cases);
}

TEST_CASE("containment is inherited by supercomplexes") {
  auto l12 = complexes_of(enumerate_l(1, 2));
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    auto y = testsupport::random_complex(rng, 8, 0.25);
    auto z = testsupport::random_subcomplex(rng, y, 0.7);
    if (contains_any(z, std::span<const Complex2>(l12))) CHECK(contains_any(y, std::span<const Complex2>(l12)));
  }
}
