#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "revsc/monoid.hpp"
#include "revsc/transform.hpp"

using namespace revsc;

namespace {

Transformation random_transformation(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) img[std::size_t(q)] = 1 + oracles::pick(rng, n);
  return Transformation(img);
}

std::set<std::vector<int>> as_image_set(const std::vector<Transformation>& ts) {
  std::set<std::vector<int>> out;
  for (const auto& t : ts) {
    std::vector<int> v;
    for (int q = 1; q <= t.degree(); ++q) v.push_back(t(q));
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("close: basic invariants", "[quick]") {
  CHECK_THROWS_AS(close(std::span<const Transformation>{}),
                  std::invalid_argument);

  const auto m = close({Transformation{2, 1, 3}});
  CHECK(m.degree() == 3);
  CHECK(m.size() == 2);  // the swap and the identity
  CHECK(m.contains(Transformation::identity(3)));
  CHECK(m.contains(Transformation{2, 1, 3}));
  CHECK_FALSE(m.contains(Transformation{1, 1, 1}));

  // A single permutation generates a cyclic group of its order.
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + oracles::pick(rng, 7);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i)
      std::swap(img[std::size_t(i)], img[std::size_t(oracles::pick(rng, i + 1))]);
    const Permutation p(img);
    CHECK(close({Transformation(p)}).size() == permutation_order(p));
  }
}

TEST_CASE("close: matches a set-based closure on random generators", "[quick]") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + oracles::pick(rng, 3);  // degrees 2..4
    const int g = 1 + oracles::pick(rng, 3);
    std::vector<Transformation> gens;
    for (int i = 0; i < g; ++i) gens.push_back(random_transformation(rng, n));
    const auto m = close(std::span<const Transformation>(gens));
    const auto naive = oracles::naive_closure(gens);
    REQUIRE(m.size() == naive.size());
    CHECK(as_image_set(m.elements()) == naive);
    for (const auto& t : m.elements()) CHECK(m.contains(t));
  }
}

TEST_CASE("close: elements are sorted, distinct, and closed", "[quick]") {
  const auto [a, b] = v_n_generators(4);
  const auto m = close({Transformation(a), b});
  REQUIRE(m.size() == 176);
  const auto els = m.elements();
  REQUIRE(els.size() == m.size());
  for (std::size_t i = 0; i + 1 < els.size(); ++i) CHECK(els[i] != els[i + 1]);
  // Closure under composition, pairwise.
  for (const auto& s : els)
    for (const auto& t : els) CHECK(m.contains(compose(s, t)));
  // for_each visits exactly the elements.
  std::size_t count = 0;
  m.for_each([&](const Transformation& t) {
    CHECK(t == els[count]);
    ++count;
  });
  CHECK(count == m.size());
}

TEST_CASE("close: full transformation monoid reaches n^n", "[quick]") {
  std::uint64_t nn = 1;
  for (int n = 1; n <= 6; ++n) {
    nn = 1;
    for (int i = 0; i < n; ++i) nn *= static_cast<std::uint64_t>(n);
    const auto gens = full_tm_generators(n).list();
    CHECK(close(std::span<const Transformation>(gens)).size() == nn);
  }
}

TEST_CASE("tau_orbit: matches closure-then-compose and a naive orbit", "[quick]") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + oracles::pick(rng, 3);
    const int k = 1 + oracles::pick(rng, n);
    const int g = 1 + oracles::pick(rng, 2);
    std::vector<Transformation> gens;
    for (int i = 0; i < g; ++i) gens.push_back(random_transformation(rng, n));
    std::vector<int> outs(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) outs[std::size_t(q)] = 1 + oracles::pick(rng, k);
    const OutputMap tau(outs, k);

    const auto orbit = tau_orbit(std::span<const Transformation>(gens), tau);
    CHECK(orbit.contains(tau));

    // Independent set-based orbit.
    const auto naive = oracles::naive_tau_orbit(gens, tau);
    REQUIRE(orbit.size() == naive.size());

    // { tau . s : s in closure } computed through the monoid itself.
    std::set<std::vector<int>> via_monoid;
    close(std::span<const Transformation>(gens)).for_each([&](const Transformation& s) {
      const auto f = compose(tau, s);
      std::vector<int> v;
      for (int q = 1; q <= n; ++q) v.push_back(f(q));
      via_monoid.insert(v);
    });
    CHECK(via_monoid == naive);

    for (const auto& f : orbit.elements()) CHECK(orbit.contains(f));
  }
}

TEST_CASE("tau_orbit: full monoid reaches every map into the image", "[quick]") {
  // Under all of T_n a surjective tau reaches all k^n output maps.
  const auto gens = full_tm_generators(4).list();
  CHECK(tau_orbit(std::span<const Transformation>(gens),
                  OutputMap({1, 2, 1, 2}, 2))
            .size() == 16);
  CHECK(tau_orbit(std::span<const Transformation>(gens),
                  OutputMap({1, 2, 3, 1}, 3))
            .size() == 81);
}

TEST_CASE("tau_orbit: empty generator list yields the singleton orbit", "[quick]") {
  const OutputMap tau({1, 2}, 2);
  const auto orbit = tau_orbit(std::span<const Transformation>{}, tau);
  CHECK(orbit.size() == 1);
  CHECK(orbit.contains(tau));
}

TEST_CASE("u_alpha: part-wise rotation", "[quick]") {
  CHECK(u_alpha(2, 3).to_cycles() == "(1,2)(3,4,5)");
  CHECK(u_alpha(2, 5).to_cycles() == "(1,2)(3,4,5,6,7)");
  CHECK(permutation_order(u_alpha(3, 4)) == 12);
  CHECK(n_cycle(5).to_cycles() == "(1,2,3,4,5)");
  CHECK(permutation_order(n_cycle(7)) == 7);
}

TEST_CASE("u_lm_contains: hand-checked members and non-members", "[quick]") {
  // Powers of alpha belong.
  const auto alpha = u_alpha(2, 3);
  for (std::uint64_t e = 0; e <= 6; ++e)
    CHECK(u_lm_contains(permutation_power(alpha, e), 2, 3));
  // Part images disjoint and nothing missing from {3,4,5}: not a member.
  CHECK_FALSE(u_lm_contains(Transformation{1, 1, 2, 3, 4}, 2, 3));
  CHECK_FALSE(u_lm_contains(Transformation{3, 3, 1, 2, 4}, 2, 3));
  // Part images meet and a point of {3,4,5} is missing: member.
  CHECK(u_lm_contains(Transformation{1, 1, 1, 1, 1}, 2, 3));
  CHECK(u_lm_contains(Transformation{3, 4, 3, 4, 4}, 2, 3));
  // Surjective with meeting parts: not a member.
  CHECK_FALSE(u_lm_contains(Transformation{3, 4, 3, 4, 5}, 2, 3));
  // (1,2) is alpha cubed, hence a member; (1,2)(3,4) is no power of alpha.
  CHECK(u_lm_contains(Transformation{2, 1, 3, 4, 5}, 2, 3));
  CHECK_FALSE(u_lm_contains(Transformation{2, 1, 4, 3, 5}, 2, 3));
}

TEST_CASE("u_lm_size: frozen values", "[quick]") {
  CHECK(u_lm_size(2, 3) == 1857);
  CHECK(u_lm_size(3, 4) == 607285);
  CHECK(u_lm_size(2, 5) == 610871);
}

TEST_CASE("u_lm_generators: validated pairs generate the right monoid", "[quick]") {
  const auto [alpha, beta] = u_lm_generators(2, 3);
  CHECK(Transformation(alpha) == Transformation(u_alpha(2, 3)));
  const auto m = close({Transformation(alpha), beta});
  REQUIRE(m.size() == u_lm_size(2, 3));
  m.for_each([&](const Transformation& t) { CHECK(u_lm_contains(t, 2, 3)); });
}

TEST_CASE("u_lm_generators: rejected parameters", "[quick]") {
  CHECK_THROWS_AS(u_lm_generators(2, 4), std::invalid_argument);  // gcd 2
  CHECK_THROWS_AS(u_lm_generators(3, 3), std::invalid_argument);  // l = m
  CHECK_THROWS_AS(u_lm_generators(1, 2), std::invalid_argument);  // l = 1
  CHECK_THROWS_AS(u_lm_generators(4, 5), std::invalid_argument);  // l+m > 8
}

TEST_CASE("v_dn_contains: rotations, collisions at distance d", "[quick]") {
  // Rotation powers belong for every d.
  for (int d = 1; d <= 4; ++d)
    for (std::uint64_t e = 0; e < 4; ++e)
      CHECK(v_dn_contains(permutation_power(n_cycle(4), e), d, 4));
  // d = 1: needs t(i) = t(i+1 mod n) for some i.
  CHECK(v_dn_contains(Transformation{1, 1, 2, 3}, 1, 4));
  CHECK(v_dn_contains(Transformation{2, 3, 4, 2}, 1, 4));  // t(4) = t(1) via the wrap
  CHECK_FALSE(v_dn_contains(Transformation{1, 2, 1, 2}, 1, 4));
  // d = n: any non-injective map belongs, injective non-rotations do not.
  CHECK(v_dn_contains(Transformation{1, 1, 2}, 3, 3));
  CHECK_FALSE(v_dn_contains(Transformation{2, 1, 3}, 3, 3));
  CHECK_THROWS_AS(v_dn_contains(Transformation{1, 2, 3}, 0, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(v_dn_contains(Transformation{1, 2, 3}, 4, 3),
                  std::invalid_argument);
}

TEST_CASE("v_dn_size: closed form for d = 1", "[quick]") {
  // |V^1_n| = n^n - ((n-1)^n + (-1)^n (n-1)) + n.
  for (int n = 2; n <= 7; ++n) {
    std::int64_t nn = 1, mm = 1;
    for (int i = 0; i < n; ++i) {
      nn *= n;
      mm *= (n - 1);
    }
    const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
    const auto expected =
        static_cast<std::uint64_t>(nn - (mm + sign * (n - 1)) + n);
    CHECK(v_dn_size(1, n) == expected);
  }
  CHECK(v_dn_size(1, 5) == 2110);
  CHECK(v_dn_size(1, 6) == 31032);
}

TEST_CASE("v_n_generators: closure sizes for the record monoids", "[quick]") {
  const std::uint64_t sizes[] = {4, 24, 176, 2110, 32262};
  for (int n = 2; n <= 6; ++n) {
    const auto [a, b] = v_n_generators(n);
    CHECK(Transformation(a) == Transformation(n_cycle(n)));
    CHECK(close({Transformation(a), b}).size() == sizes[n - 2]);
  }
  CHECK_THROWS_AS(v_n_generators(7), std::invalid_argument);
}

TEST_CASE("v_n_generators: n=6 realizes V^2_6", "[quick]") {
  CHECK(v_dn_size(2, 6) == 32262);
  const auto [a, b] = v_n_generators(6);
  const auto m = close({Transformation(a), b});
  REQUIRE(m.size() == 32262);
  m.for_each([&](const Transformation& t) { CHECK(v_dn_contains(t, 2, 6)); });
}

TEST_CASE("v1_generators: validated pairs match the membership filter", "[quick]") {
  for (int n = 2; n <= 5; ++n) {
    const auto [a, b] = v1_generators(n);
    const auto m = close({Transformation(a), b});
    REQUIRE(m.size() == v_dn_size(1, n));
    m.for_each([&](const Transformation& t) { CHECK(v_dn_contains(t, 1, n)); });
  }
}

TEST_CASE("full_tm_generators: the classical triple", "[quick]") {
  const auto g = full_tm_generators(5);
  CHECK(g.cycle.to_cycles() == "(1,2,3,4,5)");
  CHECK(g.swap.to_cycles() == "(1,2)");
  CHECK(g.collapse.to_list() == "[2,2,3,4,5]");
  CHECK(g.list().size() == 3);
}
