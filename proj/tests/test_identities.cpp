#include <doctest.h>

#include <random>

#include "ptmnc/identities.hpp"
#include "test_support.hpp"

using namespace ptmnc;

namespace {

RationalVector v6(long a, long b, long c, long d, long e, long f) {
  return {Rational(a), Rational(b), Rational(c),
          Rational(d), Rational(e), Rational(f)};
}

}  // namespace

TEST_CASE("stabilizer identity sets") {
  const GptFragment f = stabilizer_qubit_fragment();

  const IdentitySet s = state_identities(f);
  REQUIRE(s.generators.size() == 2);
  CHECK(s.generators[0] == v6(1, 1, -1, -1, 0, 0));
  CHECK(s.generators[1] == v6(1, 1, 0, 0, -1, -1));
  CHECK(s.process_ids == f.state_ids());

  const IdentitySet e = effect_identities(f);
  REQUIRE(e.generators.size() == 2);
  CHECK(e.generators[0] == v6(1, 1, -1, -1, 0, 0));
  CHECK(e.generators[1] == v6(1, 1, 0, 0, -1, -1));

  const IdentitySet t = transformation_identities(f);
  REQUIRE(t.generators.size() == 1);
  CHECK(t.generators[0] ==
        RationalVector{Rational(1), Rational(1), Rational(-1), Rational(-1)});
}

TEST_CASE("generators annihilate the actual process vectors") {
  const GptFragment f = stabilizer_qubit_fragment();
  const IdentitySet s = state_identities(f);
  for (const auto& gen : s.generators) {
    RationalVector sum(f.dim);
    for (std::size_t i = 0; i < f.states.size(); ++i) {
      for (std::size_t c = 0; c < f.dim; ++c)
        sum[c] += gen[i] * f.states[i].second[c];
    }
    for (const Rational& x : sum) CHECK(x == 0);
  }
  const IdentitySet t = transformation_identities(f);
  for (const auto& gen : t.generators) {
    RationalMatrix sum(f.dim, f.dim);
    for (std::size_t i = 0; i < f.transformations.size(); ++i) {
      for (std::size_t r = 0; r < f.dim; ++r)
        for (std::size_t c = 0; c < f.dim; ++c)
          sum.at(r, c) += gen[i] * f.transformations[i].second.at(r, c);
    }
    CHECK(sum == RationalMatrix(f.dim, f.dim));
  }
}

TEST_CASE("three-transformation subset has no identities") {
  GptFragment f = stabilizer_qubit_fragment();
  f.transformations.pop_back();  // {I, Z, S}
  CHECK(transformation_identities(f).generators.empty());
}

TEST_CASE("duplicate processes give the (1,-1) relation") {
  GptFragment f = testing::toy_fragment();
  SUBCASE("states") {
    f.states = {{"a", f.states[0].second}, {"b", f.states[0].second}};
    const IdentitySet ids = state_identities(f);
    REQUIRE(ids.generators.size() == 1);
    CHECK(ids.generators[0] == RationalVector{Rational(1), Rational(-1)});
  }
  SUBCASE("single state has none") {
    f.states = {{"a", f.states[0].second}};
    CHECK(state_identities(f).generators.empty());
  }
  SUBCASE("duplicate transformations") {
    f.transformations = {{"a", RationalMatrix::identity(3)},
                         {"b", RationalMatrix::identity(3)}};
    const IdentitySet ids = transformation_identities(f);
    REQUIRE(ids.generators.size() == 1);
    CHECK(ids.generators[0] == RationalVector{Rational(1), Rational(-1)});
  }
}

TEST_CASE("two independent binary-measurement effects have no identities") {
  CHECK(effect_identities(testing::toy_fragment()).generators.empty());
}

TEST_CASE("count law and generating property") {
  const GptFragment f = stabilizer_qubit_fragment();
  std::vector<RationalVector> cols;
  for (const auto& [_, v] : f.states) cols.push_back(v);
  const auto m = RationalMatrix::from_columns(cols);
  const IdentitySet ids = state_identities(f);
  CHECK(ids.generators.size() == f.states.size() - rank(m));

  // Any vector annihilating the states lies in the span of the generators.
  std::mt19937_64 rng(7);
  auto gen_matrix = RationalMatrix::from_columns(ids.generators);
  for (int trial = 0; trial < 20; ++trial) {
    RationalVector combo(f.states.size());
    for (const auto& g : ids.generators) {
      long w = static_cast<long>(rng() % 9) - 4;
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] += w * g[i];
    }
    for (const Rational& x : matvec(m, combo)) REQUIRE(x == 0);
    CHECK(solve_linear(gen_matrix, combo).has_value());
  }
}
