#include <doctest.h>

#include <random>

#include "ptmnc/lp.hpp"
#include "ptmnc/polytope.hpp"
#include "test_support.hpp"

using namespace ptmnc;

namespace {

HPolytope unit_square() {
  HPolytope p;
  p.num_vars = 2;
  p.var_labels = {"x", "y"};
  for (std::size_t j = 0; j < 2; ++j) {
    LinearConstraint lo{RationalVector(2), Rational(0)};
    lo.coeffs[j] = 1;
    p.inequalities.push_back(lo);
    LinearConstraint hi{RationalVector(2), Rational(-1)};
    hi.coeffs[j] = -1;  // -x >= -1
    p.inequalities.push_back(hi);
  }
  return p;
}

}  // namespace

TEST_CASE("unit square has four vertices") {
  const VRep v = enumerate_vertices(unit_square());
  REQUIRE(v.vertices.size() == 4);
  CHECK(v.vertices[0] == RationalVector{Rational(0), Rational(0)});
  CHECK(v.vertices[3] == RationalVector{Rational(1), Rational(1)});
}

TEST_CASE("stabilizer measurement polytope has the 8 deterministic vertices") {
  const GptFragment f = stabilizer_qubit_fragment();
  const HPolytope p = measurement_polytope(f, effect_identities(f));
  CHECK(p.num_vars == 6);
  CHECK(p.equalities.size() == 5);  // 3 measurement sums + 2 identities
  CHECK(p.inequalities.size() == 6);
  const VRep v = enumerate_vertices(p);
  REQUIRE(v.vertices.size() == 8);
  for (const auto& vert : v.vertices) {
    for (const Rational& x : vert) CHECK((x == 0 || x == 1));
    // one outcome per binary measurement
    CHECK(vert[0] + vert[1] == 1);
    CHECK(vert[2] + vert[3] == 1);
    CHECK(vert[4] + vert[5] == 1);
  }
  // lexicographic order, labels follow the declared effect order
  CHECK(v.var_labels == f.effect_ids());
  CHECK(v.vertices.front() ==
        RationalVector{Rational(0), Rational(1), Rational(0), Rational(1),
                       Rational(0), Rational(1)});
  CHECK(v.vertices.back() ==
        RationalVector{Rational(1), Rational(0), Rational(1), Rational(0),
                       Rational(1), Rational(0)});
}

TEST_CASE("stabilizer source polytope is the same pattern scaled by 1/3") {
  const GptFragment f = stabilizer_qubit_fragment();
  const VRep phi =
      enumerate_vertices(measurement_polytope(f, effect_identities(f)));
  const VRep psi = enumerate_vertices(source_polytope(f, state_identities(f)));
  REQUIRE(psi.vertices.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(psi.vertices[i][j] == phi.vertices[i][j] / 3);
    }
  }
}

TEST_CASE("source polytope pins pair sums to 1/3") {
  const GptFragment f = stabilizer_qubit_fragment();
  const HPolytope p = source_polytope(f, state_identities(f));
  for (const auto& vert : enumerate_vertices(p).vertices) {
    CHECK(vert[0] + vert[1] == Rational(1, 3));
    CHECK(vert[2] + vert[3] == Rational(1, 3));
    CHECK(vert[4] + vert[5] == Rational(1, 3));
  }
}

TEST_CASE("single binary measurement gives the 1-simplex") {
  const GptFragment f = testing::toy_fragment();
  const VRep v =
      enumerate_vertices(measurement_polytope(f, effect_identities(f)));
  REQUIRE(v.vertices.size() == 2);
  CHECK(v.vertices[0] == RationalVector{Rational(0), Rational(1)});
  CHECK(v.vertices[1] == RationalVector{Rational(1), Rational(0)});
}

TEST_CASE("toy source polytope has four vertices") {
  const GptFragment f = testing::toy_fragment();
  const VRep v = enumerate_vertices(source_polytope(f, state_identities(f)));
  REQUIRE(v.vertices.size() == 4);
  for (const auto& vert : v.vertices) {
    CHECK(vert[0] + vert[1] == Rational(1, 2));
    CHECK(vert[2] + vert[3] == Rational(1, 2));
  }
}

TEST_CASE("equality-pinned point polytope") {
  HPolytope p;
  p.num_vars = 2;
  p.var_labels = {"a", "b"};
  p.equalities.push_back({{Rational(1), Rational(1)}, Rational(1)});
  p.equalities.push_back({{Rational(1), Rational(-1)}, Rational(0)});
  LinearConstraint pos{RationalVector(2), Rational(0)};
  pos.coeffs[0] = 1;
  p.inequalities.push_back(pos);
  pos.coeffs = {Rational(0), Rational(1)};
  p.inequalities.push_back(pos);
  const VRep v = enumerate_vertices(p);
  REQUIRE(v.vertices.size() == 1);
  CHECK(v.vertices[0] == RationalVector{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("empty polytope is signalled") {
  HPolytope p = unit_square();
  LinearConstraint c{{Rational(1), Rational(1)}, Rational(5)};
  p.inequalities.push_back(c);  // x + y >= 5 inside the unit square
  CHECK_THROWS_AS(enumerate_vertices(p), EmptyPolytopeError);
}

TEST_CASE("unbounded polytope is signalled") {
  HPolytope p;
  p.num_vars = 2;
  p.var_labels = {"x", "y"};
  for (std::size_t j = 0; j < 2; ++j) {
    LinearConstraint lo{RationalVector(2), Rational(0)};
    lo.coeffs[j] = 1;
    p.inequalities.push_back(lo);
  }
  CHECK_THROWS_AS(enumerate_vertices(p), UnboundedPolytopeError);
}

TEST_CASE("vertices are extremal: active constraints have full rank") {
  const GptFragment f = stabilizer_qubit_fragment();
  const HPolytope p = measurement_polytope(f, effect_identities(f));
  const VRep v = enumerate_vertices(p);
  for (const auto& vert : v.vertices) {
    std::vector<RationalVector> active;
    for (const auto& c : p.equalities) active.push_back(c.coeffs);
    for (const auto& c : p.inequalities) {
      if (dot(c.coeffs, vert) == c.rhs) active.push_back(c.coeffs);
    }
    CHECK(rank(RationalMatrix::from_rows(active)) == p.num_vars);
  }
}

TEST_CASE("random mixtures decompose exactly over the vertex set") {
  const GptFragment f = stabilizer_qubit_fragment();
  const HPolytope p = source_polytope(f, state_identities(f));
  const VRep v = enumerate_vertices(p);
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 10; ++trial) {
    RationalVector point(p.num_vars);
    Rational total;
    std::vector<Rational> w(v.vertices.size());
    for (auto& wi : w) {
      wi = Rational(static_cast<long>(rng() % 5));
      total += wi;
    }
    if (total == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] /= total;
      for (std::size_t j = 0; j < p.num_vars; ++j)
        point[j] += w[i] * v.vertices[i][j];
    }
    CHECK(contains(p, point));
    // exact convex decomposition: weights lambda >= 0, sum 1, V lambda = point
    LpProblem lp;
    lp.num_vars = v.vertices.size();
    lp.objective.assign(lp.num_vars, Rational());
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      LpRow r;
      r.rel = Relation::eq;
      r.rhs = point[j];
      r.coeffs.resize(lp.num_vars);
      for (std::size_t i = 0; i < lp.num_vars; ++i)
        r.coeffs[i] = v.vertices[i][j];
      lp.rows.push_back(std::move(r));
    }
    LpRow norm;
    norm.rel = Relation::eq;
    norm.rhs = 1;
    norm.coeffs.assign(lp.num_vars, Rational(1));
    lp.rows.push_back(std::move(norm));
    CHECK(solve_lp(lp).status == LpStatus::optimal);

    // a point off the polytope does not decompose
    RationalVector outside = point;
    outside[0] += 1;
    CHECK(!contains(p, outside));
  }
}

TEST_CASE("hull equals the H-description: LP optima match vertex maxima") {
  const GptFragment f = testing::toy_fragment();
  const HPolytope p = source_polytope(f, state_identities(f));
  const VRep v = enumerate_vertices(p);
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    RationalVector c(p.num_vars);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 9) - 4);
    LpProblem lp;
    lp.num_vars = p.num_vars;
    lp.free_vars.assign(p.num_vars, true);
    lp.objective = c;
    for (const auto& e : p.equalities)
      lp.rows.push_back({e.coeffs, Relation::eq, e.rhs});
    for (const auto& i : p.inequalities)
      lp.rows.push_back({i.coeffs, Relation::ge, i.rhs});
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    Rational best = dot(c, v.vertices[0]);
    for (const auto& vert : v.vertices) {
      Rational val = dot(c, vert);
      if (val < best) best = val;
    }
    CHECK(sol.objective == best);
  }
}
