#include <doctest.h>

#include "oracles.hpp"
#include "parastab/chevalley.hpp"

using namespace parastab;

namespace {
Root R(IntVec c) { return Root{std::move(c)}; }
}  // namespace

TEST_CASE("root string down-lengths") {
  auto a2 = RootSystem::build({Family::A, 2});
  CHECK(root_string_down(a2, R({-1, -1}), R({1, 0})) == 0);

  auto c2 = RootSystem::build({Family::C, 2});
  const Root minus_e1_e2 = c2.from_euclidean({-1, -1});
  const Root e1_minus_e2 = c2.from_euclidean({1, -1});
  CHECK(root_string_down(c2, minus_e1_e2, e1_minus_e2) == 1);

  auto g2 = RootSystem::build({Family::G, 2});
  CHECK(root_string_down(g2, R({2, 1}), R({1, 0})) == 2);
  auto sd = root_string(g2, R({2, 1}), R({1, 0}));
  CHECK(sd.up_length == 1);

  CHECK_THROWS_AS(root_string_down(a2, R({1, 0}), R({1, 0})), InputError);
  CHECK_THROWS_AS(root_string_down(a2, R({1, 0}), R({-1, 0})), InputError);
  CHECK_THROWS_AS(root_string_down(a2, R({1, 2}), R({1, 0})), InputError);
}

TEST_CASE("structure constant magnitudes") {
  auto a2 = RootSystem::build({Family::A, 2});
  CHECK(structure_constant_magnitude(a2, R({-1, -1}), R({1, 0})) == 1);
  auto c2 = RootSystem::build({Family::C, 2});
  CHECK(structure_constant_magnitude(c2, c2.from_euclidean({-1, -1}), c2.from_euclidean({1, -1})) ==
        2);
  CHECK(structure_constant_magnitude(c2, c2.from_euclidean({-2, 0}), c2.from_euclidean({0, 2})) ==
        0);
  CHECK_THROWS_AS(structure_constant_magnitude(c2, R({1, 0}), R({-1, 0})), InputError);
}

TEST_CASE("divided power coefficients") {
  auto c2 = RootSystem::build({Family::C, 2});
  const Root beta = c2.from_euclidean({1, -1});
  CHECK(divided_power_coefficient(c2, c2.from_euclidean({-2, 0}), beta, 2) == 1);
  CHECK(divided_power_coefficient(c2, c2.from_euclidean({-1, -1}), beta, 1) == 2);
  CHECK_THROWS_AS(divided_power_coefficient(c2, c2.from_euclidean({-1, -1}), beta, 2), InputError);
  CHECK_THROWS_AS(divided_power_coefficient(c2, c2.from_euclidean({-1, -1}), beta, 0), InputError);

  // Against the explicit action on symmetric 2-tensors: -2e1 <-> y(x)y,
  // -(e1+e2) <-> the middle vector, -2e2 <-> x(x)x.
  const auto m = oracle::symmetric_square_unipotent();
  CHECK(m[1][2] == std::vector<long>{0, 1});     // y(x)y -> t * middle
  CHECK(m[0][2] == std::vector<long>{0, 0, 1});  // y(x)y -> t^2 * x(x)x
  CHECK(m[0][1] == std::vector<long>{0, 2});     // middle -> 2t * x(x)x
  CHECK(divided_power_coefficient(c2, c2.from_euclidean({-2, 0}), beta, 1) == m[1][2][1]);
  CHECK(divided_power_coefficient(c2, c2.from_euclidean({-2, 0}), beta, 2) == m[0][2][2]);
  CHECK(divided_power_coefficient(c2, c2.from_euclidean({-1, -1}), beta, 1) == m[0][1][1]);

  // G2: the long string alpha2, alpha2+alpha1, alpha2+2alpha1, alpha2+3alpha1
  auto g2 = RootSystem::build({Family::G, 2});
  CHECK(divided_power_coefficient(g2, R({0, 1}), R({1, 0}), 3) == 1);
  CHECK(divided_power_coefficient(g2, R({1, 1}), R({1, 0}), 2) == 3);
  CHECK(divided_power_coefficient(g2, R({2, 1}), R({1, 0}), 1) == 3);
}

TEST_CASE("admissible characteristics") {
  for (int n = 1; n <= 6; ++n) CHECK(min_admissible_char(SimpleType(Family::A, n)) == 2);
  for (int n = 4; n <= 6; ++n) CHECK(min_admissible_char(SimpleType(Family::D, n)) == 2);
  for (int n : {6, 7, 8}) CHECK(min_admissible_char(SimpleType(Family::E, n)) == 2);
  for (int n = 2; n <= 5; ++n) {
    CHECK(min_admissible_char(SimpleType(Family::B, n)) == 3);
    CHECK(min_admissible_char(SimpleType(Family::C, n)) == 3);
  }
  CHECK(min_admissible_char(SimpleType(Family::F, 4)) == 3);
  CHECK(min_admissible_char(SimpleType(Family::G, 2)) == 5);
  CHECK(is_admissible(SimpleType(Family::G, 2), 7));
  CHECK(!is_admissible(SimpleType(Family::G, 2), 3));
  CHECK(!is_admissible(SimpleType(Family::C, 2), 4));
}

TEST_CASE("characteristic parsing") {
  CHECK(CharMode::parse("0").is_zero());
  CHECK(CharMode::parse("7").characteristic() == 7);
  CHECK_THROWS_AS(CharMode::parse("4"), InputError);
  CHECK_THROWS_AS(CharMode::parse("1"), InputError);
  CHECK_THROWS_AS(CharMode::parse("-3"), InputError);
  CHECK_THROWS_AS(CharMode::parse("x"), InputError);
}

TEST_CASE("string invariants over all root pairs") {
  for (auto t : oracle::desk_types()) {
    auto rs = RootSystem::build(t);
    const int pmin = min_admissible_char(rs);
    for (const Root& a : rs.roots()) {
      for (const Root& b : rs.roots()) {
        if (a == b || a == -b) continue;
        auto sd = root_string(rs, a, b);
        CHECK(sd.down_length + sd.up_length <= 3);
        CHECK(sd.down_length - sd.up_length == rs.pairing(a, b));
        const int n = structure_constant_magnitude(rs, a, b);
        CHECK(n <= 3);
        if (n >= 2) CHECK(!t.simply_laced());
        if (n == 3) CHECK(t.family() == Family::G);
        if (rs.contains((a + b).coords)) {
          CHECK(n % pmin != 0);
          CHECK(divided_power_coefficient(rs, a, b, 1) == n);
        }
        // unbroken strings
        for (int q = 1; q <= 3; ++q) {
          if (!rs.contains((a + q * b).coords)) continue;
          for (int k = 0; k <= q; ++k) CHECK(rs.contains((a + k * b).coords));
        }
      }
    }
  }
}
