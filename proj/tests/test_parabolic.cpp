#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "parastab/parabolic.hpp"

using namespace parastab;

namespace {

std::shared_ptr<const ParabolicData> space(Family f, int n, std::vector<int> levi_labels) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build({f, n}));
  return std::make_shared<const ParabolicData>(rs, NodeSet::from_labels(levi_labels, n));
}

std::vector<std::vector<int>> members(const std::vector<SubmoduleCandidate>& family) {
  std::vector<std::vector<int>> out;
  for (const auto& c : family) out.push_back(c.members());
  return out;
}

std::size_t proper_count(const std::vector<SubmoduleCandidate>& family) {
  return std::count_if(family.begin(), family.end(), [](const auto& c) { return c.proper(); });
}

}  // namespace

TEST_CASE("tangent roots") {
  auto p2 = space(Family::A, 2, {2});
  REQUIRE(p2->dimension() == 2);
  CHECK(p2->roots().root(p2->tangent()[0]).coords == IntVec{-1, -1});
  CHECK(p2->roots().root(p2->tangent()[1]).coords == IntVec{-1, 0});
  CHECK(p2->parabolic_roots().size() == 4);

  auto lg = space(Family::C, 2, {1});
  std::set<IntVec> eucl;
  for (auto idx : lg->tangent()) eucl.insert(lg->roots().euclidean(lg->roots().root(idx)));
  CHECK(eucl == std::set<IntVec>{{-2, 0}, {-1, -1}, {0, -2}});

  auto flag = space(Family::A, 3, {});
  CHECK(flag->dimension() == 6);
  CHECK(space(Family::E, 6, {2, 3, 4, 5, 6})->dimension() == 16);
  CHECK(space(Family::E, 7, {1, 2, 3, 4, 5, 6})->dimension() == 27);
}

TEST_CASE("closed subsets of small spaces") {
  auto p2 = space(Family::A, 2, {2});
  auto fam = enumerate_submodules(p2, CharMode::zero());
  CHECK(fam.size() == 2);
  CHECK(proper_count(fam) == 0);

  auto flag = space(Family::A, 2, {});
  fam = enumerate_submodules(flag, CharMode::zero());
  CHECK(proper_count(fam) == 3);
  std::set<IntVec> singles;
  for (const auto& c : fam)
    if (c.rank() == 1) singles.insert(c.roots()[0].coords);
  CHECK(singles == std::set<IntVec>{{-1, 0}, {0, -1}});

  auto lg = space(Family::C, 2, {1});
  CHECK(proper_count(enumerate_submodules(lg, CharMode::zero())) == 0);
  CHECK(proper_count(enumerate_submodules(lg, CharMode::positive(3))) == 0);
  fam = enumerate_submodules(lg, CharMode::positive(2));
  REQUIRE(proper_count(fam) == 1);
  const auto& w = fam[1];
  REQUIRE(w.rank() == 1);
  CHECK(lg->roots().euclidean(w.roots()[0]) == IntVec{-1, -1});

  // {-2e1, -(e1+e2)} is killed by the second divided power.
  const auto pair = SubmoduleCandidate::from_roots(
      lg, {lg->roots().from_euclidean({-2, 0}), lg->roots().from_euclidean({-1, -1})});
  CHECK(!is_closed(pair, CharMode::positive(2)));
  CHECK(!is_closed(pair, CharMode::zero()));
}

TEST_CASE("c1 weights") {
  auto flag = space(Family::A, 2, {});
  CHECK(SubmoduleCandidate::from_roots(flag, {Root{{-1, 0}}}).c1_weight().fw == IntVec{2, -1});
  CHECK(SubmoduleCandidate(flag, {0, 1, 2}).c1_weight().fw == IntVec{2, 2});
  auto lg = space(Family::C, 2, {1});
  CHECK(SubmoduleCandidate(lg, {0, 1, 2}).c1_weight().fw == IntVec{0, 3});
  CHECK_THROWS_AS(SubmoduleCandidate::from_roots(lg, {Root{{1, 0}}}), InputError);
  CHECK_THROWS_AS(SubmoduleCandidate(lg, {3}), InputError);
}

TEST_CASE("global vector fields") {
  auto c3 = demazure_vector_fields({Family::C, 3}, NodeSet::from_labels({2, 3}, 3));
  CHECK(c3.exceptional);
  CHECK(c3.name == "sl(6)");
  CHECK(c3.dimension == 35);

  auto a3 = demazure_vector_fields({Family::A, 3}, NodeSet::from_labels({2, 3}, 3));
  CHECK(!a3.exceptional);
  CHECK(a3.name == "sl(4)");
  CHECK(a3.dimension == 15);

  auto b3 = demazure_vector_fields({Family::B, 3}, NodeSet::from_labels({1, 2}, 3));
  CHECK(b3.exceptional);
  CHECK(b3.name == "so(8)");
  CHECK(b3.dimension == 28);

  auto g2 = demazure_vector_fields({Family::G, 2}, NodeSet::from_labels({2}, 2));
  CHECK(g2.exceptional);
  CHECK(g2.dimension == 21);
  CHECK(!demazure_vector_fields({Family::G, 2}, NodeSet::from_labels({1}, 2)).exceptional);
  CHECK(!demazure_vector_fields({Family::C, 3}, NodeSet::from_labels({3}, 3)).exceptional);
  CHECK(demazure_vector_fields({Family::F, 4}, NodeSet()).dimension == 52);
  CHECK_THROWS_AS(demazure_vector_fields({Family::A, 2}, NodeSet::all(2)), InputError);
}

TEST_CASE("enumeration agrees with brute force") {
  for (auto t : oracle::desk_types(3)) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
    for (NodeSet levi : oracle::proper_levis(t.rank())) {
      auto pd = std::make_shared<const ParabolicData>(rs, levi);
      if (pd->dimension() > 12) continue;
      for (int p : {0, 2, 3, 5}) {
        const CharMode mode = p ? CharMode::positive(p) : CharMode::zero();
        CAPTURE(t.name());
        CAPTURE(levi.bits());
        CAPTURE(p);
        CHECK(members(enumerate_submodules(pd, mode)) == oracle::brute_force_closed(pd, mode));
      }
    }
  }
}

TEST_CASE("closed families form lattices with Levi-trivial c1") {
  for (auto t : oracle::desk_types(3)) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
    for (NodeSet levi : oracle::proper_levis(t.rank())) {
      auto pd = std::make_shared<const ParabolicData>(rs, levi);
      for (int p : {0, 2, 3}) {
        const CharMode mode = p ? CharMode::positive(p) : CharMode::zero();
        auto fam = enumerate_submodules(pd, mode);
        std::set<std::vector<int>> all;
        for (const auto& c : fam) all.insert(c.members());
        for (const auto& a : fam) {
          for (int i : levi.members(t.rank())) CHECK(a.c1_weight().fw[i] == 0);
          for (const auto& b : fam) {
            std::vector<int> u, x;
            std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                           b.members().end(), std::back_inserter(u));
            std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                                  b.members().end(), std::back_inserter(x));
            CHECK(all.count(u) == 1);
            CHECK(all.count(x) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("characteristic zero families refine into every positive characteristic") {
  for (auto t : oracle::desk_types(3)) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
    for (NodeSet levi : oracle::proper_levis(t.rank())) {
      auto pd = std::make_shared<const ParabolicData>(rs, levi);
      const auto zero = members(enumerate_submodules(pd, CharMode::zero()));
      for (int p : {2, 3, 5, 7}) {
        const auto fam = members(enumerate_submodules(pd, CharMode::positive(p)));
        const std::set<std::vector<int>> have(fam.begin(), fam.end());
        for (const auto& m : zero) CHECK(have.count(m) == 1);
        if (is_admissible(t, p)) CHECK(fam == zero);
      }
    }
  }
}

TEST_CASE("subset cap") {
  auto flag = space(Family::A, 3, {});
  CHECK_THROWS_AS(enumerate_submodules(flag, CharMode::zero(), 3), ResourceError);
  try {
    enumerate_submodules(flag, CharMode::zero(), 3);
  } catch (const ResourceError& e) {
    CHECK(e.completed() == 3);
  }
}
