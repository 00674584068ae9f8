#include <catch_amalgamated.hpp>

#include "markedbrauer/diagram.hpp"
#include "markedbrauer/errors.hpp"
#include "oracles.hpp"

#include <random>

using namespace markedbrauer;

TEST_CASE("basis size matches the perfect matching count", "[diagram]") {
  for (int r = 0; r <= 12; ++r)
    for (int s = 0; r + s <= 12; ++s) {
      const auto basis = enumerate_basis(r, s);
      const std::uint64_t expected = (r + s) % 2 ? 0 : oracle::perfect_matchings(r + s);
      CHECK(basis.size() == expected);
      CHECK(basis_dimension(r, s) == BigInt(expected));
    }
}

TEST_CASE("basis is sorted without duplicates", "[diagram]") {
  const auto basis = enumerate_basis(3, 3);
  REQUIRE(basis.size() == 15);
  for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
  CHECK(enumerate_basis(2, 1).empty());
  REQUIRE(enumerate_basis(0, 0).size() == 1);
}

TEST_CASE("constructor validates matchings", "[diagram]") {
  CHECK_THROWS_AS(Diagram(2, 0, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Diagram(2, 2, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Diagram(2, 0, {{0, 5}}), DomainError);
  CHECK_THROWS_AS(Diagram(1, 1, {{0, 1}, {0, 1}}), DomainError);
  Diagram d(2, 2, {{3, 0}, {1, 2}});
  CHECK(d.pairs() == std::vector<VertexPair>{{0, 3}, {1, 2}});
  CHECK(d.to_string() == "{t1b2, t2b1}");
}

TEST_CASE("classification and degree", "[diagram]") {
  Diagram d(4, 2, {{0, 3}, {1, 4}, {2, 5}});
  auto c = classify(d);
  CHECK(c.cups.size() == 1);
  CHECK(c.caps.empty());
  CHECK(c.throughs.size() == 2);
  CHECK(degree(d, Params::odd()) == 1);
  CHECK(degree(d, Params::symbolic()) == 0);
  Diagram cupcap(2, 2, {{0, 1}, {2, 3}});
  CHECK(degree(cupcap, Params::odd()) == 0);
}

TEST_CASE("marking order of the standard layout", "[diagram]") {
  // cups t1t4, t2t3 then caps b3b4, b1b2
  Diagram d(4, 4, {{0, 3}, {1, 2}, {4, 5}, {6, 7}});
  auto edges = d.marked_edges();
  REQUIRE(edges.size() == 4);
  CHECK(edges[0] == VertexPair{0, 3});
  CHECK(edges[1] == VertexPair{1, 2});
  CHECK(edges[2] == VertexPair{6, 7});
  CHECK(edges[3] == VertexPair{4, 5});
  auto [k, same] = normalization_sign(standard_layout(d));
  CHECK(k == 0);
  CHECK(same == d);
}

namespace {

// Oracle: sort the markings by bubble sort, counting adjacent swaps, and count
// arrows pointing left.
int oracle_sign(const MarkedLayout& layout) {
  const auto edges = layout.diagram.marked_edges();
  std::vector<int> ranks;
  int left = 0;
  for (const auto& m : layout.markings) {
    const auto e = layout.diagram.pairs()[m.edge];
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (edges[k] == e) ranks.push_back(static_cast<int>(k));
    if (m.kind == MarkKind::Arrow && !m.points_right) ++left;
  }
  return left + oracle::bubble_swaps(ranks);
}

}  // namespace

TEST_CASE("normalization sign agrees with the move oracle", "[diagram]") {
  std::mt19937 rng(7);
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; r + s <= 8; ++s)
      for (const auto& d : enumerate_basis(r, s)) {
        MarkedLayout layout = standard_layout(d);
        std::shuffle(layout.markings.begin(), layout.markings.end(), rng);
        for (auto& m : layout.markings)
          if (m.kind == MarkKind::Arrow) m.points_right = rng() % 2;
        auto [k, std] = normalization_sign(layout);
        CHECK(std == d);
        CHECK(k % 2 == oracle_sign(layout) % 2);
      }
}

TEST_CASE("each elementary move changes the sign by eps", "[diagram]") {
  Diagram d(2, 4, {{0, 1}, {2, 3}, {4, 5}});
  MarkedLayout layout = standard_layout(d);
  const int k0 = normalization_sign(layout).first;
  auto swapped = layout;
  std::swap(swapped.markings[1], swapped.markings[2]);
  CHECK((normalization_sign(swapped).first - k0) % 2 != 0);
  auto flipped = layout;
  for (auto& m : flipped.markings)
    if (m.kind == MarkKind::Arrow) {
      m.points_right = !m.points_right;
      break;
    }
  CHECK((normalization_sign(flipped).first - k0) % 2 != 0);
}
