#include <catch_amalgamated.hpp>

#include "markedbrauer/category.hpp"
#include "markedbrauer/errors.hpp"
#include "oracles.hpp"

#include <random>

using namespace markedbrauer;

namespace {

const Params kEven = Params::symbolic();
const Params kOdd = Params::odd();

Element el(const Diagram& d, const Params& p) { return Element(d, p); }

Element gen(Generator g, const Params& p) { return generator(g, p); }

}  // namespace

TEST_CASE("cap over cup closes a loop", "[category]") {
  auto cap = gen(Generator::Cap, kEven);
  auto cup = gen(Generator::Cup, kEven);
  auto loop = compose(cap, cup);
  CHECK(loop.r() == 0);
  CHECK(loop.s() == 0);
  CHECK(loop.terms().coefficient(identity_diagram(0)) == Scalar::delta_power(1));
  CHECK(compose(gen(Generator::Cap, kOdd), gen(Generator::Cup, kOdd)).is_zero());
  auto three = compose(gen(Generator::Cap, Params::specialized(3)), gen(Generator::Cup, Params::specialized(3)));
  CHECK(three.terms().coefficient(identity_diagram(0)) == Scalar(3));
}

TEST_CASE("cup over cap gives e1 with coefficient 1", "[category]") {
  for (const Params& p : {kEven, kOdd}) {
    auto e = compose(gen(Generator::Cup, p), gen(Generator::Cap, p));
    CHECK(e == el(Diagram(2, 2, {{0, 1}, {2, 3}}), p));
  }
}

TEST_CASE("compose rejects arity mismatch and mixed params", "[category]") {
  CHECK_THROWS_AS(compose(gen(Generator::Cup, kEven), gen(Generator::Cup, kEven)), DomainError);
  CHECK_THROWS_AS(compose(gen(Generator::I, kEven), gen(Generator::I, kOdd)), DomainError);
}

TEST_CASE("tensor signs", "[category]") {
  auto cap = gen(Generator::Cap, kOdd);
  auto cup = gen(Generator::Cup, kOdd);
  Diagram both(2, 2, {{0, 1}, {2, 3}});
  CHECK(tensor(cap, cup) == Scalar(-1) * el(both, kOdd));
  CHECK(tensor(cup, cap) == el(both, kOdd));
  CHECK(tensor(gen(Generator::Cap, kEven), gen(Generator::Cup, kEven)) == el(both, kEven));
  CHECK(tensor(cap, cap) == Scalar(-1) * el(Diagram(0, 4, {{0, 1}, {2, 3}}), kOdd));
}

namespace {

// The juxtaposed layout keeps x's markings above y's; normalize it by brute force.
int oracle_tensor_exponent(const Diagram& x, const Diagram& y) {
  auto [xy, unused] = tensor_diagrams(x, y);
  (void)unused;
  auto shift = [&](VertexPair e) {
    auto f = [&](int v) { return v < y.r() ? v + x.r() : v - y.r() + x.r() + y.r() + x.s(); };
    return VertexPair{std::min(f(e.first), f(e.second)), std::max(f(e.first), f(e.second))};
  };
  auto lift = [&](VertexPair e) {
    auto f = [&](int v) { return v < x.r() ? v : v - x.r() + x.r() + y.r(); };
    return VertexPair{f(e.first), f(e.second)};
  };
  std::vector<VertexPair> stacked;
  for (auto e : x.marked_edges()) stacked.push_back(lift(e));
  for (auto e : y.marked_edges()) stacked.push_back(shift(e));
  const auto target = xy.marked_edges();
  std::vector<int> ranks;
  for (auto e : stacked)
    for (std::size_t k = 0; k < target.size(); ++k)
      if (target[k] == e) ranks.push_back(static_cast<int>(k));
  REQUIRE(ranks.size() == stacked.size());
  return oracle::bubble_swaps(ranks);
}

}  // namespace

TEST_CASE("tensor sign agrees with the marking reduction oracle", "[category]") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; c + d <= 4; ++d)
          for (const auto& x : enumerate_basis(a, b))
            for (const auto& y : enumerate_basis(c, d)) {
              auto [xy, k] = tensor_diagrams(x, y);
              CHECK(k % 2 == oracle_tensor_exponent(x, y) % 2);
            }
}

TEST_CASE("identity laws and degree additivity", "[category]") {
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; r + s <= 5; ++s)
        for (const auto& d : enumerate_basis(r, s)) {
          Element x = el(d, p);
          CHECK(compose(identity(r, p), x) == x);
          CHECK(compose(x, identity(s, p)) == x);
          for (int t = 0; s + t <= 4; ++t)
            for (const auto& e : enumerate_basis(s, t)) {
              Element y = el(e, p);
              auto xy = compose(x, y);
              if (!xy.is_zero()) CHECK(*xy.degree() == (*x.degree() + *y.degree()) % 2);
              CHECK(*tensor(x, y).degree() == (*x.degree() + *y.degree()) % 2);
            }
        }
}

TEST_CASE("associativity on small triples", "[category]") {
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s)
        for (int t = 0; t <= 2; ++t)
          for (int u = 0; u <= 2; ++u)
            for (const auto& a : enumerate_basis(r, s))
              for (const auto& b : enumerate_basis(s, t))
                for (const auto& c : enumerate_basis(t, u)) {
                  Element x = el(a, p), y = el(b, p), z = el(c, p);
                  CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
                }
}

TEST_CASE("super interchange law", "[category]") {
  const Params p = kOdd;
  for (const auto& x1 : enumerate_basis(0, 2))
    for (const auto& y1 : enumerate_basis(2, 2))
      for (const auto& x2 : enumerate_basis(2, 2))
        for (const auto& y2 : enumerate_basis(2, 0)) {
          Element a = el(x1, p), b = el(y1, p), c = el(x2, p), d = el(y2, p);
          const int k = *c.degree() * *b.degree();
          CHECK(compose(tensor(a, c), tensor(b, d)) == eps_pow(k, p) * tensor(compose(a, b), compose(c, d)));
        }
}

TEST_CASE("braiding", "[category]") {
  for (const Params& p : {kEven, kOdd}) {
    CHECK(braiding(1, 1, p) == gen(Generator::X, p));
    CHECK(compose(braiding(2, 1, p), braiding(1, 2, p)) == identity(3, p));
    CHECK(braiding(0, 3, p) == identity(3, p));
  }
}

TEST_CASE("the presentation holds and the negative controls fail", "[category]") {
  for (const Params& p : {kEven, kOdd, Params::specialized(-2)}) {
    Report rep = verify_category_presentation(p);
    CHECK(rep.entries.size() == 16);
    CHECK(rep.all_pass());
  }
  for (CancellationConvention bad : {CancellationConvention{1, 1}, CancellationConvention{0, 0},
                                     CancellationConvention{1, 0}}) {
    Report rep = verify_category_presentation(kOdd, bad);
    CHECK_FALSE(rep.all_pass());
  }
}

TEST_CASE("canonical factorization evaluates to the diagram", "[category]") {
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 6; ++r)
      for (int s = 0; r + s <= 6; ++s)
        for (const auto& d : enumerate_basis(r, s)) {
          auto w = factor_standard(d);
          CHECK(evaluate_word(w, p) == el(d, p));
        }
}

TEST_CASE("word evaluation checks arities", "[category]") {
  CHECK_THROWS_AS(evaluate_word({{Generator::Cup}, {Generator::Cup}}, kEven), DomainError);
  CHECK(evaluate_word({}, kEven) == identity(0, kEven));
  CHECK(word_top({{Generator::I, Generator::Cup}}) == 3);
  CHECK(word_bottom({{Generator::I, Generator::Cup}}) == 1);
}

TEST_CASE("transpose on generators", "[category]") {
  for (const Params& p : {kEven, kOdd}) {
    const Scalar e = eps_pow(1, p);
    CHECK(transpose(gen(Generator::I, p)) == gen(Generator::I, p));
    CHECK(transpose(gen(Generator::X, p)) == e * gen(Generator::X, p));
    CHECK(transpose(gen(Generator::Cup, p)) == e * gen(Generator::Cap, p));
    CHECK(transpose(gen(Generator::Cap, p)) == gen(Generator::Cup, p));
  }
}

TEST_CASE("transpose is a graded anti-homomorphism", "[category]") {
  const Params p = kOdd;
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t)
        for (const auto& a : enumerate_basis(r, s))
          for (const auto& b : enumerate_basis(s, t)) {
            Element x = el(a, p), y = el(b, p);
            const int k = *x.degree() * *y.degree();
            CHECK(transpose(compose(x, y)) == eps_pow(k, p) * compose(transpose(y), transpose(x)));
          }
}

TEST_CASE("transpose is involutive on square spaces", "[category]") {
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 4; ++r)
      for (const auto& d : enumerate_basis(r, r)) CHECK(transpose(transpose(el(d, p))) == el(d, p));
}

TEST_CASE("bends invert each other", "[category]") {
  for (const Params& p : {kEven, kOdd})
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (const auto& d : enumerate_basis(r, s)) {
          Element x = el(d, p);
          for (int b = 0; b <= s; ++b) {
            CHECK(bend(bend(x, b, Corner::BottomRightUp), b, Corner::TopRightDown) == x);
            CHECK(bend(bend(x, b, Corner::BottomLeftUp), b, Corner::TopLeftDown) == x);
          }
          for (int a = 0; a <= r; ++a) {
            CHECK(bend(bend(x, a, Corner::TopRightDown), a, Corner::BottomRightUp) == x);
            CHECK(bend(bend(x, a, Corner::TopLeftDown), a, Corner::BottomLeftUp) == x);
          }
        }
  CHECK_THROWS_AS(bend(gen(Generator::I, kEven), 2, Corner::BottomRightUp), DomainError);
  CHECK(bend(gen(Generator::I, kOdd), 0, Corner::TopLeftDown) == gen(Generator::I, kOdd));
}

TEST_CASE("bending the identity gives a cup", "[category]") {
  for (const Params& p : {kEven, kOdd}) {
    auto cup = bend(gen(Generator::I, p), 1, Corner::BottomRightUp);
    REQUIRE(cup.terms().size() == 1);
    CHECK(cup.terms().begin()->first == generator_diagram(Generator::Cup));
  }
}

TEST_CASE("w_r and the endofunctors", "[category]") {
  for (const Params& p : {kEven, kOdd}) {
    CHECK(w_element(1, p) == identity(1, p));
    CHECK(w_element(2, p) == gen(Generator::X, p));
    for (int r = 0; r <= 5; ++r) CHECK(compose(w_element(r, p), w_element(r, p)) == identity(r, p));
  }
  // for eps = +1 vflip mirrors the matching
  for (const auto& d : enumerate_basis(3, 3)) {
    auto m = endofunctor(el(d, kEven), Endofunctor::VFlip);
    std::vector<VertexPair> mirrored;
    for (auto [a, b] : d.pairs()) {
      auto f = [](int v) { return v < 3 ? 2 - v : 3 + (5 - v); };
      mirrored.emplace_back(f(a), f(b));
    }
    CHECK(m == el(Diagram(3, 3, mirrored), kEven));
  }
  // rotate is transpose; vflip is covariant, hflip contravariant
  std::mt19937 rng(3);
  for (const Params& p : {kEven, kOdd}) {
    auto b22 = enumerate_basis(2, 2);
    auto b24 = enumerate_basis(2, 4);
    for (const auto& a : b22)
      for (const auto& b : b24) {
        Element x = el(a, p), y = el(b, p);
        CHECK(endofunctor(x, Endofunctor::Rotate) == transpose(x));
        CHECK(endofunctor(compose(x, y), Endofunctor::VFlip) ==
              compose(endofunctor(x, Endofunctor::VFlip), endofunctor(y, Endofunctor::VFlip)));
        const int k = *x.degree() * *y.degree();
        CHECK(endofunctor(compose(x, y), Endofunctor::HFlip) ==
              eps_pow(k, p) * compose(endofunctor(y, Endofunctor::HFlip), endofunctor(x, Endofunctor::HFlip)));
      }
  }
}
