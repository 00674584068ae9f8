#include "markedbrauer/category.hpp"

#include "markedbrauer/errors.hpp"

#include <numeric>

namespace markedbrauer {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

// Nested cups on 2b top vertices: (i, 2b-1-i).
Diagram nested_cups(int b) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < b; ++i) pairs.emplace_back(i, 2 * b - 1 - i);
  return Diagram(2 * b, 0, std::move(pairs));
}

Diagram nested_caps(int a) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < a; ++i) pairs.emplace_back(i, 2 * a - 1 - i);
  return Diagram(0, 2 * a, std::move(pairs));
}

Element bend_diagram(const Diagram& d, int count, Corner corner, const Params& p) {
  const int r = d.r(), s = d.s();
  const int deg = degree(d, p);
  const Element x(d, p);
  switch (corner) {
    case Corner::BottomRightUp: {
      Element y = compose(tensor(x, identity(count, p)),
                          tensor(identity(s - count, p), Element(nested_cups(count), p)));
      return eps_pow(choose2(count), p) * y;
    }
    case Corner::BottomLeftUp: {
      Element y = compose(tensor(identity(count, p), x),
                          tensor(Element(nested_cups(count), p), identity(s - count, p)));
      return eps_pow(count * deg, p) * y;
    }
    case Corner::TopRightDown: {
      Element y = compose(tensor(identity(r - count, p), Element(nested_caps(count), p)),
                          tensor(x, identity(count, p)));
      return eps_pow(count * deg, p) * y;
    }
    case Corner::TopLeftDown: {
      Element y = compose(tensor(Element(nested_caps(count), p), identity(r - count, p)),
                          tensor(identity(count, p), x));
      return eps_pow(choose2(count), p) * y;
    }
  }
  return x;
}

}  // namespace

Element bend(const Element& x, int count, Corner corner) {
  const bool up = corner == Corner::BottomRightUp || corner == Corner::BottomLeftUp;
  const int limit = up ? x.s() : x.r();
  if (count < 0 || count > limit)
    throw DomainError("bend count " + std::to_string(count) + " out of range 0.." +
                      std::to_string(limit));
  const int r2 = up ? x.r() + count : x.r() - count;
  const int s2 = up ? x.s() - count : x.s() + count;
  return apply_linear(x, r2, s2,
                      [&](const Diagram& d) { return bend_diagram(d, count, corner, x.params()); });
}

Element transpose(const Element& x) {
  const int r = x.r(), s = x.s();
  Element up = bend(x, s, Corner::BottomRightUp);
  Element down = bend(up, r, Corner::TopLeftDown);
  return eps_pow(choose2(r), x.params()) * down;
}

Element w_element(int r, const Params& p) {
  if (r < 0) throw DomainError("negative arity");
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[i] = r - 1 - i;
  return Element(permutation_diagram(perm), p);
}

Element endofunctor(const Element& x, Endofunctor which) {
  const Params& p = x.params();
  switch (which) {
    case Endofunctor::VFlip:
      return compose(compose(w_element(x.r(), p), x), w_element(x.s(), p));
    case Endofunctor::Rotate:
      return transpose(x);
    case Endofunctor::HFlip:
      return compose(compose(w_element(x.s(), p), transpose(x)), w_element(x.r(), p));
  }
  return x;
}

}  // namespace markedbrauer
