#include "markedbrauer/category.hpp"

#include "markedbrauer/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace markedbrauer {

namespace {

int pair_index(const Diagram& d, const VertexPair& p) {
  const auto& pairs = d.pairs();
  return static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(), p) - pairs.begin());
}

struct Step {
  int edge, from, to;
};

struct Mark {
  int edge;
  bool bead;
  int head;  // stacked vertex an arrow points at
};

}  // namespace

DiagramProduct compose_diagrams(const Diagram& x, const Diagram& y, bool track_signs,
                                const CancellationConvention& conv) {
  if (x.s() != y.r())
    throw DomainError("cannot compose B_{" + std::to_string(x.r()) + "," + std::to_string(x.s()) +
                      "} with B_{" + std::to_string(y.r()) + "," + std::to_string(y.s()) + "}");
  const int r = x.r(), s = x.s(), t = y.s();
  const int nv = r + s + t;
  // Stacked vertex ids: x keeps its ids (its bottom row is the middle row),
  // y is shifted by r.
  const int nx = static_cast<int>(x.pairs().size());
  std::vector<VertexPair> edges(x.pairs());
  for (const auto& [a, b] : y.pairs()) edges.emplace_back(a + r, b + r);
  const int ne = static_cast<int>(edges.size());

  std::vector<std::array<int, 2>> inc(static_cast<std::size_t>(nv), {-1, -1});
  for (int e = 0; e < ne; ++e)
    for (int v : {edges[e].first, edges[e].second}) inc[v][inc[v][0] == -1 ? 0 : 1] = e;
  auto other_end = [&](int e, int v) { return edges[e].first == v ? edges[e].second : edges[e].first; };
  auto other_edge = [&](int v, int e) { return inc[v][0] == e ? inc[v][1] : inc[v][0]; };
  auto is_end = [&](int v) { return v < r || v >= r + s; };
  auto label = [&](int v) { return v < r ? v : v - s; };

  // Walking from the unvisited endpoint with the smallest id orients cups and
  // caps left to right and through strings top to bottom.
  std::vector<char> used(static_cast<std::size_t>(ne), 0);
  std::vector<std::vector<Step>> comps;
  std::vector<int> partner(static_cast<std::size_t>(r + t), -1);
  for (int v = 0; v < nv; ++v) {
    if (!is_end(v) || used[inc[v][0]]) continue;
    std::vector<Step> path;
    int cur = v, e = inc[v][0];
    while (true) {
      used[e] = 1;
      int nxt = other_end(e, cur);
      path.push_back({e, cur, nxt});
      cur = nxt;
      if (is_end(cur)) break;
      e = other_edge(cur, e);
    }
    partner[label(v)] = label(cur);
    partner[label(cur)] = label(v);
    comps.push_back(std::move(path));
  }

  int loops = 0;
  for (int e0 = 0; e0 < ne; ++e0) {
    if (used[e0]) continue;
    ++loops;
    used[e0] = 1;
    int e = e0, cur = edges[e0].second;
    while (true) {
      int f = other_edge(cur, e);
      if (used[f]) break;
      used[f] = 1;
      cur = other_end(f, cur);
      e = f;
    }
  }

  DiagramProduct out{Diagram::from_partners(r, t, std::move(partner)), loops, 0};
  if (!track_signs || loops > 0) return out;

  // Markings of x (standard order) above markings of y.
  std::vector<Mark> marks;
  std::vector<int> mark_of(static_cast<std::size_t>(ne), -1);
  auto add_marks = [&](const Diagram& d, int shift, int edge_offset) {
    for (const auto& p : d.marked_edges()) {
      int e = pair_index(d, p) + edge_offset;
      mark_of[e] = static_cast<int>(marks.size());
      marks.push_back({e, p.second < d.r(), p.second + shift});
    }
  };
  add_marks(x, 0, 0);
  add_marks(y, r, nx);

  std::vector<int> heights(marks.size());
  std::iota(heights.begin(), heights.end(), 0);
  auto height_of = [&](int m) {
    return static_cast<int>(std::find(heights.begin(), heights.end(), m) - heights.begin());
  };

  std::vector<int> rank_by_left(static_cast<std::size_t>(r + t), -1);
  const auto std_order = out.diagram.marked_edges();
  for (std::size_t k = 0; k < std_order.size(); ++k) rank_by_left[std_order[k].first] = static_cast<int>(k);
  std::vector<int> final_rank(marks.size(), -1);

  int k = 0;
  for (const auto& path : comps) {
    std::vector<std::pair<int, const Step*>> seq;
    for (const auto& st : path)
      if (mark_of[st.edge] >= 0) seq.emplace_back(mark_of[st.edge], &st);
    std::size_t i = 0;
    for (; i + 1 < seq.size(); i += 2) {
      int ia = height_of(seq[i].first), ib = height_of(seq[i + 1].first);
      int iu = std::min(ia, ib), il = std::max(ia, ib);
      int up = heights[iu], lo = heights[il];
      // slide the lower marking up until the two are adjacent
      k += il - iu - 1;
      if (marks[up].bead) {
        ++k;
        std::swap(up, lo);
      }
      const auto& ea = edges[marks[up].edge];
      const auto& eb = edges[marks[lo].edge];
      int shared = (ea.first == eb.first || ea.first == eb.second) ? ea.first : ea.second;
      k += marks[up].head == shared ? conv.toward_exponent : conv.away_exponent;
      heights.erase(heights.begin() + il);
      heights.erase(heights.begin() + iu);
    }
    if (i < seq.size()) {
      int m = seq[i].first;
      if (!marks[m].bead && marks[m].head != seq[i].second->to) ++k;
      final_rank[m] = rank_by_left[label(path.front().from)];
    }
  }
  for (std::size_t a = 0; a < heights.size(); ++a)
    for (std::size_t b = a + 1; b < heights.size(); ++b)
      if (final_rank[heights[a]] > final_rank[heights[b]]) ++k;
  out.eps_exponent = k;
  return out;
}

Element compose(const Element& x, const Element& y, const CancellationConvention& conv) {
  if (x.s() != y.r())
    throw DomainError("cannot compose B_{" + std::to_string(x.r()) + "," + std::to_string(x.s()) +
                      "} with B_{" + std::to_string(y.r()) + "," + std::to_string(y.s()) + "}");
  if (!(x.params() == y.params())) throw DomainError("parameter mismatch in compose");
  const Params& p = x.params();
  Element out(x.r(), y.s(), p);
  const bool signs = p.eps == -1;
  for (const auto& [d1, c1] : x.terms()) {
    for (const auto& [d2, c2] : y.terms()) {
      auto prod = compose_diagrams(d1, d2, signs, conv);
      if (prod.loops > 0 && p.eps == -1) continue;
      Scalar c = c1 * c2;
      if (prod.loops > 0) c *= delta_pow(prod.loops, p);
      out.add(prod.diagram, times_eps_pow(c, prod.eps_exponent, p));
    }
  }
  return out;
}

std::pair<Diagram, int> tensor_diagrams(const Diagram& x, const Diagram& y) {
  const int r = x.r(), s = x.s(), t = y.r(), u = y.s();
  std::vector<int> partner(static_cast<std::size_t>(r + s + t + u));
  auto mx = [&](int v) { return v < r ? v : v + t; };
  auto my = [&](int v) { return v < t ? v + r : v + r + s; };
  for (const auto& [a, b] : x.pairs()) {
    partner[mx(a)] = mx(b);
    partner[mx(b)] = mx(a);
  }
  for (const auto& [a, b] : y.pairs()) {
    partner[my(a)] = my(b);
    partner[my(b)] = my(a);
  }
  int k = x.cap_count() * (y.cup_count() + y.cap_count());
  return {Diagram::from_partners(r + t, s + u, std::move(partner)), k};
}

Element tensor(const Element& x, const Element& y) {
  if (!(x.params() == y.params())) throw DomainError("parameter mismatch in tensor");
  const Params& p = x.params();
  Element out(x.r() + y.r(), x.s() + y.s(), p);
  for (const auto& [d1, c1] : x.terms()) {
    for (const auto& [d2, c2] : y.terms()) {
      auto [d, k] = tensor_diagrams(d1, d2);
      out.add(d, times_eps_pow(c1 * c2, k, p));
    }
  }
  return out;
}

int generator_top(Generator g) {
  switch (g) {
    case Generator::I: return 1;
    case Generator::X: return 2;
    case Generator::Cup: return 2;
    case Generator::Cap: return 0;
  }
  return 0;
}

int generator_bottom(Generator g) {
  switch (g) {
    case Generator::I: return 1;
    case Generator::X: return 2;
    case Generator::Cup: return 0;
    case Generator::Cap: return 2;
  }
  return 0;
}

Diagram generator_diagram(Generator g) {
  switch (g) {
    case Generator::I: return Diagram(1, 1, {{0, 1}});
    case Generator::X: return Diagram(2, 2, {{0, 3}, {1, 2}});
    case Generator::Cup: return Diagram(2, 0, {{0, 1}});
    case Generator::Cap: return Diagram(0, 2, {{0, 1}});
  }
  return {};
}

Element generator(Generator g, const Params& p) { return Element(generator_diagram(g), p); }

Diagram identity_diagram(int r) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  return permutation_diagram(perm);
}

Element identity(int r, const Params& p) { return Element(identity_diagram(r), p); }

Diagram permutation_diagram(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + perm[i]);
  return Diagram(n, n, std::move(pairs));
}

Element braiding(int a, int b, const Params& p) {
  if (a < 0 || b < 0) throw DomainError("negative braiding arity");
  std::vector<int> perm;
  for (int i = 0; i < a; ++i) perm.push_back(b + i);
  for (int j = 0; j < b; ++j) perm.push_back(j);
  return Element(permutation_diagram(perm), p);
}

namespace {

int layer_width(const GeneratorLayer& l, bool top) {
  int w = 0;
  for (auto g : l) w += top ? generator_top(g) : generator_bottom(g);
  return w;
}

}  // namespace

void check_word(const GeneratorWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int below = layer_width(w[i], false), above = layer_width(w[i + 1], true);
    if (below != above)
      throw DomainError("layer " + std::to_string(i + 1) + " has " + std::to_string(below) +
                        " bottom strands but layer " + std::to_string(i + 2) + " expects " +
                        std::to_string(above));
  }
}

int word_top(const GeneratorWord& w) { return w.empty() ? 0 : layer_width(w.front(), true); }
int word_bottom(const GeneratorWord& w) { return w.empty() ? 0 : layer_width(w.back(), false); }

Element evaluate_word(const GeneratorWord& w, const Params& p, const CancellationConvention& conv) {
  check_word(w);
  if (w.empty()) return identity(0, p);
  std::optional<Element> out;
  for (const auto& layer : w) {
    Element l = identity(0, p);
    for (auto g : layer) l = tensor(l, generator(g, p));
    out = out ? compose(*out, l, conv) : l;
  }
  return *out;
}

Report verify_category_presentation(const Params& p, const CancellationConvention& conv) {
  using G = Generator;
  const Element I = generator(G::I, p), X = generator(G::X, p), U = generator(G::Cup, p),
                N = generator(G::Cap, p);
  auto C = [&](std::initializer_list<Element> xs) {
    auto it = xs.begin();
    Element acc = *it;
    for (++it; it != xs.end(); ++it) acc = compose(acc, *it, conv);
    return acc;
  };
  auto T = [&](std::initializer_list<Element> xs) {
    Element acc = identity(0, p);
    for (const auto& x : xs) acc = tensor(acc, x);
    return acc;
  };
  const Scalar e = eps_pow(1, p);
  const Element II = T({I, I});

  Report rep;
  rep.title = "category presentation (" + p.to_string() + ")";
  auto check = [&](const std::string& name, const Element& lhs, const Element& rhs) {
    bool ok = lhs == rhs;
    rep.add(name, ok, ok ? "" : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
  };
  check("I.I = I", C({I, I}), I);
  {
    Element a = C({II, X}), b = C({X, II});
    bool ok = a == X && b == X;
    rep.add("II.X = X = X.II", ok, ok ? "" : a.to_string() + " | " + b.to_string());
  }
  check("X.X = II", C({X, X}), II);
  check("N.X = eN", C({N, X}), e * N);
  check("NI.IU = I", C({T({N, I}), T({I, U})}), I);
  check("NI.IX = IN.XI", C({T({N, I}), T({I, X})}), C({T({I, N}), T({X, I})}));
  check("IIU.U = e UII.U", C({T({I, I, U}), U}), e * C({T({U, I, I}), U}));
  check("NII.IIU = e U.N", C({T({N, I, I}), T({I, I, U})}), e * C({U, N}));
  check("II.U = U", C({II, U}), U);
  check("N.II = N", C({N, II}), N);
  check("X.U = U", C({X, U}), U);
  check("N.U = d", C({N, U}), Element(identity_diagram(0), p, delta_scalar(p)));
  check("IN.UI = eI", C({T({I, N}), T({U, I})}), e * I);
  check("IX.UI = XI.IU", C({T({I, X}), T({U, I})}), C({T({X, I}), T({I, U})}));
  check("N.IIN = e N.NII", C({N, T({I, I, N})}), e * C({N, T({N, I, I})}));
  check("XI.IX.XI = IX.XI.IX", C({T({X, I}), T({I, X}), T({X, I})}),
        C({T({I, X}), T({X, I}), T({I, X})}));
  return rep;
}

}  // namespace markedbrauer
