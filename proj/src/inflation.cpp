#include "markedbrauer/algebra.hpp"

#include "markedbrauer/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace markedbrauer {

namespace {

void check_layer(int r, int t) {
  if (r < 0 || t < 0 || t > r || (r - t) % 2)
    throw DomainError("layer t=" + std::to_string(t) + " invalid for r=" + std::to_string(r));
}

void partial(int r, int k, int v, std::vector<int>& mate, std::vector<PartialMatching>& out) {
  if (k == 0) {
    PartialMatching m{r, {}};
    for (int a = 0; a < r; ++a)
      if (mate[a] > a) m.edges.emplace_back(a, mate[a]);
    out.push_back(std::move(m));
    return;
  }
  if (v >= r) return;
  if (mate[v] != -1) {
    partial(r, k, v + 1, mate, out);
    return;
  }
  for (int w = v + 1; w < r; ++w) {
    if (mate[w] != -1) continue;
    mate[v] = w;
    mate[w] = v;
    partial(r, k - 1, v + 1, mate, out);
    mate[v] = mate[w] = -1;
  }
  partial(r, k, v + 1, mate, out);
}

std::vector<int> unmatched(const PartialMatching& m) {
  std::vector<char> used(static_cast<std::size_t>(m.r), 0);
  for (auto [a, b] : m.edges) used[a] = used[b] = 1;
  std::vector<int> out;
  for (int v = 0; v < m.r; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

// A path of the glued graph that starts and ends with edges of the same graph.
bool has_same_ended_path(const PartialMatching& e, const PartialMatching& f) {
  const int r = e.r;
  std::vector<int> me(static_cast<std::size_t>(r), -1), mf(static_cast<std::size_t>(r), -1);
  for (auto [a, b] : e.edges) me[a] = b, me[b] = a;
  for (auto [a, b] : f.edges) mf[a] = b, mf[b] = a;
  std::vector<char> seen(static_cast<std::size_t>(r), 0);
  for (int v = 0; v < r; ++v) {
    if (seen[v]) continue;
    bool end_e = me[v] == -1, end_f = mf[v] == -1;
    if (!end_e && !end_f) continue;  // interior or cycle vertex
    if (end_e && end_f) {
      seen[v] = 1;  // isolated vertex
      continue;
    }
    // walk from the endpoint; the first edge belongs to the graph v touches
    bool first_in_e = !end_e;
    bool in_e = first_in_e, last_in_e = first_in_e;
    int cur = v;
    seen[cur] = 1;
    while (true) {
      int nxt = in_e ? me[cur] : mf[cur];
      if (nxt == -1) break;
      last_in_e = in_e;
      cur = nxt;
      seen[cur] = 1;
      in_e = !in_e;
    }
    if (first_in_e == last_in_e) return true;
  }
  return false;
}

}  // namespace

std::string PartialMatching::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edges[i].first + 1) + "-" + std::to_string(edges[i].second + 1);
  }
  return out + "}";
}

std::vector<PartialMatching> enumerate_partial_matchings(int r, int t) {
  check_layer(r, t);
  std::vector<PartialMatching> out;
  std::vector<int> mate(static_cast<std::size_t>(r), -1);
  partial(r, (r - t) / 2, 0, mate, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt partial_matching_count(int r, int t) {
  check_layer(r, t);
  int k = (r - t) / 2;
  // r! / (2^k k! t!)
  BigInt num = 1;
  for (int i = t + 1; i <= r; ++i) num *= i;
  BigInt den = 1;
  for (int i = 1; i <= k; ++i) den *= 2 * i;
  return num / den;
}

int permutation_length(const Permutation& s) {
  int n = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++n;
  return n;
}

Permutation permutation_inverse(const Permutation& s) {
  Permutation out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = static_cast<int>(i);
  return out;
}

Permutation permutation_product(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("permutations of different degree");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

std::vector<Permutation> all_permutations(int t) {
  Permutation s(static_cast<std::size_t>(t));
  std::iota(s.begin(), s.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

InflationTriple psi(const Diagram& d) {
  if (d.r() != d.s()) throw DomainError("psi is defined on B_r = B_{r,r}");
  const int r = d.r();
  InflationTriple out{{r, {}}, {r, {}}, {}};
  std::vector<int> tops, bots;
  for (auto [a, b] : d.pairs()) {
    if (b < r) out.e.edges.emplace_back(a, b);
    else if (a >= r) out.f.edges.emplace_back(a - r, b - r);
    else tops.push_back(a);
  }
  for (int v = r; v < 2 * r; ++v)
    if (d.partner(v) < r) bots.push_back(v);
  for (int a : tops)
    out.sigma.push_back(static_cast<int>(
        std::lower_bound(bots.begin(), bots.end(), d.partner(a)) - bots.begin()));
  return out;
}

Diagram psi_inv(const InflationTriple& x) {
  const int r = x.e.r;
  if (x.f.r != r || x.e.edges.size() != x.f.edges.size())
    throw DomainError("psi_inv: e and f lie in different layers");
  auto tops = unmatched(x.e), bots = unmatched(x.f);
  if (x.sigma.size() != tops.size()) throw DomainError("psi_inv: permutation has wrong degree");
  std::vector<VertexPair> pairs;
  for (auto [a, b] : x.e.edges) pairs.emplace_back(a, b);
  for (auto [a, b] : x.f.edges) pairs.emplace_back(a + r, b + r);
  for (std::size_t i = 0; i < tops.size(); ++i) pairs.emplace_back(tops[i], r + bots[x.sigma[i]]);
  return Diagram(r, r, std::move(pairs));
}

int half_crossings(const PartialMatching& m) {
  auto free_vertices = unmatched(m);
  int c = 0;
  for (auto [a, b] : m.edges) {
    for (int v : free_vertices)
      if (a < v && v < b) ++c;
    for (auto [x, y] : m.edges)
      if (a < x && x < b && b < y) ++c;
  }
  return c;
}

InflationElement to_inflation(const Element& x, int t) {
  if (x.r() != x.s()) throw DomainError("inflation is defined on B_r = B_{r,r}");
  check_layer(x.r(), t);
  InflationElement out{x.r(), t, x.params(), {}};
  for (const auto& [d, c] : x.terms()) {
    if (d.through_count() != t) continue;
    auto tr = psi(d);
    int k = half_crossings(tr.f);
    out.terms.add(tr, times_eps_pow(c, k, x.params()));
  }
  return out;
}

Element from_inflation(const InflationElement& a) {
  Element out(a.r, a.r, a.params);
  for (const auto& [tr, c] : a.terms)
    out.add(psi_inv(tr), times_eps_pow(c, half_crossings(tr.f), a.params));
  return out;
}

GroupAlgebraElement inflation_form(const PartialMatching& e, const PartialMatching& f,
                                   const Params& p) {
  if (e.r != f.r || e.edges.size() != f.edges.size())
    throw DomainError("inflation_form: e and f lie in different layers");
  GroupAlgebraElement out;
  if (has_same_ended_path(e, f)) return out;
  const int r = e.r;
  const int t = r - 2 * static_cast<int>(e.edges.size());
  Permutation id(static_cast<std::size_t>(t));
  std::iota(id.begin(), id.end(), 0);
  auto basis_element = [&](const PartialMatching& g) {
    InflationElement x{r, t, p, {}};
    x.terms.add({g, g, id}, Scalar(1));
    return from_inflation(x);
  };
  Element prod = compose(basis_element(e), basis_element(f));
  InflationElement image = to_inflation(prod, t);
  for (const auto& [tr, c] : image.terms) {
    if (!(tr.e == e && tr.f == f)) throw DomainError("inflation_form: unexpected layer term");
    out.add(tr.sigma, c);
  }
  return out;
}

namespace {

InflationElement multiply_with(const InflationElement& a, const InflationElement& b,
                               std::map<std::pair<PartialMatching, PartialMatching>,
                                        GroupAlgebraElement>& cache) {
  if (a.r != b.r || a.t != b.t) throw DomainError("inflation_multiply: layer mismatch");
  if (!(a.params == b.params)) throw DomainError("inflation_multiply: parameter mismatch");
  InflationElement out{a.r, a.t, a.params, {}};
  for (const auto& [x, cx] : a.terms) {
    for (const auto& [y, cy] : b.terms) {
      auto key = std::make_pair(x.f, y.e);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, inflation_form(x.f, y.e, a.params)).first;
      for (const auto& [w, cw] : it->second) {
        InflationTriple z{x.e, y.f, permutation_product(permutation_product(x.sigma, w), y.sigma)};
        out.terms.add(z, cx * cy * cw);
      }
    }
  }
  return out;
}

}  // namespace

InflationElement inflation_multiply(const InflationElement& a, const InflationElement& b) {
  std::map<std::pair<PartialMatching, PartialMatching>, GroupAlgebraElement> cache;
  return multiply_with(a, b, cache);
}

Report verify_inflation_layer(int r, int t, const Params& p) {
  check_layer(r, t);
  Report rep;
  rep.title = "inflation layer r=" + std::to_string(r) + " t=" + std::to_string(t);
  std::vector<Diagram> layer;
  for (const auto& d : enumerate_basis(r, r))
    if (d.through_count() == t) layer.push_back(d);
  std::map<std::pair<PartialMatching, PartialMatching>, GroupAlgebraElement> cache;
  std::size_t ok = 0, total = 0;
  bool bijective = true;
  for (const auto& d : layer) bijective = bijective && psi_inv(psi(d)) == d;
  for (const auto& d1 : layer) {
    Element x(d1, p);
    InflationElement px = to_inflation(x, t);
    for (const auto& d2 : layer) {
      Element y(d2, p);
      InflationElement lhs = to_inflation(compose(x, y), t);
      InflationElement rhs = multiply_with(px, to_inflation(y, t), cache);
      ++total;
      if (lhs == rhs) ++ok;
      else if (total - ok <= 5)
        rep.add("psi(" + d1.to_string() + " " + d2.to_string() + ")", false);
    }
  }
  rep.add("psi bijective on layer", bijective, std::to_string(layer.size()) + " diagrams");
  rep.add("psi multiplicative", ok == total,
          std::to_string(ok) + "/" + std::to_string(total) + " pairs");
  return rep;
}

Report graded_involution_layer_check(int r, int t, const Params& p) {
  check_layer(r, t);
  Report rep;
  rep.title = "graded involution layer r=" + std::to_string(r) + " t=" + std::to_string(t);
  const int k = (r - t) / 2;
  const auto E = enumerate_partial_matchings(r, t);
  std::size_t ok = 0, total = 0;
  for (const auto& e : E) {
    for (const auto& f : E) {
      for (const auto& sigma : all_permutations(t)) {
        InflationElement x{r, t, p, {}};
        x.terms.add({e, f, sigma}, Scalar(1));
        InflationElement lhs = to_inflation(anti_involution(from_inflation(x), AntiInvolution::Bullet), t);
        InflationElement rhs{r, t, p, {}};
        rhs.terms.add({f, e, permutation_inverse(sigma)},
                      eps_pow(k + permutation_length(sigma), p));
        ++total;
        if (lhs == rhs) ++ok;
        else if (total - ok <= 5)
          rep.add(e.to_string() + " " + f.to_string(), false);
      }
    }
  }
  rep.add("bullet matches eps^k f e eps^l(sigma) sigma^-1", ok == total,
          std::to_string(ok) + "/" + std::to_string(total) + " triples");
  return rep;
}

}  // namespace markedbrauer
