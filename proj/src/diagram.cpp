#include "markedbrauer/diagram.hpp"

#include "markedbrauer/errors.hpp"

#include <algorithm>

namespace markedbrauer {

Diagram::Diagram(int r, int s, std::vector<VertexPair> pairs) : r_(r), s_(s) {
  if (r < 0 || s < 0) throw DomainError("negative vertex count");
  partner_.assign(static_cast<std::size_t>(r + s), -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= r + s || b >= r + s || a == b)
      throw DomainError("vertex out of range in pair");
    if (partner_[a] != -1 || partner_[b] != -1)
      throw DomainError("vertex " + vertex_name(partner_[a] != -1 ? a : b, r) +
                        " occurs twice");
    partner_[a] = b;
    partner_[b] = a;
  }
  for (int v = 0; v < r + s; ++v)
    if (partner_[v] == -1) throw DomainError("vertex " + vertex_name(v, r) + " is unmatched");
  finish();
}

Diagram Diagram::from_partners(int r, int s, std::vector<int> partner) {
  Diagram d;
  d.r_ = r;
  d.s_ = s;
  d.partner_ = std::move(partner);
  d.finish();
  return d;
}

void Diagram::finish() {
  pairs_.clear();
  cups_ = caps_ = 0;
  for (int v = 0; v < r_ + s_; ++v) {
    int w = partner_[v];
    if (v < w) {
      pairs_.emplace_back(v, w);
      if (w < r_) ++cups_;
      else if (v >= r_) ++caps_;
    }
  }
}

std::vector<VertexPair> Diagram::marked_edges() const {
  std::vector<VertexPair> out;
  for (const auto& p : pairs_)
    if (p.second < r_) out.push_back(p);
  for (auto it = pairs_.rbegin(); it != pairs_.rend(); ++it)
    if (it->first >= r_) out.push_back(*it);
  return out;
}

std::string vertex_name(int v, int r) {
  return v < r ? "t" + std::to_string(v + 1) : "b" + std::to_string(v - r + 1);
}

std::string Diagram::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ", ";
    out += vertex_name(pairs_[i].first, r_) + vertex_name(pairs_[i].second, r_);
  }
  return out + "}";
}

Classification classify(const Diagram& d) {
  Classification c;
  for (const auto& p : d.pairs()) {
    if (p.second < d.r()) c.cups.push_back(p);
    else if (p.first >= d.r()) c.caps.push_back(p);
    else c.throughs.push_back(p);
  }
  return c;
}

namespace {

void matchings(std::vector<int>& partner, int r, int s, std::vector<Diagram>& out) {
  int n = r + s;
  int v = 0;
  while (v < n && partner[v] != -1) ++v;
  if (v == n) {
    out.push_back(Diagram::from_partners(r, s, partner));
    return;
  }
  for (int w = v + 1; w < n; ++w) {
    if (partner[w] != -1) continue;
    partner[v] = w;
    partner[w] = v;
    matchings(partner, r, s, out);
    partner[v] = partner[w] = -1;
  }
}

}  // namespace

std::vector<Diagram> enumerate_basis(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("negative vertex count");
  std::vector<Diagram> out;
  if ((r + s) % 2) return out;
  std::vector<int> partner(static_cast<std::size_t>(r + s), -1);
  matchings(partner, r, s, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt basis_dimension(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("negative vertex count");
  if ((r + s) % 2) return 0;
  BigInt d = 1;
  for (int k = r + s - 1; k > 1; k -= 2) d *= k;
  return d;
}

int degree(const Diagram& d, const Params& p) {
  return p.eps == 1 ? 0 : (d.cup_count() + d.cap_count()) % 2;
}

MarkedLayout standard_layout(const Diagram& d) {
  MarkedLayout l{d, {}};
  const auto& pairs = d.pairs();
  for (const auto& e : d.marked_edges()) {
    int idx = static_cast<int>(std::find(pairs.begin(), pairs.end(), e) - pairs.begin());
    bool cup = e.second < d.r();
    l.markings.push_back({idx, cup ? MarkKind::Bead : MarkKind::Arrow, true});
  }
  return l;
}

std::pair<int, Diagram> normalization_sign(const MarkedLayout& layout) {
  const Diagram& d = layout.diagram;
  const auto& pairs = d.pairs();
  // rank of each marked edge in the standard order
  std::vector<int> rank(pairs.size(), -1);
  auto order = d.marked_edges();
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[std::find(pairs.begin(), pairs.end(), order[k]) - pairs.begin()] = static_cast<int>(k);

  if (layout.markings.size() != order.size())
    throw DomainError("layout must carry exactly one marking per cup and cap");
  std::vector<int> seen(pairs.size(), 0);
  int k = 0;
  std::vector<int> ranks;
  for (const auto& m : layout.markings) {
    if (m.edge < 0 || m.edge >= static_cast<int>(pairs.size()) || rank[m.edge] < 0 ||
        seen[m.edge]++)
      throw DomainError("marking on a through string or repeated marking");
    bool cup = pairs[m.edge].second < d.r();
    if (cup != (m.kind == MarkKind::Bead))
      throw DomainError("cups carry beads and caps carry arrows");
    if (m.kind == MarkKind::Arrow && !m.points_right) ++k;
    ranks.push_back(rank[m.edge]);
  }
  for (std::size_t i = 0; i < ranks.size(); ++i)
    for (std::size_t j = i + 1; j < ranks.size(); ++j)
      if (ranks[i] > ranks[j]) ++k;
  return {k, d};
}

}  // namespace markedbrauer
