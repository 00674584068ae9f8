#pragma once

#include "markedbrauer/scalar.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace markedbrauer {

/// Vertex ids: top vertex t(i+1) is i, bottom vertex b(j+1) is r + j.
using VertexPair = std::pair<int, int>;

/// A perfect matching of r top and s bottom vertices, stored in standard form.
/// Pairs are kept as (a, b) with a < b and sorted, which gives the total order
/// on diagrams (lexicographic on the sorted pair list).
class Diagram {
 public:
  Diagram() = default;
  /// Validates: every vertex in exactly one pair.
  Diagram(int r, int s, std::vector<VertexPair> pairs);
  /// Trusted constructor from a partner array of length r + s.
  static Diagram from_partners(int r, int s, std::vector<int> partner);

  int r() const { return r_; }
  int s() const { return s_; }
  const std::vector<VertexPair>& pairs() const { return pairs_; }
  int partner(int v) const { return partner_[v]; }
  bool is_top(int v) const { return v < r_; }

  int cup_count() const { return cups_; }
  int cap_count() const { return caps_; }
  int through_count() const { return static_cast<int>(pairs_.size()) - cups_ - caps_; }

  /// Cups by increasing left endpoint, then caps by decreasing left endpoint:
  /// the marking order of the standard layout, topmost first.
  std::vector<VertexPair> marked_edges() const;

  auto operator<=>(const Diagram& o) const {
    if (auto c = r_ <=> o.r_; c != 0) return c;
    if (auto c = s_ <=> o.s_; c != 0) return c;
    return pairs_ <=> o.pairs_;
  }
  bool operator==(const Diagram& o) const {
    return r_ == o.r_ && s_ == o.s_ && pairs_ == o.pairs_;
  }

  /// e.g. "{t1t2, b1b2}".
  std::string to_string() const;

 private:
  void finish();
  int r_ = 0, s_ = 0, cups_ = 0, caps_ = 0;
  std::vector<int> partner_;
  std::vector<VertexPair> pairs_;
};

std::string vertex_name(int v, int r);

struct Classification {
  std::vector<VertexPair> cups, caps, throughs;
};
Classification classify(const Diagram& d);

/// All standard diagrams of B_{r,s}, sorted. Empty when r + s is odd.
std::vector<Diagram> enumerate_basis(int r, int s);

/// (r+s-1)!! for r+s even, 0 otherwise.
BigInt basis_dimension(int r, int s);

/// Z2 degree: 0 when eps = +1, else (#cups + #caps) mod 2.
int degree(const Diagram& d, const Params& p);

enum class MarkKind { Bead, Arrow };

struct Marking {
  int edge = 0;  ///< index into Diagram::pairs()
  MarkKind kind = MarkKind::Bead;
  bool points_right = true;  ///< arrows only
};

/// Matching plus an explicit height-ordered list of markings (topmost first).
struct MarkedLayout {
  Diagram diagram;
  std::vector<Marking> markings;
};

MarkedLayout standard_layout(const Diagram& d);

/// Returns (k, D): layout = eps^k * D with D standard.
/// k = #left arrows + #pairs of markings out of standard order.
std::pair<int, Diagram> normalization_sign(const MarkedLayout& layout);

}  // namespace markedbrauer
