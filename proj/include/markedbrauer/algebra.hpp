#pragma once

#include "markedbrauer/category.hpp"

#include <compare>
#include <vector>

namespace markedbrauer {

// --- generators, presentation, anti-involutions -------------------------

/// e_i = (I^{i-1} U I^{r-i-1}) o (I^{i-1} N I^{r-i-1}), 1 <= i < r.
Element algebra_e(int r, int i, const Params& p);
/// s_i: adjacent transposition of strands i, i+1.
Element algebra_s(int r, int i, const Params& p);

/// All instances of the twelve relation families for B_r. The product ab is a o b.
Report verify_algebra_presentation(int r, const Params& p);

enum class AntiInvolution { Prime, Bullet };
/// prime: x'. bullet: w_r o x' o w_r.
Element anti_involution(const Element& x, AntiInvolution which);

// --- through-string filtration ------------------------------------------

int through_count(const Diagram& d);
/// Keeps the terms with exactly t through strings.
Element filtration_project(const Element& x, int t);

// --- inflation ----------------------------------------------------------

/// A graph on vertices 0..r-1 with disjoint edges (a, b), a < b, sorted.
struct PartialMatching {
  int r = 0;
  std::vector<VertexPair> edges;

  auto operator<=>(const PartialMatching&) const = default;
  bool operator==(const PartialMatching&) const = default;
  std::string to_string() const;
};

/// E_{r,t}: all graphs with (r-t)/2 disjoint edges.
std::vector<PartialMatching> enumerate_partial_matchings(int r, int t);
BigInt partial_matching_count(int r, int t);

/// One-line notation, 0-based: sigma[i] is the image of i.
using Permutation = std::vector<int>;
int permutation_length(const Permutation& s);
Permutation permutation_inverse(const Permutation& s);
/// Stacking order: (a * b)(i) = b(a(i)).
Permutation permutation_product(const Permutation& a, const Permutation& b);
std::vector<Permutation> all_permutations(int t);

using GroupAlgebraElement = LinearCombination<Permutation>;

struct InflationTriple {
  PartialMatching e, f;
  Permutation sigma;

  auto operator<=>(const InflationTriple&) const = default;
  bool operator==(const InflationTriple&) const = default;
};

/// Element of V_t (x) V_t (x) k Sigma_t for B_r.
struct InflationElement {
  int r = 0, t = 0;
  Params params;
  LinearCombination<InflationTriple> terms;

  bool operator==(const InflationElement&) const = default;
};

/// The basis bijection D -> (t_D, b_D, sigma_D).
InflationTriple psi(const Diagram& d);
Diagram psi_inv(const InflationTriple& x);

/// Crossing count of a half diagram: for each edge, the unmatched vertices
/// strictly inside it plus the edges starting inside it and ending outside.
int half_crossings(const PartialMatching& m);

/// Layer isomorphism on elements: D -> eps^{half_crossings(b_D)} psi(D).
/// Terms outside layer t are dropped.
InflationElement to_inflation(const Element& x, int t);
Element from_inflation(const InflationElement& a);

/// <e, f>. Zero when the glued graph has a path beginning and ending in the same
/// graph; otherwise read off from the product of psi^{-1}(e e Id) and psi^{-1}(f f Id).
GroupAlgebraElement inflation_form(const PartialMatching& e, const PartialMatching& f,
                                   const Params& p);
InflationElement inflation_multiply(const InflationElement& a, const InflationElement& b);

/// psi(x y mod lower layers) = psi(x) psi(y) for all basis pairs of layer t.
Report verify_inflation_layer(int r, int t, const Params& p);
/// bullet transported through psi equals
/// e f sigma -> eps^k f e eps^{l(sigma)} sigma^{-1} on every basis triple.
Report graded_involution_layer_check(int r, int t, const Params& p);

}  // namespace markedbrauer
