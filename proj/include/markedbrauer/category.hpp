#pragma once

#include "markedbrauer/element.hpp"
#include "markedbrauer/report.hpp"

#include <vector>

namespace markedbrauer {

/// Exponents of eps picked up when an arrow directly above a bead on the same
/// strand cancels against it. "toward" means the arrow points at the vertex the
/// two edges share. The pinned values are (0, 1), i.e. factors 1 and eps.
struct CancellationConvention {
  int toward_exponent = 0;
  int away_exponent = 1;
};

/// Stacking result for two basis diagrams: coefficient delta^loops * eps^eps_exponent.
struct DiagramProduct {
  Diagram diagram;
  int loops = 0;
  int eps_exponent = 0;
};

/// x (r,s) stacked above y (s,t). Signs are only tracked when `track_signs`.
DiagramProduct compose_diagrams(const Diagram& x, const Diagram& y, bool track_signs,
                                const CancellationConvention& conv = {});

Element compose(const Element& x, const Element& y, const CancellationConvention& conv = {});
Element tensor(const Element& x, const Element& y);

/// Unsigned juxtaposition and its eps exponent c1 * (u2 + c2).
std::pair<Diagram, int> tensor_diagrams(const Diagram& x, const Diagram& y);

enum class Generator { I, X, Cup, Cap };

int generator_top(Generator g);
int generator_bottom(Generator g);
Element generator(Generator g, const Params& p);
Diagram generator_diagram(Generator g);
Element identity(int r, const Params& p);
Diagram identity_diagram(int r);
/// Block transposition moving the first a strands past the last b.
Element braiding(int a, int b, const Params& p);
/// Unmarked permutation diagram: top i joined to bottom perm[i].
Diagram permutation_diagram(const std::vector<int>& perm);

using GeneratorLayer = std::vector<Generator>;
using GeneratorWord = std::vector<GeneratorLayer>;

/// Throws DomainError when consecutive layers do not compose.
void check_word(const GeneratorWord& w);
int word_top(const GeneratorWord& w);
int word_bottom(const GeneratorWord& w);
/// Tensor within layers, compose across layers. The empty word is identity(0).
Element evaluate_word(const GeneratorWord& w, const Params& p,
                      const CancellationConvention& conv = {});
/// A word evaluating to exactly 1 * d.
GeneratorWord factor_standard(const Diagram& d);

Report verify_category_presentation(const Params& p, const CancellationConvention& conv = {});

enum class Corner { BottomRightUp, BottomLeftUp, TopRightDown, TopLeftDown };

/// The four bending maps. Up-bends take `count` bottom vertices to the top,
/// down-bends take `count` top vertices to the bottom.
Element bend(const Element& x, int count, Corner corner);
Element transpose(const Element& x);

/// Reversal permutation i -> r+1-i; it is its own inverse.
Element w_element(int r, const Params& p);

enum class Endofunctor { VFlip, Rotate, HFlip };
Element endofunctor(const Element& x, Endofunctor which);

}  // namespace markedbrauer
