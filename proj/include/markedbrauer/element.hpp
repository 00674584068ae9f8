#pragma once

#include "markedbrauer/diagram.hpp"
#include "markedbrauer/linear_combination.hpp"

#include <optional>
#include <string>

namespace markedbrauer {

/// A morphism [r] -> [s]: a Scalar combination of standard diagrams.
class Element {
 public:
  Element(int r, int s, Params params);
  Element(const Diagram& d, Params params, const Scalar& coeff = Scalar(1));

  int r() const { return r_; }
  int s() const { return s_; }
  const Params& params() const { return params_; }
  const LinearCombination<Diagram>& terms() const { return terms_; }

  void add(const Diagram& d, const Scalar& c);
  void add(const Element& x, const Scalar& scale = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  /// Common degree of all terms; nullopt for inhomogeneous elements, 0 for zero.
  std::optional<int> degree() const;

  Element& operator+=(const Element& b);
  Element& operator-=(const Element& b);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }

  bool operator==(const Element& b) const;

  std::string to_string() const;

 private:
  void check_compatible(const Element& b) const;
  int r_, s_;
  Params params_;
  LinearCombination<Diagram> terms_;
};

/// Apply a linear map given on basis diagrams.
template <typename F>
Element apply_linear(const Element& x, int r, int s, F&& on_diagram) {
  Element out(r, s, x.params());
  for (const auto& [d, c] : x.terms()) out.add(on_diagram(d), c);
  return out;
}

}  // namespace markedbrauer
