#include "markedbrauer/element.hpp"

#include "markedbrauer/errors.hpp"

namespace markedbrauer {

Element::Element(int r, int s, Params params) : r_(r), s_(s), params_(params) {
  if (r < 0 || s < 0) throw DomainError("negative object label");
  params_.validate();
}

Element::Element(const Diagram& d, Params params, const Scalar& coeff)
    : Element(d.r(), d.s(), params) {
  terms_.add(d, coeff);
}

void Element::add(const Diagram& d, const Scalar& c) {
  if (d.r() != r_ || d.s() != s_)
    throw DomainError("diagram in B_{" + std::to_string(d.r()) + "," + std::to_string(d.s()) +
                      "} added to element of B_{" + std::to_string(r_) + "," +
                      std::to_string(s_) + "}");
  terms_.add(d, c);
}

void Element::add(const Element& x, const Scalar& scale) {
  check_compatible(x);
  terms_.add(x.terms_, scale);
}

void Element::check_compatible(const Element& b) const {
  if (b.r_ != r_ || b.s_ != s_) throw DomainError("elements live in different Hom spaces");
  if (!(b.params_ == params_)) throw DomainError("elements have different parameters");
}

std::optional<int> Element::degree() const {
  std::optional<int> deg;
  for (const auto& [d, c] : terms_) {
    int k = markedbrauer::degree(d, params_);
    if (deg && *deg != k) return std::nullopt;
    deg = k;
  }
  return deg.value_or(0);
}

Element& Element::operator+=(const Element& b) {
  add(b, Scalar(1));
  return *this;
}

Element& Element::operator-=(const Element& b) {
  add(b, Scalar(-1));
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  terms_ *= c;
  return *this;
}

bool Element::operator==(const Element& b) const {
  return r_ == b.r_ && s_ == b.s_ && params_ == b.params_ && terms_ == b.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + d.to_string();
  }
  return out;
}

}  // namespace markedbrauer
