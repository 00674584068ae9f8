#include "markedbrauer/scalar.hpp"

#include "markedbrauer/errors.hpp"

#include <sstream>

namespace markedbrauer {

void Params::validate() const {
  if (eps != 1 && eps != -1) throw DomainError("eps must be 1 or -1");
  if (eps == -1 && !(delta_mode == Delta::Specialized && delta_value == 0))
    throw DomainError("eps = -1 requires delta = 0");
}

std::string Params::to_string() const {
  std::ostringstream os;
  os << "eps=" << eps << ", delta=";
  if (symbolic_delta())
    os << "symbolic";
  else
    os << delta_value;
  return os.str();
}

Scalar::Scalar(long long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

Scalar::Scalar(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

Scalar::Scalar(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

Scalar Scalar::delta_power(int k) {
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
  c.back() = 1;
  return Scalar(std::move(c));
}

void Scalar::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  if (c_.empty() || b.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> out(c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += c_[i] * b.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Rational Scalar::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return Rational(acc);
}

std::string Scalar::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    BigInt a = abs(c_[i]);
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "d";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Scalar delta_scalar(const Params& p) {
  if (p.symbolic_delta()) return Scalar::delta_power(1);
  return Scalar(p.delta_value);
}

Scalar delta_pow(int k, const Params& p) {
  if (p.symbolic_delta()) return Scalar::delta_power(k);
  BigInt v = 1;
  for (int i = 0; i < k; ++i) v *= p.delta_value;
  return Scalar(v);
}

Scalar eps_pow(int k, const Params& p) {
  return (p.eps == -1 && (k & 1)) ? Scalar(-1) : Scalar(1);
}

Scalar times_eps_pow(const Scalar& a, int k, const Params& p) {
  return (p.eps == -1 && (k & 1)) ? -a : a;
}

Rational scalar_eval(const Scalar& a, long long delta_value, const Params& p) {
  if (p.eps == -1 && delta_value != 0)
    throw DomainError("cannot evaluate at nonzero delta when eps = -1");
  if (!p.symbolic_delta() && p.delta_value != delta_value)
    throw DomainError("delta is specialized to " + std::to_string(p.delta_value) +
                      ", cannot evaluate at " + std::to_string(delta_value));
  return a.evaluate(BigInt(delta_value));
}

}  // namespace markedbrauer
