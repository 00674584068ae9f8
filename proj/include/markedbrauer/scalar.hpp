#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace markedbrauer {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Construction-time parameters of a category instance.
/// eps = -1 forces delta = 0.
struct Params {
  enum class Delta { Symbolic, Specialized };

  int eps = 1;
  Delta delta_mode = Delta::Symbolic;
  long long delta_value = 0;

  static Params symbolic() { return {}; }
  static Params specialized(long long delta, int eps = 1) {
    return {eps, Delta::Specialized, delta};
  }
  /// The odd case: eps = -1, delta = 0.
  static Params odd() { return {-1, Delta::Specialized, 0}; }

  bool symbolic_delta() const { return delta_mode == Delta::Symbolic; }

  /// Throws DomainError unless eps is +-1 and eps = -1 comes with delta = 0.
  void validate() const;

  bool operator==(const Params&) const = default;
  std::string to_string() const;
};

/// Integer polynomial in delta, c[0] + c[1] delta + ...
/// Canonical: no trailing zeros, zero is the empty sequence.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long c);  // NOLINT: integers are scalars
  Scalar(const BigInt& c);  // NOLINT
  explicit Scalar(std::vector<BigInt> coefficients);

  static Scalar delta_power(int k);

  const std::vector<BigInt>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  BigInt constant_term() const { return c_.empty() ? BigInt(0) : c_[0]; }

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;

  bool operator==(const Scalar& b) const { return c_ == b.c_; }

  /// Exact value at delta = x.
  Rational evaluate(const BigInt& x) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// delta as a Scalar under `p`: the variable when symbolic, else a constant.
Scalar delta_scalar(const Params& p);
/// delta^k under `p`.
Scalar delta_pow(int k, const Params& p);
/// eps^k under `p`; depends only on k mod 2.
Scalar eps_pow(int k, const Params& p);
/// a * eps^k.
Scalar times_eps_pow(const Scalar& a, int k, const Params& p);

/// Evaluate `a` at delta = delta_value; rejects nonzero delta_value when eps = -1
/// and values disagreeing with an already specialized delta.
Rational scalar_eval(const Scalar& a, long long delta_value, const Params& p);

inline bool is_zero(const Scalar& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a == 0; }

}  // namespace markedbrauer
