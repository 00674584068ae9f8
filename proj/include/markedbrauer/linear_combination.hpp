#pragma once

#include "markedbrauer/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace markedbrauer {

/// Finite formal combination of keys. Keys are kept sorted (std::map order)
/// and zero coefficients are never stored.
template <typename Key, typename Coeff = Scalar>
class LinearCombination {
 public:
  using Terms = std::map<Key, Coeff>;
  using const_iterator = typename Terms::const_iterator;

  LinearCombination() = default;

  static LinearCombination normalize(const std::vector<std::pair<Coeff, Key>>& raw) {
    LinearCombination out;
    for (const auto& [c, k] : raw) out.add(k, c);
    return out;
  }

  void add(const Key& k, const Coeff& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Coeff& scale) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Coeff coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff() : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& b) {
    for (const auto& [k, c] : b.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator*=(const Coeff& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      if (is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  bool operator==(const LinearCombination& b) const { return terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace markedbrauer
