#include "markedbrauer/partitions.hpp"

#include "markedbrauer/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace markedbrauer {

namespace {

void extend(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    extend(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<Partition> out;
  Partition cur;
  extend(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

void check_characteristic(int p) {
  if (p == 0) return;
  if (p == 2) throw DomainError("characteristic 2 is excluded");
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is neither 0 nor a prime");
}

bool is_p_regular(const Partition& lambda, int p) {
  check_characteristic(p);
  if (p == 0) return true;
  std::map<int, int> mult;
  for (int part : lambda)
    if (++mult[part] >= p) return false;
  return true;
}

SimpleCount count_simples(int r, int p, bool delta_is_zero) {
  if (r < 0) throw DomainError("r must be nonnegative");
  check_characteristic(p);
  SimpleCount out;
  for (int w = r; w >= 0; w -= 2) {
    if (w == 0 && delta_is_zero && r % 2 == 0) break;
    SimpleCount::Weight entry{w, {}};
    for (auto& lambda : partitions_of(w))
      if (is_p_regular(lambda, p)) entry.partitions.push_back(std::move(lambda));
    out.count += static_cast<int>(entry.partitions.size());
    out.weights.push_back(std::move(entry));
  }
  return out;
}

}  // namespace markedbrauer
