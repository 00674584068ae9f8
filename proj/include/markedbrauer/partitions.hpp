#pragma once

#include <vector>

namespace markedbrauer {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n in lexicographic order; partitions_of(0) = {{}}.
std::vector<Partition> partitions_of(int n);

/// p must be 0 or an odd prime. No part value may occur p or more times.
bool is_p_regular(const Partition& lambda, int p);

/// Throws DomainError unless p is 0 or an odd prime.
void check_characteristic(int p);

struct SimpleCount {
  struct Weight {
    int weight;
    std::vector<Partition> partitions;
  };
  int count = 0;
  std::vector<Weight> weights;  ///< r, r-2, ... as prescribed
};

/// p-regular partitions of r, r-2, ..., down to r mod 2, omitting weight 0
/// exactly when delta = 0 and r is even.
SimpleCount count_simples(int r, int p, bool delta_is_zero);

}  // namespace markedbrauer
