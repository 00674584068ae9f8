#include "markedbrauer/category.hpp"

#include <algorithm>

namespace markedbrauer {

namespace {

// Odd-even transposition sort of `arr`, one layer per round; rounds that swap
// nothing are dropped. arr[pos] is where the strand at `pos` must end up.
void append_permutation(std::vector<int> arr, GeneratorWord& word) {
  const int n = static_cast<int>(arr.size());
  for (int round = 0; !std::is_sorted(arr.begin(), arr.end()); ++round) {
    GeneratorLayer layer;
    bool crossed = false;
    int pos = 0;
    if (round % 2 == 1) {
      layer.push_back(Generator::I);
      pos = 1;
    }
    while (pos < n) {
      if (pos + 1 < n && arr[pos] > arr[pos + 1]) {
        layer.push_back(Generator::X);
        std::swap(arr[pos], arr[pos + 1]);
        crossed = true;
        pos += 2;
      } else if (pos + 1 < n) {
        layer.insert(layer.end(), 2, Generator::I);
        pos += 2;
      } else {
        layer.push_back(Generator::I);
        pos += 1;
      }
    }
    if (crossed) word.push_back(std::move(layer));
  }
}

}  // namespace

// Layers, top to bottom: a crossing network gathering each cup's endpoints to
// adjacent positions (cups first, in standard order), the cup layers, the cap
// layers (largest left endpoint first) and a crossing network distributing
// the bottom endpoints.
GeneratorWord factor_standard(const Diagram& d) {
  const int r = d.r();
  const auto cls = classify(d);
  const int u = static_cast<int>(cls.cups.size());
  const int c = static_cast<int>(cls.caps.size());
  const int t = static_cast<int>(cls.throughs.size());

  GeneratorWord word;
  if (r > 0) word.emplace_back(static_cast<std::size_t>(r), Generator::I);

  std::vector<int> top_target(static_cast<std::size_t>(r));
  int pos = 0;
  for (const auto& [a, b] : cls.cups) {
    top_target[a] = pos++;
    top_target[b] = pos++;
  }
  for (const auto& th : cls.throughs) top_target[th.first] = pos++;
  append_permutation(top_target, word);

  for (int i = 1; i <= u; ++i) {
    GeneratorLayer layer{Generator::Cup};
    layer.insert(layer.end(), static_cast<std::size_t>(r - 2 * i), Generator::I);
    word.push_back(std::move(layer));
  }
  for (int j = 0; j < c; ++j) {
    GeneratorLayer layer{Generator::Cap};
    layer.insert(layer.end(), static_cast<std::size_t>(t + 2 * j), Generator::I);
    word.push_back(std::move(layer));
  }

  std::vector<int> bottom;
  for (const auto& [a, b] : cls.caps) {
    bottom.push_back(a - r);
    bottom.push_back(b - r);
  }
  for (const auto& th : cls.throughs) bottom.push_back(th.second - r);
  append_permutation(bottom, word);
  return word;
}

}  // namespace markedbrauer
