#include "markedbrauer/report.hpp"

#include <algorithm>

namespace markedbrauer {

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

}  // namespace markedbrauer
