#pragma once

#include <string>
#include <vector>

namespace markedbrauer {

struct ReportEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Pass/fail list produced by the verification routines.
struct Report {
  std::string title;
  std::vector<ReportEntry> entries;

  void add(std::string name, bool pass, std::string detail = {}) {
    entries.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const;
  std::size_t failures() const;
};

}  // namespace markedbrauer
