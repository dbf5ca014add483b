#include "cotrans/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cotrans {

std::string render(const Report& report) {
  if (report.checks.empty()) return "no checks run\n";
  std::vector<const CheckResult*> rows;
  rows.reserve(report.checks.size());
  for (const auto& c : report.checks) rows.push_back(&c);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CheckResult* a, const CheckResult* b) {
                     return a->passed < b->passed;
                   });

  std::size_t width = 4;
  for (const auto* c : rows) width = std::max(width, c->name.size());

  std::ostringstream out;
  for (const auto* c : rows) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", c->max_residual);
    out << (c->passed ? "  ok  " : " FAIL ") << c->name
        << std::string(width - c->name.size() + 2, ' ') << "samples="
        << c->samples << "  max_residual=" << buf << "\n";
    for (const auto& w : c->witnesses) {
      out << "        witness: " << w << "\n";
    }
  }
  return out.str();
}

}  // namespace cotrans
