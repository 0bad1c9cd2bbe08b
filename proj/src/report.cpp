#include "itlog/report.hpp"

#include <sstream>

#include "itlog/text.hpp"

namespace itlog {

std::string summarize(const Report& report) {
  std::ostringstream out;
  out << (report.pass ? "PASS " : "FAIL ") << report.identity;
  for (const auto& [name, value] : report.parameters) out << ' ' << name << '=' << value;
  for (const auto& [name, value] : report.measurements) out << ' ' << name << '=' << value;
  if (!report.pass && report.failing_index) {
    out << " first_failing=" << *report.failing_index;
    if (!report.difference.is_zero()) out << " difference=" << format_element(report.difference);
  }
  return out.str();
}

}  // namespace itlog
