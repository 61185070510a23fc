#pragma once

// Line-oriented check reports, as plain text or tab separated values.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace heis {

enum class Format { plain, tsv };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(std::vector<Check> const& more) { checks.insert(checks.end(), more.begin(), more.end()); }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
  }
  int exit_code() const { return all_pass() ? 0 : 1; }

  // Checks in name order, so concurrent producers still give a stable report.
  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](Check const& a, Check const& b) { return a.name < b.name; });
  }

  void print(std::ostream& os, Format f) const {
    if (f == Format::tsv) {
      os << "#command\t" << command << '\n';
      os << "check\tstatus\tdetail\n";
      for (auto const& c : checks) os << c.name << '\t' << (c.pass ? "PASS" : "FAIL") << '\t' << c.detail << '\n';
      os << "summary\t" << (all_pass() ? "PASS" : "FAIL") << '\t' << count_pass() << '/' << checks.size() << '\n';
      return;
    }
    os << "# " << command << '\n';
    std::size_t w = 0;
    for (auto const& c : checks) w = std::max(w, c.name.size());
    for (auto const& c : checks) {
      os << (c.pass ? "PASS  " : "FAIL  ") << c.name << std::string(w - c.name.size() + 2, ' ') << c.detail << '\n';
    }
    os << (all_pass() ? "ALL PASS" : "SOME FAILED") << " (" << count_pass() << '/' << checks.size() << ")\n";
  }

 private:
  std::size_t count_pass() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](Check const& c) { return c.pass; }));
  }
};

}  // namespace heis
