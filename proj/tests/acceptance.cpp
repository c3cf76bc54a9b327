#include "verify.hpp"

#include "newtonkit/cli.hpp"

#include <iostream>
#include <sstream>

namespace {

void report(int criterion, const std::string& name, bool passed, const std::string& detail) {
  std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << '\n';
}

}  // namespace

int main() {
  using namespace newtonkit;
  bool ok = true;
  for (const auto& r : verify::run_all_checks()) {
    std::string detail = std::to_string(r.cases) + " cases";
    if (!r.passed) detail += "; " + r.detail;
    report(r.criterion, r.name, r.passed, detail);
    ok = ok && r.passed;
  }

  std::ostringstream first, second, err;
  int c1 = cli::run({"verify-all"}, first, err);
  int c2 = cli::run({"verify-all"}, second, err);
  bool same = c1 == 0 && c2 == 0 && first.str() == second.str() && !first.str().empty();
  report(8, "verify-all is byte-identical across runs", same,
         "exit codes " + std::to_string(c1) + "," + std::to_string(c2) + ", " + std::to_string(first.str().size()) +
             " bytes");
  ok = ok && same;
  return ok ? 0 : 1;
}
